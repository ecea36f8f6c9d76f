#pragma once

#include <cstddef>
#include <vector>

#include <ajscc/device.hpp>
#include <ajscc/transmitter.hpp>

namespace ajscc {

/// Everything the digital receiver knows: the level grid agreed with the
/// transmitter, the device model, and the vds range used by the
/// range-check correction.
struct DecoderConfig {
    std::vector<double> candidate_levels;  // strictly increasing, all > vth
    MosfetParams device;
    double vds_min = 4.5;  // [V]
    double vds_max = 10.0;  // [V]
};

/// Throws std::invalid_argument unless candidate_levels is nonempty,
/// strictly increasing and entirely above device.vth, and vds_min < vds_max.
void validate(const DecoderConfig& cfg);

/// Absolute slack allowed on the range-check bounds. The inversion
/// round-trip reproduces grid-endpoint vds values only to ~1e-15 relative,
/// so exact inclusive bounds would sporadically reject the true level.
inline constexpr double kRangeCheckTol = 1e-9;

/// Result of decoding one pair of consecutive currents. vds_hat_k is the
/// inversion of ids_k through the chosen level. The truth/idx fields are
/// evaluation-only annotations filled by decode_stream.
struct DecodedPair {
    double vgs_hat = 0.0;
    double vds_hat_1 = 0.0;
    double vds_hat_2 = 0.0;
    int rank_used = 0;        // slope-match rank finally accepted
    bool corrected = false;   // true when the range check accepted a candidate

    double truth_vgs = 0.0;
    double truth_vds_1 = 0.0;
    double truth_vds_2 = 0.0;
    std::size_t idx1 = 0;     // sample indices within the decoded stream
    std::size_t idx2 = 0;
    bool first_of_curve = false;
};

/// |two-point slope through candidate − lambda*(ids1+ids2)/2| where the
/// two-point slope is (ids2-ids1)/(invert_vds(c,ids2)-invert_vds(c,ids1)).
/// Algebraically the two-point slope equals lambda*0.5*kprime*(c-vth)^2
/// for any current pair, so ranking depends on the pair only through the
/// averaged-current slope estimate.
/// Throws std::domain_error when ids1 == ids2 (slope undefined).
double slope_mismatch(const DecoderConfig& cfg, double candidate, double ids1,
                      double ids2);

/// Ranks candidates by slope_mismatch ascending (ties: lower level wins).
/// With correction off returns the rank-0 candidate. With correction on
/// returns the best-ranked candidate whose BOTH inverted vds values fall
/// inside [vds_min, vds_max] (inclusive, kRangeCheckTol slack); when no
/// candidate passes, falls back to rank 0 with corrected=false.
DecodedPair decode_pair(const DecoderConfig& cfg, double ids1, double ids2,
                        bool apply_correction);

enum class Pairing { kSliding, kDisjoint };

struct DecodeRun {
    std::vector<DecodedPair> pairs;
    int skipped_segments = 0;  // curve segments too short to pair
};

/// Splits the stream into maximal runs of equal truth.vgs_level (a curve
/// segment), forms pairs within each segment only — sliding: (k,k+1) for
/// every k; disjoint: (0,1),(2,3),… — and decodes each pair. Segments with
/// fewer than two samples are counted in skipped_segments.
DecodeRun decode_stream(const DecoderConfig& cfg,
                        const std::vector<EncodedSample>& samples,
                        Pairing pairing, bool apply_correction);

}  // namespace ajscc
