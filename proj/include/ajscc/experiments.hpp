#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <ajscc/receiver.hpp>

namespace ajscc {

/// One full evaluation campaign: encode the vgs x vds grid, decode with
/// and without range-check correction, and score RMSE per cell.
struct SweepSpec {
    MosfetParams device;
    std::vector<double> phi_values;     // [V]
    std::vector<double> lambda_values;  // [1/V], used by sweep_lambda only
    double vds_min = 4.5;               // [V]
    double vds_max = 10.0;              // [V]
    double vds_step = 0.1;              // [V]
    bool include_vds_endpoint = true;
    double vgs_min = 1.0;  // [V]
    double vgs_max = 5.0;  // [V]
    Pairing pairing = Pairing::kSliding;
    double noise_sigma = 0.0;  // additive current perturbation std [A]
    std::uint64_t seed = 0;
};

void validate(const SweepSpec& spec);

/// Step-quantization sweep grid: 0.1 to 1.0 V in steps of 0.05 V.
std::vector<double> default_phi_grid();

/// Channel-length-modulation sweep grid: 25 log-spaced points over
/// [0.001, 0.2] 1/V.
std::vector<double> default_lambda_grid();

struct SweepCell {
    double phi = 0.0;
    double lambda = 0.0;
    double rmse_vgs_before = 0.0;
    double rmse_vgs_after = 0.0;
    double rmse_vds_before = 0.0;
    double rmse_vds_after = 0.0;
    std::int64_t misdecodes_before = 0;
    std::int64_t misdecodes_after = 0;
    std::int64_t pairs = 0;
};

struct SweepResult {
    std::vector<SweepCell> cells;  // sorted by (phi, lambda)
};

struct Rmse {
    double vgs = 0.0;  // [V]
    double vds = 0.0;  // [V]
};

/// RMSE over the scored set: every pair scores its second sample
/// (vgs_hat, vds_hat_2); the first pair of each curve also scores its
/// first sample, so each grid point is scored exactly once.
/// Throws std::invalid_argument on empty input.
Rmse rmse(const std::vector<DecodedPair>& pairs);

/// Pairs whose decoded level misses the truth by more than 1e-12 V.
std::int64_t count_misdecodes(const std::vector<DecodedPair>& pairs);

/// Adds independent zero-mean Gaussian perturbation of std sigma to every
/// current. sigma = 0 returns the input bit-identically.
std::vector<EncodedSample> perturb(std::vector<EncodedSample> samples,
                                   double sigma, std::uint64_t seed);

/// One cell of the campaign: encode at the given phi with the given
/// device, decode before/after correction, score. The seed offset makes
/// per-cell noise draws independent yet reproducible.
SweepCell run_cell(const SweepSpec& spec, const MosfetParams& device,
                   double phi, std::uint64_t seed_offset);

/// Varies phi at the device's fixed lambda.
SweepResult sweep_phi(const SweepSpec& spec);

/// Full (phi, lambda) cross product; lambda overrides the device value.
SweepResult sweep_lambda(const SweepSpec& spec);

/// Human-readable resolved-configuration lines for the CSV header block.
std::vector<std::string> describe(const SweepSpec& spec);

/// CSV emission. header_comments are written first, one per line,
/// prefixed "# ". Floating-point fields use 9 significant digits.
void write_csv(std::ostream& os, const SweepResult& result,
               const std::vector<std::string>& header_comments);

/// The column schema written by write_csv.
extern const char* const kCsvSchema;

}  // namespace ajscc
