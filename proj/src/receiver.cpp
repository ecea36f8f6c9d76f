#include <ajscc/receiver.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ajscc {

void validate(const DecoderConfig& cfg) {
    validate(cfg.device);
    if (cfg.candidate_levels.empty()) {
        throw std::invalid_argument("DecoderConfig: candidate_levels is empty");
    }
    for (std::size_t i = 0; i < cfg.candidate_levels.size(); ++i) {
        if (!(cfg.candidate_levels[i] > cfg.device.vth)) {
            throw std::invalid_argument(
                "DecoderConfig: candidate level at or below vth");
        }
        if (i > 0 && !(cfg.candidate_levels[i] > cfg.candidate_levels[i - 1])) {
            throw std::invalid_argument(
                "DecoderConfig: candidate_levels must be strictly increasing");
        }
    }
    if (!(cfg.vds_min < cfg.vds_max)) {
        throw std::invalid_argument("DecoderConfig: vds_min must be < vds_max");
    }
}

double slope_mismatch(const DecoderConfig& cfg, double candidate, double ids1,
                      double ids2) {
    if (ids1 == ids2) {
        throw std::domain_error(
            "slope_mismatch: equal currents, two-point slope undefined");
    }
    const double v1 = invert_vds(cfg.device, candidate, ids1);
    const double v2 = invert_vds(cfg.device, candidate, ids2);
    const double two_point = (ids2 - ids1) / (v2 - v1);
    const double estimate =
        approx_slope_from_currents(cfg.device, ids1, ids2);
    return std::abs(two_point - estimate);
}

namespace {

bool in_range(const DecoderConfig& cfg, double vds) {
    return vds >= cfg.vds_min - kRangeCheckTol &&
           vds <= cfg.vds_max + kRangeCheckTol;
}

}  // namespace

DecodedPair decode_pair(const DecoderConfig& cfg, double ids1, double ids2,
                        bool apply_correction) {
    validate(cfg);
    if (!(ids1 > 0.0) || !(ids2 > 0.0)) {
        throw std::domain_error("decode_pair: currents must be > 0");
    }

    const std::vector<double>& levels = cfg.candidate_levels;
    std::vector<double> mismatch(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        mismatch[i] = slope_mismatch(cfg, levels[i], ids1, ids2);
    }

    std::vector<std::size_t> order(levels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (mismatch[a] != mismatch[b]) return mismatch[a] < mismatch[b];
        return levels[a] < levels[b];
    });

    auto finish = [&](std::size_t level_idx, int rank, bool corrected) {
        DecodedPair out;
        out.vgs_hat = levels[level_idx];
        out.vds_hat_1 = invert_vds(cfg.device, out.vgs_hat, ids1);
        out.vds_hat_2 = invert_vds(cfg.device, out.vgs_hat, ids2);
        out.rank_used = rank;
        out.corrected = corrected;
        return out;
    };

    if (apply_correction) {
        for (std::size_t rank = 0; rank < order.size(); ++rank) {
            const double c = levels[order[rank]];
            if (in_range(cfg, invert_vds(cfg.device, c, ids1)) &&
                in_range(cfg, invert_vds(cfg.device, c, ids2))) {
                return finish(order[rank], static_cast<int>(rank), true);
            }
        }
    }
    return finish(order[0], 0, false);
}

DecodeRun decode_stream(const DecoderConfig& cfg,
                        const std::vector<EncodedSample>& samples,
                        Pairing pairing, bool apply_correction) {
    validate(cfg);
    DecodeRun run;

    std::size_t seg_begin = 0;
    while (seg_begin < samples.size()) {
        std::size_t seg_end = seg_begin + 1;
        while (seg_end < samples.size() &&
               samples[seg_end].truth.vgs_level ==
                   samples[seg_begin].truth.vgs_level) {
            ++seg_end;
        }

        const std::size_t seg_len = seg_end - seg_begin;
        if (seg_len < 2) {
            ++run.skipped_segments;
            seg_begin = seg_end;
            continue;
        }

        const std::size_t step = (pairing == Pairing::kSliding) ? 1 : 2;
        for (std::size_t k = seg_begin; k + 1 < seg_end; k += step) {
            const EncodedSample& a = samples[k];
            const EncodedSample& b = samples[k + 1];
            DecodedPair pair =
                decode_pair(cfg, a.ids, b.ids, apply_correction);
            pair.truth_vgs = a.truth.vgs_level;
            pair.truth_vds_1 = a.truth.vds;
            pair.truth_vds_2 = b.truth.vds;
            pair.idx1 = k;
            pair.idx2 = k + 1;
            pair.first_of_curve = (k == seg_begin);
            run.pairs.push_back(pair);
        }
        seg_begin = seg_end;
    }
    return run;
}

}  // namespace ajscc
