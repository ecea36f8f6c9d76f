#include <ajscc/multimos.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace ajscc {

MosfetBank assign_levels(const std::vector<double>& levels, int n_devices,
                         const MosfetParams& base) {
    if (n_devices < 1) {
        throw std::invalid_argument("assign_levels: n_devices must be >= 1");
    }
    if (static_cast<std::size_t>(n_devices) > levels.size()) {
        throw std::invalid_argument(
            "assign_levels: more devices than levels");
    }
    validate(base);

    MosfetBank bank;
    bank.levels = levels;
    bank.devices.assign(n_devices, base);
    bank.assignment.resize(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        bank.assignment[i] = static_cast<int>(i % n_devices);
    }
    return bank;
}

std::vector<double> device_levels(const MosfetBank& bank, int device_index) {
    if (device_index < 0 ||
        static_cast<std::size_t>(device_index) >= bank.devices.size()) {
        throw std::invalid_argument("device_levels: device index out of range");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < bank.levels.size(); ++i) {
        if (bank.assignment[i] == device_index) out.push_back(bank.levels[i]);
    }
    return out;
}

namespace {

int level_index(const MosfetBank& bank, double level) {
    for (std::size_t i = 0; i < bank.levels.size(); ++i) {
        if (std::abs(bank.levels[i] - level) <= 1e-9) {
            return static_cast<int>(i);
        }
    }
    throw std::invalid_argument(
        "decode_bank: sample level is not on the bank grid");
}

}  // namespace

DecodeRun decode_bank(const MosfetBank& bank,
                      const std::vector<EncodedSample>& samples,
                      BankMode mode, bool apply_correction, Pairing pairing,
                      double vds_min, double vds_max) {
    if (bank.devices.empty() || bank.levels.empty()) {
        throw std::invalid_argument("decode_bank: empty bank");
    }

    if (mode == BankMode::kUnion) {
        DecoderConfig cfg{bank.levels, bank.devices[0], vds_min, vds_max};
        return decode_stream(cfg, samples, pairing, apply_correction);
    }

    // Genie mode: per-segment candidate sets. Mirrors decode_stream's
    // segmentation so pair indices stay stream-global.
    DecodeRun run;
    std::size_t seg_begin = 0;
    while (seg_begin < samples.size()) {
        std::size_t seg_end = seg_begin + 1;
        while (seg_end < samples.size() &&
               samples[seg_end].truth.vgs_level ==
                   samples[seg_begin].truth.vgs_level) {
            ++seg_end;
        }

        if (seg_end - seg_begin < 2) {
            ++run.skipped_segments;
            seg_begin = seg_end;
            continue;
        }

        const int dev =
            bank.assignment[level_index(bank, samples[seg_begin].truth.vgs_level)];
        DecoderConfig cfg{device_levels(bank, dev), bank.devices[dev], vds_min,
                          vds_max};

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
