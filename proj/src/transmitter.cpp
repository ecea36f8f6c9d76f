#include <ajscc/transmitter.hpp>

#include <cmath>
#include <stdexcept>

namespace ajscc {

EncodedSample encode(const SensorPair& pair, const QuantizerConfig& cfg,
                     const MosfetParams& p) {
    validate(cfg);
    validate(p);
    const double vgs = quantize(pair.y_raw, cfg);
    EncodedSample s;
    s.truth = {vgs, pair.x_raw};
    s.ids = ids_forward(p, vgs, pair.x_raw);
    return s;
}

std::vector<SensorPair> make_eval_grid(const QuantizerConfig& cfg,
                                       double vds_min, double vds_max,
                                       double vds_step,
                                       bool include_endpoint) {
    validate(cfg);
    if (!(vds_min < vds_max)) {
        throw std::invalid_argument("make_eval_grid: vds_min must be < vds_max");
    }
    if (!(vds_step > 0.0)) {
        throw std::invalid_argument("make_eval_grid: vds_step must be > 0");
    }

    const std::vector<double> levels = level_grid(cfg);
    int n_steps = static_cast<int>(
        std::floor((vds_max - vds_min) / vds_step + 1e-9));
    if (!include_endpoint) --n_steps;
    if (n_steps < 0) {
        throw std::invalid_argument("make_eval_grid: empty vds grid");
    }

    std::vector<SensorPair> grid;
    grid.reserve(levels.size() * (n_steps + 1));
    for (double level : levels) {
        for (int i = 0; i <= n_steps; ++i) {
            grid.push_back({level, vds_min + i * vds_step});
        }
    }
    return grid;
}

std::vector<EncodedSample> encode_grid(const std::vector<SensorPair>& grid,
                                       const QuantizerConfig& cfg,
                                       const MosfetParams& p) {
    std::vector<EncodedSample> out;
    out.reserve(grid.size());
    for (const SensorPair& pair : grid) {
        out.push_back(encode(pair, cfg, p));
    }
    return out;
}

}  // namespace ajscc
