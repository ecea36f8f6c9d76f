#pragma once

#include <vector>

#include <ajscc/device.hpp>
#include <ajscc/precircuit.hpp>

namespace ajscc {

/// Raw sensor readings entering the analog front end. y_raw feeds the
/// quantizing precircuit and becomes vgs; x_raw is applied directly as vds.
struct SensorPair {
    double y_raw = 0.0;  // [V]
    double x_raw = 0.0;  // [V]
};

/// Ground truth carried alongside an encoded sample for evaluation only.
/// The receiver never reads it.
struct GroundTruth {
    double vgs_level = 0.0;  // quantized level actually driven [V]
    double vds = 0.0;        // [V]
};

struct EncodedSample {
    double ids = 0.0;  // encoded current [A]
    GroundTruth truth;
};

/// Full transmit path: quantize y_raw to a vgs level, apply x_raw as vds,
/// read out the drain current. Propagates quantizer/device domain errors.
EncodedSample encode(const SensorPair& pair, const QuantizerConfig& cfg,
                     const MosfetParams& p);

/// Evaluation grid: for every level of cfg's vgs grid, a vds sweep from
/// vds_min to vds_max in steps of vds_step. Samples are ordered
/// curve-by-curve with vds ascending, so consecutive samples within a
/// curve share a vgs level. include_endpoint controls whether vds_max
/// itself is emitted (the inclusive grid over [4.5, 10] step 0.1 has 56
/// points; dropping the endpoint gives 55).
/// Throws std::invalid_argument when the grid would be empty.
std::vector<SensorPair> make_eval_grid(const QuantizerConfig& cfg,
                                       double vds_min, double vds_max,
                                       double vds_step,
                                       bool include_endpoint = true);

/// encode() applied to every grid point in order.
std::vector<EncodedSample> encode_grid(const std::vector<SensorPair>& grid,
                                       const QuantizerConfig& cfg,
                                       const MosfetParams& p);

}  // namespace ajscc
