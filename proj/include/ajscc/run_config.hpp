#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <ajscc/experiments.hpp>
#include <ajscc/precircuit.hpp>

namespace ajscc {

/// Parsed configuration document. Defaults reproduce the reference
/// evaluation (155e-6 / 0.74 V / 0.037 1/V device, vgs grid [1, 5] V,
/// vds 4.5:0.1:10 V, noiseless), so an empty document is a valid run.
struct RunConfig {
    MosfetParams device;
    QuantizerConfig quantizer;
    SweepSpec sweep;
    std::string output_path = "sweep.csv";
};

RunConfig default_run_config();

/// Validates every owned struct; throws std::invalid_argument on the
/// first violation.
void validate(const RunConfig& cfg);

/// Numeric list syntax used by config values:
///   "0.1"              single value
///   "0.1,0.2,0.5"      comma list
///   "0.1:0.05:1.0"     start:step:stop, inclusive
///   "log:0.001:0.2:25" n log-spaced points over [a, b]
std::vector<double> parse_value_list(const std::string& text);

/// INI-style document: [section] headers, key = value lines, '#' or ';'
/// comments. Sections: [device] kprime/vth/lambda/label; [quantizer]
/// phi/vgs_min/vgs_max; [sweep] phi_values/lambda_values/vds_min/vds_max/
/// vds_step/include_vds_endpoint/vgs_min/vgs_max/pairing/noise_sigma/seed;
/// [output] path. Unknown sections or keys are rejected.
/// Throws std::invalid_argument on malformed input.
RunConfig parse_run_config(std::istream& in);

/// parse_run_config over a file. Throws std::runtime_error when the file
/// cannot be opened (an I/O failure, distinct from validation errors).
RunConfig load_run_config(const std::string& path);

}  // namespace ajscc
