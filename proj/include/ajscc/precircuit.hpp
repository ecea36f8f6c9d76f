#pragma once

#include <array>
#include <vector>

namespace ajscc {

inline constexpr int kNumStages = 4;
inline constexpr double kLogicHigh = 5.0;  // [V]
inline constexpr double kLogicLow = 0.0;   // [V]

/// One-hot control lines selecting the quantization step. Line order is
/// (phi3, phi2, phi1, phi0) with phi3<->1 V, phi2<->0.5 V, phi1<->0.25 V,
/// phi0<->0.125 V.
struct PhiCode {
    std::array<bool, kNumStages> lines{};  // [0]=phi3 .. [3]=phi0

    bool is_one_hot() const;
    /// Index of the HIGH line (0 = phi3); requires one-hot.
    int hot_index() const;
    /// Lines rendered as logic voltages (5 V / 0 V).
    std::array<double, kNumStages> voltages() const;
};

/// Prefix closure of a PhiCode: whenever phi_i is HIGH all preceding
/// phi' lines are HIGH too. Stages whose phi' line is LOW are powered down.
struct PhiPrimeCode {
    std::array<bool, kNumStages> lines{};  // [0]=phi3' .. [3]=phi0'

    bool is_prefix() const;
    /// Number of powered (leading HIGH) stages.
    int active_stages() const;
    std::array<double, kNumStages> voltages() const;
};

/// Quantization step and level-grid bounds.
struct QuantizerConfig {
    double phi = 0.5;     ///< step [V]; 1/0.5/0.25/0.125 map onto the 4-stage circuit
    double vgs_min = 1.0; ///< [V]
    double vgs_max = 5.0; ///< [V]
};

/// Throws std::invalid_argument unless 0 < phi <= vgs_max - vgs_min.
void validate(const QuantizerConfig& cfg);

/// True when phi selects one of the four circuit steps {1, 0.5, 0.25, 0.125} V.
bool is_circuit_phi(double phi);

/// Stage count for a circuit phi: log2(1/phi) + 1.
int active_stage_count(double phi);

enum class StageEmit { kResidual, kFinal, kPoweredDown };

struct StageRecord {
    double residual_in = 0.0;
    double emitted = 0.0;
    StageEmit kind = StageEmit::kPoweredDown;
};

/// Per-stage record of one staged quantization.
struct StageTrace {
    double vin = 0.0;
    double integer_part = 0.0;  // ILQ output
    std::array<StageRecord, kNumStages> stages{};
    double vgs_mos = 0.0;       // quantized output
};

/// One-hot code for a circuit phi. Throws std::invalid_argument otherwise.
PhiCode encode_phi(double phi);

/// Prefix closure used as per-stage supply; requires a one-hot input.
PhiPrimeCode derive_phi_prime(const PhiCode& code);

/// Integer-level quantizer: floor of vin against the reference integers.
/// Throws std::domain_error when vin is outside [vgs_min, vgs_max].
double ilq(const QuantizerConfig& cfg, double vin);

struct StageResult {
    double emitted = 0.0;
    double residual_out = 0.0;
};

/// Stage n (1..4) rule with threshold t = 0.5/2^(n-1): below t the stage
/// emits 0; at or above t it emits V_res = t (not last) or V_fin = 2t
/// (last), and the residual forwarded is residual_in - t.
StageResult run_stage(int n, double residual_in, bool is_last);

/// Quantize vin to the phi level grid. Circuit phis run the staged
/// pipeline (ILQ + residual stages); other steps use the behavioral
/// nearest-multiple rule directly. Ties round up; the result is clamped
/// to [vgs_min, vgs_max].
double quantize(double vin, const QuantizerConfig& cfg);

/// Staged quantization with the full per-stage trace. Requires a circuit phi.
StageTrace quantize_traced(double vin, const QuantizerConfig& cfg);

/// Level grid vgs_min + k*phi, k = 0..floor((vgs_max-vgs_min)/phi).
std::vector<double> level_grid(const QuantizerConfig& cfg);

/// Precircuit power estimate [uW]: 8 uW per OpAmp, 12.7 nW per comparator.
/// OpAmps = stages + 1 (final adder), comparators = 4 (ILQ) + stages.
/// The shared single-stage configuration (multi-MOSFET reuse) has one
/// OpAmp and 5 comparators in total.
double power_estimate(const QuantizerConfig& cfg, bool shared_single_stage);

}  // namespace ajscc
