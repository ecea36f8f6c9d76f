#include <ajscc/precircuit.hpp>

#include <cmath>
#include <stdexcept>

namespace ajscc {

namespace {

// Circuit steps in line order phi3..phi0.
constexpr std::array<double, kNumStages> kCircuitPhis = {1.0, 0.5, 0.25, 0.125};

int circuit_phi_index(double phi) {
    for (int i = 0; i < kNumStages; ++i) {
        if (std::abs(phi - kCircuitPhis[i]) <= 1e-12) return i;
    }
    return -1;
}

std::array<double, kNumStages> as_voltages(const std::array<bool, kNumStages>& lines) {
    std::array<double, kNumStages> v{};
    for (int i = 0; i < kNumStages; ++i) v[i] = lines[i] ? kLogicHigh : kLogicLow;
    return v;
}

}  // namespace

bool PhiCode::is_one_hot() const {
    int high = 0;
    for (bool b : lines) high += b ? 1 : 0;
    return high == 1;
}

int PhiCode::hot_index() const {
    if (!is_one_hot()) {
        throw std::invalid_argument("PhiCode: code is not one-hot");
    }
    for (int i = 0; i < kNumStages; ++i) {
        if (lines[i]) return i;
    }
    return -1;  // unreachable
}

std::array<double, kNumStages> PhiCode::voltages() const { return as_voltages(lines); }

bool PhiPrimeCode::is_prefix() const {
    if (!lines[0]) return false;
    bool seen_low = false;
    for (bool b : lines) {
        if (!b) seen_low = true;
        else if (seen_low) return false;
    }
    return true;
}

int PhiPrimeCode::active_stages() const {
    int n = 0;
    for (bool b : lines) {
        if (!b) break;
        ++n;
    }
    return n;
}

std::array<double, kNumStages> PhiPrimeCode::voltages() const { return as_voltages(lines); }

void validate(const QuantizerConfig& cfg) {
    if (!(cfg.phi > 0.0)) {
        throw std::invalid_argument("QuantizerConfig: phi must be > 0");
    }
    if (!(cfg.vgs_min < cfg.vgs_max)) {
        throw std::invalid_argument("QuantizerConfig: vgs_min must be < vgs_max");
    }
    if (!(cfg.phi <= cfg.vgs_max - cfg.vgs_min)) {
        throw std::invalid_argument("QuantizerConfig: phi exceeds the vgs range");
    }
}

bool is_circuit_phi(double phi) { return circuit_phi_index(phi) >= 0; }

int active_stage_count(double phi) {
    const int idx = circuit_phi_index(phi);
    if (idx < 0) {
        throw std::invalid_argument("active_stage_count: phi is not a circuit step");
    }
    return idx + 1;
}

PhiCode encode_phi(double phi) {
    const int idx = circuit_phi_index(phi);
    if (idx < 0) {
        throw std::invalid_argument(
            "encode_phi: phi must be one of 1, 0.5, 0.25, 0.125 V");
    }
    PhiCode code;
    code.lines[idx] = true;
    return code;
}

PhiPrimeCode derive_phi_prime(const PhiCode& code) {
    const int hot = code.hot_index();
    PhiPrimeCode prime;
    for (int i = 0; i <= hot; ++i) prime.lines[i] = true;
    return prime;
}

double ilq(const QuantizerConfig& cfg, double vin) {
    if (!(vin >= cfg.vgs_min && vin <= cfg.vgs_max)) {
        throw std::domain_error("ilq: vin out of range");
    }
    return std::floor(vin);
}

StageResult run_stage(int n, double residual_in, bool is_last) {
    if (n < 1 || n > kNumStages) {
        throw std::invalid_argument("run_stage: stage index must be 1..4");
    }
    const double full = std::ldexp(1.0, -(n - 1));  // 1/2^(n-1)
    const double t = 0.5 * full;
    if (!(residual_in >= 0.0 && residual_in < full)) {
        throw std::logic_error("run_stage: residual outside [0, 1/2^(n-1))");
    }
    if (residual_in < t) {
        return {0.0, residual_in};
    }
    return {is_last ? 2.0 * t : t, residual_in - t};
}

StageTrace quantize_traced(double vin, const QuantizerConfig& cfg) {
    validate(cfg);
    const int stages = active_stage_count(cfg.phi);  // throws for non-circuit phi

    StageTrace trace;
    trace.vin = vin;
    trace.integer_part = ilq(cfg, vin);

    double residual = vin - trace.integer_part;
    double sum = trace.integer_part;
    for (int n = 1; n <= kNumStages; ++n) {
        StageRecord& rec = trace.stages[n - 1];
        if (n > stages) {
            rec = {0.0, 0.0, StageEmit::kPoweredDown};
            continue;
        }
        const bool last = (n == stages);
        rec.residual_in = residual;
        const StageResult r = run_stage(n, residual, last);
        rec.emitted = r.emitted;
        rec.kind = last ? StageEmit::kFinal : StageEmit::kResidual;
        sum += r.emitted;
        residual = r.residual_out;
    }
    trace.vgs_mos = std::min(std::max(sum, cfg.vgs_min), cfg.vgs_max);
    return trace;
}

double quantize(double vin, const QuantizerConfig& cfg) {
    validate(cfg);
    if (is_circuit_phi(cfg.phi)) {
        return quantize_traced(vin, cfg).vgs_mos;
    }
    if (!(vin >= cfg.vgs_min && vin <= cfg.vgs_max)) {
        throw std::domain_error("quantize: vin out of range");
    }
    // Behavioral nearest-multiple rule for sweep phis; ties round up.
    // Chooses among the materialized grid values vgs_min + k*phi rather
    // than via index arithmetic, so near-tie inputs resolve exactly like a
    // comparison against the level grid (phi itself is rarely exactly
    // representable). The nearest level is always within two indices of
    // the floor estimate.
    const int n_top = static_cast<int>(
        std::floor((cfg.vgs_max - cfg.vgs_min) / cfg.phi + 1e-9));
    const int k0 =
        static_cast<int>(std::floor((vin - cfg.vgs_min) / cfg.phi));
    const int k_lo = std::max(k0 - 2, 0);
    const int k_hi = std::min(k0 + 2, n_top);
    double level = cfg.vgs_min + k_lo * cfg.phi;
    double best_d = std::abs(vin - level);
    for (int k = k_lo + 1; k <= k_hi; ++k) {
        const double c = cfg.vgs_min + k * cfg.phi;
        const double d = std::abs(vin - c);
        if (d < best_d || (d == best_d && c > level)) {
            level = c;
            best_d = d;
        }
    }
    return std::min(std::max(level, cfg.vgs_min), cfg.vgs_max);
}

std::vector<double> level_grid(const QuantizerConfig& cfg) {
    validate(cfg);
    const int n_top = static_cast<int>(
        std::floor((cfg.vgs_max - cfg.vgs_min) / cfg.phi + 1e-9));
    std::vector<double> levels;
    levels.reserve(n_top + 1);
    for (int k = 0; k <= n_top; ++k) {
        levels.push_back(cfg.vgs_min + k * cfg.phi);
    }
    return levels;
}

double power_estimate(const QuantizerConfig& cfg, bool shared_single_stage) {
    constexpr double kOpAmpUw = 8.0;
    constexpr double kComparatorUw = 12.7e-3;  // 12.7 nW
    int stages = 1;
    int opamps = 1;
    if (!shared_single_stage) {
        const int idx = circuit_phi_index(cfg.phi);
        if (idx < 0) {
            throw std::invalid_argument(
                "power_estimate: phi must be one of 1, 0.5, 0.25, 0.125 V");
        }
        stages = idx + 1;
        opamps = stages + 1;  // one per stage plus the final adder
    }
    const int comparators = 4 + stages;  // 4 ILQ references plus one per stage
    return kOpAmpUw * opamps + kComparatorUw * comparators;
}

}  // namespace ajscc
