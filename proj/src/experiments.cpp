#include <ajscc/experiments.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include <ajscc/precircuit.hpp>

namespace ajscc {

const char* const kCsvSchema =
    "phi_V,lambda_perV,rmse_vgs_before_V,rmse_vgs_after_V,"
    "rmse_vds_before_V,rmse_vds_after_V,misdecodes_before,"
    "misdecodes_after,pairs";

void validate(const SweepSpec& spec) {
    validate(spec.device);
    if (spec.phi_values.empty()) {
        throw std::invalid_argument("SweepSpec: phi_values is empty");
    }
    for (double phi : spec.phi_values) {
        if (!(phi > 0.0)) {
            throw std::invalid_argument("SweepSpec: phi values must be > 0");
        }
    }
    for (double lam : spec.lambda_values) {
        if (!(lam >= 0.0)) {
            throw std::invalid_argument("SweepSpec: lambda values must be >= 0");
        }
    }
    if (!(spec.vds_min < spec.vds_max) || !(spec.vds_step > 0.0)) {
        throw std::invalid_argument("SweepSpec: invalid vds range");
    }
    if (!(spec.vgs_min < spec.vgs_max)) {
        throw std::invalid_argument("SweepSpec: invalid vgs range");
    }
    if (!(spec.noise_sigma >= 0.0)) {
        throw std::invalid_argument("SweepSpec: noise_sigma must be >= 0");
    }
}

std::vector<double> default_phi_grid() {
    std::vector<double> phis;
    for (int i = 0; i <= 18; ++i) phis.push_back(0.1 + 0.05 * i);
    return phis;
}

std::vector<double> default_lambda_grid() {
    constexpr int kPoints = 25;
    const double lo = std::log(0.001);
    const double hi = std::log(0.2);
    std::vector<double> lambdas;
    for (int i = 0; i < kPoints; ++i) {
        lambdas.push_back(std::exp(lo + (hi - lo) * i / (kPoints - 1)));
    }
    return lambdas;
}

Rmse rmse(const std::vector<DecodedPair>& pairs) {
    if (pairs.empty()) {
        throw std::invalid_argument("rmse: no decoded pairs");
    }
    double sum_vgs = 0.0;
    double sum_vds = 0.0;
    std::int64_t n = 0;
    auto score = [&](const DecodedPair& p, double vds_hat, double vds_truth) {
        const double evgs = p.vgs_hat - p.truth_vgs;
        const double evds = vds_hat - vds_truth;
        sum_vgs += evgs * evgs;
        sum_vds += evds * evds;
        ++n;
    };
    for (const DecodedPair& p : pairs) {
        if (p.first_of_curve) score(p, p.vds_hat_1, p.truth_vds_1);
        score(p, p.vds_hat_2, p.truth_vds_2);
    }
    return {std::sqrt(sum_vgs / n), std::sqrt(sum_vds / n)};
}

std::int64_t count_misdecodes(const std::vector<DecodedPair>& pairs) {
    std::int64_t n = 0;
    for (const DecodedPair& p : pairs) {
        if (std::abs(p.vgs_hat - p.truth_vgs) > 1e-12) ++n;
    }
    return n;
}

std::vector<EncodedSample> perturb(std::vector<EncodedSample> samples,
                                   double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0)) {
        throw std::invalid_argument("perturb: sigma must be >= 0");
    }
    if (sigma == 0.0) return samples;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    for (EncodedSample& s : samples) s.ids += noise(rng);
    return samples;
}

SweepCell run_cell(const SweepSpec& spec, const MosfetParams& device,
                   double phi, std::uint64_t seed_offset) {
    const QuantizerConfig qcfg{phi, spec.vgs_min, spec.vgs_max};
    const std::vector<SensorPair> grid =
        make_eval_grid(qcfg, spec.vds_min, spec.vds_max, spec.vds_step,
                       spec.include_vds_endpoint);
    std::vector<EncodedSample> samples = encode_grid(grid, qcfg, device);
    if (spec.noise_sigma > 0.0) {
        samples = perturb(std::move(samples), spec.noise_sigma,
                          spec.seed + seed_offset);
    }

    const DecoderConfig dcfg{level_grid(qcfg), device, spec.vds_min,
                             spec.vds_max};
    const DecodeRun before = decode_stream(dcfg, samples, spec.pairing, false);
    const DecodeRun after = decode_stream(dcfg, samples, spec.pairing, true);

    const Rmse rb = rmse(before.pairs);
    const Rmse ra = rmse(after.pairs);

    SweepCell cell;
    cell.phi = phi;
    cell.lambda = device.lambda;
    cell.rmse_vgs_before = rb.vgs;
    cell.rmse_vgs_after = ra.vgs;
    cell.rmse_vds_before = rb.vds;
    cell.rmse_vds_after = ra.vds;
    cell.misdecodes_before = count_misdecodes(before.pairs);
    cell.misdecodes_after = count_misdecodes(after.pairs);
    cell.pairs = static_cast<std::int64_t>(before.pairs.size());
    return cell;
}

SweepResult sweep_phi(const SweepSpec& spec) {
    validate(spec);
    std::vector<double> phis = spec.phi_values;
    std::sort(phis.begin(), phis.end());

    SweepResult result;
    std::uint64_t ordinal = 0;
    for (double phi : phis) {
        result.cells.push_back(run_cell(spec, spec.device, phi, ordinal++));
    }
    return result;
}

SweepResult sweep_lambda(const SweepSpec& spec) {
    validate(spec);
    if (spec.lambda_values.empty()) {
        throw std::invalid_argument("sweep_lambda: lambda_values is empty");
    }
    std::vector<double> phis = spec.phi_values;
    std::sort(phis.begin(), phis.end());
    std::vector<double> lambdas = spec.lambda_values;
    std::sort(lambdas.begin(), lambdas.end());

    SweepResult result;
    std::uint64_t ordinal = 0;
    for (double phi : phis) {
        for (double lam : lambdas) {
            MosfetParams device = spec.device;
            device.lambda = lam;
            result.cells.push_back(run_cell(spec, device, phi, ordinal++));
        }
    }
    return result;
}

namespace {

std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string join_g9(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += fmt_g9(values[i]);
    }
    return out;
}

}  // namespace

std::vector<std::string> describe(const SweepSpec& spec) {
    std::vector<std::string> lines;
    lines.push_back("device.label = " + spec.device.label);
    lines.push_back("device.kprime_A_per_V2 = " + fmt_g9(spec.device.kprime));
    lines.push_back("device.vth_V = " + fmt_g9(spec.device.vth));
    lines.push_back("device.lambda_perV = " + fmt_g9(spec.device.lambda));
    lines.push_back("vgs_min_V = " + fmt_g9(spec.vgs_min));
    lines.push_back("vgs_max_V = " + fmt_g9(spec.vgs_max));
    lines.push_back("vds_min_V = " + fmt_g9(spec.vds_min));
    lines.push_back("vds_max_V = " + fmt_g9(spec.vds_max));
    lines.push_back("vds_step_V = " + fmt_g9(spec.vds_step));
    lines.push_back(std::string("include_vds_endpoint = ") +
                    (spec.include_vds_endpoint ? "true" : "false"));
    lines.push_back(std::string("pairing = ") +
                    (spec.pairing == Pairing::kSliding ? "sliding"
                                                       : "disjoint"));
    lines.push_back("noise_sigma_A = " + fmt_g9(spec.noise_sigma));
    lines.push_back("seed = " + std::to_string(spec.seed));
    lines.push_back("phi_values_V = " + join_g9(spec.phi_values));
    lines.push_back("lambda_values_perV = " + join_g9(spec.lambda_values));
    return lines;
}

void write_csv(std::ostream& os, const SweepResult& result,
               const std::vector<std::string>& header_comments) {
    for (const std::string& line : header_comments) {
        os << "# " << line << "\n";
    }
    os << kCsvSchema << "\n";
    for (const SweepCell& c : result.cells) {
        os << fmt_g9(c.phi) << ',' << fmt_g9(c.lambda) << ','
           << fmt_g9(c.rmse_vgs_before) << ',' << fmt_g9(c.rmse_vgs_after)
           << ',' << fmt_g9(c.rmse_vds_before) << ','
           << fmt_g9(c.rmse_vds_after) << ',' << c.misdecodes_before << ','
           << c.misdecodes_after << ',' << c.pairs << "\n";
    }
}

}  // namespace ajscc
