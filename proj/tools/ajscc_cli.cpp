// Command-line front end: quantize / encode / decode / sweep / power /
// multimos-sweep over the ajscc library. Exit codes: 0 success, 1 I/O
// failure, 2 validation or domain failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ajscc/experiments.hpp>
#include <ajscc/multimos.hpp>
#include <ajscc/run_config.hpp>

namespace {

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

ajscc::RunConfig load_or_default(const std::string& path) {
    ajscc::RunConfig cfg =
        path.empty() ? ajscc::default_run_config() : ajscc::load_run_config(path);
    ajscc::validate(cfg);
    return cfg;
}

void write_csv_file(const std::string& path, const ajscc::SweepResult& result,
                    const std::vector<std::string>& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    ajscc::write_csv(out, result, header);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

void print_sweep_summary(const ajscc::SweepResult& result) {
    double max_vgs_before = 0.0, max_vgs_after = 0.0;
    double max_vds_before = 0.0, max_vds_after = 0.0;
    double threshold_phi = -1.0;
    for (const ajscc::SweepCell& c : result.cells) {
        max_vgs_before = std::max(max_vgs_before, c.rmse_vgs_before);
        max_vgs_after = std::max(max_vgs_after, c.rmse_vgs_after);
        max_vds_before = std::max(max_vds_before, c.rmse_vds_before);
        max_vds_after = std::max(max_vds_after, c.rmse_vds_after);
        if (c.rmse_vgs_after > 1e-6) {
            threshold_phi = std::max(threshold_phi, c.phi);
        }
    }
    std::cout << "max rmse_vgs before/after = " << g9(max_vgs_before) << " / "
              << g9(max_vgs_after) << " V\n";
    std::cout << "max rmse_vds before/after = " << g9(max_vds_before) << " / "
              << g9(max_vds_after) << " V\n";
    std::cout << "largest phi with after-correction rmse_vgs > 1e-6: "
              << (threshold_phi < 0.0 ? std::string("none") : g9(threshold_phi))
              << "\n";
}

void cmd_quantize(double vin, double phi, double vgs_min, double vgs_max) {
    const ajscc::QuantizerConfig cfg{phi, vgs_min, vgs_max};
    ajscc::validate(cfg);
    if (ajscc::is_circuit_phi(phi)) {
        const ajscc::StageTrace trace = ajscc::quantize_traced(vin, cfg);
        std::cout << "integer_part = " << g9(trace.integer_part) << " V\n";
        for (int n = 0; n < ajscc::kNumStages; ++n) {
            const ajscc::StageRecord& rec = trace.stages[n];
            std::cout << "stage " << (n + 1) << ": ";
            if (rec.kind == ajscc::StageEmit::kPoweredDown) {
                std::cout << "powered down\n";
                continue;
            }
            std::cout << "residual_in = " << g9(rec.residual_in)
                      << " V, emitted = " << g9(rec.emitted) << " V ("
                      << (rec.kind == ajscc::StageEmit::kFinal ? "final"
                                                               : "residual")
                      << ")\n";
        }
        std::cout << "vgs = " << g9(trace.vgs_mos) << " V\n";
    } else {
        std::cout << "stage trace: n/a (non-circuit phi, behavioral rule)\n";
        std::cout << "vgs = " << g9(ajscc::quantize(vin, cfg)) << " V\n";
    }
}

void cmd_encode(const std::string& config_path, double y, double x,
                double phi) {
    ajscc::RunConfig cfg = load_or_default(config_path);
    if (phi > 0.0) cfg.quantizer.phi = phi;
    ajscc::validate(cfg.quantizer);
    const ajscc::EncodedSample s =
        ajscc::encode({y, x}, cfg.quantizer, cfg.device);
    std::cout << "vgs = " << g9(s.truth.vgs_level) << " V\n";
    std::cout << "vds = " << g9(s.truth.vds) << " V\n";
    std::cout << "ids = " << g9(s.ids) << " A\n";
}

void cmd_decode(const std::string& config_path, double ids1, double ids2,
                double phi, bool no_correction) {
    ajscc::RunConfig cfg = load_or_default(config_path);
    if (phi > 0.0) cfg.quantizer.phi = phi;
    ajscc::validate(cfg.quantizer);
    const ajscc::DecoderConfig dcfg{ajscc::level_grid(cfg.quantizer),
                                    cfg.device, cfg.sweep.vds_min,
                                    cfg.sweep.vds_max};
    const ajscc::DecodedPair out =
        ajscc::decode_pair(dcfg, ids1, ids2, !no_correction);
    std::cout << "vgs_hat = " << g9(out.vgs_hat) << " V\n";
    std::cout << "vds_hat_1 = " << g9(out.vds_hat_1) << " V\n";
    std::cout << "vds_hat_2 = " << g9(out.vds_hat_2) << " V\n";
    std::cout << "rank_used = " << out.rank_used << "\n";
    std::cout << "corrected = " << (out.corrected ? "true" : "false") << "\n";
}

void cmd_sweep(const std::string& config_path, const std::string& param,
               const std::string& out_override) {
    if (param != "phi" && param != "lambda") {
        throw std::invalid_argument("--param must be phi or lambda");
    }
    const ajscc::RunConfig cfg = load_or_default(config_path);
    const ajscc::SweepResult result = (param == "phi")
                                          ? ajscc::sweep_phi(cfg.sweep)
                                          : ajscc::sweep_lambda(cfg.sweep);

    std::vector<std::string> header = ajscc::describe(cfg.sweep);
    header.push_back("sweep_param = " + param);

    const std::string path =
        out_override.empty() ? cfg.output_path : out_override;
    write_csv_file(path, result, header);
    std::cout << "wrote " << result.cells.size() << " rows to " << path
              << "\n";
    print_sweep_summary(result);
}

void cmd_power(double phi, bool shared) {
    ajscc::QuantizerConfig cfg;
    if (phi > 0.0) cfg.phi = phi;
    const double uw = ajscc::power_estimate(cfg, shared);
    if (shared) {
        std::cout << "mode = shared single stage\n";
    } else {
        std::cout << "phi = " << g9(cfg.phi) << " V, stages = "
                  << ajscc::active_stage_count(cfg.phi) << "\n";
    }
    std::cout << "power = " << g9(uw) << " uW\n";
}

void cmd_multimos_sweep(const std::string& config_path, int n_devices,
                        double phi, const std::string& mode,
                        const std::string& out_override) {
    if (mode != "genie" && mode != "union" && mode != "both") {
        throw std::invalid_argument("--mode must be genie, union or both");
    }
    ajscc::RunConfig cfg = load_or_default(config_path);
    cfg.quantizer.phi = phi;
    cfg.quantizer.vgs_min = cfg.sweep.vgs_min;
    cfg.quantizer.vgs_max = cfg.sweep.vgs_max;
    ajscc::validate(cfg.quantizer);

    const std::vector<double> levels = ajscc::level_grid(cfg.quantizer);
    const ajscc::MosfetBank bank =
        ajscc::assign_levels(levels, n_devices, cfg.device);

    const std::vector<ajscc::SensorPair> grid = ajscc::make_eval_grid(
        cfg.quantizer, cfg.sweep.vds_min, cfg.sweep.vds_max,
        cfg.sweep.vds_step, cfg.sweep.include_vds_endpoint);
    const std::vector<ajscc::EncodedSample> samples =
        ajscc::encode_grid(grid, cfg.quantizer, cfg.device);

    std::vector<std::string> modes;
    if (mode == "both") modes = {"genie", "union"};
    else modes = {mode};

    ajscc::SweepResult result;
    std::vector<std::string> header = ajscc::describe(cfg.sweep);
    header.push_back("multimos_devices = " + std::to_string(n_devices));
    header.push_back("multimos_phi_global_V = " + g9(phi));
    header.push_back("multimos_levels = " + std::to_string(levels.size()));

    for (const std::string& m : modes) {
        const ajscc::BankMode bm =
            (m == "genie") ? ajscc::BankMode::kGenie : ajscc::BankMode::kUnion;
        const ajscc::DecodeRun before = ajscc::decode_bank(
            bank, samples, bm, false, cfg.sweep.pairing, cfg.sweep.vds_min,
            cfg.sweep.vds_max);
        const ajscc::DecodeRun after = ajscc::decode_bank(
            bank, samples, bm, true, cfg.sweep.pairing, cfg.sweep.vds_min,
            cfg.sweep.vds_max);
        const ajscc::Rmse rb = ajscc::rmse(before.pairs);
        const ajscc::Rmse ra = ajscc::rmse(after.pairs);

        ajscc::SweepCell cell;
        cell.phi = phi;
        cell.lambda = cfg.device.lambda;
        cell.rmse_vgs_before = rb.vgs;
        cell.rmse_vgs_after = ra.vgs;
        cell.rmse_vds_before = rb.vds;
        cell.rmse_vds_after = ra.vds;
        cell.misdecodes_before = ajscc::count_misdecodes(before.pairs);
        cell.misdecodes_after = ajscc::count_misdecodes(after.pairs);
        cell.pairs = static_cast<std::int64_t>(before.pairs.size());
        result.cells.push_back(cell);

        std::cout << m << ": misdecodes before/after = "
                  << cell.misdecodes_before << " / " << cell.misdecodes_after
                  << ", rmse_vgs after = " << g9(cell.rmse_vgs_after)
                  << " V\n";
        header.push_back("row_mode = " + m);
    }

    const std::string path =
        out_override.empty() ? cfg.output_path : out_override;
    write_csv_file(path, result, header);
    std::cout << "wrote " << result.cells.size() << " rows to " << path
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "MOSFET-based analog joint source-channel coding: quantizer, "
        "encoder, slope-matching decoder and sweep experiments"};
    app.require_subcommand(1);

    // quantize
    double q_vin = 0.0, q_phi = 0.5, q_min = 1.0, q_max = 5.0;
    CLI::App* quantize = app.add_subcommand(
        "quantize", "Run the variable-step quantizing precircuit");
    quantize->add_option("--vin", q_vin, "Input voltage [V]")->required();
    quantize->add_option("--phi", q_phi, "Quantization step [V]");
    quantize->add_option("--vgs-min", q_min, "Grid lower bound [V]");
    quantize->add_option("--vgs-max", q_max, "Grid upper bound [V]");
    quantize->callback([&] { cmd_quantize(q_vin, q_phi, q_min, q_max); });

    // encode
    std::string e_config;
    double e_y = 0.0, e_x = 0.0, e_phi = 0.0;
    CLI::App* encode = app.add_subcommand(
        "encode", "Encode a sensor pair into a drain current");
    encode->add_option("--config", e_config, "Config file path");
    encode->add_option("--y", e_y, "Sensor-1 voltage, quantized to vgs [V]")
        ->required();
    encode->add_option("--x", e_x, "Sensor-2 voltage, applied as vds [V]")
        ->required();
    encode->add_option("--phi", e_phi, "Override quantizer step [V]");
    encode->callback([&] { cmd_encode(e_config, e_y, e_x, e_phi); });

    // decode
    std::string d_config;
    double d_ids1 = 0.0, d_ids2 = 0.0, d_phi = 0.0;
    bool d_nocorr = false;
    CLI::App* decode = app.add_subcommand(
        "decode", "Decode two consecutive currents by slope matching");
    decode->add_option("--config", d_config, "Config file path");
    decode->add_option("--ids1", d_ids1, "First current [A]")->required();
    decode->add_option("--ids2", d_ids2, "Second current [A]")->required();
    decode->add_option("--phi", d_phi, "Override quantizer step [V]");
    decode->add_flag("--no-correction", d_nocorr,
                     "Disable the range-check correction");
    decode->callback(
        [&] { cmd_decode(d_config, d_ids1, d_ids2, d_phi, d_nocorr); });

    // sweep
    std::string s_config, s_param = "phi", s_out;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "RMSE sweep over phi or lambda, CSV output");
    sweep->add_option("--config", s_config, "Config file path");
    sweep->add_option("--param", s_param, "Sweep parameter: phi or lambda");
    sweep->add_option("--out", s_out, "Output CSV path (overrides config)");
    sweep->callback([&] { cmd_sweep(s_config, s_param, s_out); });

    // power
    double p_phi = 0.0;
    bool p_shared = false;
    CLI::App* power = app.add_subcommand(
        "power", "Precircuit power estimate for a circuit phi");
    power->add_option("--phi", p_phi, "Circuit step: 1, 0.5, 0.25 or 0.125");
    power->add_flag("--shared", p_shared,
                    "Single shared-stage implementation");
    power->callback([&] { cmd_power(p_phi, p_shared); });

    // multimos-sweep
    std::string m_config, m_mode = "both", m_out;
    int m_devices = 4;
    double m_phi = 0.2;
    CLI::App* multimos = app.add_subcommand(
        "multimos-sweep",
        "Decode a level-interleaved bank of devices, CSV output");
    multimos->add_option("--config", m_config, "Config file path");
    multimos->add_option("--devices", m_devices, "Number of devices");
    multimos->add_option("--phi", m_phi, "Global level spacing [V]");
    multimos->add_option("--mode", m_mode, "genie, union or both");
    multimos->add_option("--out", m_out, "Output CSV path (overrides config)");
    multimos->callback([&] {
        cmd_multimos_sweep(m_config, m_devices, m_phi, m_mode, m_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
