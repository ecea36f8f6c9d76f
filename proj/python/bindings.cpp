// pybind11 surface over the core library. Mirrors the C++ API one-to-one;
// std::invalid_argument / std::domain_error map to ValueError,
// std::runtime_error to RuntimeError.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <ajscc/experiments.hpp>
#include <ajscc/multimos.hpp>
#include <ajscc/run_config.hpp>

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "MOSFET-based analog joint source-channel coding: quantizing "
        "precircuit, IV-curve encoder, slope-matching decoder, sweeps";

    // ---- device ----
    py::class_<ajscc::MosfetParams>(m, "MosfetParams")
        .def(py::init<>())
        .def_readwrite("kprime", &ajscc::MosfetParams::kprime)
        .def_readwrite("vth", &ajscc::MosfetParams::vth)
        .def_readwrite("lambda_", &ajscc::MosfetParams::lambda)
        .def_readwrite("label", &ajscc::MosfetParams::label);

    m.def("validate_device",
          static_cast<void (*)(const ajscc::MosfetParams&)>(&ajscc::validate));
    m.def("ids_forward", &ajscc::ids_forward, py::arg("params"),
          py::arg("vgs"), py::arg("vds"));
    m.def("invert_vds", &ajscc::invert_vds, py::arg("params"), py::arg("vgs"),
          py::arg("ids"));
    m.def("curve_slope_exact", &ajscc::curve_slope_exact);
    m.def("approx_slope_from_currents", &ajscc::approx_slope_from_currents);

    // ---- precircuit ----
    py::class_<ajscc::QuantizerConfig>(m, "QuantizerConfig")
        .def(py::init<>())
        .def(py::init([](double phi, double vgs_min, double vgs_max) {
                 return ajscc::QuantizerConfig{phi, vgs_min, vgs_max};
             }),
             py::arg("phi") = 0.5, py::arg("vgs_min") = 1.0,
             py::arg("vgs_max") = 5.0)
        .def_readwrite("phi", &ajscc::QuantizerConfig::phi)
        .def_readwrite("vgs_min", &ajscc::QuantizerConfig::vgs_min)
        .def_readwrite("vgs_max", &ajscc::QuantizerConfig::vgs_max);

    py::enum_<ajscc::StageEmit>(m, "StageEmit")
        .value("RESIDUAL", ajscc::StageEmit::kResidual)
        .value("FINAL", ajscc::StageEmit::kFinal)
        .value("POWERED_DOWN", ajscc::StageEmit::kPoweredDown);

    py::class_<ajscc::StageRecord>(m, "StageRecord")
        .def_readonly("residual_in", &ajscc::StageRecord::residual_in)
        .def_readonly("emitted", &ajscc::StageRecord::emitted)
        .def_readonly("kind", &ajscc::StageRecord::kind);

    py::class_<ajscc::StageTrace>(m, "StageTrace")
        .def_readonly("vin", &ajscc::StageTrace::vin)
        .def_readonly("integer_part", &ajscc::StageTrace::integer_part)
        .def_readonly("stages", &ajscc::StageTrace::stages)
        .def_readonly("vgs_mos", &ajscc::StageTrace::vgs_mos);

    py::class_<ajscc::PhiCode>(m, "PhiCode")
        .def_readonly("lines", &ajscc::PhiCode::lines)
        .def("is_one_hot", &ajscc::PhiCode::is_one_hot)
        .def("hot_index", &ajscc::PhiCode::hot_index)
        .def("voltages", &ajscc::PhiCode::voltages);

    py::class_<ajscc::PhiPrimeCode>(m, "PhiPrimeCode")
        .def_readonly("lines", &ajscc::PhiPrimeCode::lines)
        .def("is_prefix", &ajscc::PhiPrimeCode::is_prefix)
        .def("active_stages", &ajscc::PhiPrimeCode::active_stages)
        .def("voltages", &ajscc::PhiPrimeCode::voltages);

    m.def("is_circuit_phi", &ajscc::is_circuit_phi);
    m.def("active_stage_count", &ajscc::active_stage_count);
    m.def("encode_phi", &ajscc::encode_phi);
    m.def("derive_phi_prime", &ajscc::derive_phi_prime);
    m.def("ilq", &ajscc::ilq, py::arg("config"), py::arg("vin"));
    m.def(
        "run_stage",
        [](int n, double residual_in, bool is_last) {
            const ajscc::StageResult r =
                ajscc::run_stage(n, residual_in, is_last);
            return py::make_tuple(r.emitted, r.residual_out);
        },
        py::arg("n"), py::arg("residual_in"), py::arg("is_last"));
    m.def("quantize", &ajscc::quantize, py::arg("vin"), py::arg("config"));
    m.def("quantize_traced", &ajscc::quantize_traced, py::arg("vin"),
          py::arg("config"));
    m.def("level_grid", &ajscc::level_grid);
    m.def("power_estimate", &ajscc::power_estimate, py::arg("config"),
          py::arg("shared_single_stage") = false);

    // ---- transmitter ----
    py::class_<ajscc::SensorPair>(m, "SensorPair")
        .def(py::init([](double y_raw, double x_raw) {
                 return ajscc::SensorPair{y_raw, x_raw};
             }),
             py::arg("y_raw"), py::arg("x_raw"))
        .def_readwrite("y_raw", &ajscc::SensorPair::y_raw)
        .def_readwrite("x_raw", &ajscc::SensorPair::x_raw);

    py::class_<ajscc::GroundTruth>(m, "GroundTruth")
        .def_readonly("vgs_level", &ajscc::GroundTruth::vgs_level)
        .def_readonly("vds", &ajscc::GroundTruth::vds);

    py::class_<ajscc::EncodedSample>(m, "EncodedSample")
        .def_readwrite("ids", &ajscc::EncodedSample::ids)
        .def_readonly("truth", &ajscc::EncodedSample::truth);

    m.def("encode", &ajscc::encode, py::arg("pair"), py::arg("config"),
          py::arg("params"));
    m.def("make_eval_grid", &ajscc::make_eval_grid, py::arg("config"),
          py::arg("vds_min"), py::arg("vds_max"), py::arg("vds_step"),
          py::arg("include_endpoint") = true);
    m.def("encode_grid", &ajscc::encode_grid, py::arg("grid"),
          py::arg("config"), py::arg("params"));

    // ---- receiver ----
    py::class_<ajscc::DecoderConfig>(m, "DecoderConfig")
        .def(py::init([](std::vector<double> levels, ajscc::MosfetParams dev,
                         double vds_min, double vds_max) {
                 return ajscc::DecoderConfig{std::move(levels), std::move(dev),
                                             vds_min, vds_max};
             }),
             py::arg("candidate_levels"), py::arg("device"),
             py::arg("vds_min") = 4.5, py::arg("vds_max") = 10.0)
        .def_readwrite("candidate_levels",
                       &ajscc::DecoderConfig::candidate_levels)
        .def_readwrite("device", &ajscc::DecoderConfig::device)
        .def_readwrite("vds_min", &ajscc::DecoderConfig::vds_min)
        .def_readwrite("vds_max", &ajscc::DecoderConfig::vds_max);

    py::class_<ajscc::DecodedPair>(m, "DecodedPair")
        .def_readonly("vgs_hat", &ajscc::DecodedPair::vgs_hat)
        .def_readonly("vds_hat_1", &ajscc::DecodedPair::vds_hat_1)
        .def_readonly("vds_hat_2", &ajscc::DecodedPair::vds_hat_2)
        .def_readonly("rank_used", &ajscc::DecodedPair::rank_used)
        .def_readonly("corrected", &ajscc::DecodedPair::corrected)
        .def_readonly("truth_vgs", &ajscc::DecodedPair::truth_vgs)
        .def_readonly("truth_vds_1", &ajscc::DecodedPair::truth_vds_1)
        .def_readonly("truth_vds_2", &ajscc::DecodedPair::truth_vds_2)
        .def_readonly("idx1", &ajscc::DecodedPair::idx1)
        .def_readonly("idx2", &ajscc::DecodedPair::idx2)
        .def_readonly("first_of_curve", &ajscc::DecodedPair::first_of_curve);

    py::enum_<ajscc::Pairing>(m, "Pairing")
        .value("SLIDING", ajscc::Pairing::kSliding)
        .value("DISJOINT", ajscc::Pairing::kDisjoint);

    py::class_<ajscc::DecodeRun>(m, "DecodeRun")
        .def_readonly("pairs", &ajscc::DecodeRun::pairs)
        .def_readonly("skipped_segments", &ajscc::DecodeRun::skipped_segments);

    m.def("slope_mismatch", &ajscc::slope_mismatch, py::arg("config"),
          py::arg("candidate"), py::arg("ids1"), py::arg("ids2"));
    m.def("decode_pair", &ajscc::decode_pair, py::arg("config"),
          py::arg("ids1"), py::arg("ids2"), py::arg("apply_correction"));
    m.def("decode_stream", &ajscc::decode_stream, py::arg("config"),
          py::arg("samples"), py::arg("pairing") = ajscc::Pairing::kSliding,
          py::arg("apply_correction") = true);

    // ---- multimos ----
    py::class_<ajscc::MosfetBank>(m, "MosfetBank")
        .def_readwrite("devices", &ajscc::MosfetBank::devices)
        .def_readwrite("assignment", &ajscc::MosfetBank::assignment)
        .def_readwrite("levels", &ajscc::MosfetBank::levels);

    py::enum_<ajscc::BankMode>(m, "BankMode")
        .value("GENIE", ajscc::BankMode::kGenie)
        .value("UNION", ajscc::BankMode::kUnion);

    m.def("assign_levels", &ajscc::assign_levels, py::arg("levels"),
          py::arg("n_devices"), py::arg("base") = ajscc::MosfetParams{});
    m.def("device_levels", &ajscc::device_levels);
    m.def("decode_bank", &ajscc::decode_bank, py::arg("bank"),
          py::arg("samples"), py::arg("mode"), py::arg("apply_correction"),
          py::arg("pairing") = ajscc::Pairing::kSliding,
          py::arg("vds_min") = 4.5, py::arg("vds_max") = 10.0);

    // ---- experiments ----
    py::class_<ajscc::SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("device", &ajscc::SweepSpec::device)
        .def_readwrite("phi_values", &ajscc::SweepSpec::phi_values)
        .def_readwrite("lambda_values", &ajscc::SweepSpec::lambda_values)
        .def_readwrite("vds_min", &ajscc::SweepSpec::vds_min)
        .def_readwrite("vds_max", &ajscc::SweepSpec::vds_max)
        .def_readwrite("vds_step", &ajscc::SweepSpec::vds_step)
        .def_readwrite("include_vds_endpoint",
                       &ajscc::SweepSpec::include_vds_endpoint)
        .def_readwrite("vgs_min", &ajscc::SweepSpec::vgs_min)
        .def_readwrite("vgs_max", &ajscc::SweepSpec::vgs_max)
        .def_readwrite("pairing", &ajscc::SweepSpec::pairing)
        .def_readwrite("noise_sigma", &ajscc::SweepSpec::noise_sigma)
        .def_readwrite("seed", &ajscc::SweepSpec::seed);

    py::class_<ajscc::SweepCell>(m, "SweepCell")
        .def_readonly("phi", &ajscc::SweepCell::phi)
        .def_readonly("lambda_", &ajscc::SweepCell::lambda)
        .def_readonly("rmse_vgs_before", &ajscc::SweepCell::rmse_vgs_before)
        .def_readonly("rmse_vgs_after", &ajscc::SweepCell::rmse_vgs_after)
        .def_readonly("rmse_vds_before", &ajscc::SweepCell::rmse_vds_before)
        .def_readonly("rmse_vds_after", &ajscc::SweepCell::rmse_vds_after)
        .def_readonly("misdecodes_before",
                      &ajscc::SweepCell::misdecodes_before)
        .def_readonly("misdecodes_after", &ajscc::SweepCell::misdecodes_after)
        .def_readonly("pairs", &ajscc::SweepCell::pairs);

    py::class_<ajscc::SweepResult>(m, "SweepResult")
        .def_readonly("cells", &ajscc::SweepResult::cells);

    py::class_<ajscc::Rmse>(m, "Rmse")
        .def_readonly("vgs", &ajscc::Rmse::vgs)
        .def_readonly("vds", &ajscc::Rmse::vds);

    m.def("default_phi_grid", &ajscc::default_phi_grid);
    m.def("default_lambda_grid", &ajscc::default_lambda_grid);
    m.def("rmse", &ajscc::rmse);
    m.def("count_misdecodes", &ajscc::count_misdecodes);
    m.def("perturb", &ajscc::perturb, py::arg("samples"), py::arg("sigma"),
          py::arg("seed"));
    m.def("run_cell", &ajscc::run_cell, py::arg("spec"), py::arg("device"),
          py::arg("phi"), py::arg("seed_offset") = 0);
    m.def("sweep_phi", &ajscc::sweep_phi);
    m.def("sweep_lambda", &ajscc::sweep_lambda);
    m.def(
        "csv_string",
        [](const ajscc::SweepResult& result,
           const std::vector<std::string>& header) {
            std::ostringstream os;
            ajscc::write_csv(os, result, header);
            return os.str();
        },
        py::arg("result"), py::arg("header") = std::vector<std::string>{});
    m.def("describe", &ajscc::describe);

    // ---- run config ----
    py::class_<ajscc::RunConfig>(m, "RunConfig")
        .def(py::init(&ajscc::default_run_config))
        .def_readwrite("device", &ajscc::RunConfig::device)
        .def_readwrite("quantizer", &ajscc::RunConfig::quantizer)
        .def_readwrite("sweep", &ajscc::RunConfig::sweep)
        .def_readwrite("output_path", &ajscc::RunConfig::output_path);

    m.def("default_run_config", &ajscc::default_run_config);
    m.def("parse_value_list", &ajscc::parse_value_list);
    m.def("load_run_config", &ajscc::load_run_config);
    m.def("parse_run_config_text", [](const std::string& text) {
        std::istringstream in(text);
        return ajscc::parse_run_config(in);
    });
}
