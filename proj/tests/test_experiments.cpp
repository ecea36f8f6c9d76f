#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include <ajscc/experiments.hpp>
#include <ajscc/precircuit.hpp>

using namespace ajscc;

namespace {

const MosfetParams kRef{};

SweepSpec base_spec() {
    SweepSpec spec;
    spec.device = kRef;
    return spec;
}

DecodedPair make_pair(double vgs_hat, double truth_vgs, bool first) {
    DecodedPair p;
    p.vgs_hat = vgs_hat;
    p.truth_vgs = truth_vgs;
    p.vds_hat_1 = 5.0;
    p.truth_vds_1 = 5.0;
    p.vds_hat_2 = 5.1;
    p.truth_vds_2 = 5.1;
    p.first_of_curve = first;
    return p;
}

}  // namespace

TEST_CASE("default sweep grids") {
    const std::vector<double> phis = default_phi_grid();
    REQUIRE(phis.size() == 19);
    CHECK(phis.front() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(phis.back() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 1; i < phis.size(); ++i) {
        CHECK(phis[i] - phis[i - 1] == doctest::Approx(0.05).epsilon(1e-9));
    }

    const std::vector<double> lambdas = default_lambda_grid();
    REQUIRE(lambdas.size() == 25);
    CHECK(lambdas.front() == doctest::Approx(0.001).epsilon(1e-12));
    CHECK(lambdas.back() == doctest::Approx(0.2).epsilon(1e-12));
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        // Log spacing: constant ratio.
        CHECK(lambdas[i] / lambdas[i - 1] ==
              doctest::Approx(lambdas[1] / lambdas[0]).epsilon(1e-9));
    }
}

TEST_CASE("rmse scoring: every grid point once") {
    SUBCASE("a lone wrong pair among correct ones") {
        // Three scored values (first pair scores both its samples), one
        // vgs error of 0.5 V: rmse = 0.5/sqrt(3).
        std::vector<DecodedPair> pairs;
        pairs.push_back(make_pair(2.0, 2.0, true));
        pairs.push_back(make_pair(2.5, 2.0, false));
        const Rmse r = rmse(pairs);
        CHECK(r.vgs == doctest::Approx(0.5 / std::sqrt(3.0)).epsilon(1e-12));
        CHECK(r.vds == 0.0);
    }
    SUBCASE("all-correct decode is zero") {
        std::vector<DecodedPair> pairs;
        pairs.push_back(make_pair(3.0, 3.0, true));
        pairs.push_back(make_pair(3.0, 3.0, false));
        const Rmse r = rmse(pairs);
        CHECK(r.vgs == 0.0);
        CHECK(r.vds <= 1e-9);
    }
    SUBCASE("empty input is an error") {
        CHECK_THROWS_AS(rmse({}), std::invalid_argument);
    }
}

TEST_CASE("misdecode counting tolerance") {
    std::vector<DecodedPair> pairs;
    pairs.push_back(make_pair(2.0 + 1e-13, 2.0, true));
    pairs.push_back(make_pair(2.0 + 1e-6, 2.0, false));
    pairs.push_back(make_pair(1.5, 2.0, false));
    CHECK(count_misdecodes(pairs) == 2);
}

TEST_CASE("perturbation plumbing") {
    const QuantizerConfig q{1.0, 1.0, 5.0};
    const std::vector<EncodedSample> clean =
        encode_grid(make_eval_grid(q, 4.5, 10.0, 0.1, true), q, kRef);

    SUBCASE("sigma zero is the identity") {
        const std::vector<EncodedSample> out = perturb(clean, 0.0, 42);
        REQUIRE(out.size() == clean.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            REQUIRE(out[i].ids == clean[i].ids);
        }
    }
    SUBCASE("fixed seed reproduces; different seed differs") {
        const std::vector<EncodedSample> a = perturb(clean, 1e-6, 42);
        const std::vector<EncodedSample> b = perturb(clean, 1e-6, 42);
        const std::vector<EncodedSample> c = perturb(clean, 1e-6, 43);
        bool any_diff = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            REQUIRE(a[i].ids == b[i].ids);
            any_diff = any_diff || (a[i].ids != c[i].ids);
        }
        CHECK(any_diff);
    }
    SUBCASE("negative sigma rejected") {
        CHECK_THROWS_AS(perturb(clean, -1.0, 0), std::invalid_argument);
    }
    SUBCASE("noise can only hurt the noiseless decode") {
        SweepSpec spec = base_spec();
        spec.phi_values = {1.0};
        const SweepCell clean_cell = run_cell(spec, spec.device, 1.0, 0);
        REQUIRE(clean_cell.rmse_vgs_after == 0.0);
        spec.noise_sigma = 1e-6;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            spec.seed = seed;
            const SweepCell noisy = run_cell(spec, spec.device, 1.0, 0);
            REQUIRE(noisy.rmse_vgs_after >= clean_cell.rmse_vgs_after);
        }
    }
}

TEST_CASE("single-cell run reproduces the frozen reference row") {
    SweepSpec spec = base_spec();
    spec.phi_values = {0.5};
    const SweepCell cell = run_cell(spec, spec.device, 0.5, 0);
    CHECK(cell.pairs == 9 * 55);
    CHECK(cell.misdecodes_before == 203);
    CHECK(cell.misdecodes_after == 0);
    CHECK(cell.rmse_vgs_before == doctest::Approx(0.31888322).epsilon(1e-6));
    CHECK(cell.rmse_vds_before == doctest::Approx(6.1292847).epsilon(1e-6));
    CHECK(cell.rmse_vgs_after == 0.0);
    CHECK(cell.rmse_vds_after <= 1e-9);
}

TEST_CASE("phi sweep: rows sorted, regime thresholds hold") {
    SweepSpec spec = base_spec();
    spec.phi_values = {1.0, 0.25, 0.5};  // deliberately unsorted
    const SweepResult result = sweep_phi(spec);
    REQUIRE(result.cells.size() == 3);
    CHECK(result.cells[0].phi == 0.25);
    CHECK(result.cells[1].phi == 0.5);
    CHECK(result.cells[2].phi == 1.0);
    for (const SweepCell& c : result.cells) {
        CHECK(c.lambda == kRef.lambda);
        CHECK(c.misdecodes_after <= c.misdecodes_before);
    }
    // Coarse steps decode exactly after correction; 0.25 V does not.
    CHECK(result.cells[1].rmse_vgs_after <= 1e-9);
    CHECK(result.cells[2].rmse_vgs_after <= 1e-9);
    CHECK(result.cells[0].rmse_vgs_after > 1e-6);
}

TEST_CASE("lambda sweep: cross product and monotone degradation") {
    SweepSpec spec = base_spec();
    spec.phi_values = {0.25, 0.5};
    spec.lambda_values = {0.05, 0.001, 0.01};  // unsorted on purpose
    const SweepResult result = sweep_lambda(spec);
    REQUIRE(result.cells.size() == 6);

    for (std::size_t i = 0; i < result.cells.size(); ++i) {
        const SweepCell& c = result.cells[i];
        CHECK(c.phi == (i < 3 ? 0.25 : 0.5));
        CHECK(c.misdecodes_after <= c.misdecodes_before);
    }
    // Within each phi, lambda ascends and after-correction rmse never
    // improves as lambda grows.
    for (int base : {0, 3}) {
        CHECK(result.cells[base].lambda == 0.001);
        CHECK(result.cells[base + 1].lambda == 0.01);
        CHECK(result.cells[base + 2].lambda == 0.05);
        CHECK(result.cells[base + 1].rmse_vgs_after >=
              result.cells[base].rmse_vgs_after - 1e-12);
        CHECK(result.cells[base + 2].rmse_vgs_after >=
              result.cells[base + 1].rmse_vgs_after - 1e-12);
    }

    SweepSpec no_lambda = base_spec();
    no_lambda.phi_values = {0.5};
    no_lambda.lambda_values.clear();
    CHECK_THROWS_AS(sweep_lambda(no_lambda), std::invalid_argument);
}

TEST_CASE("sweep spec validation") {
    SweepSpec spec = base_spec();
    spec.phi_values = {};
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);

    spec = base_spec();
    spec.phi_values = {0.5, -0.1};
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);

    spec = base_spec();
    spec.phi_values = {0.5};
    spec.vds_step = 0.0;
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);

    spec = base_spec();
    spec.phi_values = {0.5};
    spec.noise_sigma = -1e-9;
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);
}

TEST_CASE("csv emission: format and determinism") {
    SweepSpec spec = base_spec();
    spec.phi_values = {0.5, 1.0};
    spec.noise_sigma = 1e-7;  // exercise the seeded noise path
    spec.seed = 7;

    auto to_csv = [&] {
        const SweepResult result = sweep_phi(spec);
        std::ostringstream os;
        write_csv(os, result, describe(spec));
        return os.str();
    };
    const std::string a = to_csv();
    const std::string b = to_csv();
    CHECK(a == b);  // identical spec+seed -> identical bytes

    // Header block is '#'-prefixed, then the schema line.
    CHECK(a.rfind("# device.label", 0) == 0);
    CHECK(a.find("\nphi_V,lambda_perV,rmse_vgs_before_V") !=
          std::string::npos);
    CHECK(a.find("# seed = 7") != std::string::npos);

    SUBCASE("floats carry nine significant digits") {
        SweepResult tiny;
        SweepCell cell;
        cell.phi = 0.123456789123;
        cell.lambda = 0.037;
        cell.rmse_vgs_before = 1.0 / 3.0;
        cell.pairs = 42;
        tiny.cells.push_back(cell);
        std::ostringstream os;
        write_csv(os, tiny, {});
        const std::string line = os.str();
        CHECK(line.find("0.123456789,0.037,0.333333333,0,0,0,0,0,42") !=
              std::string::npos);
    }
}

TEST_CASE("resolved-configuration description") {
    SweepSpec spec = base_spec();
    spec.phi_values = {0.5};
    spec.lambda_values = {0.01, 0.02};
    const std::vector<std::string> lines = describe(spec);
    bool saw_device = false, saw_phi = false, saw_pairing = false;
    for (const std::string& line : lines) {
        if (line == "device.kprime_A_per_V2 = 0.000155") saw_device = true;
        if (line == "phi_values_V = 0.5") saw_phi = true;
        if (line == "pairing = sliding") saw_pairing = true;
    }
    CHECK(saw_device);
    CHECK(saw_phi);
    CHECK(saw_pairing);
}
