#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdof/converse.hpp"

using namespace sdof;

namespace {

constexpr double kLog2TwoPiE = 4.094191170361282;

NetworkModel wiretap_model(std::vector<double> h, std::vector<double> g, double power = 1.0) {
    NetworkModel model;
    model.topology = Topology::wiretap_helpers(static_cast<int>(h.size()) - 1);
    model.gains.to_receiver1 = std::move(h);
    model.gains.to_receiver2 = std::move(g);
    model.power = power;
    return model;
}

DiscreteLaw constant_zero() {
    DiscreteLaw law;
    law.values = {0.0};
    law.probs = {1.0};
    return law;
}

}  // namespace

TEST_CASE("law validation") {
    DiscreteLaw mismatched;
    mismatched.values = {0.0, 1.0};
    mismatched.probs = {1.0};
    CHECK_THROWS_AS(mismatched.validate(), std::invalid_argument);

    DiscreteLaw negative;
    negative.values = {0.0, 1.0};
    negative.probs = {1.5, -0.5};
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);

    DiscreteLaw off_total;
    off_total.values = {0.0, 1.0};
    off_total.probs = {0.4, 0.4};
    CHECK_THROWS_AS(off_total.validate(), std::invalid_argument);

    CHECK_NOTHROW(constant_zero().validate());
}

TEST_CASE("random lattice laws are proper distributions") {
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        const DiscreteLaw law = random_pam_law(3, 0.8, rng);
        REQUIRE(law.values.size() == 7);
        CHECK_NOTHROW(law.validate());
        for (int v = -3; v <= 3; ++v)
            CHECK(law.values[static_cast<std::size_t>(v + 3)] ==
                  doctest::Approx(0.8 * v).epsilon(1e-15));
        double total = 0.0;
        for (const double p : law.probs) {
            CHECK(p >= 0.0);
            total += p;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK_THROWS_AS(random_pam_law(-1, 1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(random_pam_law(1, 0.0, rng), std::invalid_argument);
}

TEST_CASE("default perturbation sits at half the feasibility bound") {
    const NetworkModel model = wiretap_model({2.0, 0.5}, {1.0, -1.25});
    const PerturbationSpec spec = default_perturbation(model);
    REQUIRE(spec.variances.size() == 2);
    CHECK(spec.variances[0] == doctest::Approx(0.5 * std::min(1.0 / 4.0, 1.0)).epsilon(1e-15));
    CHECK(spec.variances[1] ==
          doctest::Approx(0.5 * std::min(4.0, 1.0 / 1.5625)).epsilon(1e-15));
    CHECK_NOTHROW(validate_perturbation(model, spec));
}

TEST_CASE("perturbation validation rejects infeasible variances") {
    const NetworkModel model = wiretap_model({2.0, 1.0}, {1.0, 1.0});
    PerturbationSpec spec;
    spec.variances = {0.3, 0.5};  // 0.3 > 1/h1^2 = 0.25
    CHECK_THROWS_WITH_AS(validate_perturbation(model, spec),
                         "perturbation variance out of range", std::invalid_argument);
    spec.variances = {0.2};
    CHECK_THROWS_AS(validate_perturbation(model, spec), std::invalid_argument);
}

TEST_CASE("reconstruction constant closed form") {
    const NetworkModel model = wiretap_model({1.0, 1.0}, {1.0, 1.0});
    PerturbationSpec vanish;
    vanish.variances = {1e-18, 1e-18};
    const ConverseConstant tiny = reconstruction_constant(model, vanish);
    CHECK(tiny.formula == "output-reconstruction");
    CHECK(tiny.bits == doctest::Approx(kLog2TwoPiE).epsilon(1e-9));

    PerturbationSpec half;
    half.variances = {0.5, 0.5};
    const ConverseConstant one_bit = reconstruction_constant(model, half);
    // 1/2 log2(2 pi e * 2) per receiver = log2(2 pi e) + 1 in total.
    CHECK(one_bit.bits == doctest::Approx(kLog2TwoPiE + 1.0).epsilon(1e-12));
}

TEST_CASE("reconstruction constant ignores transmit power") {
    PerturbationSpec spec;
    spec.variances = {0.25, 0.125};
    const NetworkModel low = wiretap_model({1.3, -0.7}, {0.9, 1.6}, 1e2);
    const NetworkModel high = wiretap_model({1.3, -0.7}, {0.9, 1.6}, 1e8);
    CHECK(reconstruction_constant(low, spec).bits == reconstruction_constant(high, spec).bits);
}

TEST_CASE("helper-role margin has a closed form for a silent helper") {
    // Constant helper input: lhs = log2|h2| + (1/2) log2(2 pi e v),
    // rhs = (1/2) log2(2 pi e), so the margin is exactly -(1/2) log2(v) = 1 bit.
    const NetworkModel model = wiretap_model({1.4, 1.0}, {0.8, 0.9});
    PerturbationSpec spec;
    spec.variances = {0.25, 0.25};
    const std::vector<DiscreteLaw> inputs = {constant_zero(), constant_zero()};
    const CheckReport report = helper_role_check(inputs, model, spec, 1);
    CHECK(report.margin == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(report.std_error > 0.0);  // encodes the quadrature tolerance
    CHECK_FALSE(report.conclusive_violation);
    CHECK_THROWS_AS(helper_role_check(inputs, model, spec, 0), std::invalid_argument);
    CHECK_THROWS_AS(helper_role_check(inputs, model, spec, 2), std::invalid_argument);
}

TEST_CASE("secrecy-penalty margin for silent transmitters") {
    // With constant inputs the bound reduces to C_recon - log2(2 pi e) >= 0.
    const NetworkModel model = wiretap_model({1.0, 1.2}, {0.9, 1.1});
    const PerturbationSpec spec = default_perturbation(model);
    const std::vector<DiscreteLaw> inputs = {constant_zero(), constant_zero()};
    const CheckReport report = secrecy_penalty_check(inputs, model, spec, 6000, 7);
    const double expected = reconstruction_constant(model, spec).bits - kLog2TwoPiE;
    REQUIRE(report.std_error > 0.0);
    CHECK(std::abs(report.margin - expected) < 6.0 * report.std_error + 0.02);
    CHECK_FALSE(report.conclusive_violation);
    CHECK(report.lhs == doctest::Approx(kLog2TwoPiE).epsilon(0.05));
}

TEST_CASE("secrecy-penalty corollaries cover every transmitter") {
    Rng rng(12);
    const NetworkModel model = wiretap_model({1.1, -0.8, 1.4}, {0.7, 1.2, -0.9});
    const PerturbationSpec spec = default_perturbation(model);
    std::vector<DiscreteLaw> inputs;
    for (int tx = 0; tx < 3; ++tx) inputs.push_back(random_pam_law(2, 0.9, rng));
    const std::vector<CheckReport> reports =
        secrecy_penalty_corollaries(inputs, model, spec, 6000, 21);
    REQUIRE(reports.size() == 3);
    for (const CheckReport& report : reports) {
        CHECK_FALSE(report.conclusive_violation);
        CHECK(report.std_error > 0.0);
    }
}

TEST_CASE("interference sum-rate bound holds on random laws") {
    NetworkModel model;
    model.topology = Topology::ic_cm(0);
    model.gains = sample_gains(model.topology, 19);
    model.power = 1.0;
    const PerturbationSpec spec = default_perturbation(model);
    Rng rng(77);
    for (int i = 0; i < 5; ++i) {
        const std::vector<DiscreteLaw> inputs = {random_pam_law(2, 1.1, rng),
                                                 random_pam_law(1, 0.6, rng)};
        const CheckReport report = interference_sumrate_check(inputs, model, spec);
        CHECK_FALSE(report.conclusive_violation);
        CHECK(report.margin >= -3.0 * report.std_error);
    }
}

TEST_CASE("interference bound requires exactly two transmitters") {
    NetworkModel model;
    model.topology = Topology::mac_wiretap(3);
    model.gains = sample_gains(model.topology, 4);
    const PerturbationSpec spec = default_perturbation(model);
    Rng rng(3);
    const std::vector<DiscreteLaw> inputs = {random_pam_law(1, 1.0, rng),
                                             random_pam_law(1, 1.0, rng),
                                             random_pam_law(1, 1.0, rng)};
    CHECK_THROWS_WITH_AS(interference_sumrate_check(inputs, model, spec),
                         "two-transmitter model required", std::invalid_argument);
}

TEST_CASE("input law count must match the transmitters") {
    const NetworkModel model = wiretap_model({1.0, 1.0}, {0.9, 1.1});
    const PerturbationSpec spec = default_perturbation(model);
    const std::vector<DiscreteLaw> short_list = {constant_zero()};
    CHECK_THROWS_AS(secrecy_penalty_check(short_list, model, spec, 1000, 1),
                    std::invalid_argument);
}
