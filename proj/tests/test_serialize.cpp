#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "sdof/serialize.hpp"

using namespace sdof;
using nlohmann::json;

TEST_CASE("topology round trip") {
    const Topology cases[] = {Topology::wiretap_helpers(0), Topology::wiretap_helpers(3),
                              Topology::bc_cm_helpers(2), Topology::ic_cm(0),
                              Topology::ic_cm(4), Topology::mac_wiretap(3)};
    for (const Topology& topology : cases) {
        const json j = topology_to_json(topology);
        CHECK(topology_from_json(j) == topology);
    }
    CHECK(topology_to_json(Topology::mac_wiretap(3))["scheme"] == "mac");
    CHECK(topology_to_json(Topology::mac_wiretap(3))["k"] == 3);
    CHECK(topology_to_json(Topology::wiretap_helpers(2))["m"] == 2);
}

TEST_CASE("topology parsing validation and defaults") {
    CHECK_THROWS_WITH_AS(topology_from_json(json{{"m", 1}}), "config needs a scheme",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(topology_from_json(json{{"scheme", "mesh"}}), "unknown scheme: mesh",
                         std::invalid_argument);
    CHECK(topology_from_json(json{{"scheme", "wt-helpers"}}) == Topology::wiretap_helpers(0));
    CHECK(topology_from_json(json{{"scheme", "bc-cm"}}) == Topology::bc_cm_helpers(1));
    CHECK(topology_from_json(json{{"scheme", "mac"}}) == Topology::mac_wiretap(2));
}

TEST_CASE("config round trip keeps every field") {
    SweepConfig config;
    config.topology = Topology::ic_cm(1);
    config.delta = 0.1;
    config.p_grid = log_grid(1e3, 1e7, 5);
    config.seed = 42;
    config.gain_range = {0.75, 1.5};
    config.mi_method = EntropyMethod::MonteCarlo;
    config.quad_tol = 5e-5;
    config.mc_samples = 12345;
    config.enum_cap = 222222;
    config.ser_trials = 99;
    config.jobs = 4;

    const SweepConfig back = sweep_config_from_json(sweep_config_to_json(config));
    CHECK(back.topology == config.topology);
    CHECK(back.delta == config.delta);
    CHECK(back.p_grid == config.p_grid);
    CHECK(back.seed == config.seed);
    CHECK(back.gain_range.lo == config.gain_range.lo);
    CHECK(back.gain_range.hi == config.gain_range.hi);
    CHECK(back.mi_method == EntropyMethod::MonteCarlo);
    CHECK(back.quad_tol == config.quad_tol);
    CHECK(back.mc_samples == config.mc_samples);
    CHECK(back.enum_cap == config.enum_cap);
    CHECK(back.ser_trials == config.ser_trials);
    CHECK(back.jobs == config.jobs);
}

TEST_CASE("power grid text forms") {
    CHECK(parse_pgrid("1e2:1e8:7") == log_grid(1e2, 1e8, 7));
    const std::vector<double> listed = parse_pgrid("100,1000,1e4");
    REQUIRE(listed.size() == 3);
    CHECK(listed[0] == 100.0);
    CHECK(listed[1] == 1000.0);
    CHECK(listed[2] == 1e4);
    CHECK_THROWS_AS(parse_pgrid(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_pgrid("1e2:1e8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pgrid("abc"), std::invalid_argument);
}

TEST_CASE("config accepts a string grid") {
    json j = {{"scheme", "wt-helpers"}, {"m", 1}, {"pGrid", "1e2:1e5:4"}};
    const SweepConfig config = sweep_config_from_json(j);
    CHECK(config.p_grid == log_grid(1e2, 1e5, 4));
}

TEST_CASE("manifest carries the run and its derived record") {
    SweepConfig config;
    config.topology = Topology::wiretap_helpers(1);
    config.p_grid = log_grid(1e2, 1e5, 4);
    config.seed = 5;
    const RateCurve curve = sweep(config);
    const json manifest = curve_manifest(curve, config);

    CHECK(manifest["schemaVersion"] == 1);
    CHECK(manifest["config"]["scheme"] == "wt-helpers");
    CHECK(manifest["derived"]["theorySlope"] == "1/2");
    CHECK(manifest["derived"]["gains"]["toReceiver1"].size() == 2);
    CHECK(manifest["derived"]["gamma"].get<double>() > 0.0);
    REQUIRE(manifest["derived"]["samples"].size() == 4);
    const json& sample = manifest["derived"]["samples"][0];
    for (const char* key : {"power", "q", "spacing", "clamped", "messageRates",
                            "messageLeakages", "sumRate", "leakage", "dMin", "serBound"})
        CHECK(sample.contains(key));
    CHECK(manifest["derived"].contains("planAtMaxPower"));
    CHECK(manifest["derived"]["fittedSlope"].get<double>() ==
          doctest::Approx(curve.fitted_slope).epsilon(1e-15));
}

TEST_CASE("baseline manifest omits the signaling plan") {
    SweepConfig config;
    config.topology = Topology::wiretap_helpers(0);
    config.p_grid = log_grid(1e2, 1e5, 4);
    const json manifest = curve_manifest(sweep(config), config);
    CHECK_FALSE(manifest["derived"].contains("planAtMaxPower"));
}

TEST_CASE("manifest replay reproduces the curve exactly") {
    SweepConfig config;
    config.topology = Topology::mac_wiretap(2);
    config.p_grid = log_grid(1e2, 1e5, 4);
    config.seed = 8;
    const RateCurve curve = sweep(config);
    const json manifest = curve_manifest(curve, config);

    // Replaying the embedded config (the manifest itself is accepted) must
    // give a bit-identical CSV.
    const SweepConfig replay = sweep_config_from_json(manifest);
    CHECK(rate_curve_csv(sweep(replay)) == rate_curve_csv(curve));
}

TEST_CASE("suite reports serialize with their verdicts") {
    SuiteReport report;
    report.suite = "demo";
    report.checks.push_back({"first", true, "fine"});
    report.checks.push_back({"second", false, "broken"});
    const json j = suite_report_to_json(report);
    CHECK(j["suite"] == "demo");
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][1]["pass"] == false);
    CHECK(j["checks"][1]["detail"] == "broken");
}

TEST_CASE("check reports serialize numeric fields") {
    CheckReport report;
    report.inequality = "demo-bound";
    report.lhs = 1.25;
    report.rhs = 2.5;
    report.margin = 1.25;
    report.std_error = 0.01;
    report.conclusive_violation = false;
    const json j = check_report_to_json(report);
    CHECK(j["inequality"] == "demo-bound");
    CHECK(j["lhs"] == 1.25);
    CHECK(j["rhs"] == 2.5);
    CHECK(j["margin"] == 1.25);
    CHECK(j["conclusiveViolation"] == false);
}
