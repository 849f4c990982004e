#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdof/sweep.hpp"

using namespace sdof;

namespace {

SweepConfig wiretap_config(double p_lo = 1e2, double p_hi = 1e5, int points = 4,
                           std::uint64_t seed = 5) {
    SweepConfig config;
    config.topology = Topology::wiretap_helpers(1);
    config.p_grid = log_grid(p_lo, p_hi, points);
    config.seed = seed;
    return config;
}

bool has_flag(const SweepSample& sample, const std::string& flag) {
    return std::find(sample.flags.begin(), sample.flags.end(), flag) != sample.flags.end();
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("log grid endpoints are exact") {
    const std::vector<double> grid = log_grid(1e2, 1e8, 7);
    REQUIRE(grid.size() == 7);
    CHECK(grid.front() == 1e2);
    CHECK(grid.back() == 1e8);
    for (int i = 0; i < 7; ++i)
        CHECK(grid[static_cast<std::size_t>(i)] ==
              doctest::Approx(std::pow(10.0, 2 + i)).epsilon(1e-12));
    CHECK_THROWS_WITH_AS(log_grid(0.0, 1e4, 4), "bad power range", std::invalid_argument);
    CHECK_THROWS_WITH_AS(log_grid(1e4, 1e2, 4), "bad power range", std::invalid_argument);
    CHECK_THROWS_WITH_AS(log_grid(1e2, 1e8, 1), "grid needs at least 2 points",
                         std::invalid_argument);
}

TEST_CASE("sweep configuration validation") {
    {
        SweepConfig config = wiretap_config();
        config.delta = 0.0;
        CHECK_THROWS_WITH_AS(sweep(config), "delta out of range", std::invalid_argument);
    }
    {
        SweepConfig config = wiretap_config();
        config.p_grid = {1e2, 1e4, 1e6};
        CHECK_THROWS_WITH_AS(sweep(config), "power grid needs at least 4 points",
                             std::invalid_argument);
    }
    {
        SweepConfig config = wiretap_config();
        config.p_grid = {-1.0, 1e2, 1e4, 1e6};
        CHECK_THROWS_WITH_AS(sweep(config), "power grid values must be positive",
                             std::invalid_argument);
    }
    {
        SweepConfig config = wiretap_config();
        config.p_grid = {1e2, 1e4, 1e3, 1e6};
        CHECK_THROWS_WITH_AS(sweep(config), "power grid must be strictly ascending",
                             std::invalid_argument);
    }
    {
        SweepConfig config = wiretap_config();
        config.p_grid = {1e2, 1e3, 5e3, 1e4};
        CHECK_THROWS_WITH_AS(sweep(config), "power grid must span at least 3 decades",
                             std::invalid_argument);
    }
}

TEST_CASE("bare wiretap baseline uses the closed form") {
    SweepConfig config = wiretap_config(1e2, 1e6, 5);
    config.topology = Topology::wiretap_helpers(0);
    const RateCurve curve = sweep(config);
    CHECK(curve.gamma == 0.0);
    CHECK(curve.theory_slope == Rational(0));
    REQUIRE(curve.samples.size() == 5);
    const double h = curve.gains.to_receiver1[0];
    const double g = curve.gains.to_receiver2[0];
    for (const SweepSample& sample : curve.samples) {
        CHECK(has_flag(sample, "closed-form"));
        const double expected =
            std::max(0.0, 0.5 * std::log2(1.0 + h * h * sample.power) -
                              0.5 * std::log2(1.0 + g * g * sample.power));
        CHECK(sample.sum_rate == doctest::Approx(expected).epsilon(1e-12));
        REQUIRE(sample.message_rates.size() == 1);
        CHECK(sample.message_rates[0] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("schedule within a sweep is monotone and power-feasible") {
    const RateCurve curve = sweep(wiretap_config(1e2, 1e6, 5, 9));
    REQUIRE(curve.samples.size() == 5);
    for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i)
        CHECK(curve.samples[i].q <= curve.samples[i + 1].q);
    for (const SweepSample& sample : curve.samples) {
        CHECK(sample.spacing > 0.0);
        CHECK(sample.dmin > 0.0);
        CHECK(sample.ser_bound >= 0.0);
        CHECK(sample.ser_bound <= 1.0);
        CHECK(sample.diag_ratio > 0.0);
        CHECK(sample.leakage >= 0.0);
        // a Q = gamma sqrt(P) exactly.
        CHECK(sample.spacing * static_cast<double>(sample.q) ==
              doctest::Approx(curve.gamma * std::sqrt(sample.power)).epsilon(1e-12));
    }
}

TEST_CASE("clamped low-power points carry the flag") {
    const RateCurve curve = sweep(wiretap_config(1.0, 1e3, 4, 5));
    CHECK(curve.samples.front().q == 1);
    CHECK(curve.samples.front().clamped);
    CHECK(has_flag(curve.samples.front(), "clamped"));
    CHECK_FALSE(curve.samples.back().clamped);
}

TEST_CASE("fitted slopes recompute from the samples") {
    const RateCurve curve = sweep(wiretap_config(1e2, 1e8, 7, 5));
    REQUIRE(curve.samples.size() == 7);
    std::vector<double> x, y;
    for (std::size_t i = curve.samples.size() / 2; i < curve.samples.size(); ++i) {
        x.push_back(0.5 * std::log2(curve.samples[i].power));
        y.push_back(curve.samples[i].sum_rate);
    }
    CHECK(curve.fitted_slope == doctest::Approx(fit_slope(x, y)).epsilon(1e-12));
    REQUIRE(curve.message_slopes.size() == 1);
    CHECK(curve.theory_slope == Rational(1, 2));
}

TEST_CASE("csv format for a single-message scheme") {
    const RateCurve curve = sweep(wiretap_config());
    const std::string csv = rate_curve_csv(curve);
    CHECK(first_line(csv) == "P,Q,a,rate1,sumRate,leakage,dMin,serBound,serEmpirical,flags");
    std::istringstream lines(csv);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 1 + 4);  // header + one row per grid point
    // Without an empirical decoder the serEmpirical field is empty.
    CHECK(csv.find(",,") != std::string::npos);
}

TEST_CASE("csv format for a two-message scheme") {
    SweepConfig config = wiretap_config(1e2, 1e5, 4, 3);
    config.topology = Topology::ic_cm(1);
    const std::string csv = rate_curve_csv(sweep(config));
    CHECK(first_line(csv) ==
          "P,Q,a,rate1,rate2,sumRate,leakage,dMin,serBound,serEmpirical,flags");
}

TEST_CASE("sweeps are deterministic") {
    const RateCurve a = sweep(wiretap_config());
    const RateCurve b = sweep(wiretap_config());
    CHECK(rate_curve_csv(a) == rate_curve_csv(b));
    CHECK(a.gains.to_receiver1 == b.gains.to_receiver1);
    const RateCurve other = sweep(wiretap_config(1e2, 1e5, 4, 6));
    CHECK(rate_curve_csv(other) != rate_curve_csv(a));
}

TEST_CASE("worker count does not change the results") {
    SweepConfig serial = wiretap_config(1e2, 1e6, 5, 7);
    SweepConfig parallel = serial;
    parallel.jobs = 3;
    CHECK(rate_curve_csv(sweep(serial)) == rate_curve_csv(sweep(parallel)));
}

TEST_CASE("empirical decoder column fills when requested") {
    SweepConfig config = wiretap_config();
    config.ser_trials = 400;
    const RateCurve curve = sweep(config);
    const std::string csv = rate_curve_csv(curve);
    CHECK(csv.find(",,") == std::string::npos);
    for (const SweepSample& sample : curve.samples) {
        CHECK(sample.ser_emp >= 0.0);
        CHECK(sample.ser_emp <= 1.0);
    }
}

TEST_CASE("gain draws are seeded and non-degenerate") {
    const RateCurve curve = sweep(wiretap_config(1e2, 1e5, 4, 2));
    CHECK(curve.gain_resample_attempts >= 0);
    CHECK(curve.gains.tx_count() == 2);
    for (int tx = 0; tx < 2; ++tx)
        for (int rx = 0; rx < 2; ++rx) {
            CHECK(std::abs(curve.gains.gain(tx, rx)) >= 0.5);
            CHECK(std::abs(curve.gains.gain(tx, rx)) <= 2.0);
        }
}
