#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdof/dof.hpp"
#include "sdof/metrics.hpp"
#include "sdof/plan.hpp"

namespace sdof {

struct SweepConfig {
    Topology topology;
    double delta = 0.05;
    std::vector<double> p_grid;  // ascending, >= 4 points spanning >= 3 decades
    std::uint64_t seed = 1;
    GainRange gain_range{};
    EntropyMethod mi_method = EntropyMethod::Quadrature;
    double quad_tol = 1e-4;
    std::size_t mc_samples = 40000;
    std::size_t enum_cap = 1'000'000;
    std::size_t ser_trials = 0;  // 0 disables the empirical decoder
    int jobs = 1;
};

struct SweepSample {
    double power = 0.0;
    long long q = 0;
    double spacing = 0.0;
    bool clamped = false;
    std::vector<double> message_rates;     // floored at 0
    std::vector<double> message_leakages;  // one per message (joint for wt/mac)
    double sum_rate = 0.0;
    double leakage = 0.0;         // joint for wt/mac, max per-message for bc/ic
    double leakage_std_error = 0.0;
    double rate_std_error = 0.0;  // on the sum rate
    double dmin = 0.0;
    double ser_bound = 0.0;
    double ser_emp = -1.0;        // negative when not estimated
    double ser_emp_std_error = 0.0;
    double diag_ratio = 0.0;      // dmin * (c Q)^(dims-1+delta) / a
    std::vector<std::string> flags;
};

struct RateCurve {
    Topology topology;
    double delta = 0.05;
    std::uint64_t seed = 1;
    ChannelGains gains;
    double gamma = 0.0;  // 0 for the closed-form wiretap baseline
    int gain_resample_attempts = 0;
    std::vector<SweepSample> samples;
    double fitted_slope = 0.0;                // sum rate vs (1/2) log2 P, upper half
    std::vector<double> message_slopes;
    Rational theory_slope;
    bool diag_decay_flag = false;             // diagnostic ratio fell by > 10x
};

// Runs the full sweep: samples gains from the seed (redrawing on degenerate
// coefficient collisions), builds the schedule and plan per grid point,
// measures rates and leakage, and fits slopes on the upper half of the grid.
RateCurve sweep(const SweepConfig& config);

// Log-spaced grid between two powers (inclusive).
std::vector<double> log_grid(double p_lo, double p_hi, int points);

// Deterministic CSV rendering of a curve (fixed column set; %.17g floats).
std::string rate_curve_csv(const RateCurve& curve);

}  // namespace sdof
