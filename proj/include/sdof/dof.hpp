#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sdof/plan.hpp"
#include "sdof/rational.hpp"

namespace sdof {

// Exact secure-degrees-of-freedom value for the topology.
Rational theory_dof(const Topology& topology);

struct TheoryEntry {
    Topology topology;
    Rational dof;
    std::string note;
};

// Canonical display rows covering each topology family.
std::vector<TheoryEntry> theory_table();

// Exact minimum distance between distinct points of the evaluated receiver
// constellation. Returns +infinity when fewer than two distinct points
// exist. Throws EnumerationCapError past `point_cap` points.
double min_distance(const ReceiverSpace& space, const ChannelGains& gains,
                    const PamConstellation& pam, std::size_t point_cap = 1'000'000);

// All evaluated receiver points (one per per-dimension sum tuple), sorted
// ascending. Same enumeration min_distance scans; exposed for oracles.
std::vector<double> receiver_points(const ReceiverSpace& space, const ChannelGains& gains,
                                    const PamConstellation& pam,
                                    std::size_t point_cap = 1'000'000);

// Union-style pairwise error bound exp(-d^2/8), clamped to [0, 1].
double ser_bound(double dmin);

struct SerEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
};

// Monte-Carlo symbol-error rate of nearest-point decoding of the full
// per-dimension sum tuple at the given receiver. Equidistant and coincident
// points resolve to the lexicographically smallest tuple.
SerEstimate ser_empirical(const NetworkModel& model, const SignalingPlan& plan, int receiver,
                          std::size_t trials, std::uint64_t seed,
                          NoisePolicy policy = NoisePolicy::Gaussian,
                          std::size_t point_cap = 1'000'000);

// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

}  // namespace sdof
