#pragma once

#include <cstdint>
#include <vector>

#include "sdof/topology.hpp"

namespace sdof {

// Symmetric PAM alphabet a * {-Q, ..., Q} with 2Q+1 points, used uniformly.
struct PamConstellation {
    double spacing = 1.0;     // a
    long long half_range = 1; // Q
    bool clamped = false;     // schedule landed at the minimum Q == 1

    long long size() const { return 2 * half_range + 1; }

    // E[X^2] of a uniform draw: a^2 Q(Q+1)/3.
    double second_moment() const {
        const double q = static_cast<double>(half_range);
        return spacing * spacing * q * (q + 1.0) / 3.0;
    }
};

// Power-indexed schedule: Q(P) = floor(P^((1-delta)/(2(dims+delta)))), clamped
// to Q >= 1, and a = gamma * sqrt(P) / Q, so a*Q = gamma*sqrt(P) exactly.
// `dims` is the dimension count at the decoding receiver.
PamConstellation schedule_params(double power, double delta, int dims, double gamma);

// Largest input normalizer keeping every transmitter inside E[X^2] <= P for
// the topology's signaling scheme.
double gamma_for_scheme(const NetworkModel& model);

// Entropy of the uniform PAM alphabet: log2(2Q+1) bits.
double pam_entropy_bits(long long q);

// Probability mass on a contiguous integer lattice {min_index, ...}.
struct LatticePmf {
    long long min_index = 0;
    std::vector<double> probs;

    long long max_index() const { return min_index + static_cast<long long>(probs.size()) - 1; }
    double entropy_bits() const;
};

// Law of the sum of k independent uniform draws from {-Q..Q}; support {-kQ..kQ}.
// k == 0 yields the unit mass at 0.
LatticePmf sum_pam_pmf(long long q, int k);

LatticePmf convolve(const LatticePmf& a, const LatticePmf& b);

}  // namespace sdof
