#pragma once

#include <cstdint>
#include <vector>

#include "sdof/pam.hpp"
#include "sdof/rng.hpp"

namespace sdof {

// Equal-variance Gaussian mixture with unit component variance. Means are
// kept sorted so that density evaluation can restrict itself to the
// components within a +-8 sigma window of the query point.
struct MixtureDensity {
    std::vector<double> means;    // sorted ascending
    std::vector<double> weights;  // aligned with means, sums to 1
    static constexpr double component_variance = 1.0;

    // Sorts by mean and rescales weights to unit total; rejects weight sums
    // farther than 1e-9 from 1.
    void normalize_and_sort();

    // Mixture pdf, evaluated over the components within `window` of y.
    double density(double y, double window = 10.0) const;
};

enum class EntropyMethod { Quadrature, MonteCarlo };

struct EntropyEstimate {
    double bits = 0.0;
    double std_error = 0.0;    // 0 for quadrature
    double achieved_tol = 0.0; // last refinement gap (quadrature only)
    bool converged = true;
};

// Differential entropy of the mixture in bits.
//
// Quadrature: composite Simpson over [min mean - 10, max mean + 10], with the
// step halved until successive values differ by less than tol_bits.
// MonteCarlo: mean of -log2 f at samples drawn from the mixture, with the
// sample standard error reported.
EntropyEstimate diff_entropy(const MixtureDensity& mix, EntropyMethod method,
                             double tol_bits = 1e-4, std::size_t mc_samples = 20000,
                             std::uint64_t seed = 1);

// Integral of the mixture density over its quadrature window; a normalization
// diagnostic (should sit within 1e-6 of 1).
double quadrature_mass(const MixtureDensity& mix);

// Gaussian mixture structured as a product of independent lattice factors:
//   Y = shift + sum_d scale_d * S_d + N(0,1),  S_d ~ pmf_d on its lattice.
// Lets the density be evaluated near a point without enumerating the full
// component set, so Monte-Carlo entropy estimation scales past the
// enumeration cap.
struct ProductMixture {
    struct Factor {
        double scale = 1.0;  // evaluated dimension coefficient times spacing
        LatticePmf pmf;
    };

    double shift = 0.0;
    std::vector<Factor> factors;

    std::size_t component_count() const;  // saturates at SIZE_MAX / 2

    // Exact enumeration into a MixtureDensity; throws EnumerationCapError.
    MixtureDensity enumerate(std::size_t cap = 1'000'000) const;

    // Exact density via depth-first enumeration pruned to means within
    // `window` of y. The neglected mass contributes at most phi(window).
    double density(double y, double window = 10.0) const;

    double sample_mean(Rng& rng) const;

    // Monte-Carlo differential entropy without full enumeration.
    EntropyEstimate mc_entropy(std::size_t samples, std::uint64_t seed) const;

    // Orders factors by span and precomputes pruning tables; called lazily by
    // density()/mc_entropy(), or explicitly after construction.
    void prepare();

private:
    struct Prepared {
        std::vector<std::size_t> order;
        std::vector<double> suffix_lo;
        std::vector<double> suffix_hi;
        std::vector<std::vector<double>> cdfs;
        bool ready = false;
    };
    mutable Prepared prep_;
};

}  // namespace sdof
