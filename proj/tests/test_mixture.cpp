#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdof/errors.hpp"
#include "sdof/mixture.hpp"
#include "sdof/pam.hpp"

using namespace sdof;

namespace {
constexpr double kGaussianEntropyBits = 2.047095585180641;  // (1/2) log2(2 pi e)

MixtureDensity single_gaussian() {
    MixtureDensity mix;
    mix.means = {0.0};
    mix.weights = {1.0};
    return mix;
}
}  // namespace

TEST_CASE("normalization sorts means and rescales weights") {
    MixtureDensity mix;
    mix.means = {2.0, -1.0, 0.5};
    mix.weights = {0.2, 0.5, 0.3};
    mix.normalize_and_sort();
    CHECK(mix.means == std::vector<double>{-1.0, 0.5, 2.0});
    CHECK(mix.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mix.weights[2] == doctest::Approx(0.2).epsilon(1e-15));

    MixtureDensity bad;
    bad.means = {0.0, 1.0};
    bad.weights = {0.5};
    CHECK_THROWS_AS(bad.normalize_and_sort(), std::invalid_argument);
    MixtureDensity off;
    off.means = {0.0};
    off.weights = {0.5};  // sum far from 1
    CHECK_THROWS_AS(off.normalize_and_sort(), std::invalid_argument);
}

TEST_CASE("density matches the Gaussian closed form") {
    const MixtureDensity mix = single_gaussian();
    const double phi0 = 1.0 / std::sqrt(2.0 * 3.14159265358979323846);
    CHECK(mix.density(0.0) == doctest::Approx(phi0).epsilon(1e-12));
    CHECK(mix.density(1.0) == doctest::Approx(phi0 * std::exp(-0.5)).epsilon(1e-12));
    // Points outside the component window evaluate to zero mass.
    CHECK(mix.density(50.0) == 0.0);
}

TEST_CASE("quadrature entropy of a single Gaussian") {
    const EntropyEstimate est = diff_entropy(single_gaussian(), EntropyMethod::Quadrature);
    CHECK(est.converged);
    CHECK(est.std_error == 0.0);
    CHECK(est.bits == doctest::Approx(kGaussianEntropyBits).epsilon(2e-4));
}

TEST_CASE("well-separated pair adds exactly one bit") {
    MixtureDensity mix;
    mix.means = {-50.0, 50.0};
    mix.weights = {0.5, 0.5};
    const EntropyEstimate est = diff_entropy(mix, EntropyMethod::Quadrature);
    CHECK(est.bits == doctest::Approx(1.0 + kGaussianEntropyBits).epsilon(2e-4));
}

TEST_CASE("monte-carlo entropy brackets the quadrature value") {
    MixtureDensity mix;
    mix.means = {-2.0, -0.5, 1.0, 3.5};
    mix.weights = {0.1, 0.4, 0.3, 0.2};
    const EntropyEstimate quad = diff_entropy(mix, EntropyMethod::Quadrature);
    const EntropyEstimate mc = diff_entropy(mix, EntropyMethod::MonteCarlo, 1e-4, 40000, 3);
    REQUIRE(mc.std_error > 0.0);
    CHECK(std::abs(mc.bits - quad.bits) < 4.0 * mc.std_error + 1e-3);
}

TEST_CASE("quadrature window carries all mass") {
    MixtureDensity mix;
    mix.means = {-4.0, 1.0, 2.5};
    mix.weights = {0.25, 0.5, 0.25};
    CHECK(quadrature_mass(mix) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("entropy input validation") {
    MixtureDensity empty;
    CHECK_THROWS_AS(diff_entropy(empty, EntropyMethod::Quadrature), std::invalid_argument);
    CHECK_THROWS_AS(diff_entropy(single_gaussian(), EntropyMethod::MonteCarlo, 1e-4, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("product mixture enumerates the factored lattice") {
    ProductMixture product;
    product.shift = 0.25;
    product.factors.push_back({1.0, sum_pam_pmf(1, 1)});   // {-1,0,1}/3
    product.factors.push_back({0.5, sum_pam_pmf(1, 2)});   // {-2..2}, (1,2,3,2,1)/9
    CHECK(product.component_count() == 15);

    const MixtureDensity flat = product.enumerate();
    REQUIRE(flat.means.size() == 15);
    double weight_sum = 0.0;
    for (const double w : flat.weights) weight_sum += w;
    CHECK(weight_sum == doctest::Approx(1.0).epsilon(1e-12));
    // Smallest mean: shift - 1 - 1 = -1.75; largest: shift + 1 + 1 = 2.25.
    CHECK(flat.means.front() == doctest::Approx(-1.75).epsilon(1e-12));
    CHECK(flat.means.back() == doctest::Approx(2.25).epsilon(1e-12));

    for (const double y : {-1.3, 0.0, 0.4, 1.9}) {
        CHECK(product.density(y) == doctest::Approx(flat.density(y)).epsilon(1e-9));
    }
}

TEST_CASE("enumeration cap throws past the limit") {
    ProductMixture product;
    product.factors.push_back({1.0, sum_pam_pmf(10, 1)});
    product.factors.push_back({0.3, sum_pam_pmf(10, 1)});
    CHECK(product.component_count() == 441);
    CHECK_THROWS_AS(product.enumerate(440), EnumerationCapError);
    try {
        product.enumerate(100);
    } catch (const EnumerationCapError& error) {
        CHECK(error.needed() == 441);
        CHECK(error.cap() == 100);
    }
}

TEST_CASE("sampled entropy agrees with enumeration") {
    ProductMixture product;
    product.factors.push_back({0.8, sum_pam_pmf(2, 1)});
    product.factors.push_back({2.1, sum_pam_pmf(1, 2)});
    product.factors.push_back({0.45, sum_pam_pmf(1, 1)});
    const MixtureDensity flat = product.enumerate();
    const EntropyEstimate quad = diff_entropy(flat, EntropyMethod::Quadrature);
    const EntropyEstimate mc = product.mc_entropy(60000, 11);
    REQUIRE(mc.std_error > 0.0);
    CHECK(std::abs(mc.bits - quad.bits) < 4.0 * mc.std_error + 1e-3);
}

TEST_CASE("sample_mean draws from the product law") {
    ProductMixture product;
    product.shift = 1.5;
    product.factors.push_back({2.0, sum_pam_pmf(1, 1)});
    Rng rng(4);
    double sum = 0.0;
    const int n = 40000;
    for (int i = 0; i < n; ++i) sum += product.sample_mean(rng);
    // Zero-mean lattice shifted by 1.5.
    CHECK(sum / n == doctest::Approx(1.5).epsilon(0.02));
}
