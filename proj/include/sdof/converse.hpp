#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdof/rng.hpp"
#include "sdof/topology.hpp"

namespace sdof {

// Finite-support law of one transmitter's channel input.
struct DiscreteLaw {
    std::vector<double> values;
    std::vector<double> probs;

    void validate() const;  // matching sizes, probs >= 0 summing to 1
};

// Law supported on spacing * {-q..q} with random (Dirichlet-ish) weights.
DiscreteLaw random_pam_law(long long q, double spacing, Rng& rng);

// Variances of the auxiliary perturbation noises, one per transmitter. Every
// bound below requires variance_i < min(1/h_i^2, 1/g_i^2).
struct PerturbationSpec {
    std::vector<double> variances;
};

// Half the allowed maximum per transmitter: safely interior to the constraint.
PerturbationSpec default_perturbation(const NetworkModel& model);

void validate_perturbation(const NetworkModel& model, const PerturbationSpec& spec);

struct ConverseConstant {
    double bits = 0.0;
    std::string formula;
};

// Entropy cost of rebuilding both receiver observations from the perturbed
// inputs: 1/2 log2(2 pi e (1 + sum_i h_i^2 v_i)) + 1/2 log2(2 pi e (1 + sum_i g_i^2 v_i)).
// Exactly independent of transmit power.
ConverseConstant reconstruction_constant(const NetworkModel& model, const PerturbationSpec& spec);

struct CheckReport {
    std::string inequality;  // identifier of the bound being tested
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;      // rhs - lhs; the bound asserts margin >= 0
    double std_error = 0.0;   // 0 when every term is quadrature-exact
    bool conclusive_violation = false;  // margin < -3 * std_error
    std::string note;
};

// Secrecy-penalty bound: h(Y1,Y2) <= sum_i h(X_i + N~_i) - sum_i h(N~_i) + C_recon.
// The joint output entropy is Monte-Carlo estimated (exact 2-D mixture density
// at sampled points); every other term is quadrature-exact.
CheckReport secrecy_penalty_check(const std::vector<DiscreteLaw>& inputs,
                                  const NetworkModel& model, const PerturbationSpec& spec,
                                  std::size_t mc_samples, std::uint64_t seed);

// Dropped-input corollary, one report per eliminated transmitter j:
// h(Y1|Y2) <= sum_{i != j} h(X_i + N~_i) - log2|g_j| + C_recon - sum_i h(N~_i).
std::vector<CheckReport> secrecy_penalty_corollaries(const std::vector<DiscreteLaw>& inputs,
                                                     const NetworkModel& model,
                                                     const PerturbationSpec& spec,
                                                     std::size_t mc_samples, std::uint64_t seed);

// Helper-role bound for helper j (transmitters 1..tx_count-1; transmitter 0
// carries the message): log2|h_j| + h(X_j + N~) <= h(Y1 | X_0), i.e. the
// jamming entropy is capped by the legitimate receiver's residual entropy.
// All terms are one-dimensional quadrature; requires variance < 1/h_j^2.
CheckReport helper_role_check(const std::vector<DiscreteLaw>& inputs, const NetworkModel& model,
                              const PerturbationSpec& spec, int helper_index);

// Two-user interference sum-rate bound assembled from the two mechanisms
// above: 2(I(X1;Y1) + I(X2;Y2)) <= h(Y1) + h(Y2) + C_total. Quadrature-exact.
CheckReport interference_sumrate_check(const std::vector<DiscreteLaw>& inputs,
                                       const NetworkModel& model, const PerturbationSpec& spec);

}  // namespace sdof
