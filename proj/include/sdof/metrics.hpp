#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sdof/mixture.hpp"
#include "sdof/plan.hpp"

namespace sdof {

// Partial assignment of plan symbols to lattice indices in [-Q, Q].
struct SymbolAssignment {
    std::map<SymbolId, long long> values;
};

// Receiver-side observation as a product of per-dimension lattice factors.
// Conditioned symbols contribute a deterministic mean shift; the remaining
// symbols of each dimension contribute their exact sum law.
ProductMixture product_mixture(const SignalingPlan& plan, const NetworkModel& model, int receiver,
                               const SymbolAssignment& conditioned = {});

// Fully enumerated mixture of the receiver observation.
MixtureDensity output_mixture(const SignalingPlan& plan, const NetworkModel& model, int receiver,
                              const SymbolAssignment& conditioned = {},
                              std::size_t enum_cap = 1'000'000);

struct MiOptions {
    EntropyMethod method = EntropyMethod::Quadrature;
    double quad_tol = 1e-4;
    std::size_t mc_samples = 20000;
    std::uint64_t seed = 1;
    std::size_t enum_cap = 1'000'000;
};

struct MiEstimate {
    double bits = 0.0;
    double std_error = 0.0;  // 0 for quadrature
    EntropyMethod method = EntropyMethod::Quadrature;
};

// I(about ; Y_receiver | given) for uniform, independent plan symbols.
// Conditioning only shifts the conditional mixtures, so each conditional
// entropy is assignment-independent and the value reduces to
//   h(Y | given = 0) - h(Y | about = 0, given = 0),
// which is computed exactly (no averaging error). In Monte-Carlo mode the
// mixture with fewer than 2000 components still uses quadrature; the reported
// standard error combines the sampled terms.
MiEstimate mutual_info(const SignalingPlan& plan, const NetworkModel& model, int receiver,
                       const std::vector<SymbolId>& about, const std::vector<SymbolId>& given = {},
                       const MiOptions& opts = {});

// Scheme leakage ceiling in bits: M for the wiretap schemes, 1 per message
// for the broadcast/interference pairs, K*log2(K) joint for the MAC.
double leakage_cap_bits(const NetworkModel& model);

// Joint entropy of a uniform symbol set: |set| * log2(2Q+1).
double symbol_set_entropy_bits(const SignalingPlan& plan, const std::vector<SymbolId>& symbols);

}  // namespace sdof
