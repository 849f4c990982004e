#include "sdof/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdof {

ProductMixture product_mixture(const SignalingPlan& plan, const NetworkModel& model, int receiver,
                               const SymbolAssignment& conditioned) {
    const long long q = plan.constellation.half_range;
    {
        const auto symbols = plan.all_symbols();
        for (const auto& [sym, value] : conditioned.values) {
            if (std::find(symbols.begin(), symbols.end(), sym) == symbols.end())
                throw std::invalid_argument("product_mixture: conditioned symbol not in plan");
            if (value < -q || value > q)
                throw std::invalid_argument("product_mixture: conditioned value outside [-Q, Q]");
        }
    }

    const ReceiverSpace space = receiver_space(plan, model, receiver);
    ProductMixture pm;
    pm.shift = 0.0;
    for (const SpaceDim& dim : space.dims) {
        const double scale = dim.coeff.eval(model.gains) * plan.constellation.spacing;
        int free_count = 0;
        for (const SymbolId& sym : dim.symbols) {
            auto it = conditioned.values.find(sym);
            if (it == conditioned.values.end())
                ++free_count;
            else
                pm.shift += scale * static_cast<double>(it->second);
        }
        if (free_count > 0)
            pm.factors.push_back({scale, sum_pam_pmf(q, free_count)});
    }
    return pm;
}

MixtureDensity output_mixture(const SignalingPlan& plan, const NetworkModel& model, int receiver,
                              const SymbolAssignment& conditioned, std::size_t enum_cap) {
    return product_mixture(plan, model, receiver, conditioned).enumerate(enum_cap);
}

namespace {

EntropyEstimate mixture_entropy(const ProductMixture& pm, const MiOptions& opts,
                                std::uint64_t seed) {
    const bool small = pm.component_count() <= 2000;
    if (opts.method == EntropyMethod::Quadrature || small) {
        const MixtureDensity mix = pm.enumerate(opts.enum_cap);
        return diff_entropy(mix, EntropyMethod::Quadrature, opts.quad_tol);
    }
    return pm.mc_entropy(opts.mc_samples, seed);
}

}  // namespace

MiEstimate mutual_info(const SignalingPlan& plan, const NetworkModel& model, int receiver,
                       const std::vector<SymbolId>& about, const std::vector<SymbolId>& given,
                       const MiOptions& opts) {
    if (about.empty()) throw std::invalid_argument("mutual_info: empty symbol set");
    for (const SymbolId& sym : about)
        if (std::find(given.begin(), given.end(), sym) != given.end())
            throw std::invalid_argument("mutual_info: 'about' and 'given' sets overlap");

    SymbolAssignment given_zero;
    for (const SymbolId& sym : given) given_zero.values[sym] = 0;
    SymbolAssignment both_zero = given_zero;
    for (const SymbolId& sym : about) both_zero.values[sym] = 0;

    const ProductMixture pm_given = product_mixture(plan, model, receiver, given_zero);
    const ProductMixture pm_both = product_mixture(plan, model, receiver, both_zero);

    const EntropyEstimate h_given = mixture_entropy(pm_given, opts, mix_seed(opts.seed, 1));
    const EntropyEstimate h_both = mixture_entropy(pm_both, opts, mix_seed(opts.seed, 2));

    MiEstimate mi;
    mi.method = opts.method;
    mi.bits = h_given.bits - h_both.bits;
    mi.std_error = std::sqrt(h_given.std_error * h_given.std_error +
                             h_both.std_error * h_both.std_error);
    if (mi.std_error == 0.0 && mi.bits < 0.0) {
        if (mi.bits < -10.0 * opts.quad_tol)
            throw std::runtime_error("mutual_info: negative value beyond quadrature tolerance");
        mi.bits = 0.0;
    }
    return mi;
}

double leakage_cap_bits(const NetworkModel& model) {
    const Topology& t = model.topology;
    switch (t.kind) {
        case Topology::Kind::WiretapHelpers:
            if (t.helpers == 0)
                throw std::invalid_argument("leakage_cap_bits: no signaling scheme without helpers");
            return static_cast<double>(t.helpers);
        case Topology::Kind::BcCmHelpers:
        case Topology::Kind::IcCm:
            return 1.0;  // per message
        case Topology::Kind::MacWiretap:
            return static_cast<double>(t.users) * std::log2(static_cast<double>(t.users));
    }
    throw std::logic_error("leakage_cap_bits: unknown topology");
}

double symbol_set_entropy_bits(const SignalingPlan& plan, const std::vector<SymbolId>& symbols) {
    return static_cast<double>(symbols.size()) *
           pam_entropy_bits(plan.constellation.half_range);
}

}  // namespace sdof
