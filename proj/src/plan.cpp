#include "sdof/plan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdof {

namespace {

Monomial gain_h(int tx, int exp = 1) { return Monomial::gain({tx, 0}, exp); }
Monomial gain_g(int tx, int exp = 1) { return Monomial::gain({tx, 1}, exp); }

}  // namespace

std::vector<SymbolId> SignalingPlan::all_symbols() const {
    std::vector<SymbolId> out;
    for (const auto& terms : tx_terms)
        for (const auto& term : terms) out.push_back(term.symbol);
    return out;
}

int SignalingPlan::intended_receiver(int message) const {
    switch (topology.kind) {
        case Topology::Kind::WiretapHelpers:
        case Topology::Kind::MacWiretap:
            return 0;
        case Topology::Kind::BcCmHelpers:
        case Topology::Kind::IcCm:
            return message;
    }
    return 0;
}

int SignalingPlan::eaves_receiver(int message) const {
    return 1 - (topology.kind == Topology::Kind::BcCmHelpers ||
                        topology.kind == Topology::Kind::IcCm
                    ? intended_receiver(message)
                    : 0);
}

SignalingPlan build_plan(const NetworkModel& model, const PamConstellation& pam) {
    const Topology& t = model.topology;
    if (!t.has_pam_scheme())
        throw std::invalid_argument("build_plan: no signaling scheme for this topology");

    SignalingPlan plan;
    plan.topology = t;
    plan.constellation = pam;
    plan.tx_terms.assign(t.tx_count(), {});
    plan.message_symbols.assign(t.message_count(), {});

    switch (t.kind) {
        case Topology::Kind::WiretapHelpers: {
            if (t.helpers == 1) {
                // Equivalent channel form: both effective symbols land on the
                // eavesdropper with unit coefficient.
                const SymbolId v = SymbolId::message(0, 1);
                const SymbolId u = SymbolId::jamming(1);
                plan.tx_terms[0].push_back({gain_g(0, -1), v});
                plan.tx_terms[1].push_back({gain_g(1, -1), u});
                plan.message_symbols[0] = {v};
                plan.jamming_symbols = {u};
                break;
            }
            // One message stream per helper; stream k rides coefficient
            // g_k/(g_1 h_k) so that it aligns with helper k's dither at the
            // eavesdropper.
            for (int k = 1; k <= t.helpers; ++k) {
                const SymbolId v = SymbolId::message(0, k);
                plan.tx_terms[0].push_back({gain_g(k) * gain_g(0, -1) * gain_h(k, -1), v});
                plan.message_symbols[0].push_back(v);

                const SymbolId u = SymbolId::jamming(k);
                plan.tx_terms[k].push_back({gain_h(k, -1), u});
                plan.jamming_symbols.push_back(u);
            }
            break;
        }
        case Topology::Kind::BcCmHelpers: {
            // Only the first helper jams; the rest stay silent.
            const SymbolId v1 = SymbolId::message(0, 0);
            const SymbolId v2 = SymbolId::message(0, 1);
            const SymbolId u = SymbolId::jamming(1);
            plan.tx_terms[0].push_back({gain_g(0, -1), v1});
            plan.tx_terms[0].push_back({gain_h(1) * gain_g(1, -1) * gain_h(0, -1), v2});
            plan.tx_terms[1].push_back({gain_g(1, -1), u});
            plan.message_symbols[0] = {v1};
            plan.message_symbols[1] = {v2};
            plan.jamming_symbols = {u};
            break;
        }
        case Topology::Kind::IcCm: {
            if (t.helpers == 0) {
                // Each transmitter dithers for the other's message.
                const SymbolId v1 = SymbolId::message(0, 0);
                const SymbolId v2 = SymbolId::message(1, 1);
                const SymbolId u1 = SymbolId::jamming(0);
                const SymbolId u2 = SymbolId::jamming(1);
                plan.tx_terms[0].push_back({Monomial::unit(), v1});
                plan.tx_terms[0].push_back({gain_h(1) * gain_h(0, -1), u1});
                plan.tx_terms[1].push_back({Monomial::unit(), v2});
                plan.tx_terms[1].push_back({gain_g(0) * gain_g(1, -1), u2});
                plan.message_symbols[0] = {v1};
                plan.message_symbols[1] = {v2};
                plan.jamming_symbols = {u1, u2};
                break;
            }
            // First helper jams both receivers; further helpers stay silent.
            const SymbolId v1 = SymbolId::message(0, 0);
            const SymbolId v2 = SymbolId::message(1, 1);
            const SymbolId u = SymbolId::jamming(2);
            plan.tx_terms[0].push_back({gain_g(2) * gain_g(0, -1), v1});
            plan.tx_terms[1].push_back({gain_h(2) * gain_h(1, -1), v2});
            plan.tx_terms[2].push_back({Monomial::unit(), u});
            plan.message_symbols[0] = {v1};
            plan.message_symbols[1] = {v2};
            plan.jamming_symbols = {u};
            break;
        }
        case Topology::Kind::MacWiretap: {
            // Stream (i, j) of user i aligns with user j's dither at the
            // eavesdropper; all dithers align at the legitimate receiver.
            for (int i = 0; i < t.users; ++i) {
                for (int j = 0; j < t.users; ++j) {
                    if (j == i) continue;
                    const SymbolId v = SymbolId::message(i, j);
                    plan.tx_terms[i].push_back(
                        {gain_g(j) * gain_g(i, -1) * gain_h(j, -1), v});
                    plan.message_symbols[i].push_back(v);
                }
                const SymbolId u = SymbolId::jamming(i);
                plan.tx_terms[i].push_back({gain_h(i, -1), u});
                plan.jamming_symbols.push_back(u);
            }
            break;
        }
    }
    return plan;
}

SignalingPlan build_plan(const NetworkModel& model, double delta) {
    const double gamma = gamma_for_scheme(model);
    const PamConstellation pam =
        schedule_params(model.power, delta, model.topology.decode_dim_count(), gamma);
    return build_plan(model, pam);
}

ReceiverSpace receiver_space(const SignalingPlan& plan, const NetworkModel& model, int receiver) {
    if (receiver != 0 && receiver != 1)
        throw std::invalid_argument("receiver_space: receiver index must be 0 or 1");

    ReceiverSpace space;
    space.receiver = receiver;
    for (int tx = 0; tx < static_cast<int>(plan.tx_terms.size()); ++tx) {
        for (const PlanTerm& term : plan.tx_terms[tx]) {
            const Monomial eff = term.coeff * Monomial::gain({tx, receiver});
            auto it = std::find_if(space.dims.begin(), space.dims.end(),
                                   [&](const SpaceDim& d) { return d.coeff == eff; });
            if (it == space.dims.end()) {
                space.dims.push_back({eff, {term.symbol}});
            } else {
                it->symbols.push_back(term.symbol);
            }
        }
    }

    // Near-coincident evaluated coefficients make the sample unusable for
    // distance-based diagnostics; flag so the caller can redraw gains.
    for (std::size_t i = 0; i < space.dims.size() && !space.degenerate; ++i) {
        const double a = std::abs(space.dims[i].coeff.eval(model.gains));
        for (std::size_t j = i + 1; j < space.dims.size(); ++j) {
            const double b = std::abs(space.dims[j].coeff.eval(model.gains));
            const double scale = std::max({a, b, 1e-300});
            if (std::abs(a - b) / scale < 1e-6) {
                space.degenerate = true;
                break;
            }
        }
    }
    return space;
}

DimensionCensus dimension_census(const ReceiverSpace& space) {
    DimensionCensus census;
    census.dim_count = space.dims.size();
    for (const SpaceDim& d : space.dims) census.groups.push_back(d.symbols);
    return census;
}

std::vector<double> transmitter_powers(const SignalingPlan& plan, const NetworkModel& model) {
    std::vector<double> powers;
    powers.reserve(plan.tx_terms.size());
    const double moment = plan.constellation.second_moment();
    for (const auto& terms : plan.tx_terms) {
        double p = 0.0;
        for (const PlanTerm& term : terms) {
            const double c = term.coeff.eval(model.gains);
            p += c * c * moment;
        }
        powers.push_back(p);
    }
    return powers;
}

}  // namespace sdof
