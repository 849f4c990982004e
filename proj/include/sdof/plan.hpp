#pragma once

#include <string>
#include <vector>

#include "sdof/monomial.hpp"
#include "sdof/pam.hpp"
#include "sdof/topology.hpp"

namespace sdof {

// Identity of one PAM symbol in a signaling plan. Message symbols carry
// data for the message of transmitter `tx`; `stream` separates substreams
// (for aligned constructions it names the companion transmitter). Jamming
// symbols are the cooperative dither sent by transmitter `tx`.
struct SymbolId {
    enum class Kind { Message, Jamming };

    Kind kind = Kind::Message;
    int tx = 0;
    int stream = 0;

    static SymbolId message(int tx, int stream) { return {Kind::Message, tx, stream}; }
    static SymbolId jamming(int tx) { return {Kind::Jamming, tx, 0}; }

    auto operator<=>(const SymbolId&) const = default;
    std::string str() const {
        if (kind == Kind::Jamming) return "U" + std::to_string(tx + 1);
        return "V" + std::to_string(tx + 1) + "." + std::to_string(stream + 1);
    }
};

struct PlanTerm {
    Monomial coeff;
    SymbolId symbol;
};

// Linear PAM signaling plan: transmitter t sends
//   X_t = sum over its terms of coeff * (uniform draw from the constellation).
// All symbols are i.i.d. uniform on spacing * {-Q..Q} and mutually independent.
struct SignalingPlan {
    Topology topology;
    PamConstellation constellation;
    std::vector<std::vector<PlanTerm>> tx_terms;       // one list per transmitter
    std::vector<std::vector<SymbolId>> message_symbols; // one list per message
    std::vector<SymbolId> jamming_symbols;

    std::vector<SymbolId> all_symbols() const;
    int intended_receiver(int message) const;  // 0-based receiver index
    int eaves_receiver(int message) const;
};

// Builds the alignment scheme for the topology at the given constellation.
SignalingPlan build_plan(const NetworkModel& model, const PamConstellation& pam);

// Convenience: schedule from (power, delta) with the scheme's gamma.
SignalingPlan build_plan(const NetworkModel& model, double delta = 0.05);

// One rational dimension of a receiver's observation: the symbols whose
// effective coefficients share a canonical monomial.
struct SpaceDim {
    Monomial coeff;
    std::vector<SymbolId> symbols;
};

struct ReceiverSpace {
    int receiver = 0;
    std::vector<SpaceDim> dims;
    // Symbolically distinct dimensions whose evaluated coefficients nearly
    // coincide (relative gap < 1e-6); such a gain sample should be redrawn.
    bool degenerate = false;
};

ReceiverSpace receiver_space(const SignalingPlan& plan, const NetworkModel& model, int receiver);

struct DimensionCensus {
    std::size_t dim_count = 0;
    std::vector<std::vector<SymbolId>> groups;
};

DimensionCensus dimension_census(const ReceiverSpace& space);

// Exact E[X_t^2] per transmitter under the plan (independent zero-mean symbols).
std::vector<double> transmitter_powers(const SignalingPlan& plan, const NetworkModel& model);

}  // namespace sdof
