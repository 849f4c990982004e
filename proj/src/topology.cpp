#include "sdof/topology.hpp"

#include <stdexcept>

#include "sdof/rng.hpp"

namespace sdof {

Topology Topology::wiretap_helpers(int m) {
    if (m < 0) throw std::invalid_argument("wiretap_helpers: helper count must be >= 0");
    Topology t;
    t.kind = Kind::WiretapHelpers;
    t.helpers = m;
    return t;
}

Topology Topology::bc_cm_helpers(int m) {
    if (m < 1) throw std::invalid_argument("bc_cm_helpers: at least one helper is required");
    Topology t;
    t.kind = Kind::BcCmHelpers;
    t.helpers = m;
    return t;
}

Topology Topology::ic_cm(int m) {
    if (m < 0) throw std::invalid_argument("ic_cm: helper count must be >= 0");
    Topology t;
    t.kind = Kind::IcCm;
    t.helpers = m;
    return t;
}

Topology Topology::mac_wiretap(int k) {
    if (k < 2) throw std::invalid_argument("mac_wiretap: at least two users are required");
    Topology t;
    t.kind = Kind::MacWiretap;
    t.users = k;
    return t;
}

int Topology::tx_count() const {
    switch (kind) {
        case Kind::WiretapHelpers: return helpers + 1;
        case Kind::BcCmHelpers: return helpers + 1;
        case Kind::IcCm: return helpers + 2;
        case Kind::MacWiretap: return users;
    }
    return 0;
}

int Topology::message_count() const {
    switch (kind) {
        case Kind::WiretapHelpers: return 1;
        case Kind::BcCmHelpers: return 2;
        case Kind::IcCm: return 2;
        case Kind::MacWiretap: return users;
    }
    return 0;
}

bool Topology::has_pam_scheme() const {
    return !(kind == Kind::WiretapHelpers && helpers == 0);
}

int Topology::decode_dim_count() const {
    switch (kind) {
        case Kind::WiretapHelpers:
            if (helpers == 0)
                throw std::invalid_argument("decode_dim_count: no signaling scheme without helpers");
            return helpers + 1;
        case Kind::BcCmHelpers: return 2;
        case Kind::IcCm: return helpers == 0 ? 3 : 2;
        case Kind::MacWiretap: return users * (users - 1) + 1;
    }
    return 0;
}

std::string Topology::scheme_name() const {
    switch (kind) {
        case Kind::WiretapHelpers: return "wt-helpers";
        case Kind::BcCmHelpers: return "bc-cm";
        case Kind::IcCm: return "ic-cm";
        case Kind::MacWiretap: return "mac";
    }
    return "?";
}

std::string Topology::display_name() const {
    switch (kind) {
        case Kind::WiretapHelpers: return "wiretap + " + std::to_string(helpers) + " helpers";
        case Kind::BcCmHelpers: return "broadcast-cm + " + std::to_string(helpers) + " helpers";
        case Kind::IcCm: return "interference-cm + " + std::to_string(helpers) + " helpers";
        case Kind::MacWiretap: return "mac-wiretap, K = " + std::to_string(users);
    }
    return "?";
}

ChannelGains sample_gains(const Topology& topology, std::uint64_t seed, const GainRange& range) {
    if (!(range.lo > 0.0) || !(range.hi >= range.lo))
        throw std::invalid_argument("sample_gains: magnitude range must satisfy 0 < lo <= hi");

    Rng rng(mix_seed(seed, 0x6A1E5u));
    const int n = topology.tx_count();
    ChannelGains gains;
    gains.to_receiver1.resize(n);
    gains.to_receiver2.resize(n);
    for (int i = 0; i < n; ++i) {
        const double m1 = rng.uniform(range.lo, range.hi);
        const double s1 = rng.coin() ? 1.0 : -1.0;
        const double m2 = rng.uniform(range.lo, range.hi);
        const double s2 = rng.coin() ? 1.0 : -1.0;
        gains.to_receiver1[i] = s1 * m1;
        gains.to_receiver2[i] = s2 * m2;
    }
    return gains;
}

std::pair<double, double> transmit(const NetworkModel& model, std::span<const double> inputs,
                                   std::uint64_t seed, NoisePolicy policy) {
    if (static_cast<int>(inputs.size()) != model.topology.tx_count())
        throw std::invalid_argument("transmit: input count does not match transmitter count");

    double y1 = 0.0;
    double y2 = 0.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        y1 += model.gains.to_receiver1[i] * inputs[i];
        y2 += model.gains.to_receiver2[i] * inputs[i];
    }
    if (policy == NoisePolicy::Gaussian) {
        Rng rng(seed);
        y1 += rng.normal();
        y2 += rng.normal();
    }
    return {y1, y2};
}

}  // namespace sdof
