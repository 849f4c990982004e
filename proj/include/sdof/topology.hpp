#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdof {

// One-hop network shapes, all with two receivers:
//   WiretapHelpers  - 1 message transmitter + M helpers; rx1 legitimate, rx2 eavesdropper
//   BcCmHelpers     - 1 two-message transmitter + M helpers (M >= 1); each receiver
//                     is the eavesdropper for the other receiver's message
//   IcCm            - 2 message transmitters + M helpers; cross-receiver confidentiality
//   MacWiretap      - K message transmitters (K >= 2); rx1 legitimate, rx2 eavesdropper
struct Topology {
    enum class Kind { WiretapHelpers, BcCmHelpers, IcCm, MacWiretap };

    Kind kind = Kind::WiretapHelpers;
    int helpers = 0;  // M, used by WiretapHelpers / BcCmHelpers / IcCm
    int users = 0;    // K, used by MacWiretap

    static Topology wiretap_helpers(int m);
    static Topology bc_cm_helpers(int m);
    static Topology ic_cm(int m);
    static Topology mac_wiretap(int k);

    int tx_count() const;
    int message_count() const;       // 1 / 2 / 2 / K
    bool has_pam_scheme() const;     // false only for WiretapHelpers with M == 0
    int decode_dim_count() const;    // dimension count at a decoding receiver
    std::string scheme_name() const; // "wt-helpers" / "bc-cm" / "ic-cm" / "mac"
    std::string display_name() const;

    friend bool operator==(const Topology&, const Topology&) = default;
};

// Gain magnitude interval; signs are drawn uniformly. lo > 0 keeps every
// sampled gain bounded away from zero.
struct GainRange {
    double lo = 0.5;
    double hi = 2.0;
};

// Real channel gains from each transmitter into the two receivers.
struct ChannelGains {
    std::vector<double> to_receiver1;  // h-side
    std::vector<double> to_receiver2;  // g-side

    double gain(int tx, int rx) const { return rx == 0 ? to_receiver1[tx] : to_receiver2[tx]; }
    int tx_count() const { return static_cast<int>(to_receiver1.size()); }
};

struct NetworkModel {
    Topology topology;
    ChannelGains gains;
    double power = 1.0;                             // per-transmitter constraint E[X^2] <= power
    static constexpr double noise_variance = 1.0;   // both receivers
};

ChannelGains sample_gains(const Topology& topology, std::uint64_t seed,
                          const GainRange& range = {});

enum class NoisePolicy { Gaussian, Zero };

// One channel use: y_r = sum_i gain(i, r) * x_i + n_r for both receivers.
// NoisePolicy::Zero is a test hook that replaces the noise stream by zeros.
std::pair<double, double> transmit(const NetworkModel& model, std::span<const double> inputs,
                                   std::uint64_t seed, NoisePolicy policy = NoisePolicy::Gaussian);

}  // namespace sdof
