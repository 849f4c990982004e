#include "sdof/dof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sdof/errors.hpp"
#include "sdof/rng.hpp"

namespace sdof {

Rational theory_dof(const Topology& t) {
    switch (t.kind) {
        case Topology::Kind::WiretapHelpers:
            if (t.helpers == 0) return Rational(0);
            return Rational(t.helpers, t.helpers + 1);
        case Topology::Kind::BcCmHelpers:
            return Rational(1);  // sum over both messages
        case Topology::Kind::IcCm:
            return t.helpers == 0 ? Rational(2, 3) : Rational(1);  // sum over both messages
        case Topology::Kind::MacWiretap: {
            const std::int64_t kk = static_cast<std::int64_t>(t.users) * (t.users - 1);
            return Rational(kk, kk + 1);
        }
    }
    throw std::logic_error("theory_dof: unknown topology");
}

std::vector<TheoryEntry> theory_table() {
    std::vector<TheoryEntry> rows;
    rows.push_back({Topology::wiretap_helpers(0), theory_dof(Topology::wiretap_helpers(0)),
                    "no helpers: secrecy rate saturates"});
    for (int m = 1; m <= 4; ++m)
        rows.push_back({Topology::wiretap_helpers(m), theory_dof(Topology::wiretap_helpers(m)),
                        "M/(M+1)"});
    rows.push_back({Topology::bc_cm_helpers(1), theory_dof(Topology::bc_cm_helpers(1)),
                    "sum over the two messages"});
    rows.push_back({Topology::ic_cm(0), theory_dof(Topology::ic_cm(0)),
                    "sum over the two messages"});
    rows.push_back({Topology::ic_cm(1), theory_dof(Topology::ic_cm(1)),
                    "sum over the two messages"});
    for (int k = 2; k <= 4; ++k)
        rows.push_back({Topology::mac_wiretap(k), theory_dof(Topology::mac_wiretap(k)),
                        "K(K-1)/(K(K-1)+1), sum rate"});
    return rows;
}

namespace {

struct PointSet {
    std::vector<double> values;        // sorted ascending
    std::vector<std::uint64_t> ranks;  // mixed-radix tuple ranks, aligned with values
    std::vector<double> scales;        // per-dimension evaluated coefficient * spacing
    std::vector<long long> spans;      // per-dimension sum support size
    std::vector<int> sizes;            // symbols per dimension
};

// Enumerates every per-dimension sum tuple of the receiver space. The rank
// encodes the tuple in mixed radix, dimension 0 most significant, so rank
// order equals lexicographic tuple order.
PointSet enumerate_points(const ReceiverSpace& space, const ChannelGains& gains,
                          const PamConstellation& pam, std::size_t cap) {
    const long long q = pam.half_range;
    PointSet ps;
    unsigned __int128 wide_total = 1;
    for (const SpaceDim& dim : space.dims) {
        const long long span = 2 * q * static_cast<long long>(dim.symbols.size()) + 1;
        wide_total *= static_cast<unsigned __int128>(span);
        if (wide_total > cap) {
            const std::size_t needed = wide_total > SIZE_MAX
                                           ? SIZE_MAX
                                           : static_cast<std::size_t>(wide_total);
            throw EnumerationCapError(needed, cap);
        }
        ps.scales.push_back(dim.coeff.eval(gains) * pam.spacing);
        ps.spans.push_back(span);
        ps.sizes.push_back(static_cast<int>(dim.symbols.size()));
    }
    const std::size_t total = static_cast<std::size_t>(wide_total);

    ps.values.resize(total);
    ps.ranks.resize(total);
    for (std::size_t r = 0; r < total; ++r) {
        std::size_t rest = r;
        double v = 0.0;
        for (std::size_t d = ps.spans.size(); d-- > 0;) {
            const long long span = ps.spans[d];
            const long long offset = static_cast<long long>(rest % static_cast<std::size_t>(span));
            rest /= static_cast<std::size_t>(span);
            const long long s = offset - q * ps.sizes[d];
            v += ps.scales[d] * static_cast<double>(s);
        }
        ps.values[r] = v;
        ps.ranks[r] = r;
    }

    std::vector<std::size_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (ps.values[a] != ps.values[b]) return ps.values[a] < ps.values[b];
        return ps.ranks[a] < ps.ranks[b];
    });
    std::vector<double> values(total);
    std::vector<std::uint64_t> ranks(total);
    for (std::size_t i = 0; i < total; ++i) {
        values[i] = ps.values[idx[i]];
        ranks[i] = ps.ranks[idx[i]];
    }
    ps.values.swap(values);
    ps.ranks.swap(ranks);
    return ps;
}

}  // namespace

double min_distance(const ReceiverSpace& space, const ChannelGains& gains,
                    const PamConstellation& pam, std::size_t point_cap) {
    const PointSet ps = enumerate_points(space, gains, pam, point_cap);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < ps.values.size(); ++i) {
        const double gap = ps.values[i] - ps.values[i - 1];
        if (gap > 0.0 && gap < best) best = gap;
    }
    return best;
}

std::vector<double> receiver_points(const ReceiverSpace& space, const ChannelGains& gains,
                                    const PamConstellation& pam, std::size_t point_cap) {
    return enumerate_points(space, gains, pam, point_cap).values;
}

double ser_bound(double dmin) {
    if (std::isinf(dmin)) return 0.0;
    return std::min(1.0, std::exp(-dmin * dmin / 8.0));
}

SerEstimate ser_empirical(const NetworkModel& model, const SignalingPlan& plan, int receiver,
                          std::size_t trials, std::uint64_t seed, NoisePolicy policy,
                          std::size_t point_cap) {
    if (trials == 0) throw std::invalid_argument("ser_empirical: zero trials");
    const ReceiverSpace space = receiver_space(plan, model, receiver);
    const PointSet ps = enumerate_points(space, model.gains, plan.constellation, point_cap);
    const long long q = plan.constellation.half_range;

    Rng rng(seed);
    std::size_t errors = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        // Draw each symbol uniformly; only per-dimension sums matter.
        double sent_value = 0.0;
        std::uint64_t sent_rank = 0;
        for (std::size_t d = 0; d < ps.scales.size(); ++d) {
            long long sum = 0;
            for (int s = 0; s < ps.sizes[d]; ++s)
                sum += static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * q + 1))) - q;
            sent_value += ps.scales[d] * static_cast<double>(sum);
            sent_rank = sent_rank * static_cast<std::uint64_t>(ps.spans[d]) +
                        static_cast<std::uint64_t>(sum + q * ps.sizes[d]);
        }
        const double noise = policy == NoisePolicy::Gaussian ? rng.normal() : 0.0;
        const double y = sent_value + noise;

        // Nearest point; ties and coincident values resolve to the smallest rank.
        const auto it = std::lower_bound(ps.values.begin(), ps.values.end(), y);
        std::size_t best = it == ps.values.end() ? ps.values.size() - 1
                                                 : static_cast<std::size_t>(it - ps.values.begin());
        if (best > 0) {
            const double d_here = std::abs(ps.values[best] - y);
            const double d_prev = std::abs(ps.values[best - 1] - y);
            if (d_prev < d_here || (d_prev == d_here && ps.ranks[best - 1] < ps.ranks[best]))
                best -= 1;
        }
        // Step left across coincident values to the smallest rank.
        while (best > 0 && ps.values[best - 1] == ps.values[best] &&
               ps.ranks[best - 1] < ps.ranks[best])
            --best;

        if (ps.ranks[best] != sent_rank) ++errors;
    }

    SerEstimate est;
    est.trials = trials;
    est.value = static_cast<double>(errors) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(trials));
    return est;
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    if (den == 0.0) throw std::invalid_argument("fit_slope: degenerate abscissa");
    return num / den;
}

}  // namespace sdof
