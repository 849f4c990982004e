#include "sdof/pam.hpp"

#include <cmath>
#include <stdexcept>

namespace sdof {

PamConstellation schedule_params(double power, double delta, int dims, double gamma) {
    if (!(power > 0.0)) throw std::invalid_argument("schedule_params: power must be positive");
    if (!(delta > 0.0) || !(delta < 1.0)) throw std::invalid_argument("delta out of range");
    if (dims < 1) throw std::invalid_argument("schedule_params: dims must be >= 1");
    if (!(gamma > 0.0)) throw std::invalid_argument("schedule_params: gamma must be positive");

    const double exponent = (1.0 - delta) / (2.0 * (dims + delta));
    const double raw = std::floor(std::pow(power, exponent));

    PamConstellation pam;
    pam.half_range = raw < 1.0 ? 1 : static_cast<long long>(raw);
    pam.clamped = pam.half_range == 1;
    pam.spacing = gamma * std::sqrt(power) / static_cast<double>(pam.half_range);
    return pam;
}

namespace {

double require_nonzero(double g, const char* what) {
    if (g == 0.0) throw std::invalid_argument(std::string("gamma_for_scheme: zero gain: ") + what);
    return g;
}

}  // namespace

double gamma_for_scheme(const NetworkModel& model) {
    const Topology& t = model.topology;
    const ChannelGains& c = model.gains;
    const int n = t.tx_count();
    for (int i = 0; i < n; ++i) {
        require_nonzero(c.to_receiver1[i], "receiver 1");
        require_nonzero(c.to_receiver2[i], "receiver 2");
    }

    switch (t.kind) {
        case Topology::Kind::WiretapHelpers: {
            if (t.helpers == 0)
                throw std::invalid_argument("gamma_for_scheme: no signaling scheme without helpers");
            if (t.helpers == 1)
                return std::min(std::abs(c.to_receiver2[0]), std::abs(c.to_receiver2[1]));
            // Message transmitter combines M streams; each helper sends one.
            double sumsq = 0.0;
            double helper_min = INFINITY;
            for (int k = 1; k <= t.helpers; ++k) {
                const double r = c.to_receiver2[k] / (c.to_receiver2[0] * c.to_receiver1[k]);
                sumsq += r * r;
                helper_min = std::min(helper_min, std::abs(c.to_receiver1[k]));
            }
            return std::min(1.0 / std::sqrt(sumsq), helper_min);
        }
        case Topology::Kind::BcCmHelpers: {
            const double alpha = c.to_receiver1[0] / c.to_receiver2[0];
            const double beta = c.to_receiver1[1] / c.to_receiver2[1];
            const double ratio = beta / alpha;
            const double tx1 = std::abs(c.to_receiver2[0]) / std::sqrt(1.0 + ratio * ratio);
            return std::min(tx1, std::abs(c.to_receiver2[1]));
        }
        case Topology::Kind::IcCm: {
            if (t.helpers == 0) {
                const double r1 = c.to_receiver1[1] / c.to_receiver1[0];  // jamming ratio at tx 1
                const double r2 = c.to_receiver2[0] / c.to_receiver2[1];  // jamming ratio at tx 2
                return std::min(1.0 / std::sqrt(1.0 + r1 * r1), 1.0 / std::sqrt(1.0 + r2 * r2));
            }
            const double s1 = std::abs(c.to_receiver2[0] / c.to_receiver2[2]);  // |h12/h32|
            const double s2 = std::abs(c.to_receiver1[1] / c.to_receiver1[2]);  // |h21/h31|
            return std::min({s1, s2, 1.0});
        }
        case Topology::Kind::MacWiretap: {
            double best = INFINITY;
            for (int i = 0; i < t.users; ++i) {
                double sumsq = 1.0 / (c.to_receiver1[i] * c.to_receiver1[i]);
                for (int j = 0; j < t.users; ++j) {
                    if (j == i) continue;
                    const double r = c.to_receiver2[j] / (c.to_receiver2[i] * c.to_receiver1[j]);
                    sumsq += r * r;
                }
                best = std::min(best, 1.0 / std::sqrt(sumsq));
            }
            return best;
        }
    }
    throw std::logic_error("gamma_for_scheme: unknown topology");
}

double pam_entropy_bits(long long q) {
    if (q < 0) throw std::invalid_argument("pam_entropy_bits: negative half range");
    return std::log2(static_cast<double>(2 * q + 1));
}

double LatticePmf::entropy_bits() const {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

LatticePmf convolve(const LatticePmf& a, const LatticePmf& b) {
    LatticePmf out;
    out.min_index = a.min_index + b.min_index;
    out.probs.assign(a.probs.size() + b.probs.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.probs.size(); ++i)
        for (std::size_t j = 0; j < b.probs.size(); ++j)
            out.probs[i + j] += a.probs[i] * b.probs[j];
    return out;
}

LatticePmf sum_pam_pmf(long long q, int k) {
    if (q < 0) throw std::invalid_argument("sum_pam_pmf: negative half range");
    if (k < 0) throw std::invalid_argument("sum_pam_pmf: negative summand count");
    if (k == 0) return LatticePmf{0, {1.0}};

    // Convolve integer composition counts; exact in double until the final
    // normalization by (2Q+1)^k.
    const std::size_t base = static_cast<std::size_t>(2 * q + 1);
    std::vector<double> counts(base, 1.0);
    for (int round = 1; round < k; ++round) {
        std::vector<double> next(counts.size() + base - 1, 0.0);
        for (std::size_t i = 0; i < counts.size(); ++i)
            for (std::size_t j = 0; j < base; ++j)
                next[i + j] += counts[i];
        counts.swap(next);
    }
    const double total = std::pow(static_cast<double>(base), k);
    LatticePmf out;
    out.min_index = -static_cast<long long>(k) * q;
    out.probs.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) out.probs[i] = counts[i] / total;
    return out;
}

}  // namespace sdof
