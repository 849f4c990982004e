#include "sdof/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sdof/errors.hpp"

namespace sdof {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;
constexpr double kWindow = 10.0;

double gauss(double d) { return kInvSqrt2Pi * std::exp(-0.5 * d * d); }

// -f * log2(f), continuously extended by 0 at f = 0.
double neg_f_log2_f(double f) {
    if (f <= 0.0) return 0.0;
    return -f * std::log2(f);
}

}  // namespace

void MixtureDensity::normalize_and_sort() {
    if (means.size() != weights.size() || means.empty())
        throw std::invalid_argument("MixtureDensity: means/weights mismatch");
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("MixtureDensity: weights must sum to 1");

    std::vector<std::size_t> idx(means.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return means[a] < means[b];
    });
    std::vector<double> m(means.size()), w(means.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        m[i] = means[idx[i]];
        w[i] = weights[idx[i]] / total;
    }
    means.swap(m);
    weights.swap(w);
}

double MixtureDensity::density(double y, double window) const {
    const auto lo = std::lower_bound(means.begin(), means.end(), y - window);
    const auto hi = std::upper_bound(means.begin(), means.end(), y + window);
    double f = 0.0;
    for (auto it = lo; it != hi; ++it) {
        const std::size_t i = static_cast<std::size_t>(it - means.begin());
        f += weights[i] * gauss(y - means[i]);
    }
    return f;
}

namespace {

// Composite Simpson of -f log2 f at the given step over [lo, hi].
double entropy_integral(const MixtureDensity& mix, double lo, double hi, double step) {
    std::size_t n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
    if (n < 2) n = 2;
    if (n % 2 == 1) ++n;
    const double h = (hi - lo) / static_cast<double>(n);

    double sum = neg_f_log2_f(mix.density(lo)) + neg_f_log2_f(mix.density(hi));
    for (std::size_t i = 1; i < n; ++i) {
        const double y = lo + h * static_cast<double>(i);
        sum += (i % 2 == 1 ? 4.0 : 2.0) * neg_f_log2_f(mix.density(y));
    }
    return sum * h / 3.0;
}

}  // namespace

EntropyEstimate diff_entropy(const MixtureDensity& mix, EntropyMethod method, double tol_bits,
                             std::size_t mc_samples, std::uint64_t seed) {
    if (mix.means.empty()) throw std::invalid_argument("diff_entropy: empty mixture");

    if (method == EntropyMethod::Quadrature) {
        const double lo = mix.means.front() - kWindow;
        const double hi = mix.means.back() + kWindow;

        EntropyEstimate est;
        double step = 0.5;
        double prev = entropy_integral(mix, lo, hi, step);
        est.converged = false;
        for (int level = 0; level < 8; ++level) {
            step *= 0.5;
            const double cur = entropy_integral(mix, lo, hi, step);
            est.achieved_tol = std::abs(cur - prev);
            prev = cur;
            if (est.achieved_tol < tol_bits) {
                est.converged = true;
                break;
            }
            if ((hi - lo) / step > 3e7) break;
        }
        est.bits = prev;
        return est;
    }

    if (mc_samples == 0) throw std::invalid_argument("diff_entropy: zero sample budget");
    Rng rng(seed);
    std::vector<double> cdf(mix.weights.size());
    std::partial_sum(mix.weights.begin(), mix.weights.end(), cdf.begin());

    double sum = 0.0;
    double sumsq = 0.0;
    for (std::size_t s = 0; s < mc_samples; ++s) {
        const std::size_t i = rng.pick(cdf);
        const double y = mix.means[i] + rng.normal();
        const double x = -std::log2(mix.density(y));
        sum += x;
        sumsq += x * x;
    }
    const double n = static_cast<double>(mc_samples);
    EntropyEstimate est;
    est.bits = sum / n;
    const double var = std::max(0.0, sumsq / n - est.bits * est.bits);
    est.std_error = std::sqrt(var / n);
    return est;
}

double quadrature_mass(const MixtureDensity& mix) {
    const double lo = mix.means.front() - kWindow;
    const double hi = mix.means.back() + kWindow;
    double step = 0.25;
    std::size_t n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
    if (n % 2 == 1) ++n;
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = mix.density(lo) + mix.density(hi);
    for (std::size_t i = 1; i < n; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * mix.density(lo + h * static_cast<double>(i));
    return sum * h / 3.0;
}

std::size_t ProductMixture::component_count() const {
    std::size_t count = 1;
    for (const Factor& f : factors) {
        const std::size_t s = f.pmf.probs.size();
        if (count > (SIZE_MAX / 2) / std::max<std::size_t>(s, 1)) return SIZE_MAX / 2;
        count *= s;
    }
    return count;
}

MixtureDensity ProductMixture::enumerate(std::size_t cap) const {
    const std::size_t count = component_count();
    if (count > cap) throw EnumerationCapError(count, cap);

    MixtureDensity mix;
    mix.means.assign(1, shift);
    mix.weights.assign(1, 1.0);
    for (const Factor& f : factors) {
        std::vector<double> means;
        std::vector<double> weights;
        means.reserve(mix.means.size() * f.pmf.probs.size());
        weights.reserve(mix.means.size() * f.pmf.probs.size());
        for (std::size_t i = 0; i < mix.means.size(); ++i) {
            for (std::size_t j = 0; j < f.pmf.probs.size(); ++j) {
                const double s = static_cast<double>(f.pmf.min_index + static_cast<long long>(j));
                means.push_back(mix.means[i] + f.scale * s);
                weights.push_back(mix.weights[i] * f.pmf.probs[j]);
            }
        }
        mix.means.swap(means);
        mix.weights.swap(weights);
    }
    mix.normalize_and_sort();
    return mix;
}

void ProductMixture::prepare() {
    if (prep_.ready) return;
    const std::size_t n = factors.size();
    prep_.order.resize(n);
    std::iota(prep_.order.begin(), prep_.order.end(), 0);
    auto span_of = [&](std::size_t i) {
        const Factor& f = factors[i];
        return std::abs(f.scale) * static_cast<double>(f.pmf.probs.size() - 1);
    };
    std::sort(prep_.order.begin(), prep_.order.end(),
              [&](std::size_t a, std::size_t b) { return span_of(a) > span_of(b); });

    prep_.suffix_lo.assign(n + 1, 0.0);
    prep_.suffix_hi.assign(n + 1, 0.0);
    for (std::size_t d = n; d-- > 0;) {
        const Factor& f = factors[prep_.order[d]];
        const double a = f.scale * static_cast<double>(f.pmf.min_index);
        const double b = f.scale * static_cast<double>(f.pmf.max_index());
        prep_.suffix_lo[d] = prep_.suffix_lo[d + 1] + std::min(a, b);
        prep_.suffix_hi[d] = prep_.suffix_hi[d + 1] + std::max(a, b);
    }

    prep_.cdfs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        prep_.cdfs[i].resize(factors[i].pmf.probs.size());
        std::partial_sum(factors[i].pmf.probs.begin(), factors[i].pmf.probs.end(),
                         prep_.cdfs[i].begin());
    }
    prep_.ready = true;
}

double ProductMixture::density(double y, double window) const {
    const_cast<ProductMixture*>(this)->prepare();
    const std::size_t n = factors.size();
    if (n == 0) return gauss(y - shift);
    double f = 0.0;

    // Depth-first over factor values, pruning branches whose reachable means
    // cannot land within the window.
    struct Frame {
        std::size_t j = 0;
        double mean = 0.0;
        double weight = 1.0;
    };
    std::vector<Frame> stack(n + 1);
    stack[0] = {0, shift, 1.0};
    std::size_t depth = 0;
    while (true) {
        if (depth == n) {
            const double d = y - stack[depth].mean;
            f += stack[depth].weight * gauss(d);
            --depth;
            ++stack[depth].j;
            continue;
        }
        const Factor& fac = factors[prep_.order[depth]];
        Frame& fr = stack[depth];
        bool advanced = false;
        while (fr.j < fac.pmf.probs.size()) {
            const double s = static_cast<double>(fac.pmf.min_index + static_cast<long long>(fr.j));
            const double mean = fr.mean + fac.scale * s;
            const double lo = mean + prep_.suffix_lo[depth + 1];
            const double hi = mean + prep_.suffix_hi[depth + 1];
            if (lo > y + window || hi < y - window) {
                ++fr.j;
                continue;
            }
            stack[depth + 1] = {0, mean, fr.weight * fac.pmf.probs[fr.j]};
            ++depth;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (depth == 0) break;
        fr.j = 0;
        --depth;
        ++stack[depth].j;
    }
    return f;
}

double ProductMixture::sample_mean(Rng& rng) const {
    const_cast<ProductMixture*>(this)->prepare();
    double mean = shift;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::size_t j = rng.pick(prep_.cdfs[i]);
        mean += factors[i].scale *
                static_cast<double>(factors[i].pmf.min_index + static_cast<long long>(j));
    }
    return mean;
}

EntropyEstimate ProductMixture::mc_entropy(std::size_t samples, std::uint64_t seed) const {
    if (samples == 0) throw std::invalid_argument("mc_entropy: zero sample budget");
    const_cast<ProductMixture*>(this)->prepare();
    Rng rng(seed);
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const double y = sample_mean(rng) + rng.normal();
        const double x = -std::log2(density(y, kWindow));
        sum += x;
        sumsq += x * x;
    }
    const double n = static_cast<double>(samples);
    EntropyEstimate est;
    est.bits = sum / n;
    const double var = std::max(0.0, sumsq / n - est.bits * est.bits);
    est.std_error = std::sqrt(var / n);
    return est;
}

}  // namespace sdof
