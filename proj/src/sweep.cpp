#include "sdof/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <stdexcept>

#include "sdof/rng.hpp"

namespace sdof {

namespace {

constexpr std::uint64_t kPointStream = 1000;
constexpr std::uint64_t kResampleStream = 0x9E5A;
constexpr std::uint64_t kSerStream = 77;
constexpr int kMaxGainAttempts = 32;

// Constellation growth factor in the alignment diagnostic: the decoding
// receiver's densest dimension sums this many symbols.
int diagnostic_factor(const Topology& topology) {
    switch (topology.kind) {
        case Topology::Kind::WiretapHelpers: return std::max(topology.helpers, 1);
        case Topology::Kind::BcCmHelpers: return 2;
        case Topology::Kind::IcCm: return 2;
        case Topology::Kind::MacWiretap: return topology.users;
    }
    throw std::logic_error("unknown topology kind");
}

std::vector<int> decoding_receivers(const Topology& topology) {
    if (topology.kind == Topology::Kind::BcCmHelpers || topology.kind == Topology::Kind::IcCm)
        return {0, 1};
    return {0};
}

bool plan_is_degenerate(const NetworkModel& model) {
    const SignalingPlan probe = build_plan(model, PamConstellation{1.0, 1, false});
    for (int rx = 0; rx < 2; ++rx) {
        if (receiver_space(probe, model, rx).degenerate) return true;
    }
    return false;
}

SweepSample closed_form_sample(const NetworkModel& model) {
    SweepSample s;
    s.power = model.power;
    const double h1 = model.gains.to_receiver1[0];
    const double g1 = model.gains.to_receiver2[0];
    const double cs = 0.5 * std::log2(1.0 + h1 * h1 * model.power) -
                      0.5 * std::log2(1.0 + g1 * g1 * model.power);
    const double rate = std::max(0.0, cs);
    s.message_rates = {rate};
    s.message_leakages = {0.0};
    s.sum_rate = rate;
    s.flags.push_back("closed-form");
    return s;
}

SweepSample compute_sample(const SweepConfig& config, const NetworkModel& base, double power,
                           std::size_t index) {
    NetworkModel model = base;
    model.power = power;
    if (!model.topology.has_pam_scheme()) return closed_form_sample(model);

    const double gamma = gamma_for_scheme(model);
    const PamConstellation pam =
        schedule_params(power, config.delta, model.topology.decode_dim_count(), gamma);
    const SignalingPlan plan = build_plan(model, pam);

    SweepSample s;
    s.power = power;
    s.q = pam.half_range;
    s.spacing = pam.spacing;
    s.clamped = pam.clamped;
    if (pam.clamped) s.flags.push_back("clamped");

    MiOptions opts;
    opts.method = config.mi_method;
    opts.quad_tol = config.quad_tol;
    opts.mc_samples = config.mc_samples;
    opts.seed = mix_seed(config.seed, kPointStream + index);
    opts.enum_cap = config.enum_cap;

    const Topology::Kind kind = model.topology.kind;
    if (kind == Topology::Kind::WiretapHelpers || kind == Topology::Kind::MacWiretap) {
        std::vector<SymbolId> all_messages;
        for (const auto& group : plan.message_symbols)
            all_messages.insert(all_messages.end(), group.begin(), group.end());
        const MiEstimate legit = mutual_info(plan, model, 0, all_messages, {}, opts);
        const MiEstimate eaves = mutual_info(plan, model, 1, all_messages, {}, opts);
        const double sum = std::max(0.0, legit.bits - eaves.bits);
        const int messages = model.topology.message_count();
        s.message_rates.assign(messages, sum / messages);
        s.message_leakages = {eaves.bits};
        s.sum_rate = sum;
        s.leakage = eaves.bits;
        s.leakage_std_error = eaves.std_error;
        s.rate_std_error = std::hypot(legit.std_error, eaves.std_error);
    } else {
        double var_sum = 0.0;
        for (int msg = 0; msg < 2; ++msg) {
            const std::vector<SymbolId>& about = plan.message_symbols[msg];
            const std::vector<SymbolId>& other = plan.message_symbols[1 - msg];
            const MiEstimate legit =
                mutual_info(plan, model, plan.intended_receiver(msg), about, {}, opts);
            const MiEstimate eaves =
                mutual_info(plan, model, plan.eaves_receiver(msg), about, other, opts);
            s.message_rates.push_back(std::max(0.0, legit.bits - eaves.bits));
            s.message_leakages.push_back(eaves.bits);
            s.leakage_std_error = std::max(s.leakage_std_error, eaves.std_error);
            var_sum += legit.std_error * legit.std_error + eaves.std_error * eaves.std_error;
        }
        s.sum_rate = s.message_rates[0] + s.message_rates[1];
        s.leakage = std::max(s.message_leakages[0], s.message_leakages[1]);
        s.rate_std_error = std::sqrt(var_sum);
    }

    s.dmin = std::numeric_limits<double>::infinity();
    for (int rx : decoding_receivers(model.topology)) {
        const ReceiverSpace space = receiver_space(plan, model, rx);
        s.dmin = std::min(s.dmin, min_distance(space, model.gains, pam, config.enum_cap));
    }
    s.ser_bound = ser_bound(s.dmin);

    if (config.ser_trials > 0) {
        for (int rx : decoding_receivers(model.topology)) {
            const SerEstimate est =
                ser_empirical(model, plan, rx, config.ser_trials,
                              mix_seed(opts.seed, kSerStream + rx), NoisePolicy::Gaussian,
                              config.enum_cap);
            if (est.value >= s.ser_emp) {
                s.ser_emp = est.value;
                s.ser_emp_std_error = est.std_error;
            }
        }
    }

    if (std::isfinite(s.dmin)) {
        const double c = diagnostic_factor(model.topology);
        const double dims = static_cast<double>(model.topology.decode_dim_count());
        const double q = static_cast<double>(pam.half_range);
        s.diag_ratio =
            s.dmin * std::pow(c * q, dims - 1.0 + config.delta) / pam.spacing;
    }
    return s;
}

}  // namespace

std::vector<double> log_grid(double p_lo, double p_hi, int points) {
    if (!(p_lo > 0.0) || !(p_hi > p_lo)) throw std::invalid_argument("bad power range");
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<double> grid(points);
    const double lo = std::log10(p_lo);
    const double hi = std::log10(p_hi);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        grid[i] = std::pow(10.0, lo + t * (hi - lo));
    }
    grid.front() = p_lo;
    grid.back() = p_hi;
    return grid;
}

RateCurve sweep(const SweepConfig& config) {
    if (!(config.delta > 0.0) || !(config.delta < 1.0))
        throw std::invalid_argument("delta out of range");
    const std::vector<double>& grid = config.p_grid;
    if (grid.size() < 4) throw std::invalid_argument("power grid needs at least 4 points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw std::invalid_argument("power grid values must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("power grid must be strictly ascending");
    }
    if (grid.back() < 1000.0 * grid.front())
        throw std::invalid_argument("power grid must span at least 3 decades");

    RateCurve curve;
    curve.topology = config.topology;
    curve.delta = config.delta;
    curve.seed = config.seed;
    curve.theory_slope = theory_dof(config.topology);

    NetworkModel model;
    model.topology = config.topology;
    model.power = grid.front();
    for (int attempt = 0; attempt < kMaxGainAttempts; ++attempt) {
        const std::uint64_t gain_seed =
            attempt == 0 ? config.seed : mix_seed(config.seed, kResampleStream + attempt);
        model.gains = sample_gains(config.topology, gain_seed, config.gain_range);
        curve.gain_resample_attempts = attempt;
        if (!config.topology.has_pam_scheme() || !plan_is_degenerate(model)) break;
        if (attempt == kMaxGainAttempts - 1)
            throw std::runtime_error("could not sample non-degenerate channel gains");
    }
    curve.gains = model.gains;
    curve.gamma = config.topology.has_pam_scheme() ? gamma_for_scheme(model) : 0.0;

    const std::size_t n = grid.size();
    curve.samples.resize(n);
    if (config.jobs > 1) {
        const std::size_t width = static_cast<std::size_t>(config.jobs);
        for (std::size_t start = 0; start < n; start += width) {
            const std::size_t stop = std::min(n, start + width);
            std::vector<std::future<SweepSample>> batch;
            for (std::size_t i = start; i < stop; ++i)
                batch.push_back(std::async(std::launch::async, compute_sample, config, model,
                                           grid[i], i));
            for (std::size_t i = start; i < stop; ++i)
                curve.samples[i] = batch[i - start].get();
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            curve.samples[i] = compute_sample(config, model, grid[i], i);
    }

    // Slopes against (1/2)log2 P on the upper half of the grid; the lower
    // half carries the o(log P) offsets.
    const std::size_t first = n / 2;
    std::vector<double> x, sums;
    for (std::size_t i = first; i < n; ++i) {
        x.push_back(0.5 * std::log2(curve.samples[i].power));
        sums.push_back(curve.samples[i].sum_rate);
    }
    curve.fitted_slope = fit_slope(x, sums);
    const int messages = config.topology.message_count();
    curve.message_slopes.resize(messages);
    for (int msg = 0; msg < messages; ++msg) {
        std::vector<double> y;
        for (std::size_t i = first; i < n; ++i) y.push_back(curve.samples[i].message_rates[msg]);
        curve.message_slopes[msg] = fit_slope(x, y);
    }

    double running_max = 0.0;
    for (const SweepSample& s : curve.samples) {
        if (!(s.diag_ratio > 0.0) || !std::isfinite(s.diag_ratio)) continue;
        if (running_max > 10.0 * s.diag_ratio) curve.diag_decay_flag = true;
        running_max = std::max(running_max, s.diag_ratio);
    }
    return curve;
}

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string rate_curve_csv(const RateCurve& curve) {
    std::string out = "P,Q,a";
    const int messages = curve.topology.message_count();
    for (int msg = 0; msg < messages; ++msg) out += ",rate" + std::to_string(msg + 1);
    out += ",sumRate,leakage,dMin,serBound,serEmpirical,flags\n";
    for (const SweepSample& s : curve.samples) {
        out += g17(s.power);
        out += "," + std::to_string(s.q);
        out += "," + g17(s.spacing);
        for (int msg = 0; msg < messages; ++msg) out += "," + g17(s.message_rates[msg]);
        out += "," + g17(s.sum_rate);
        out += "," + g17(s.leakage);
        out += "," + g17(s.dmin);
        out += "," + g17(s.ser_bound);
        out += ",";
        if (s.ser_emp >= 0.0) out += g17(s.ser_emp);
        out += ",";
        for (std::size_t i = 0; i < s.flags.size(); ++i) {
            if (i > 0) out += ';';
            out += s.flags[i];
        }
        out += "\n";
    }
    return out;
}

}  // namespace sdof
