#include "sdof/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "sdof/converse.hpp"
#include "sdof/dof.hpp"
#include "sdof/metrics.hpp"
#include "sdof/rng.hpp"
#include "sdof/sweep.hpp"

namespace sdof {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<Topology> census_topologies() {
    std::vector<Topology> out;
    for (int m = 1; m <= 4; ++m) out.push_back(Topology::wiretap_helpers(m));
    for (int m = 1; m <= 4; ++m) out.push_back(Topology::bc_cm_helpers(m));
    for (int m = 0; m <= 4; ++m) out.push_back(Topology::ic_cm(m));
    for (int k = 2; k <= 4; ++k) out.push_back(Topology::mac_wiretap(k));
    return out;
}

std::vector<int> decoding_receivers(const Topology& topology) {
    if (topology.kind == Topology::Kind::BcCmHelpers || topology.kind == Topology::Kind::IcCm)
        return {0, 1};
    return {0};
}

// Gains redrawn (bounded attempts) until no receiver dimension pair collides.
ChannelGains nondegenerate_gains(const Topology& topology, std::uint64_t seed) {
    NetworkModel model;
    model.topology = topology;
    model.power = 1.0;
    for (int attempt = 0; attempt < 32; ++attempt) {
        const std::uint64_t s = attempt == 0 ? seed : mix_seed(seed, 0x9E5A + attempt);
        model.gains = sample_gains(topology, s);
        const SignalingPlan probe = build_plan(model, PamConstellation{1.0, 1, false});
        const bool bad = receiver_space(probe, model, 0).degenerate ||
                         receiver_space(probe, model, 1).degenerate;
        if (!bad) return model.gains;
    }
    throw std::runtime_error("could not sample non-degenerate channel gains");
}

const std::vector<SymbolId>* dim_of(const DimensionCensus& census, const SymbolId& symbol) {
    for (const auto& group : census.groups) {
        if (std::find(group.begin(), group.end(), symbol) != group.end()) return &group;
    }
    return nullptr;
}

bool shares_dim_with_jamming(const DimensionCensus& census, const SymbolId& symbol) {
    const auto* group = dim_of(census, symbol);
    if (group == nullptr) return false;
    for (const SymbolId& other : *group) {
        if (other.kind == SymbolId::Kind::Jamming) return true;
    }
    return false;
}

}  // namespace

bool SuiteReport::all_pass() const {
    for (const CheckResult& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::size_t SuiteReport::failure_count() const {
    std::size_t n = 0;
    for (const CheckResult& c : checks) {
        if (!c.pass) ++n;
    }
    return n;
}

SuiteReport verify_alignment(int seed_count) {
    if (seed_count < 1) throw std::invalid_argument("seed count must be positive");
    SuiteReport report;
    report.suite = "alignment";
    for (const Topology& topology : census_topologies()) {
        CheckResult check;
        check.name = "census " + topology.display_name();
        check.pass = true;
        int cases = 0;
        for (int seed = 1; seed <= seed_count && check.pass; ++seed) {
            NetworkModel model;
            model.topology = topology;
            model.power = 1e4;
            model.gains = nondegenerate_gains(topology, static_cast<std::uint64_t>(seed));
            const SignalingPlan plan = build_plan(model, 0.05);
            ++cases;

            std::vector<DimensionCensus> census;
            for (int rx = 0; rx < 2; ++rx)
                census.push_back(dimension_census(receiver_space(plan, model, rx)));

            // Decoding side carries the scheduled dimension count; the
            // wiretap/multiple-access eavesdropper sees the aligned count.
            for (int rx : decoding_receivers(topology)) {
                if (census[rx].dim_count !=
                    static_cast<std::size_t>(topology.decode_dim_count())) {
                    check.pass = false;
                    check.detail = "seed " + std::to_string(seed) + ": receiver " +
                                   std::to_string(rx + 1) + " has " +
                                   std::to_string(census[rx].dim_count) + " dimensions";
                }
            }
            if (topology.kind == Topology::Kind::WiretapHelpers &&
                census[1].dim_count != static_cast<std::size_t>(topology.helpers)) {
                check.pass = false;
                check.detail = "seed " + std::to_string(seed) + ": eavesdropper has " +
                               std::to_string(census[1].dim_count) + " dimensions";
            }
            if (topology.kind == Topology::Kind::MacWiretap &&
                census[1].dim_count != static_cast<std::size_t>(topology.users)) {
                check.pass = false;
                check.detail = "seed " + std::to_string(seed) + ": eavesdropper has " +
                               std::to_string(census[1].dim_count) + " dimensions";
            }

            for (int msg = 0; msg < topology.message_count() && check.pass; ++msg) {
                const int legit = plan.intended_receiver(msg);
                const int eaves = plan.eaves_receiver(msg);
                for (const SymbolId& symbol : plan.message_symbols[msg]) {
                    const auto* group = dim_of(census[legit], symbol);
                    if (group == nullptr || group->size() != 1) {
                        check.pass = false;
                        check.detail = "seed " + std::to_string(seed) + ": " + symbol.str() +
                                       " not a singleton at its receiver";
                        break;
                    }
                    if (!shares_dim_with_jamming(census[eaves], symbol)) {
                        check.pass = false;
                        check.detail = "seed " + std::to_string(seed) + ": " + symbol.str() +
                                       " unprotected at the eavesdropper";
                        break;
                    }
                }
            }
        }
        if (check.pass) check.detail = std::to_string(cases) + " gain draws";
        report.checks.push_back(check);
    }
    return report;
}

SuiteReport verify_power(int seed_count) {
    if (seed_count < 1) throw std::invalid_argument("seed count must be positive");
    SuiteReport report;
    report.suite = "power";
    const std::vector<double> grid = log_grid(1e2, 1e8, 7);
    for (const Topology& topology : census_topologies()) {
        CheckResult check;
        check.name = "power " + topology.display_name();
        check.pass = true;
        for (int seed = 1; seed <= seed_count && check.pass; ++seed) {
            NetworkModel model;
            model.topology = topology;
            model.gains = nondegenerate_gains(topology, static_cast<std::uint64_t>(seed));
            const double gamma = [&] {
                model.power = grid.front();
                return gamma_for_scheme(model);
            }();
            long long prev_q = 0;
            for (double p : grid) {
                model.power = p;
                const SignalingPlan plan = build_plan(model, 0.05);
                const std::vector<double> powers = transmitter_powers(plan, model);
                for (std::size_t tx = 0; tx < powers.size(); ++tx) {
                    if (!(powers[tx] <= p)) {
                        check.pass = false;
                        check.detail = "seed " + std::to_string(seed) + " P=" + fmt(p) +
                                       ": transmitter " + std::to_string(tx + 1) + " uses " +
                                       fmt(powers[tx]);
                    }
                }
                const long long q = plan.constellation.half_range;
                if (q < prev_q) {
                    check.pass = false;
                    check.detail = "seed " + std::to_string(seed) + ": Q not monotone";
                }
                prev_q = q;
                const double target = gamma * std::sqrt(p);
                const double aq = plan.constellation.spacing * static_cast<double>(q);
                if (std::abs(aq - target) > 1e-12 * target) {
                    check.pass = false;
                    check.detail = "seed " + std::to_string(seed) + ": a*Q drifted from " +
                                   fmt(target) + " to " + fmt(aq);
                }
            }
        }
        if (check.pass)
            check.detail = std::to_string(seed_count) + " seeds x " +
                           std::to_string(grid.size()) + " powers";
        report.checks.push_back(check);
    }
    return report;
}

SuiteReport verify_leakage(int seed_count) {
    if (seed_count < 1) throw std::invalid_argument("seed count must be positive");
    SuiteReport report;
    report.suite = "leakage";
    const std::vector<double> powers = {1e2, 1e4, 1e6};
    for (const Topology& topology : census_topologies()) {
        CheckResult check;
        check.name = "leakage " + topology.display_name();
        check.pass = true;
        double worst = -std::numeric_limits<double>::infinity();
        for (int seed = 1; seed <= seed_count && check.pass; ++seed) {
            NetworkModel model;
            model.topology = topology;
            model.gains = nondegenerate_gains(topology, static_cast<std::uint64_t>(seed));
            for (double p : powers) {
                model.power = p;
                const SignalingPlan plan = build_plan(model, 0.05);
                MiOptions opts;
                opts.seed = mix_seed(static_cast<std::uint64_t>(seed), 0x7EA4);

                const bool joint = topology.kind == Topology::Kind::WiretapHelpers ||
                                   topology.kind == Topology::Kind::MacWiretap;
                if (joint) {
                    std::vector<SymbolId> all_messages;
                    for (const auto& group : plan.message_symbols)
                        all_messages.insert(all_messages.end(), group.begin(), group.end());
                    const MiEstimate mi = mutual_info(plan, model, 1, all_messages, {}, opts);
                    const double cap = leakage_cap_bits(model);
                    const double ceiling = symbol_set_entropy_bits(plan, all_messages);
                    worst = std::max(worst, mi.bits - cap);
                    if (mi.bits > cap + 3.0 * mi.std_error + 5e-4 ||
                        mi.bits > ceiling + 3.0 * mi.std_error + 5e-4) {
                        check.pass = false;
                        check.detail = "seed " + std::to_string(seed) + " P=" + fmt(p) +
                                       ": leakage " + fmt(mi.bits) + " over cap " + fmt(cap);
                    }
                } else {
                    for (int msg = 0; msg < 2; ++msg) {
                        const MiEstimate mi =
                            mutual_info(plan, model, plan.eaves_receiver(msg),
                                        plan.message_symbols[msg],
                                        plan.message_symbols[1 - msg], opts);
                        worst = std::max(worst, mi.bits - 1.0);
                        if (mi.bits > 1.0 + 3.0 * mi.std_error + 5e-4) {
                            check.pass = false;
                            check.detail = "seed " + std::to_string(seed) + " P=" + fmt(p) +
                                           " message " + std::to_string(msg + 1) +
                                           ": leakage " + fmt(mi.bits);
                        }
                    }
                }
            }
        }
        if (check.pass) check.detail = "worst slack " + fmt(-worst) + " bits";
        report.checks.push_back(check);
    }
    return report;
}

SuiteReport verify_oracle(int case_count) {
    if (case_count < 1) throw std::invalid_argument("case count must be positive");
    SuiteReport report;
    report.suite = "oracle";

    {
        CheckResult check;
        check.name = "min-distance-vs-brute-force";
        check.pass = true;
        const std::vector<std::pair<Topology, long long>> families = {
            {Topology::wiretap_helpers(1), 24}, {Topology::wiretap_helpers(2), 6},
            {Topology::bc_cm_helpers(1), 24},   {Topology::ic_cm(0), 6},
            {Topology::ic_cm(1), 24},           {Topology::mac_wiretap(2), 6},
        };
        Rng rng(0xACE5EEDull);
        for (int c = 0; c < case_count && check.pass; ++c) {
            const auto& [topology, q_cap] = families[static_cast<std::size_t>(c) % families.size()];
            PamConstellation pam;
            pam.half_range = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(q_cap)));
            pam.spacing = rng.uniform(0.3, 5.0);
            NetworkModel model;
            model.topology = topology;
            model.power = 1.0;
            model.gains = nondegenerate_gains(topology, mix_seed(0xD15C0, c));
            const SignalingPlan plan = build_plan(model, pam);
            const int rx = c % 2;
            const ReceiverSpace space = receiver_space(plan, model, rx);
            const std::vector<double> points = receiver_points(space, model.gains, pam, 6000);
            double brute = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < points.size(); ++i) {
                for (std::size_t j = i + 1; j < points.size(); ++j) {
                    const double gap = std::abs(points[j] - points[i]);
                    if (gap > 0.0 && gap < brute) brute = gap;
                }
            }
            const double fast = min_distance(space, model.gains, pam, 6000);
            if (fast != brute) {
                check.pass = false;
                check.detail = "case " + std::to_string(c) + ": " + fmt(fast) + " vs oracle " +
                               fmt(brute);
            }
        }
        if (check.pass) check.detail = std::to_string(case_count) + " instances, exact equality";
        report.checks.push_back(check);
    }

    {
        CheckResult check;
        check.name = "entropy-quadrature-vs-mc";
        check.pass = true;
        Rng rng(0xE207AC1Eull);
        double worst = 0.0;
        for (int c = 0; c < case_count && check.pass; ++c) {
            const std::size_t n = 2 + rng.below(9999);
            const double spread = rng.uniform(1.0, 30.0);
            MixtureDensity mix;
            double wsum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                mix.means.push_back(rng.uniform(-spread, spread));
                const double w = -std::log(rng.uniform01_pos());
                mix.weights.push_back(w);
                wsum += w;
            }
            for (double& w : mix.weights) w /= wsum;
            mix.normalize_and_sort();
            const EntropyEstimate quad = diff_entropy(mix, EntropyMethod::Quadrature);
            const EntropyEstimate mc =
                diff_entropy(mix, EntropyMethod::MonteCarlo, 1e-4, 20000, mix_seed(0xCA5E, c));
            const double gap = std::abs(quad.bits - mc.bits);
            const double budget = 3.0 * (mc.std_error + quad.achieved_tol);
            worst = std::max(worst, gap / budget);
            if (gap > budget) {
                check.pass = false;
                check.detail = "case " + std::to_string(c) + ": gap " + fmt(gap) + " vs budget " +
                               fmt(budget);
            }
        }
        if (check.pass)
            check.detail = std::to_string(case_count) + " mixtures, worst gap at " +
                           fmt(100.0 * worst) + "% of budget";
        report.checks.push_back(check);
    }

    {
        CheckResult check;
        check.name = "lattice-sum-law";
        check.pass = true;
        // Two uniform summands on {-1,0,1}: direct convolution oracle.
        const LatticePmf law = sum_pam_pmf(1, 2);
        std::vector<double> direct(5, 0.0);
        for (int a = -1; a <= 1; ++a) {
            for (int b = -1; b <= 1; ++b) direct[static_cast<std::size_t>(a + b + 2)] += 1.0 / 9.0;
        }
        double gap = 0.0;
        for (std::size_t i = 0; i < direct.size(); ++i)
            gap = std::max(gap, std::abs(law.probs[i] - direct[i]));
        double oracle_entropy = 0.0;
        for (double p : direct) oracle_entropy -= p * std::log2(p);
        if (law.min_index != -2 || law.probs.size() != 5 || gap > 1e-15 ||
            std::abs(law.entropy_bits() - oracle_entropy) > 1e-9) {
            check.pass = false;
            check.detail = "two-summand law disagrees with direct convolution";
        }
        // Larger cases against independent nested enumeration.
        const std::vector<std::pair<long long, int>> cases = {{2, 2}, {1, 3}, {3, 4}};
        for (const auto& [q, k] : cases) {
            const LatticePmf pmf = sum_pam_pmf(q, k);
            const long long span = 2 * q * k + 1;
            std::vector<double> counts(static_cast<std::size_t>(span), 0.0);
            const long long base = 2 * q + 1;
            long long total = 1;
            for (int i = 0; i < k; ++i) total *= base;
            for (long long idx = 0; idx < total; ++idx) {
                long long rest = idx;
                long long sum = 0;
                for (int i = 0; i < k; ++i) {
                    sum += rest % base - q;
                    rest /= base;
                }
                counts[static_cast<std::size_t>(sum + q * k)] += 1.0 / static_cast<double>(total);
            }
            for (long long v = -q * k; v <= q * k; ++v) {
                const std::size_t i = static_cast<std::size_t>(v + q * k);
                if (std::abs(pmf.probs[i] - counts[i]) > 1e-12) {
                    check.pass = false;
                    check.detail = "sum law (Q=" + std::to_string(q) + ", k=" + std::to_string(k) +
                                   ") off at " + std::to_string(v);
                }
            }
        }
        if (check.pass) check.detail = "closed-form and enumerated laws agree";
        report.checks.push_back(check);
    }
    return report;
}

SuiteReport verify_lemmas(int seed_count) {
    if (seed_count < 1) throw std::invalid_argument("seed count must be positive");
    SuiteReport report;
    report.suite = "lemmas";

    const auto make_case = [](std::uint64_t tag, int c, NetworkModel& model,
                              std::vector<DiscreteLaw>& laws, Rng& rng) {
        const Topology topology = Topology::wiretap_helpers(1 + c % 3);
        model.topology = topology;
        model.power = 1.0;
        model.gains = sample_gains(topology, mix_seed(tag, c));
        laws.clear();
        for (int tx = 0; tx < topology.tx_count(); ++tx) {
            const long long q = 1 + static_cast<long long>(rng.below(2));
            laws.push_back(random_pam_law(q, rng.uniform(0.5, 3.0), rng));
        }
    };

    {
        CheckResult check;
        check.name = "secrecy-penalty";
        check.pass = true;
        Rng rng(0x5EC4E71ull);
        double min_margin = std::numeric_limits<double>::infinity();
        const int cases = 20 * seed_count;
        for (int c = 0; c < cases && check.pass; ++c) {
            NetworkModel model;
            std::vector<DiscreteLaw> laws;
            make_case(0x1E44A, c, model, laws, rng);
            const PerturbationSpec spec = default_perturbation(model);
            const CheckReport core =
                secrecy_penalty_check(laws, model, spec, 4000, mix_seed(0x2CAFE, c));
            min_margin = std::min(min_margin, core.margin);
            if (core.conclusive_violation) {
                check.pass = false;
                check.detail = "case " + std::to_string(c) + ": margin " + fmt(core.margin) +
                               " (se " + fmt(core.std_error) + ")";
            }
            for (const CheckReport& coro :
                 secrecy_penalty_corollaries(laws, model, spec, 4000, mix_seed(0x2CAFF, c))) {
                min_margin = std::min(min_margin, coro.margin);
                if (coro.conclusive_violation) {
                    check.pass = false;
                    check.detail = "case " + std::to_string(c) + " " + coro.inequality +
                                   ": margin " + fmt(coro.margin);
                }
            }
        }
        if (check.pass)
            check.detail = std::to_string(cases) + " cases (with corollaries), min margin " +
                           fmt(min_margin) + " bits";
        report.checks.push_back(check);
    }

    {
        CheckResult check;
        check.name = "helper-role";
        check.pass = true;
        Rng rng(0x4E1BE2ull);
        double min_margin = std::numeric_limits<double>::infinity();
        const int cases = 20 * seed_count;
        for (int c = 0; c < cases && check.pass; ++c) {
            NetworkModel model;
            std::vector<DiscreteLaw> laws;
            make_case(0x3E44B, c, model, laws, rng);
            const PerturbationSpec spec = default_perturbation(model);
            const int helper = 1 + c % model.topology.helpers;
            const CheckReport rep = helper_role_check(laws, model, spec, helper);
            min_margin = std::min(min_margin, rep.margin);
            if (rep.conclusive_violation) {
                check.pass = false;
                check.detail = "case " + std::to_string(c) + ": margin " + fmt(rep.margin);
            }
        }
        if (check.pass)
            check.detail =
                std::to_string(cases) + " cases, min margin " + fmt(min_margin) + " bits";
        report.checks.push_back(check);
    }

    {
        CheckResult check;
        check.name = "interference-sumrate";
        check.pass = true;
        Rng rng(0x1C5E0ull);
        double min_margin = std::numeric_limits<double>::infinity();
        const int cases = 10 * seed_count;
        for (int c = 0; c < cases && check.pass; ++c) {
            NetworkModel model;
            model.topology = Topology::ic_cm(0);
            model.power = 1.0;
            model.gains = sample_gains(model.topology, mix_seed(0x5E44C, c));
            std::vector<DiscreteLaw> laws;
            for (int tx = 0; tx < 2; ++tx) {
                const long long q = 1 + static_cast<long long>(rng.below(2));
                laws.push_back(random_pam_law(q, rng.uniform(0.5, 3.0), rng));
            }
            const PerturbationSpec spec = default_perturbation(model);
            const CheckReport rep = interference_sumrate_check(laws, model, spec);
            min_margin = std::min(min_margin, rep.margin);
            if (rep.conclusive_violation) {
                check.pass = false;
                check.detail = "case " + std::to_string(c) + ": margin " + fmt(rep.margin);
            }
        }
        if (check.pass)
            check.detail =
                std::to_string(cases) + " cases, min margin " + fmt(min_margin) + " bits";
        report.checks.push_back(check);
    }

    {
        CheckResult check;
        check.name = "reconstruction-constant";
        check.pass = true;
        NetworkModel model;
        model.topology = Topology::wiretap_helpers(1);
        model.gains = ChannelGains{{1.0, 1.0}, {1.0, 1.0}};
        const double vanishing =
            reconstruction_constant(model, PerturbationSpec{{1e-18, 1e-18}}).bits;
        const double half = reconstruction_constant(model, PerturbationSpec{{0.5, 0.5}}).bits;
        if (std::abs(vanishing - 4.094191170361282) > 1e-12 ||
            std::abs(half - 5.094191170361282) > 1e-12) {
            check.pass = false;
            check.detail = "closed form off: " + fmt(vanishing) + ", " + fmt(half);
        }
        NetworkModel random_model;
        random_model.topology = Topology::wiretap_helpers(2);
        random_model.gains = sample_gains(random_model.topology, 41);
        const PerturbationSpec spec = default_perturbation(random_model);
        random_model.power = 1e2;
        const double low = reconstruction_constant(random_model, spec).bits;
        random_model.power = 1e8;
        const double high = reconstruction_constant(random_model, spec).bits;
        if (low != high) {
            check.pass = false;
            check.detail = "constant moved with power";
        }
        if (check.pass) check.detail = "closed form to 1e-12, power-invariant";
        report.checks.push_back(check);
    }
    return report;
}

std::vector<SuiteReport> verify_all(int seed_count) {
    return {verify_alignment(seed_count), verify_power(seed_count), verify_leakage(seed_count),
            verify_oracle(std::max(10, 10 * seed_count)), verify_lemmas(seed_count)};
}

}  // namespace sdof
