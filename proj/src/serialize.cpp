#include "sdof/serialize.hpp"

#include <stdexcept>

namespace sdof {

namespace {

using nlohmann::json;

std::string method_name(EntropyMethod method) {
    return method == EntropyMethod::Quadrature ? "quadrature" : "monte-carlo";
}

EntropyMethod method_from_name(const std::string& name) {
    if (name == "quadrature") return EntropyMethod::Quadrature;
    if (name == "monte-carlo") return EntropyMethod::MonteCarlo;
    throw std::invalid_argument("unknown entropy method: " + name);
}

json monomial_to_json(const Monomial& m) {
    json exps = json::object();
    for (const auto& [sym, e] : m.exponents()) exps[sym.str()] = e;
    return {{"scalar", m.scalar().str()}, {"exponents", exps}};
}

json symbols_to_json(const std::vector<SymbolId>& symbols) {
    json arr = json::array();
    for (const SymbolId& s : symbols) arr.push_back(s.str());
    return arr;
}

}  // namespace

json topology_to_json(const Topology& topology) {
    json j = {{"scheme", topology.scheme_name()}};
    if (topology.kind == Topology::Kind::MacWiretap) {
        j["k"] = topology.users;
    } else {
        j["m"] = topology.helpers;
    }
    return j;
}

Topology topology_from_json(const json& j) {
    if (!j.contains("scheme")) throw std::invalid_argument("config needs a scheme");
    const std::string scheme = j.at("scheme").get<std::string>();
    if (scheme == "wt-helpers") return Topology::wiretap_helpers(j.value("m", 0));
    if (scheme == "bc-cm") return Topology::bc_cm_helpers(j.value("m", 1));
    if (scheme == "ic-cm") return Topology::ic_cm(j.value("m", 0));
    if (scheme == "mac") return Topology::mac_wiretap(j.value("k", 2));
    throw std::invalid_argument("unknown scheme: " + scheme);
}

json sweep_config_to_json(const SweepConfig& config) {
    json j = topology_to_json(config.topology);
    j["delta"] = config.delta;
    j["pGrid"] = config.p_grid;
    j["seed"] = config.seed;
    j["gainRange"] = {{"lo", config.gain_range.lo}, {"hi", config.gain_range.hi}};
    j["miMethod"] = method_name(config.mi_method);
    j["quadTol"] = config.quad_tol;
    j["mcSamples"] = config.mc_samples;
    j["enumCap"] = config.enum_cap;
    j["serTrials"] = config.ser_trials;
    j["jobs"] = config.jobs;
    return j;
}

SweepConfig sweep_config_from_json(const json& root) {
    const json& j = root.contains("config") ? root.at("config") : root;
    SweepConfig config;
    config.topology = topology_from_json(j);
    config.delta = j.value("delta", config.delta);
    if (j.contains("pGrid")) {
        const json& grid = j.at("pGrid");
        if (grid.is_string()) {
            config.p_grid = parse_pgrid(grid.get<std::string>());
        } else {
            config.p_grid = grid.get<std::vector<double>>();
        }
    }
    config.seed = j.value("seed", config.seed);
    if (j.contains("gainRange")) {
        config.gain_range.lo = j.at("gainRange").value("lo", config.gain_range.lo);
        config.gain_range.hi = j.at("gainRange").value("hi", config.gain_range.hi);
    }
    if (j.contains("miMethod")) config.mi_method = method_from_name(j.at("miMethod"));
    config.quad_tol = j.value("quadTol", config.quad_tol);
    config.mc_samples = j.value("mcSamples", config.mc_samples);
    config.enum_cap = j.value("enumCap", config.enum_cap);
    config.ser_trials = j.value("serTrials", config.ser_trials);
    config.jobs = j.value("jobs", config.jobs);
    return config;
}

json plan_to_json(const SignalingPlan& plan) {
    json transmitters = json::array();
    for (const auto& terms : plan.tx_terms) {
        json list = json::array();
        for (const PlanTerm& term : terms) {
            list.push_back({{"symbol", term.symbol.str()}, {"coeff", monomial_to_json(term.coeff)}});
        }
        transmitters.push_back(list);
    }
    json messages = json::array();
    for (const auto& group : plan.message_symbols) messages.push_back(symbols_to_json(group));
    return {{"constellation",
             {{"spacing", plan.constellation.spacing},
              {"halfRange", plan.constellation.half_range},
              {"clamped", plan.constellation.clamped}}},
            {"transmitters", transmitters},
            {"messages", messages},
            {"jamming", symbols_to_json(plan.jamming_symbols)}};
}

json curve_manifest(const RateCurve& curve, const SweepConfig& config) {
    json samples = json::array();
    for (const SweepSample& s : curve.samples) {
        json row = {{"power", s.power},
                    {"q", s.q},
                    {"spacing", s.spacing},
                    {"clamped", s.clamped},
                    {"messageRates", s.message_rates},
                    {"messageLeakages", s.message_leakages},
                    {"sumRate", s.sum_rate},
                    {"leakage", s.leakage},
                    {"leakageStdError", s.leakage_std_error},
                    {"rateStdError", s.rate_std_error},
                    {"dMin", s.dmin},
                    {"serBound", s.ser_bound},
                    {"diagRatio", s.diag_ratio},
                    {"flags", s.flags}};
        if (s.ser_emp >= 0.0) {
            row["serEmpirical"] = s.ser_emp;
            row["serStdError"] = s.ser_emp_std_error;
        }
        samples.push_back(row);
    }

    json derived = {{"gains",
                     {{"toReceiver1", curve.gains.to_receiver1},
                      {"toReceiver2", curve.gains.to_receiver2}}},
                    {"gamma", curve.gamma},
                    {"gainResampleAttempts", curve.gain_resample_attempts},
                    {"theorySlope", curve.theory_slope.str()},
                    {"fittedSlope", curve.fitted_slope},
                    {"messageSlopes", curve.message_slopes},
                    {"diagDecayFlag", curve.diag_decay_flag},
                    {"samples", samples}};
    if (curve.topology.has_pam_scheme() && !curve.samples.empty()) {
        NetworkModel model;
        model.topology = curve.topology;
        model.gains = curve.gains;
        model.power = curve.samples.back().power;
        derived["planAtMaxPower"] = plan_to_json(build_plan(model, curve.delta));
    }

    return {{"schemaVersion", 1},
            {"config", sweep_config_to_json(config)},
            {"derived", derived}};
}

json check_report_to_json(const CheckReport& report) {
    return {{"inequality", report.inequality}, {"lhs", report.lhs},
            {"rhs", report.rhs},               {"margin", report.margin},
            {"stdError", report.std_error},    {"conclusiveViolation", report.conclusive_violation},
            {"note", report.note}};
}

json suite_report_to_json(const SuiteReport& report) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return {{"suite", report.suite},
            {"pass", report.all_pass()},
            {"failures", report.failure_count()},
            {"checks", checks}};
}

std::vector<double> parse_pgrid(const std::string& text) {
    const auto parse_double = [](const std::string& part) {
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad power grid: " + part);
        return v;
    };
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            const std::size_t colon = text.find(':', start);
            parts.push_back(text.substr(start, colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        if (parts.size() != 3) throw std::invalid_argument("power grid must be lo:hi:n");
        const double lo = parse_double(parts[0]);
        const double hi = parse_double(parts[1]);
        const int n = std::stoi(parts[2]);
        return log_grid(lo, hi, n);
    }
    std::vector<double> grid;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string part =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part.empty()) throw std::invalid_argument("bad power grid: empty entry");
        grid.push_back(parse_double(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return grid;
}

}  // namespace sdof
