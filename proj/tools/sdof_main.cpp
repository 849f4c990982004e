#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdof/dof.hpp"
#include "sdof/serialize.hpp"
#include "sdof/sweep.hpp"
#include "sdof/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string table_row_name(const sdof::Topology& topology) {
    if (topology.kind == sdof::Topology::Kind::MacWiretap)
        return topology.scheme_name() + " K=" + std::to_string(topology.users);
    return topology.scheme_name() + " M=" + std::to_string(topology.helpers);
}

void print_error(const std::string& type, const std::string& message) {
    const json record = {{"error", {{"type", type}, {"message", message}}}};
    std::cerr << record.dump() << "\n";
}

// Relative outputs land in SDOF_OUT_DIR (default: the working directory).
fs::path resolve_output(const std::string& out) {
    fs::path path(out);
    if (path.is_relative()) {
        const char* base = std::getenv("SDOF_OUT_DIR");
        if (base != nullptr && *base != '\0') path = fs::path(base) / path;
    }
    return path;
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream stream(path, std::ios::binary);
    if (!stream) throw std::runtime_error("cannot open " + path.string() + " for writing");
    stream << text;
    if (!stream) throw std::runtime_error("failed writing " + path.string());
}

int run_table() {
    for (const sdof::TheoryEntry& row : sdof::theory_table()) {
        std::printf("%-16s -> %-6s (%s)\n", table_row_name(row.topology).c_str(),
                    row.dof.str().c_str(), row.note.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secure degrees-of-freedom laboratory"};
    app.require_subcommand(1);

    std::string scheme;
    int m = 0;
    int k = 2;
    double delta = 0.05;
    std::string pgrid;
    std::uint64_t seed = 1;
    double gain_lo = 0.5;
    double gain_hi = 2.0;
    std::string mi_name = "quadrature";
    double quad_tol = 1e-4;
    std::size_t mc_samples = 40000;
    std::size_t enum_cap = 1'000'000;
    std::size_t ser_trials = 0;
    int jobs = 1;
    std::string out;
    std::string config_path;

    CLI::App* run = app.add_subcommand("run", "run a rate sweep; writes a CSV and its manifest");
    run->add_option("--scheme", scheme, "wt-helpers | bc-cm | ic-cm | mac");
    run->add_option("--m", m, "helper count (wt-helpers / bc-cm / ic-cm)");
    run->add_option("--k", k, "user count (mac)");
    run->add_option("--delta", delta, "schedule margin in (0, 1)");
    run->add_option("--pgrid", pgrid, "lo:hi:n log grid, or comma-separated powers");
    run->add_option("--seed", seed, "gain / estimator seed");
    run->add_option("--gain-lo", gain_lo, "gain magnitude lower bound");
    run->add_option("--gain-hi", gain_hi, "gain magnitude upper bound");
    run->add_option("--mi", mi_name, "quadrature | monte-carlo");
    run->add_option("--quad-tol", quad_tol, "quadrature entropy tolerance (bits)");
    run->add_option("--mc-samples", mc_samples, "Monte-Carlo entropy sample count");
    run->add_option("--enum-cap", enum_cap, "mixture component enumeration cap");
    run->add_option("--ser-trials", ser_trials, "empirical decoder trials (0 disables)");
    run->add_option("--jobs", jobs, "parallel grid points");
    run->add_option("--out", out, "output CSV path")->required();
    run->add_option("--config", config_path, "JSON config or recorded manifest; flags override");

    std::string suite = "all";
    int seeds = 3;
    bool as_json = false;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "alignment | power | leakage | oracle | lemmas | all")
        ->check(CLI::IsMember({"alignment", "power", "leakage", "oracle", "lemmas", "all"}));
    verify->add_option("--seeds", seeds, "seeds (or cases/10 for the oracle suite)");
    verify->add_flag("--json", as_json, "emit the reports as JSON");

    CLI::App* table = app.add_subcommand("table", "print the exact degrees-of-freedom table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        print_error("usage", e.what());
        return 2;
    }

    try {
        if (table->parsed()) return run_table();

        if (run->parsed()) {
            json j = json::object();
            if (run->count("--config") != 0U) {
                std::ifstream stream(config_path);
                if (!stream) throw std::runtime_error("cannot read config " + config_path);
                j = json::parse(stream);
                if (j.contains("config")) j = j.at("config");
            }
            if (run->count("--scheme") != 0U) j["scheme"] = scheme;
            if (run->count("--m") != 0U) j["m"] = m;
            if (run->count("--k") != 0U) j["k"] = k;
            if (run->count("--delta") != 0U) j["delta"] = delta;
            if (run->count("--pgrid") != 0U) j["pGrid"] = pgrid;
            if (run->count("--seed") != 0U) j["seed"] = seed;
            if (run->count("--gain-lo") != 0U) j["gainRange"]["lo"] = gain_lo;
            if (run->count("--gain-hi") != 0U) j["gainRange"]["hi"] = gain_hi;
            if (run->count("--mi") != 0U) j["miMethod"] = mi_name;
            if (run->count("--quad-tol") != 0U) j["quadTol"] = quad_tol;
            if (run->count("--mc-samples") != 0U) j["mcSamples"] = mc_samples;
            if (run->count("--enum-cap") != 0U) j["enumCap"] = enum_cap;
            if (run->count("--ser-trials") != 0U) j["serTrials"] = ser_trials;
            if (run->count("--jobs") != 0U) j["jobs"] = jobs;

            const sdof::SweepConfig config = sdof::sweep_config_from_json(j);
            const sdof::RateCurve curve = sdof::sweep(config);

            const fs::path csv_path = resolve_output(out);
            fs::path manifest_path = csv_path;
            manifest_path.replace_extension();
            manifest_path += ".manifest.json";
            write_text(csv_path, sdof::rate_curve_csv(curve));
            write_text(manifest_path, sdof::curve_manifest(curve, config).dump(2) + "\n");

            std::printf("%s: %zu points, fitted slope %.4f (exact %s)\n",
                        table_row_name(config.topology).c_str(), curve.samples.size(),
                        curve.fitted_slope, curve.theory_slope.str().c_str());
            std::printf("wrote %s\n", csv_path.string().c_str());
            std::printf("wrote %s\n", manifest_path.string().c_str());
            return 0;
        }

        if (verify->parsed()) {
            if (seeds < 1) throw std::invalid_argument("seed count must be positive");
            std::vector<sdof::SuiteReport> reports;
            if (suite == "all") {
                reports = sdof::verify_all(seeds);
            } else if (suite == "alignment") {
                reports.push_back(sdof::verify_alignment(seeds));
            } else if (suite == "power") {
                reports.push_back(sdof::verify_power(seeds));
            } else if (suite == "leakage") {
                reports.push_back(sdof::verify_leakage(seeds));
            } else if (suite == "oracle") {
                reports.push_back(sdof::verify_oracle(10 * seeds));
            } else {
                reports.push_back(sdof::verify_lemmas(seeds));
            }

            bool all_pass = true;
            if (as_json) {
                json list = json::array();
                for (const sdof::SuiteReport& report : reports) {
                    list.push_back(sdof::suite_report_to_json(report));
                    all_pass = all_pass && report.all_pass();
                }
                std::cout << list.dump(2) << "\n";
            } else {
                for (const sdof::SuiteReport& report : reports) {
                    for (const sdof::CheckResult& check : report.checks) {
                        std::printf("[%s] %s - %s\n", check.pass ? "PASS" : "FAIL",
                                    check.name.c_str(), check.detail.c_str());
                    }
                    std::printf("suite %s: %zu/%zu checks passed\n", report.suite.c_str(),
                                report.checks.size() - report.failure_count(),
                                report.checks.size());
                    all_pass = all_pass && report.all_pass();
                }
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        print_error("invalid-argument", e.what());
        return 2;
    } catch (const json::exception& e) {
        print_error("config", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("runtime", e.what());
        return 1;
    }
    return 0;
}
