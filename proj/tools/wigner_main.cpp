#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wigner/selftest.hpp"
#include "wigner/sweep.hpp"

namespace {

// exit codes: 0 success, 1 internal/numerical or selftest failure, 2 usage/domain
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

void write_output(const std::string& body, const std::string& path) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << body) || !out.flush())
        throw std::domain_error("cannot write output file: " + path);
}

int run_analyze(double v1, double v2, const std::string& format, int precision) {
    const wigner::AnalysisRecord rec =
        wigner::analyze(wigner::Velocity(v1), wigner::Velocity(v2));
    switch (wigner::parse_format(format)) {
        case wigner::OutputFormat::text:
            std::cout << wigner::render_text(rec, precision);
            break;
        case wigner::OutputFormat::csv:
            std::cout << wigner::render_csv({rec}, precision);
            break;
        case wigner::OutputFormat::json:
            std::cout << wigner::render_json({rec}, precision);
            break;
    }
    return kOk;
}

int run_sweep_cmd(const wigner::SweepConfig& cfg, const std::string& out_path) {
    const std::vector<wigner::AnalysisRecord> records = wigner::run_sweep(cfg);
    const std::string body = cfg.format == wigner::OutputFormat::json
                                 ? wigner::render_json(records, cfg.precision)
                                 : wigner::render_csv(records, cfg.precision);
    write_output(body, out_path);
    return kOk;
}

int run_cnot_limit(const std::vector<double>& t_values, int precision) {
    std::string body = "t,fidelity\n";
    for (double t : t_values) {
        const wigner::Velocity v(t);
        body += wigner::format_real(t, precision);
        body += ',';
        body += wigner::format_real(wigner::cnot_limit_fidelity(v, v), precision);
        body += '\n';
    }
    std::cout << body;
    return kOk;
}

int run_selftest_cmd() {
    const std::vector<wigner::SuiteResult> results = wigner::run_selftest();
    bool all_passed = true;
    for (const wigner::SuiteResult& r : results) {
        all_passed = all_passed && r.passed;
        std::printf("%-4s %-38s max_err=%-12s tol=%-8s worst: %s\n",
                    r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    wigner::format_real(r.max_error, 3).c_str(),
                    wigner::format_real(r.tolerance, 3).c_str(), r.worst_case.c_str());
    }
    std::printf("%zu/%zu suites passed\n",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const auto& r) { return r.passed; })),
                results.size());
    return all_passed ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Velocity-mode entanglement of a spin-1/2 particle under a perpendicular "
        "observer boost"};
    app.require_subcommand(1);

    double v1 = 0.0, v2 = 0.0;
    std::string format = "text";
    int precision = 12;
    auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate a single (v1, v2) point");
    analyze_cmd->add_option("--v1", v1, "particle speed, fraction of c")->required();
    analyze_cmd->add_option("--v2", v2, "observer speed, fraction of c")->required();
    analyze_cmd->add_option("--format", format, "text, csv or json (default text)");
    analyze_cmd->add_option("--precision", precision, "significant digits (default 12)");

    wigner::SweepConfig cfg;
    std::vector<double> v1_range, v2_range;
    std::string sweep_format = "csv";
    std::string out_path;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Evaluate a grid and emit CSV or JSON");
    sweep_cmd->add_option("--grid", cfg.grid_n, "points per axis (default 101)");
    sweep_cmd->add_option("--v1-range", v1_range, "v1 axis as MIN,MAX (default 0,1)")
        ->delimiter(',')
        ->expected(2);
    sweep_cmd->add_option("--v2-range", v2_range, "v2 axis as MIN,MAX (default 0,1)")
        ->delimiter(',')
        ->expected(2);
    sweep_cmd->add_option("--out", out_path, "output path (default stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv or json (default csv)");
    sweep_cmd->add_option("--precision", cfg.precision, "significant digits (default 12)");

    std::vector<double> t_values;
    int cnot_precision = 12;
    auto* cnot_cmd = app.add_subcommand(
        "cnot-limit", "Fidelity with the light-speed limit state along v1 = v2 = t");
    cnot_cmd->add_option("--t-list", t_values, "comma-separated t values (default 0,0.1,...,1)")
        ->delimiter(',');
    cnot_cmd->add_option("--precision", cnot_precision, "significant digits (default 12)");

    app.add_subcommand("selftest", "Run every invariant suite and report max errors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand("analyze")) {
            if (precision < 1 || precision > 17)
                throw std::domain_error("precision must lie in [1, 17]");
            return run_analyze(v1, v2, format, precision);
        }
        if (app.got_subcommand("sweep")) {
            if (v1_range.size() == 2) {
                cfg.v1_min = v1_range[0];
                cfg.v1_max = v1_range[1];
            }
            if (v2_range.size() == 2) {
                cfg.v2_min = v2_range[0];
                cfg.v2_max = v2_range[1];
            }
            cfg.format = wigner::parse_format(sweep_format);
            if (cfg.format == wigner::OutputFormat::text)
                throw std::domain_error("sweep supports csv or json output");
            cfg.validate();
            return run_sweep_cmd(cfg, out_path);
        }
        if (app.got_subcommand("cnot-limit")) {
            if (cnot_precision < 1 || cnot_precision > 17)
                throw std::domain_error("precision must lie in [1, 17]");
            if (t_values.empty())
                for (int k = 0; k <= 10; ++k) t_values.push_back(k / 10.0);
            return run_cnot_limit(t_values, cnot_precision);
        }
        if (app.got_subcommand("selftest")) {
            return run_selftest_cmd();
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
