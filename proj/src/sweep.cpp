#include "wigner/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <thread>

namespace wigner {

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::domain_error("unknown format '" + name + "' (expected text, csv or json)");
}

void SweepConfig::validate() const {
    auto check_axis = [](double lo, double hi, const char* axis) {
        if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
            throw std::domain_error(std::string(axis) +
                                    " range must satisfy 0 <= min <= max <= 1");
    };
    check_axis(v1_min, v1_max, "v1");
    check_axis(v2_min, v2_max, "v2");
    if (grid_n < 2) throw std::domain_error("grid must have at least 2 points per axis");
    if (precision < 1 || precision > 17)
        throw std::domain_error("precision must lie in [1, 17]");
}

namespace {

double grid_value(double lo, double hi, std::size_t i, std::size_t n) {
    // endpoint i = n-1 lands exactly on hi
    return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

}  // namespace

std::vector<AnalysisRecord> run_sweep(const SweepConfig& config, unsigned threads) {
    config.validate();
    const std::size_t n = config.grid_n;
    std::vector<AnalysisRecord> records(n * n);

    auto run_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t i = row_begin; i < row_end; ++i) {
            const Velocity v1(grid_value(config.v1_min, config.v1_max, i, n));
            for (std::size_t j = 0; j < n; ++j) {
                const Velocity v2(grid_value(config.v2_min, config.v2_max, j, n));
                records[i * n + j] = analyze(v1, v2);
            }
        }
    };

    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    if (workers <= 1) {
        run_rows(0, n);
        return records;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min<std::size_t>(w * chunk, n);
        const std::size_t end = std::min<std::size_t>(begin + chunk, n);
        pool.emplace_back([&, w, begin, end] {
            try {
                run_rows(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return records;
}

std::string format_real(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

namespace {

void append_row_csv(std::string& out, const AnalysisRecord& r, int p) {
    out += format_real(r.v1, p);
    out += ',';
    out += format_real(r.v2, p);
    out += ',';
    out += format_real(r.omega, p);
    out += ',';
    out += format_real(r.cos_two_omega, p);
    out += ',';
    out += format_real(r.entropy, p);
    out += ',';
    out += format_real(r.entanglement, p);
    out += ',';
    out += format_real(r.bell, p);
    out += ',';
    out += format_real(r.concurrence, p);
    out += '\n';
}

}  // namespace

std::string render_csv(const std::vector<AnalysisRecord>& records, int precision) {
    std::string out = "v1,v2,omega,cos2w,S,E,B,C\n";
    for (const AnalysisRecord& r : records) append_row_csv(out, r, precision);
    return out;
}

std::string render_json(const std::vector<AnalysisRecord>& records, int precision) {
    const int p = precision;
    std::string out = "[\n";
    for (std::size_t k = 0; k < records.size(); ++k) {
        const AnalysisRecord& r = records[k];
        out += "  {\"v1\": " + format_real(r.v1, p);
        out += ", \"v2\": " + format_real(r.v2, p);
        out += ", \"omega\": " + format_real(r.omega, p);
        out += ", \"cos2w\": " + format_real(r.cos_two_omega, p);
        out += ", \"S\": " + format_real(r.entropy, p);
        out += ", \"E\": " + format_real(r.entanglement, p);
        out += ", \"B\": " + format_real(r.bell, p);
        out += ", \"C\": " + format_real(r.concurrence, p);
        out += k + 1 < records.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

std::string render_text(const AnalysisRecord& r, int precision) {
    const int p = precision;
    std::string out;
    out += "v1    = " + format_real(r.v1, p) + '\n';
    out += "v2    = " + format_real(r.v2, p) + '\n';
    out += "omega = " + format_real(r.omega, p) + '\n';
    out += "cos2w = " + format_real(r.cos_two_omega, p) + '\n';
    out += "S     = " + format_real(r.entropy, p) + '\n';
    out += "E     = " + format_real(r.entanglement, p) + '\n';
    out += "B     = " + format_real(r.bell, p) + '\n';
    out += "C     = " + format_real(r.concurrence, p) + '\n';
    return out;
}

}  // namespace wigner
