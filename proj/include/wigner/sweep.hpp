#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wigner/measures.hpp"

namespace wigner {

enum class OutputFormat { text, csv, json };

OutputFormat parse_format(const std::string& name);  // throws std::domain_error

struct SweepConfig {
    double v1_min = 0.0;
    double v1_max = 1.0;
    double v2_min = 0.0;
    double v2_max = 1.0;
    std::size_t grid_n = 101;  // points per axis, endpoints included
    int precision = 12;        // significant digits in rendered output
    OutputFormat format = OutputFormat::csv;

    void validate() const;  // throws std::domain_error
};

/// Evaluates analyze() on the grid_n x grid_n grid, row-major with v1 as
/// the outer axis. threads = 0 picks the hardware concurrency; results
/// are identical for any thread count.
std::vector<AnalysisRecord> run_sweep(const SweepConfig& config, unsigned threads = 0);

/// Shortest decimal form with the given number of significant digits.
std::string format_real(double value, int significant_digits);

/// Header "v1,v2,omega,cos2w,S,E,B,C", LF line endings, no quoting.
std::string render_csv(const std::vector<AnalysisRecord>& records, int precision);

/// Array of flat objects with the CSV field names.
std::string render_json(const std::vector<AnalysisRecord>& records, int precision);

/// Key-value listing of a single record.
std::string render_text(const AnalysisRecord& record, int precision);

}  // namespace wigner
