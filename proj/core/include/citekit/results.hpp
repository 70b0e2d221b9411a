#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "citekit/montecarlo.hpp"

namespace citekit {

/// One output cell. Doubles are rounded to the writer's significant digits;
/// strings and integers pass through verbatim.
using Cell = std::variant<std::string, double, long long, bool>;

/// A generic, order-preserving result table: optional metadata key/value
/// pairs followed by named columns and rows. Every writer emits it with a
/// deterministic field and key order, so identical inputs give identical
/// bytes.
struct ResultTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json };

/// "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

/// Shortest decimal form of value with the given significant digits.
std::string format_number(double value, int sig_digits = 6);

/// Serialize the table. CSV puts meta into leading `# key: value` comment
/// lines (the readers here skip those); JSON produces
/// {"meta": {...}, "rows": [{column: value, ...}]}.
void write_results(const ResultTable& table, std::ostream& out, OutputFormat format,
                   int sig_digits = 6);

/// Same, to a file; I/O failures are reported with the path.
void write_results(const ResultTable& table, const std::string& path, OutputFormat format,
                   int sig_digits = 6);

/// A ValidationReport flattened for write_results: generator, seed and the
/// rest of the configuration in meta (the provenance header), one row per
/// comparison entry.
ResultTable report_table(const ValidationReport& report);

/// A RankTable as rows of (id, avg_rank), ascending by id.
ResultTable rank_table(const RankTable& ranks);

}  // namespace citekit
