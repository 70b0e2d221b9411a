#include "citekit/results.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace citekit {

OutputFormat parse_format(std::string_view name)
{
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + std::string(name) +
                                "', expected csv or json");
}

std::string format_number(double value, int sig_digits)
{
    if (sig_digits < 1 || sig_digits > 17)
        throw std::invalid_argument("format_number: significant digits must be in [1, 17]");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, value);
    return buf;
}

namespace {

std::string csv_quoted(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string csv_cell(const Cell& cell, int sig_digits)
{
    if (const auto* s = std::get_if<std::string>(&cell))
        return csv_quoted(*s);
    if (const auto* d = std::get_if<double>(&cell))
        return format_number(*d, sig_digits);
    if (const auto* i = std::get_if<long long>(&cell))
        return std::to_string(*i);
    return std::get<bool>(cell) ? "true" : "false";
}

// Round through the printed form so JSON carries the same precision as CSV;
// the serializer then emits the shortest round-trip of the rounded value.
double rounded(double value, int sig_digits)
{
    return std::strtod(format_number(value, sig_digits).c_str(), nullptr);
}

void write_csv(const ResultTable& table, std::ostream& out, int sig_digits)
{
    for (const auto& [key, value] : table.meta)
        out << "# " << key << ": " << value << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << csv_quoted(table.columns[c]);
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << csv_cell(row[c], sig_digits);
        out << "\n";
    }
}

void write_json(const ResultTable& table, std::ostream& out, int sig_digits)
{
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.meta)
        doc["meta"][key] = value;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
            const Cell& cell = row[c];
            if (const auto* s = std::get_if<std::string>(&cell))
                obj[table.columns[c]] = *s;
            else if (const auto* d = std::get_if<double>(&cell))
                obj[table.columns[c]] = rounded(*d, sig_digits);
            else if (const auto* i = std::get_if<long long>(&cell))
                obj[table.columns[c]] = *i;
            else
                obj[table.columns[c]] = std::get<bool>(cell);
        }
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << "\n";
}

}  // namespace

void write_results(const ResultTable& table, std::ostream& out, OutputFormat format,
                   int sig_digits)
{
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw std::invalid_argument("write_results: row width does not match column count");
    if (format == OutputFormat::csv)
        write_csv(table, out, sig_digits);
    else
        write_json(table, out, sig_digits);
}

void write_results(const ResultTable& table, const std::string& path, OutputFormat format,
                   int sig_digits)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_results(table, out, format, sig_digits);
    out.flush();
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

ResultTable report_table(const ValidationReport& report)
{
    ResultTable table;
    table.meta = {
        {"generator", report.generator},
        {"seed", std::to_string(report.config.seed)},
        {"n_samples", std::to_string(report.config.n_samples)},
        {"discretize", report.config.discretize ? "true" : "false"},
        {"tolerance", format_number(report.config.tolerance)},
        {"h_tolerance", format_number(report.config.h_tolerance)},
        {"kappa_tolerance", format_number(report.config.kappa_tolerance)},
        {"group_k_t", std::to_string(report.config.group_k_t)},
        {"group_k_r", std::to_string(report.config.group_k_r)},
        {"kappa_threshold", format_number(report.config.kappa_threshold)},
        {"all_pass", report.all_pass() ? "true" : "false"},
    };
    for (std::size_t i = 0; i < report.skipped.size(); ++i)
        table.meta.emplace_back("skipped_" + std::to_string(i), report.skipped[i]);

    table.columns = {"indicator", "subject", "formula", "monte_carlo", "abs_error",
                     "tolerance", "pass"};
    for (const ValidationEntry& e : report.entries)
        table.rows.push_back({e.indicator, e.subject, e.formula_value, e.mc_value, e.abs_error,
                              e.tolerance, e.pass});
    return table;
}

ResultTable rank_table(const RankTable& ranks)
{
    ResultTable table;
    table.columns = {"id", "avg_rank"};
    for (const auto& [id, value] : ranks)  // std::map iterates ascending by id
        table.rows.push_back({id, value});
    return table;
}

}  // namespace citekit
