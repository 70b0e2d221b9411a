#include "citekit/dataset.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace citekit {

ParseError::ParseError(std::string origin, std::size_t line, std::size_t column,
                       std::string reason)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + reason),
      origin_(std::move(origin)),
      line_(line),
      column_(column),
      reason_(std::move(reason))
{
}

namespace {

struct Field {
    std::string text;
    std::size_t column;  // 1-based character column of the field start
};

// Split one CSV line; double quotes delimit fields, "" escapes a quote.
std::vector<Field> split_csv_line(const std::string& line, const std::string& origin,
                                  std::size_t line_no)
{
    std::vector<Field> fields;
    std::size_t i = 0;
    while (true) {
        Field f;
        f.column = i + 1;
        if (i < line.size() && line[i] == '"') {
            ++i;
            while (true) {
                if (i >= line.size())
                    throw ParseError(origin, line_no, f.column, "unterminated quoted field");
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        f.text.push_back('"');
                        i += 2;
                    } else {
                        ++i;
                        break;
                    }
                } else {
                    f.text.push_back(line[i++]);
                }
            }
            if (i < line.size() && line[i] != ',')
                throw ParseError(origin, line_no, i + 1, "garbage after closing quote");
        } else {
            while (i < line.size() && line[i] != ',')
                f.text.push_back(line[i++]);
        }
        fields.push_back(std::move(f));
        if (i >= line.size())
            break;
        ++i;  // skip comma
    }
    return fields;
}

std::string trimmed(const std::string& s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

long long parse_integer(const Field& f, const std::string& origin, std::size_t line_no,
                        const char* what)
{
    const std::string t = trimmed(f.text);
    if (t.empty())
        throw ParseError(origin, line_no, f.column, std::string(what) + " is empty");
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(t.c_str(), &end, 10);
    if (errno != 0 || end != t.c_str() + t.size())
        throw ParseError(origin, line_no, f.column,
                         std::string(what) + " is not an integer: '" + t + "'");
    return value;
}

double parse_real(const Field& f, const std::string& origin, std::size_t line_no,
                  const char* what)
{
    const std::string t = trimmed(f.text);
    if (t.empty())
        throw ParseError(origin, line_no, f.column, std::string(what) + " is empty");
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(t.c_str(), &end);
    if (errno != 0 || end != t.c_str() + t.size())
        throw ParseError(origin, line_no, f.column,
                         std::string(what) + " is not a number: '" + t + "'");
    return value;
}

// Reads the next relevant line: skips blank lines and '#' comments.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no)
{
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::string t = trimmed(line);
        if (t.empty() || t.front() == '#')
            continue;
        return true;
    }
    return false;
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    return in;
}

}  // namespace

CitationData load_citations(const std::string& path)
{
    std::ifstream in = open_input(path);
    return parse_citations(in, path);
}

CitationData parse_citations(std::istream& in, const std::string& origin)
{
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no))
        throw ParseError(origin, 1, 1, "empty file, expected header journal_id,paper_id,citations");

    const auto header = split_csv_line(line, origin, line_no);
    if (header.size() != 3 || trimmed(header[0].text) != "journal_id" ||
        trimmed(header[1].text) != "paper_id" || trimmed(header[2].text) != "citations")
        throw ParseError(origin, line_no, 1, "expected header journal_id,paper_id,citations");

    CitationData data;
    std::set<std::pair<std::string, std::string>> seen;
    while (next_line(in, line, line_no)) {
        const auto fields = split_csv_line(line, origin, line_no);
        if (fields.size() != 3)
            throw ParseError(origin, line_no, 1,
                             "expected 3 fields, got " + std::to_string(fields.size()));
        const std::string journal = trimmed(fields[0].text);
        const std::string paper = trimmed(fields[1].text);
        if (journal.empty())
            throw ParseError(origin, line_no, fields[0].column, "journal_id is empty");
        if (paper.empty())
            throw ParseError(origin, line_no, fields[1].column, "paper_id is empty");
        if (!seen.emplace(journal, paper).second)
            throw ParseError(origin, line_no, fields[0].column,
                             "duplicate (journal_id, paper_id) key (" + journal + ", " + paper +
                                 ")");
        const long long citations = parse_integer(fields[2], origin, line_no, "citations");
        if (citations < 0)
            throw ParseError(origin, line_no, fields[2].column,
                             "citations must be >= 0, got " + std::to_string(citations));
        data.journals[journal].push_back(static_cast<double>(citations));
    }
    if (data.journals.empty())
        data.warnings.push_back(origin + ": no data rows, only a header");
    return data;
}

std::vector<JournalRecord> load_summary(const std::string& path)
{
    std::ifstream in = open_input(path);
    return parse_summary(in, path);
}

std::vector<JournalRecord> parse_summary(std::istream& in, const std::string& origin)
{
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no))
        throw ParseError(origin, 1, 1, "empty file, expected header id,name,n_papers,m,v[,mu,sigma]");

    const auto header = split_csv_line(line, origin, line_no);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i)
        col[trimmed(header[i].text)] = i;
    for (const char* required : {"id", "name", "n_papers", "m", "v"})
        if (!col.count(required))
            throw ParseError(origin, line_no, 1,
                             "summary header is missing required column '" +
                                 std::string(required) + "'");
    const bool has_mu = col.count("mu") > 0;
    const bool has_sigma = col.count("sigma") > 0;
    if (has_mu != has_sigma)
        throw ParseError(origin, line_no, 1, "columns mu and sigma must appear together");

    std::vector<JournalRecord> records;
    std::set<std::string> ids;
    while (next_line(in, line, line_no)) {
        auto fields = split_csv_line(line, origin, line_no);
        if (fields.size() != header.size())
            throw ParseError(origin, line_no, 1,
                             "expected " + std::to_string(header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        const auto field = [&](const char* name) -> const Field& {
            return fields[col.at(name)];
        };

        JournalRecord rec;
        rec.id = trimmed(field("id").text);
        rec.name = trimmed(field("name").text);
        if (rec.id.empty())
            throw ParseError(origin, line_no, field("id").column, "id is empty");
        if (!ids.insert(rec.id).second)
            throw ParseError(origin, line_no, field("id").column,
                             "duplicate journal id '" + rec.id + "'");

        const long long n = parse_integer(field("n_papers"), origin, line_no, "n_papers");
        if (n < 1)
            throw ParseError(origin, line_no, field("n_papers").column,
                             "n_papers must be >= 1, got " + std::to_string(n));
        rec.n_papers = static_cast<int>(n);

        rec.arith.m = parse_real(field("m"), origin, line_no, "m");
        rec.arith.v = parse_real(field("v"), origin, line_no, "v");
        if (!(rec.arith.m >= 1.0))
            throw ParseError(origin, line_no, field("m").column,
                             "m is the mean of c+1 and must be >= 1");
        if (!(rec.arith.v >= 0.0))
            throw ParseError(origin, line_no, field("v").column, "v must be >= 0");

        std::optional<double> mu;
        std::optional<double> sigma;
        if (has_mu && !trimmed(field("mu").text).empty())
            mu = parse_real(field("mu"), origin, line_no, "mu");
        if (has_sigma && !trimmed(field("sigma").text).empty())
            sigma = parse_real(field("sigma"), origin, line_no, "sigma");
        if (mu.has_value() != sigma.has_value())
            throw ParseError(origin, line_no, 1,
                             "mu and sigma must both be present or both blank");
        if (mu) {
            if (!(*sigma >= 0.0))
                throw ParseError(origin, line_no, field("sigma").column, "sigma must be >= 0");
            rec.log = LogMoments{*mu, *sigma};
            rec.log_source = MomentSource::measured;
        } else {
            rec.log = arith_to_log(rec.arith);
            rec.log_source = MomentSource::derived;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<JournalRecord> load_table1()
{
    std::istringstream in{std::string(table1_csv())};
    return parse_summary(in, "<bundled table 1>");
}

}  // namespace citekit
