#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "citekit/empirical.hpp"
#include "citekit/estimated.hpp"

namespace citekit {

/// Parse failure with the exact file position. No row is ever skipped
/// silently: anything malformed surfaces here.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string origin, std::size_t line, std::size_t column, std::string reason);

    const std::string& origin() const { return origin_; }
    std::size_t line() const { return line_; }      ///< 1-based
    std::size_t column() const { return column_; }  ///< 1-based character column
    const std::string& reason() const { return reason_; }

private:
    std::string origin_;
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

/// Raw citation rows grouped by journal. Warnings flag oddities that are
/// not errors (e.g. a header-only file).
struct CitationData {
    std::map<std::string, CitationVector> journals;
    std::vector<std::string> warnings;
};

/// Read a `journal_id,paper_id,citations` CSV (header required). Rejects
/// malformed rows, duplicate (journal_id, paper_id) keys and negative or
/// non-integer citation counts with line-numbered errors.
CitationData load_citations(const std::string& path);
CitationData parse_citations(std::istream& in, const std::string& origin);

/// Read a summary CSV with header `id,name,n_papers,m,v,mu,sigma`; mu and
/// sigma may be blank or the columns absent entirely, in which case the log
/// moments are derived through arith_to_log and the record is flagged
/// MomentSource::derived. Unknown extra columns are ignored so summarize
/// output feeds straight back in. Row-level invariant violations are
/// reported as ParseError at their line.
std::vector<JournalRecord> load_summary(const std::string& path);
std::vector<JournalRecord> parse_summary(std::istream& in, const std::string& origin);

/// The bundled journal summary table (top 30 Web of Science MEDICINE,
/// GENERAL & INTERNAL journals, papers 2015-2016, citations 2017), exactly
/// as published. Also installed as a standalone CSV under data/.
std::string_view table1_csv();

/// table1_csv() parsed into records.
std::vector<JournalRecord> load_table1();

}  // namespace citekit
