#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace journalnet {

// One source article together with its raw cited-reference strings.
struct BibRecord {
    std::string record_id;
    int pub_year = 0;
    std::string source_journal;
    std::vector<std::string> cited_refs;
};

/// Canonicalizes a raw journal name: ASCII uppercase, internal whitespace
/// collapsed to single spaces, leading/trailing punctuation and whitespace
/// stripped. Idempotent.
std::string normalize_name(std::string_view raw);

// Maps normalized alias names to canonical journal names. After finalize()
// the table is one level deep: no value is also a key, so canonical names
// are fixed points of resolve().
class AliasTable {
public:
    // Both sides are normalized before insertion. Identity pairs are dropped.
    void add(std::string_view alias, std::string_view canonical);

    // Collapses alias chains (a->b, b->c becomes a->c, b->c).
    // Throws DataError on a cyclic definition.
    void finalize();

    // Resolves an already-normalized name; unknown names pass through.
    const std::string& resolve(const std::string& normalized) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::map<std::string, std::string> entries_;
};

/// normalize_name followed by alias resolution.
std::string canonical_name(std::string_view raw, const AliasTable& aliases);

/// Extracts the cited journal from one reference string: the trimmed third
/// comma-separated segment, if present and not purely numeric. Never throws.
std::optional<std::string> extract_cited_journal(std::string_view ref);

// Column names of the tab-separated records export.
struct FormatConfig {
    std::string id_col = "id";
    std::string year_col = "year";
    std::string source_col = "source";
    std::string cited_col = "cited";
};

struct SkippedRow {
    std::size_t line_no = 0;  // 1-based, header is line 1
    std::string reason;
};

struct ParseResult {
    std::vector<BibRecord> records;  // input order
    std::vector<SkippedRow> skipped;
};

/// Parses a TSV export with a header row. Rows with an unparseable or
/// out-of-range year, a missing id, a duplicate id, or too few columns are
/// skipped and reported, not fatal. The cited cell is split on ';'.
/// Throws MissingColumn if the header lacks a mapped field and EmptyInput if
/// there is no header or no data row.
ParseResult parse_records(std::istream& in, const FormatConfig& cfg = {});

}  // namespace journalnet
