#include "journalnet/bib.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <set>
#include <utility>

#include "journalnet/errors.hpp"

namespace journalnet {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }
bool is_punct(unsigned char c) { return std::ispunct(c) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::optional<int> parse_int(std::string_view s) {
    s = trim(s);
    int value = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
    return value;
}

}  // namespace

std::string normalize_name(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (const char ch : raw) {
        const auto c = static_cast<unsigned char>(ch);
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::toupper(c)));
    }
    // Leading whitespace never made it in; strip edge punctuation (and any
    // whitespace that stripping exposes).
    std::size_t b = 0, e = out.size();
    while (b < e && (is_punct(static_cast<unsigned char>(out[b])) ||
                     is_space(static_cast<unsigned char>(out[b]))))
        ++b;
    while (e > b && (is_punct(static_cast<unsigned char>(out[e - 1])) ||
                     is_space(static_cast<unsigned char>(out[e - 1]))))
        --e;
    return out.substr(b, e - b);
}

void AliasTable::add(std::string_view alias, std::string_view canonical) {
    std::string a = normalize_name(alias);
    std::string c = normalize_name(canonical);
    if (a.empty() || a == c) return;
    entries_[std::move(a)] = std::move(c);
}

void AliasTable::finalize() {
    for (auto& [alias, target] : entries_) {
        std::set<std::string> seen{alias};
        std::string resolved = target;
        auto it = entries_.find(resolved);
        while (it != entries_.end()) {
            if (!seen.insert(resolved).second)
                throw DataError("alias cycle involving \"" + alias + "\"");
            resolved = it->second;
            it = entries_.find(resolved);
        }
        target = std::move(resolved);
    }
    // Self-mappings can appear after collapsing; they are identities.
    std::erase_if(entries_, [](const auto& kv) { return kv.first == kv.second; });
}

const std::string& AliasTable::resolve(const std::string& normalized) const {
    const auto it = entries_.find(normalized);
    return it == entries_.end() ? normalized : it->second;
}

std::string canonical_name(std::string_view raw, const AliasTable& aliases) {
    return aliases.resolve(normalize_name(raw));
}

std::optional<std::string> extract_cited_journal(std::string_view ref) {
    const auto segments = split(ref, ',');
    if (segments.size() < 3) return std::nullopt;
    const std::string_view journal = trim(segments[2]);
    if (journal.empty()) return std::nullopt;
    const bool numeric_only = std::all_of(journal.begin(), journal.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
    if (numeric_only) return std::nullopt;
    return std::string(journal);
}

ParseResult parse_records(std::istream& in, const FormatConfig& cfg) {
    std::string line;
    if (!std::getline(in, line)) throw EmptyInput("records input is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split(line, '\t');
    auto column = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (trim(header[i]) == name) return i;
        throw MissingColumn("records header lacks column \"" + name + "\"");
    };
    const std::size_t id_col = column(cfg.id_col);
    const std::size_t year_col = column(cfg.year_col);
    const std::size_t source_col = column(cfg.source_col);
    const std::size_t cited_col = column(cfg.cited_col);
    const std::size_t need = std::max({id_col, year_col, source_col, cited_col}) + 1;

    ParseResult result;
    std::set<std::string> seen_ids;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto cells = split(line, '\t');
        auto skip = [&](std::string reason) {
            result.skipped.push_back({line_no, std::move(reason)});
        };
        if (cells.size() < need) {
            skip("expected at least " + std::to_string(need) + " columns, found " +
                 std::to_string(cells.size()));
            continue;
        }
        const std::string_view id = trim(cells[id_col]);
        if (id.empty()) {
            skip("empty record id");
            continue;
        }
        const auto year = parse_int(cells[year_col]);
        if (!year) {
            skip("unparseable year \"" + std::string(trim(cells[year_col])) + "\"");
            continue;
        }
        if (*year < 1900 || *year > 2100) {
            skip("year " + std::to_string(*year) + " outside 1900..2100");
            continue;
        }
        if (!seen_ids.insert(std::string(id)).second) {
            skip("duplicate record id \"" + std::string(id) + "\"");
            continue;
        }

        BibRecord rec;
        rec.record_id = std::string(id);
        rec.pub_year = *year;
        rec.source_journal = std::string(trim(cells[source_col]));
        for (const auto ref : split(cells[cited_col], ';')) {
            const auto t = trim(ref);
            if (!t.empty()) rec.cited_refs.emplace_back(t);
        }
        result.records.push_back(std::move(rec));
    }

    if (result.records.empty() && result.skipped.empty())
        throw EmptyInput("records input has a header but no data rows");
    return result;
}

}  // namespace journalnet
