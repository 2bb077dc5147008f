#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "journalnet/errors.hpp"
#include "journalnet/formats.hpp"

namespace journalnet {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail_at(std::string_view where, std::size_t line, const std::string& what) {
    throw DataError(std::string(where) + ":" + std::to_string(line) + ": " + what);
}

void check_stream(std::ostream& out) {
    if (!out) throw IoFailure("write failed");
}

// Simple line-oriented CSV table reader: header + rows, quotes handled.
struct CsvReader {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;

    static CsvReader read(std::istream& in, std::string_view where) {
        CsvReader table;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            auto fields = split_csv_line(line);
            if (table.header.empty()) {
                for (auto& f : fields) f = std::string(trim(f));
                table.header = std::move(fields);
            } else {
                table.rows.push_back(std::move(fields));
                table.row_lines.push_back(line_no);
            }
        }
        if (table.header.empty())
            throw EmptyInput(std::string(where) + ": empty file");
        return table;
    }

    std::size_t column(std::string_view name, std::string_view where) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw MissingColumn(std::string(where) + ": header lacks column \"" + std::string(name) +
                            "\"");
    }

    std::optional<std::size_t> find_column(std::string_view name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        return std::nullopt;
    }

    std::string_view cell(std::size_t row, std::size_t col) const {
        if (col >= rows[row].size()) return {};
        return trim(rows[row][col]);
    }
};

std::optional<bool> parse_bool(std::string_view s) {
    std::string v(s);
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (v == "true") return true;
    if (v == "false") return false;
    return std::nullopt;
}

std::optional<double> parse_number(std::string_view s) {
    try {
        std::size_t used = 0;
        const std::string tmp(s);
        const double v = std::stod(tmp, &used);
        if (used != tmp.size()) return std::nullopt;
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<long long> parse_integer(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

json parse_json(std::istream& in, std::string_view where) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DataError(std::string(where) + ": " + e.what());
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

// ---- Network interchange JSON ----

std::string write_network_json(const CoCitationNetwork& net) {
    ordered_json doc;
    doc["year"] = net.year_label();
    auto& nodes = doc["nodes"] = ordered_json::array();
    for (std::size_t v = 0; v < net.size(); ++v)
        nodes.push_back({{"name", net.names()[v]}, {"citations", net.citations()[v]}});
    auto& edges = doc["edges"] = ordered_json::array();
    for (const auto& [key, w] : net.edges()) {
        ordered_json e;
        e["a"] = net.names()[key.first];
        e["b"] = net.names()[key.second];
        if (w == std::floor(w) && std::abs(w) < 1e15)
            e["w"] = static_cast<std::int64_t>(w);
        else
            e["w"] = w;
        edges.push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

CoCitationNetwork read_network_json(std::istream& in, std::string_view source_name) {
    const std::string where(source_name);
    const json doc = parse_json(in, where);
    try {
        const int year = doc.value("year", 0);
        std::map<std::string, std::int64_t> counts;
        for (const auto& node : doc.at("nodes")) {
            const auto name = node.at("name").get<std::string>();
            if (counts.contains(name))
                throw DataError(where + ": duplicate node \"" + name + "\"");
            counts[name] = node.at("citations").get<std::int64_t>();
        }
        CoCitationNetwork::NameEdgeMap weights;
        if (doc.contains("edges"))
            for (const auto& edge : doc.at("edges")) {
                auto a = edge.at("a").get<std::string>();
                auto b = edge.at("b").get<std::string>();
                const double w = edge.at("w").get<double>();
                if (!counts.contains(a) || !counts.contains(b))
                    throw DataError(where + ": edge endpoint \"" + (counts.contains(a) ? b : a) +
                                    "\" is not a node");
                weights[{std::move(a), std::move(b)}] += w;
            }
        return CoCitationNetwork(year, counts, weights);
    } catch (const json::exception& e) {
        throw DataError(where + ": " + e.what());
    }
}

// ---- Report writers ----

void write_centrality_csv(std::ostream& out, const CoCitationNetwork& net,
                          const CentralityReport& report, const QuartileAssignment& quartiles,
                          const CentralityColumns& columns) {
    out << "journal,degree,weighted_degree,closeness,betweenness,eigenvector,quartile\n";
    for (std::size_t v = 0; v < net.size(); ++v) {
        out << csv_escape(net.names()[v]) << ',';
        if (columns.degree) out << report.degree[v];
        out << ',';
        if (columns.weighted_degree) out << format_double(report.weighted_degree[v]);
        out << ',';
        if (columns.closeness) out << format_double(report.closeness[v]);
        out << ',';
        if (columns.betweenness) out << format_double(report.betweenness[v]);
        out << ',';
        if (columns.eigenvector) out << format_double(report.eigenvector[v]);
        out << ',';
        if (columns.eigenvector) out << to_string(quartiles.bins[v]);
        out << '\n';
    }
    check_stream(out);
}

void write_crosstab_csv(std::ostream& out, const CrossTab& tab) {
    out << "class";
    for (const auto& col : tab.col_labels) out << ',' << col;
    out << ",total\n";
    for (std::size_t r = 0; r < tab.row_labels.size(); ++r) {
        out << csv_escape(tab.row_labels[r]);
        for (std::size_t c = 0; c < tab.col_labels.size(); ++c) out << ',' << tab.counts[r][c];
        out << ',' << tab.row_totals[r] << '\n';
    }
    out << "Total";
    for (const auto total : tab.col_totals) out << ',' << total;
    out << ',' << tab.grand_total << '\n';
    check_stream(out);
}

void write_boxplot_csv(std::ostream& out, std::span<const BoxplotSummary> groups) {
    out << "class,count,min,q1,median,q3,max,whisker_lo,whisker_hi,outliers,skew\n";
    for (const auto& g : groups) {
        out << csv_escape(g.label) << ',' << g.count << ',' << format_double(g.min) << ','
            << format_double(g.q1) << ',' << format_double(g.median) << ','
            << format_double(g.q3) << ',' << format_double(g.max) << ','
            << format_double(g.whisker_lo) << ',' << format_double(g.whisker_hi) << ',';
        std::string joined;
        for (const auto v : g.outliers) {
            if (!joined.empty()) joined += ';';
            joined += format_double(v);
        }
        out << csv_escape(joined) << ',' << to_string(g.skew) << '\n';
    }
    check_stream(out);
}

void write_composition_csv(std::ostream& out, const Composition& comp) {
    out << "field,class,count,share_pct\n";
    for (const auto& cell : comp.cells)
        out << csv_escape(cell.field) << ',' << csv_escape(cell.cls) << ',' << cell.count << ','
            << format_double(cell.share_pct) << '\n';
    for (const auto& cell : comp.class_margins)
        out << csv_escape(cell.field) << ',' << csv_escape(cell.cls) << ',' << cell.count << ','
            << format_double(cell.share_pct) << '\n';
    check_stream(out);
}

void write_correlations_csv(std::ostream& out, const CorrelationMatrix& m) {
    auto emit = [&](const char* name, const std::vector<std::vector<double>>& matrix) {
        for (std::size_t i = 0; i < m.labels.size(); ++i) {
            out << name << ',' << m.labels[i];
            for (std::size_t j = 0; j < m.labels.size(); ++j) {
                out << ',';
                if (std::isnan(matrix[i][j]))
                    out << "undefined";
                else
                    out << format_double(matrix[i][j]);
            }
            out << '\n';
        }
    };
    out << "matrix,measure";
    for (const auto& label : m.labels) out << ',' << label;
    out << '\n';
    emit("pearson", m.pearson);
    emit("spearman", m.spearman);
    check_stream(out);
}

std::string write_recommendations_json(std::span<const Recommendation> recs) {
    std::vector<const Recommendation*> sorted;
    sorted.reserve(recs.size());
    for (const auto& r : recs) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return a->journal < b->journal; });

    ordered_json arr = ordered_json::array();
    for (const auto* r : sorted) {
        ordered_json item;
        item["journal"] = r->journal;
        item["action"] = std::string(to_string(r->action));
        ordered_json ev;
        ev["latest_eigenvector"] = r->evidence.latest_eigenvector;
        ev["level2_median"] = r->evidence.level2_median;
        ev["level1_median"] = r->evidence.level1_median;
        ev["delta_over_window"] = r->evidence.delta_over_window;
        ev["present_latest"] = r->evidence.present_latest;
        item["evidence"] = std::move(ev);
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

std::string write_series_json(const SeriesFile& file) {
    ordered_json doc;
    auto& snaps = doc["snapshots"] = ordered_json::array();
    for (const auto& [year, medians] : file.medians) {
        ordered_json s;
        s["year"] = year;
        s["level1_median"] = medians.level1_median;
        s["level2_median"] = medians.level2_median;
        snaps.push_back(std::move(s));
    }
    auto& series = doc["series"] = ordered_json::array();
    for (const auto& s : file.series) {
        ordered_json item;
        item["journal"] = s.journal;
        auto& points = item["points"] = ordered_json::array();
        for (const auto& p : s.points) {
            ordered_json pt;
            pt["year"] = p.year;
            pt["present"] = p.present;
            if (p.present) {
                pt["eigenvector"] = p.eigenvector;
                pt["betweenness"] = p.betweenness;
            }
            points.push_back(std::move(pt));
        }
        series.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

SeriesFile read_series_json(std::istream& in, std::string_view source_name) {
    const std::string where(source_name);
    const json doc = parse_json(in, where);
    SeriesFile file;
    try {
        if (doc.contains("snapshots"))
            for (const auto& s : doc.at("snapshots")) {
                GroupMedians medians;
                medians.level1_median = s.at("level1_median").get<double>();
                medians.level2_median = s.at("level2_median").get<double>();
                file.medians[s.at("year").get<int>()] = medians;
            }
        for (const auto& item : doc.at("series")) {
            EvolutionSeries series;
            series.journal = item.at("journal").get<std::string>();
            for (const auto& pt : item.at("points")) {
                EvolutionPoint p;
                p.year = pt.at("year").get<int>();
                p.present = pt.at("present").get<bool>();
                if (p.present) {
                    p.eigenvector = pt.at("eigenvector").get<double>();
                    p.betweenness = pt.at("betweenness").get<double>();
                }
                series.points.push_back(p);
            }
            file.series.push_back(std::move(series));
        }
    } catch (const json::exception& e) {
        throw DataError(where + ": " + e.what());
    }
    return file;
}

// ---- Tabular loaders ----

AliasTable load_alias_table(std::istream& in, std::string_view source_name) {
    const auto table = CsvReader::read(in, source_name);
    const auto alias_col = table.column("alias", source_name);
    const auto canon_col = table.column("canonical", source_name);
    AliasTable aliases;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto alias = table.cell(r, alias_col);
        const auto canonical = table.cell(r, canon_col);
        if (alias.empty() || canonical.empty())
            fail_at(source_name, table.row_lines[r], "alias and canonical must be non-empty");
        aliases.add(alias, canonical);
    }
    aliases.finalize();
    return aliases;
}

std::vector<JournalDossier> load_dossiers(std::istream& in, std::string_view source_name) {
    const auto table = CsvReader::read(in, source_name);
    const auto journal_col = table.column("journal", source_name);
    const auto jcr_col = table.column("jcr_ss_quartile", source_name);
    const auto ssci_col = table.column("indexed_ssci", source_name);
    const auto ahci_col = table.column("indexed_ahci", source_name);
    const auto scopus_col = table.column("scopus_ipp_quartile", source_name);
    const auto ipp_col = table.column("ipp_value", source_name);
    const auto erih_col = table.column("erih_plus", source_name);
    const auto erih_disc_col = table.column("erih_discipline", source_name);
    const auto fecyt_col = table.column("fecyt_seal", source_name);
    const auto cat_col = table.column("latindex_catalogue", source_name);
    const auto dir_col = table.column("latindex_directory", source_name);

    std::vector<JournalDossier> dossiers;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto line = table.row_lines[r];
        auto get_bool = [&](std::size_t col, const char* what) {
            const auto cell = table.cell(r, col);
            if (cell.empty()) return false;
            const auto b = parse_bool(cell);
            if (!b) fail_at(source_name, line, std::string(what) + " must be true/false");
            return *b;
        };
        auto get_quartile = [&](std::size_t col, const char* what) -> std::optional<int> {
            const auto cell = table.cell(r, col);
            if (cell.empty()) return std::nullopt;
            const auto v = parse_integer(cell);
            if (!v || *v < 1 || *v > 4)
                fail_at(source_name, line, std::string(what) + " must be 1..4 or empty");
            return static_cast<int>(*v);
        };

        JournalDossier d;
        d.journal = std::string(table.cell(r, journal_col));
        if (d.journal.empty()) fail_at(source_name, line, "empty journal name");
        d.jcr_ss_quartile = get_quartile(jcr_col, "jcr_ss_quartile");
        d.indexed_ssci = get_bool(ssci_col, "indexed_ssci");
        d.indexed_ahci = get_bool(ahci_col, "indexed_ahci");
        d.scopus_ipp_quartile = get_quartile(scopus_col, "scopus_ipp_quartile");
        if (const auto cell = table.cell(r, ipp_col); !cell.empty()) {
            const auto v = parse_number(cell);
            if (!v || *v < 0.0)
                fail_at(source_name, line, "ipp_value must be a nonnegative number or empty");
            d.ipp_value = *v;
        }
        d.erih_plus = get_bool(erih_col, "erih_plus");
        if (const auto cell = table.cell(r, erih_disc_col); !cell.empty()) {
            if (cell == "social_sciences")
                d.erih_discipline = ErihDiscipline::SocialSciences;
            else if (cell == "humanities")
                d.erih_discipline = ErihDiscipline::Humanities;
            else if (cell == "none")
                d.erih_discipline = ErihDiscipline::None;
            else
                fail_at(source_name, line,
                        "erih_discipline must be social_sciences, humanities or none");
        }
        d.fecyt_seal = get_bool(fecyt_col, "fecyt_seal");
        d.latindex_catalogue = get_bool(cat_col, "latindex_catalogue");
        d.latindex_directory = get_bool(dir_col, "latindex_directory");
        try {
            d.validate();
        } catch (const DataError& e) {
            fail_at(source_name, line, e.what());
        }
        dossiers.push_back(std::move(d));
    }
    return dossiers;
}

std::map<std::string, DanishLevel> load_danish_levels(std::istream& in,
                                                      std::string_view source_name) {
    const auto table = CsvReader::read(in, source_name);
    const auto journal_col = table.column("journal", source_name);
    const auto level_col = table.column("level", source_name);
    std::map<std::string, DanishLevel> levels;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto journal = std::string(table.cell(r, journal_col));
        const auto level = parse_danish_level(table.cell(r, level_col));
        if (journal.empty() || !level)
            fail_at(source_name, table.row_lines[r], "expected journal and level in {2,1,0}");
        levels[journal] = *level;
    }
    return levels;
}

std::map<std::string, std::string> load_field_labels(std::istream& in,
                                                     std::string_view source_name) {
    const auto table = CsvReader::read(in, source_name);
    const auto journal_col = table.column("journal", source_name);
    const auto field_col = table.column("field", source_name);
    std::map<std::string, std::string> fields;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto journal = std::string(table.cell(r, journal_col));
        const auto field = std::string(table.cell(r, field_col));
        if (journal.empty() || field.empty())
            fail_at(source_name, table.row_lines[r], "expected journal and field");
        fields[journal] = field;
    }
    return fields;
}

std::map<std::string, std::int64_t> load_production(std::istream& in,
                                                    std::string_view source_name) {
    const auto table = CsvReader::read(in, source_name);
    const auto journal_col = table.column("journal", source_name);
    const auto articles_col = table.column("articles", source_name);
    std::map<std::string, std::int64_t> production;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto journal = std::string(table.cell(r, journal_col));
        const auto articles = parse_integer(table.cell(r, articles_col));
        if (journal.empty() || !articles || *articles < 0)
            fail_at(source_name, table.row_lines[r],
                    "expected journal and a nonnegative article count");
        production[journal] += *articles;
    }
    return production;
}

std::map<std::string, std::string> load_labels(std::istream& in, std::string_view source_name) {
    const auto table = CsvReader::read(in, source_name);
    const auto journal_col = table.column("journal", source_name);
    auto label_col = table.find_column("label");
    if (!label_col) label_col = table.find_column("level");
    if (!label_col)
        throw MissingColumn(std::string(source_name) + ": header lacks \"label\" or \"level\"");
    std::map<std::string, std::string> labels;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto journal = std::string(table.cell(r, journal_col));
        const auto label = std::string(table.cell(r, *label_col));
        if (journal.empty() || label.empty())
            fail_at(source_name, table.row_lines[r], "expected journal and label");
        labels[journal] = label;
    }
    return labels;
}

ScoresTable read_centrality_csv(std::istream& in, std::string_view source_name) {
    const auto table = CsvReader::read(in, source_name);
    const auto journal_col = table.column("journal", source_name);
    const auto degree_col = table.column("degree", source_name);
    const auto wdeg_col = table.column("weighted_degree", source_name);
    const auto close_col = table.column("closeness", source_name);
    const auto between_col = table.column("betweenness", source_name);
    const auto eigen_col = table.column("eigenvector", source_name);
    const auto quartile_col = table.column("quartile", source_name);

    ScoresTable scores;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto line = table.row_lines[r];
        auto get_num = [&](std::size_t col, const char* what) -> std::optional<double> {
            const auto cell = table.cell(r, col);
            if (cell.empty()) return std::nullopt;
            const auto v = parse_number(cell);
            if (!v) fail_at(source_name, line, std::string(what) + " is not a number");
            return v;
        };
        const auto journal = std::string(table.cell(r, journal_col));
        if (journal.empty()) fail_at(source_name, line, "empty journal name");
        scores.journals.push_back(journal);
        scores.degree.push_back(get_num(degree_col, "degree"));
        scores.weighted_degree.push_back(get_num(wdeg_col, "weighted_degree"));
        scores.closeness.push_back(get_num(close_col, "closeness"));
        scores.betweenness.push_back(get_num(between_col, "betweenness"));
        scores.eigenvector.push_back(get_num(eigen_col, "eigenvector"));
        const auto q = table.cell(r, quartile_col);
        if (q.empty()) {
            scores.quartile.push_back(std::nullopt);
        } else if (q == "Q1") {
            scores.quartile.push_back(Quartile::Q1);
        } else if (q == "Q2") {
            scores.quartile.push_back(Quartile::Q2);
        } else if (q == "Q3") {
            scores.quartile.push_back(Quartile::Q3);
        } else if (q == "Q4") {
            scores.quartile.push_back(Quartile::Q4);
        } else {
            fail_at(source_name, line, "quartile must be Q1..Q4 or empty");
        }
    }
    return scores;
}

}  // namespace journalnet
