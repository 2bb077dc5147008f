#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "journalnet/audit.hpp"
#include "journalnet/bib.hpp"
#include "journalnet/centrality.hpp"
#include "journalnet/classify.hpp"
#include "journalnet/network.hpp"

namespace journalnet {

// ---- Pajek NET ----

/// `*Vertices N`, one `i "LABEL"` line per vertex in name order, `*Edges`,
/// then `i j w` with i < j sorted by (i, j). Integral weights print without a
/// decimal point. Byte-identical across runs for the same network.
std::string write_pajek(const CoCitationNetwork& net);

struct PajekReadResult {
    CoCitationNetwork net;
    std::vector<std::string> warnings;
    // NET carries no citation counts; they are reconstructed as the weighted
    // degree (rounded up), so a write/read cycle is lossy in that one field.
    bool lossy_citations = false;
};

/// Accepts `*Vertices` / `*Edges` / `*Arcs` sections (arcs are symmetrized).
/// Duplicate pairs are summed with a warning; self-loops are dropped with a
/// warning. Throws MalformedHeader or DanglingEdge on structural problems.
PajekReadResult read_pajek(std::istream& in, std::string_view source_name = "<input>");

// ---- Network interchange JSON ----
// {"year": Y, "nodes": [{"name": N, "citations": C}], "edges": [{"a": A, "b": B, "w": W}]}
// with nodes name-sorted and edges (a,b)-sorted.

std::string write_network_json(const CoCitationNetwork& net);
CoCitationNetwork read_network_json(std::istream& in, std::string_view source_name = "<input>");

// ---- Report writers (UTF-8, LF, floats at 6 significant digits) ----

// Which score columns carry values; the header is always complete.
struct CentralityColumns {
    bool degree = true;
    bool weighted_degree = true;
    bool closeness = true;
    bool betweenness = true;
    bool eigenvector = true;
};

void write_centrality_csv(std::ostream& out, const CoCitationNetwork& net,
                          const CentralityReport& report, const QuartileAssignment& quartiles,
                          const CentralityColumns& columns = {});

void write_crosstab_csv(std::ostream& out, const CrossTab& tab);
void write_boxplot_csv(std::ostream& out, std::span<const BoxplotSummary> groups);
void write_composition_csv(std::ostream& out, const Composition& comp);
void write_correlations_csv(std::ostream& out, const CorrelationMatrix& m);

/// JSON array, journals name-sorted.
std::string write_recommendations_json(std::span<const Recommendation> recs);

struct SeriesFile {
    std::vector<EvolutionSeries> series;
    std::map<int, GroupMedians> medians;
};

std::string write_series_json(const SeriesFile& file);
SeriesFile read_series_json(std::istream& in, std::string_view source_name = "<input>");

// ---- Tabular loaders (CSV with a header row) ----

/// `alias,canonical`; both sides normalized, chains collapsed.
AliasTable load_alias_table(std::istream& in, std::string_view source_name = "<input>");

/// `journal,jcr_ss_quartile,indexed_ssci,indexed_ahci,scopus_ipp_quartile,
///  ipp_value,erih_plus,erih_discipline,fecyt_seal,latindex_catalogue,
///  latindex_directory`; booleans true/false, absent values empty.
std::vector<JournalDossier> load_dossiers(std::istream& in,
                                          std::string_view source_name = "<input>");

/// `journal,level` with level in {2,1,0}.
std::map<std::string, DanishLevel> load_danish_levels(std::istream& in,
                                                      std::string_view source_name = "<input>");

/// `journal,field`.
std::map<std::string, std::string> load_field_labels(std::istream& in,
                                                     std::string_view source_name = "<input>");

/// `journal,articles` with nonnegative integer counts.
std::map<std::string, std::int64_t> load_production(std::istream& in,
                                                    std::string_view source_name = "<input>");

/// Generic `journal,label` / `journal,level` reader for audit inputs.
std::map<std::string, std::string> load_labels(std::istream& in,
                                               std::string_view source_name = "<input>");

// Centrality CSV read back for the audit subcommands.
struct ScoresTable {
    std::vector<std::string> journals;
    std::vector<std::optional<double>> degree;
    std::vector<std::optional<double>> weighted_degree;
    std::vector<std::optional<double>> closeness;
    std::vector<std::optional<double>> betweenness;
    std::vector<std::optional<double>> eigenvector;
    std::vector<std::optional<Quartile>> quartile;
};

ScoresTable read_centrality_csv(std::istream& in, std::string_view source_name = "<input>");

// ---- Small formatting/parsing helpers shared by the writers ----

/// Shortest fixed rendering at 6 significant digits ("%.6g").
std::string format_double(double v);

/// RFC-style CSV field split of one line (quotes, doubled-quote escapes).
std::vector<std::string> split_csv_line(std::string_view line);

std::string csv_escape(std::string_view field);

}  // namespace journalnet
