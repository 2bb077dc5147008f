// journalnet: build journal co-citation networks from bibliographic record
// exports, score node centrality, apply national classification rules, and
// emit audit reports and reclassification recommendations.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "journalnet/audit.hpp"
#include "journalnet/bib.hpp"
#include "journalnet/centrality.hpp"
#include "journalnet/classify.hpp"
#include "journalnet/errors.hpp"
#include "journalnet/formats.hpp"
#include "journalnet/network.hpp"

namespace {

using namespace journalnet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open \"" + path + "\" for reading");
    return in;
}

// "-" means stdout.
void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        if (!std::cout) throw IoFailure("stdout write failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open \"" + path + "\" for writing");
    out << content;
    if (!out) throw IoFailure("write to \"" + path + "\" failed");
}

AliasTable load_aliases_opt(const std::string& path) {
    if (path.empty()) return {};
    auto in = open_input(path);
    return load_alias_table(in, path);
}

CoCitationNetwork load_network(const std::string& path) {
    auto in = open_input(path);
    if (std::filesystem::path(path).extension() == ".net") {
        auto result = read_pajek(in, path);
        for (const auto& warning : result.warnings)
            std::cerr << "journalnet: " << path << ": " << warning << "\n";
        if (result.lossy_citations)
            std::cerr << "journalnet: " << path
                      << ": citation counts reconstructed from weighted degree\n";
        return std::move(result.net);
    }
    return read_network_json(in, path);
}

void report_skips(const ParseResult& parsed, const std::string& path) {
    for (const auto& skip : parsed.skipped)
        std::cerr << "journalnet: " << path << ":" << skip.line_no << ": skipped row ("
                  << skip.reason << ")\n";
}

std::vector<std::string> circ_row_order() {
    return {"A+", "A", "B", "C", "D", "NotIncluded"};
}

std::vector<std::string> danish_row_order() { return {"2", "1", "0"}; }

// Scheme-dependent cross-tab/boxplot grouping. "auto" sniffs the labels.
struct SchemeRows {
    std::vector<std::string> order;
    std::string default_label;
};

SchemeRows rows_for(const std::string& scheme, const std::map<std::string, std::string>& labels) {
    if (scheme == "danish") return {danish_row_order(), "0"};
    if (scheme == "circ") return {circ_row_order(), "NotIncluded"};
    for (const auto& [journal, label] : labels) {
        (void)journal;
        if (label == "2" || label == "1" || label == "0") return {danish_row_order(), "0"};
        break;
    }
    return {circ_row_order(), "NotIncluded"};
}

struct CentralityFlags {
    std::vector<std::string> measures;
    std::vector<std::string> modes;
    double tol = 1e-10;
    int max_iter = 10000;
    bool normalized = false;
    unsigned threads = 1;
};

void add_centrality_flags(CLI::App* cmd, CentralityFlags& flags) {
    cmd->add_option("--measures", flags.measures,
                    "Comma-separated subset of degree,closeness,betweenness,eigenvector "
                    "(default: all)")
        ->delimiter(',');
    cmd->add_option("--mode", flags.modes,
                    "Per-measure modes parallel to --measures (eigenvector: weighted|binary, "
                    "betweenness: binary|inverse_weight)")
        ->delimiter(',');
    cmd->add_option("--tol", flags.tol, "Eigensolver relative residual tolerance")
        ->capture_default_str();
    cmd->add_option("--max-iter", flags.max_iter, "Eigensolver iteration cap")
        ->capture_default_str();
    cmd->add_flag("--normalized", flags.normalized, "Normalize betweenness by (n-1)(n-2)/2");
    cmd->add_option("--threads", flags.threads, "Worker threads (results thread-count invariant)")
        ->capture_default_str();
}

CentralityOptions resolve_centrality_options(const CentralityFlags& flags,
                                             CentralityColumns& columns) {
    CentralityOptions opt;
    opt.tolerance = flags.tol;
    opt.max_iterations = flags.max_iter;
    opt.normalized_betweenness = flags.normalized;
    opt.threads = flags.threads;

    if (!flags.measures.empty()) {
        columns = CentralityColumns{false, false, false, false, false};
        for (const auto& m : flags.measures) {
            if (m == "degree") columns.degree = columns.weighted_degree = true;
            else if (m == "closeness") columns.closeness = true;
            else if (m == "betweenness") columns.betweenness = true;
            else if (m == "eigenvector") columns.eigenvector = true;
            else throw CLI::ValidationError("--measures", "unknown measure \"" + m + "\"");
        }
    }
    if (!flags.modes.empty()) {
        if (flags.measures.empty() || flags.modes.size() != flags.measures.size())
            throw CLI::ValidationError("--mode", "needs one entry per --measures entry");
        for (std::size_t i = 0; i < flags.modes.size(); ++i) {
            const auto& measure = flags.measures[i];
            const auto& mode = flags.modes[i];
            if (measure == "eigenvector") {
                if (mode == "weighted") opt.eigen_mode = WeightMode::Weighted;
                else if (mode == "binary") opt.eigen_mode = WeightMode::Binary;
                else throw CLI::ValidationError("--mode", "eigenvector mode must be weighted|binary");
            } else if (measure == "betweenness") {
                if (mode == "binary") opt.betweenness_mode = PathMode::Binary;
                else if (mode == "inverse_weight") opt.betweenness_mode = PathMode::InverseWeight;
                else
                    throw CLI::ValidationError("--mode",
                                               "betweenness mode must be binary|inverse_weight");
            } else if (mode != "binary") {
                throw CLI::ValidationError("--mode", measure + " supports only binary mode");
            }
        }
    }
    return opt;
}

// ---- subcommand bodies ----

int run_ingest(const std::string& input, const std::string& aliases_path,
               const std::string& out_path, const FormatConfig& cfg) {
    auto in = open_input(input);
    const auto parsed = parse_records(in, cfg);
    report_skips(parsed, input);
    const auto aliases = load_aliases_opt(aliases_path);

    std::ostringstream out;
    out << "id\tyear\tsource\tcited\n";
    for (const auto& rec : parsed.records) {
        out << rec.record_id << '\t' << rec.pub_year << '\t'
            << canonical_name(rec.source_journal, aliases) << '\t';
        std::set<std::string> cited;
        for (const auto& ref : rec.cited_refs)
            if (const auto journal = extract_cited_journal(ref))
                cited.insert(canonical_name(*journal, aliases));
        bool first = true;
        for (const auto& journal : cited) {
            if (!first) out << "; ";
            out << journal;
            first = false;
        }
        out << '\n';
    }
    write_output(out_path, out.str());
    std::cerr << "journalnet: ingested " << parsed.records.size() << " records, skipped "
              << parsed.skipped.size() << "\n";
    return kExitOk;
}

int run_build(const std::string& input, const std::string& aliases_path, std::int64_t threshold,
              std::size_t top, std::optional<int> year, const std::string& out_path,
              const FormatConfig& cfg) {
    auto in = open_input(input);
    const auto parsed = parse_records(in, cfg);
    report_skips(parsed, input);
    const auto aliases = load_aliases_opt(aliases_path);

    const int label = year ? *year : infer_corpus_year(parsed.records);
    const auto full = build_cocitation(parsed.records, aliases, label);
    const auto result = apply_threshold(full, {threshold, top});
    std::cerr << "journalnet: kept " << result.nodes_after << "/" << result.nodes_before
              << " journals and " << result.edges_after << "/" << result.edges_before
              << " edges (threshold " << threshold << ", cap " << top << ")\n";
    write_output(out_path, write_network_json(result.net));
    return kExitOk;
}

int run_centrality(const std::string& net_path, const std::string& out_path,
                   const CentralityFlags& flags, const std::string& correlations_path) {
    const auto net = load_network(net_path);
    CentralityColumns columns;
    const auto opt = resolve_centrality_options(flags, columns);
    const auto report = compute_centrality(net, opt);
    if (report.disconnected)
        std::cerr << "journalnet: network is disconnected; eigenvector mass concentrates on "
                     "the dominant component\n";
    std::cerr << "journalnet: eigensolver converged in " << report.iterations
              << " iterations (residual " << format_double(report.residual) << ")\n";
    const auto quartiles = quartile_bins(report.eigenvector);
    std::ostringstream out;
    write_centrality_csv(out, net, report, quartiles, columns);
    write_output(out_path, out.str());

    if (!correlations_path.empty()) {
        const auto m = correlate_measures(report);
        std::ostringstream corr;
        write_correlations_csv(corr, m);
        write_output(correlations_path, corr.str());
    }
    return kExitOk;
}

int run_classify(const std::string& dossiers_path, const std::string& levels_path,
                 const std::string& scheme, const std::string& production_path,
                 const std::string& out_path) {
    std::ostringstream out;
    if (scheme == "danish") {
        if (levels_path.empty())
            throw CLI::ValidationError("--levels", "required for --scheme danish");
        auto in = open_input(levels_path);
        const auto levels = load_danish_levels(in, levels_path);
        out << "journal,level,points\n";
        for (const auto& [journal, level] : levels)
            out << csv_escape(journal) << ',' << to_string(level) << ','
                << format_double(bfi_points(level)) << '\n';
        if (!production_path.empty()) {
            auto prod_in = open_input(production_path);
            const auto production = load_production(prod_in, production_path);
            std::set<std::string> level2;
            for (const auto& [journal, level] : levels)
                if (level == DanishLevel::Level2) level2.insert(journal);
            const auto share = validate_level2_share(production, level2);
            std::cerr << "journalnet: level-2 share of world production = "
                      << format_double(share.share * 100.0) << "% ("
                      << (share.pass ? "within" : "EXCEEDS") << " the 20% cap)\n";
        }
    } else {
        if (dossiers_path.empty())
            throw CLI::ValidationError("--dossiers", "required for CIRC schemes");
        auto in = open_input(dossiers_path);
        const auto dossiers = load_dossiers(in, dossiers_path);
        const bool social = scheme == "circ-ss";
        out << "journal,label\n";
        for (const auto& d : dossiers) {
            const auto label = social ? classify_circ_social(d) : classify_circ_humanities(d);
            out << csv_escape(d.journal) << ',' << to_string(label) << '\n';
        }
    }
    write_output(out_path, out.str());
    return kExitOk;
}

std::map<std::string, double> scores_by_journal(const ScoresTable& table,
                                                const std::string& measure,
                                                const std::string& path) {
    const std::vector<std::optional<double>>* column = nullptr;
    if (measure == "eigenvector") column = &table.eigenvector;
    else if (measure == "betweenness") column = &table.betweenness;
    else if (measure == "closeness") column = &table.closeness;
    else if (measure == "degree") column = &table.degree;
    else if (measure == "weighted_degree") column = &table.weighted_degree;
    else throw CLI::ValidationError("--measure", "unknown measure \"" + measure + "\"");

    std::map<std::string, double> scores;
    for (std::size_t i = 0; i < table.journals.size(); ++i) {
        if (!(*column)[i])
            throw DataError(path + ": journal \"" + table.journals[i] + "\" has no " + measure +
                            " value");
        scores[table.journals[i]] = *(*column)[i];
    }
    return scores;
}

int run_audit_crosstab(const std::string& labels_path, const std::string& scores_path,
                       const std::string& scheme, const std::string& out_path) {
    auto labels_in = open_input(labels_path);
    const auto labels = load_labels(labels_in, labels_path);
    auto scores_in = open_input(scores_path);
    const auto table = read_centrality_csv(scores_in, scores_path);

    QuartileAssignment bins;
    for (std::size_t i = 0; i < table.journals.size(); ++i) {
        if (!table.quartile[i])
            throw DataError(scores_path + ": journal \"" + table.journals[i] +
                            "\" has no quartile bin");
        bins.bins.push_back(*table.quartile[i]);
    }
    const auto rows = rows_for(scheme, labels);
    const auto tab = crosstab(table.journals, bins, labels, rows.order, rows.default_label);

    // headline shares on the diagnostic stream
    const std::size_t best_row[] = {0};
    std::cerr << "journalnet: " << rows.order[0] << "-class share of Q1 = "
              << format_double(tab.column_share(best_row, 0) * 100.0) << "%\n";
    std::cerr << "journalnet: Q1 share within " << rows.order[0] << " = "
              << format_double(tab.row_share(0, 0) * 100.0) << "%\n";

    std::ostringstream out;
    write_crosstab_csv(out, tab);
    write_output(out_path, out.str());
    return kExitOk;
}

int run_audit_boxplot(const std::string& labels_path, const std::string& scores_path,
                      const std::string& measure, const std::string& scheme,
                      const std::string& out_path) {
    auto labels_in = open_input(labels_path);
    const auto labels = load_labels(labels_in, labels_path);
    auto scores_in = open_input(scores_path);
    const auto table = read_centrality_csv(scores_in, scores_path);
    const auto scores = scores_by_journal(table, measure, scores_path);
    const auto rows = rows_for(scheme, labels);
    const auto groups = boxplot_summary(scores, labels, rows.order, rows.default_label);
    std::ostringstream out;
    write_boxplot_csv(out, groups);
    write_output(out_path, out.str());
    return kExitOk;
}

int run_audit_composition(const std::string& labels_path, const std::string& fields_path,
                          const std::string& scheme, const std::string& out_path) {
    auto labels_in = open_input(labels_path);
    const auto labels = load_labels(labels_in, labels_path);
    auto fields_in = open_input(fields_path);
    const auto fields = load_field_labels(fields_in, fields_path);
    std::vector<std::string> journals;
    for (const auto& [journal, label] : labels) {
        (void)label;
        journals.push_back(journal);
    }
    const auto rows = rows_for(scheme, labels);
    const auto comp = composition(journals, labels, fields, rows.order, rows.default_label);
    std::ostringstream out;
    write_composition_csv(out, comp);
    write_output(out_path, out.str());
    return kExitOk;
}

int run_evolve(const std::vector<std::string>& net_paths, const std::string& levels_path,
               const std::vector<std::string>& journals_arg, const CentralityFlags& flags,
               const std::string& out_path) {
    CentralityColumns columns;
    const auto opt = resolve_centrality_options(flags, columns);

    std::vector<YearSnapshot> snapshots;
    for (const auto& path : net_paths) {
        YearSnapshot snap;
        snap.net = load_network(path);
        snap.year = snap.net.year_label();
        snap.report = compute_centrality(snap.net, opt);
        snapshots.push_back(std::move(snap));
    }
    std::sort(snapshots.begin(), snapshots.end(),
              [](const auto& a, const auto& b) { return a.year < b.year; });

    auto levels_in = open_input(levels_path);
    const auto levels = load_danish_levels(levels_in, levels_path);

    SeriesFile file;
    for (const auto& snap : snapshots)
        if (const auto medians = medians_by_level(snap, levels))
            file.medians[snap.year] = *medians;
        else
            std::cerr << "journalnet: year " << snap.year
                      << ": a level group is empty, no medians recorded\n";

    std::set<std::string> wanted;
    const bool all = journals_arg.empty() ||
                     (journals_arg.size() == 1 && journals_arg[0] == "all");
    if (all) {
        for (const auto& snap : snapshots)
            wanted.insert(snap.net.names().begin(), snap.net.names().end());
    } else {
        wanted.insert(journals_arg.begin(), journals_arg.end());
    }
    for (const auto& journal : wanted)
        file.series.push_back(evolution_series(snapshots, journal));

    write_output(out_path, write_series_json(file));
    return kExitOk;
}

int run_recommend(const std::string& series_path, const std::string& levels_path,
                  const std::string& policy_arg, std::optional<double> decline_delta,
                  unsigned threads, const std::string& out_path) {
    auto series_in = open_input(series_path);
    const auto file = read_series_json(series_in, series_path);
    auto levels_in = open_input(levels_path);
    const auto levels = load_danish_levels(levels_in, levels_path);

    RecommendPolicy policy;
    if (policy_arg != "default") {
        auto policy_in = open_input(policy_arg);
        try {
            const auto doc = nlohmann::json::parse(policy_in);
            policy.decline_delta = doc.value("decline_delta", policy.decline_delta);
            policy.promote_persistence =
                doc.value("promote_persistence", policy.promote_persistence);
        } catch (const nlohmann::json::exception& e) {
            throw DataError(policy_arg + ": " + e.what());
        }
    }
    if (decline_delta) policy.decline_delta = *decline_delta;

    const auto recs = recommend_all(file.series, levels, file.medians, policy, threads);
    write_output(out_path, write_recommendations_json(recs));
    return kExitOk;
}

int run_export(const std::string& format, const std::string& net_path,
               const std::string& out_path) {
    const auto net = load_network(net_path);
    if (format == "pajek") {
        write_output(out_path, write_pajek(net));
    } else if (format == "json") {
        write_output(out_path, write_network_json(net));
    } else {
        throw CLI::ValidationError("export", "format must be pajek or json");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "journal co-citation network analysis: ingest records, build thresholded networks, "
        "score centrality, classify journals, audit classifications"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Parse a records TSV into a normalized store");
    std::string in_path, aliases_path, out_path = "-";
    FormatConfig fmt;
    ingest->add_option("--input", in_path, "Records TSV with a header row")->required();
    ingest->add_option("--aliases", aliases_path, "Alias CSV (alias,canonical)");
    ingest->add_option("--out", out_path, "Output path or - for stdout")->capture_default_str();
    ingest->add_option("--col-id", fmt.id_col, "Record id column")->capture_default_str();
    ingest->add_option("--col-year", fmt.year_col, "Year column")->capture_default_str();
    ingest->add_option("--col-source", fmt.source_col, "Source journal column")
        ->capture_default_str();
    ingest->add_option("--col-cited", fmt.cited_col, "Cited references column")
        ->capture_default_str();

    // build
    auto* build = app.add_subcommand("build", "Build the thresholded co-citation network");
    std::string b_in, b_aliases, b_out = "-";
    std::int64_t threshold = 111;
    std::size_t top = 151;
    std::optional<int> year;
    FormatConfig b_fmt;
    build->add_option("--input", b_in, "Records TSV")->required();
    build->add_option("--aliases", b_aliases, "Alias CSV");
    build->add_option("--threshold", threshold, "Minimum citations per journal")
        ->capture_default_str();
    build->add_option("--top", top, "Node cap after thresholding")->capture_default_str();
    build->add_option("--year", year, "Network year label (default: modal record year)");
    build->add_option("--out", b_out, "Network JSON output")->capture_default_str();
    build->add_option("--col-id", b_fmt.id_col, "Record id column")->capture_default_str();
    build->add_option("--col-year", b_fmt.year_col, "Year column")->capture_default_str();
    build->add_option("--col-source", b_fmt.source_col, "Source journal column")
        ->capture_default_str();
    build->add_option("--col-cited", b_fmt.cited_col, "Cited references column")
        ->capture_default_str();

    // centrality
    auto* centrality = app.add_subcommand("centrality", "Score nodes and bin eigenquartiles");
    std::string c_net, c_out = "-", c_corr;
    CentralityFlags c_flags;
    centrality->add_option("--net", c_net, "Network JSON or Pajek .net file")->required();
    centrality->add_option("--out", c_out, "Scores CSV output")->capture_default_str();
    centrality->add_option("--correlations", c_corr, "Also write measure correlations CSV");
    add_centrality_flags(centrality, c_flags);

    // classify
    auto* classify = app.add_subcommand("classify", "Apply classification rules");
    std::string cl_dossiers, cl_levels, cl_scheme, cl_production, cl_out = "-";
    classify->add_option("--scheme", cl_scheme, "circ-ss | circ-hum | danish")->required();
    classify->add_option("--dossiers", cl_dossiers, "Dossier CSV (CIRC schemes)");
    classify->add_option("--levels", cl_levels, "Danish levels CSV (journal,level)");
    classify->add_option("--production", cl_production,
                         "World production CSV (journal,articles) for the level-2 20% check");
    classify->add_option("--out", cl_out, "Labels CSV output")->capture_default_str();

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "Cross-tab, boxplot, and composition reports");
    audit_cmd->require_subcommand(1);
    std::string a_labels, a_scores, a_fields, a_scheme = "auto", a_out = "-";
    std::string a_measure = "eigenvector";
    auto* crosstab_cmd = audit_cmd->add_subcommand("crosstab", "Classes vs. eigenquartiles");
    crosstab_cmd->add_option("--labels", a_labels, "Labels CSV (journal,label|level)")
        ->required();
    crosstab_cmd->add_option("--scores", a_scores, "Centrality scores CSV")->required();
    crosstab_cmd->add_option("--scheme", a_scheme, "danish | circ | auto")
        ->capture_default_str();
    crosstab_cmd->add_option("--out", a_out, "Cross-tab CSV output")->capture_default_str();
    auto* boxplot_cmd = audit_cmd->add_subcommand("boxplot", "Per-class five-number summaries");
    boxplot_cmd->add_option("--labels", a_labels, "Labels CSV")->required();
    boxplot_cmd->add_option("--scores", a_scores, "Centrality scores CSV")->required();
    boxplot_cmd->add_option("--measure", a_measure, "Score column to summarize")
        ->capture_default_str();
    boxplot_cmd->add_option("--scheme", a_scheme, "danish | circ | auto")
        ->capture_default_str();
    boxplot_cmd->add_option("--out", a_out, "Boxplot CSV output")->capture_default_str();
    auto* composition_cmd =
        audit_cmd->add_subcommand("composition", "(field, class) share breakdown");
    composition_cmd->add_option("--labels", a_labels, "Labels CSV")->required();
    composition_cmd->add_option("--fields", a_fields, "Field labels CSV (journal,field)")
        ->required();
    composition_cmd->add_option("--scheme", a_scheme, "danish | circ | auto")
        ->capture_default_str();
    composition_cmd->add_option("--out", a_out, "Composition CSV output")
        ->capture_default_str();

    // evolve
    auto* evolve = app.add_subcommand("evolve", "Multi-year centrality series per journal");
    std::vector<std::string> e_nets, e_journals;
    std::string e_levels, e_out = "-";
    CentralityFlags e_flags;
    evolve->add_option("--nets", e_nets, "Year-labeled network files (JSON or .net)")
        ->required()
        ->expected(-1);
    evolve->add_option("--levels", e_levels, "Danish levels CSV for group medians")->required();
    evolve->add_option("--journals", e_journals, "Journals to track, or 'all'")->delimiter(',');
    evolve->add_option("--out", e_out, "Series JSON output")->capture_default_str();
    add_centrality_flags(evolve, e_flags);

    // recommend
    auto* recommend_cmd =
        app.add_subcommand("recommend", "Reclassification actions from evolution series");
    std::string r_series, r_levels, r_policy = "default", r_out = "-";
    std::optional<double> r_decline;
    unsigned r_threads = 1;
    recommend_cmd->add_option("--series", r_series, "Series JSON from evolve")->required();
    recommend_cmd->add_option("--levels", r_levels, "Danish levels CSV")->required();
    recommend_cmd->add_option("--policy", r_policy, "default or a policy JSON file")
        ->capture_default_str();
    recommend_cmd->add_option("--decline-delta", r_decline,
                              "Override the removal decline threshold");
    recommend_cmd->add_option("--threads", r_threads, "Worker threads")->capture_default_str();
    recommend_cmd->add_option("--out", r_out, "Recommendations JSON output")
        ->capture_default_str();

    // export
    auto* export_cmd = app.add_subcommand("export", "Convert a network between formats");
    std::string x_format, x_net, x_out = "-";
    export_cmd->add_option("format", x_format, "pajek | json")->required();
    export_cmd->add_option("--net", x_net, "Network JSON or Pajek .net file")->required();
    export_cmd->add_option("--out", x_out, "Output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ingest) return run_ingest(in_path, aliases_path, out_path, fmt);
        if (*build) return run_build(b_in, b_aliases, threshold, top, year, b_out, b_fmt);
        if (*centrality) return run_centrality(c_net, c_out, c_flags, c_corr);
        if (*classify) {
            if (cl_scheme != "circ-ss" && cl_scheme != "circ-hum" && cl_scheme != "danish") {
                std::cerr << "journalnet: --scheme must be circ-ss, circ-hum, or danish\n";
                return kExitUsage;
            }
            return run_classify(cl_dossiers, cl_levels, cl_scheme, cl_production, cl_out);
        }
        if (*crosstab_cmd) return run_audit_crosstab(a_labels, a_scores, a_scheme, a_out);
        if (*boxplot_cmd)
            return run_audit_boxplot(a_labels, a_scores, a_measure, a_scheme, a_out);
        if (*composition_cmd)
            return run_audit_composition(a_labels, a_fields, a_scheme, a_out);
        if (*evolve) return run_evolve(e_nets, e_levels, e_journals, e_flags, e_out);
        if (*recommend_cmd)
            return run_recommend(r_series, r_levels, r_policy, r_decline, r_threads, r_out);
        if (*export_cmd) return run_export(x_format, x_net, x_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "journalnet: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "journalnet: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "journalnet: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
