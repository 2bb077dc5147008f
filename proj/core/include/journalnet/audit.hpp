#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "journalnet/centrality.hpp"
#include "journalnet/classify.hpp"
#include "journalnet/network.hpp"

namespace journalnet {

// Classification classes crossed with centrality quartiles.
struct CrossTab {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;  // Q1..Q4
    std::vector<std::vector<std::int64_t>> counts;
    std::vector<std::int64_t> row_totals;
    std::vector<std::int64_t> col_totals;
    std::int64_t grand_total = 0;

    // Wraps an existing counts matrix (e.g. published table figures) and
    // derives the totals.
    static CrossTab from_counts(std::vector<std::string> row_labels,
                                std::vector<std::vector<std::int64_t>> counts);

    double row_share(std::size_t row, std::size_t col) const;
    // Share of column `col` falling into the given rows.
    double column_share(std::span<const std::size_t> rows, std::size_t col) const;

    std::size_t row_index(std::string_view label) const;  // throws DataError
};

/// Cross-tabulates class labels against quartile bins. `journals` and `bins`
/// are parallel (network node order); journals absent from `classes` fall
/// into `default_label`. Every label must appear in `row_order`.
CrossTab crosstab(const std::vector<std::string>& journals, const QuartileAssignment& bins,
                  const std::map<std::string, std::string>& classes,
                  const std::vector<std::string>& row_order, const std::string& default_label);

struct BoxplotSummary {
    enum class Skew { Left, Right, None };

    std::string label;
    std::size_t count = 0;
    double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
    double whisker_lo = 0.0;  // most extreme points within 1.5*IQR of the box
    double whisker_hi = 0.0;
    std::vector<double> outliers;  // ascending, strictly outside the whiskers
    Skew skew = Skew::None;
};

std::string_view to_string(BoxplotSummary::Skew s);

/// One five-number summary per class group. Quartiles interpolate linearly;
/// skew compares the median position inside the box with a 10%-of-IQR
/// tolerance. Journals without a class fall into `default_label`; groups are
/// ordered by `class_order`, then alphabetically for labels not listed there.
/// Throws EmptyGroup when there is nothing to summarize.
std::vector<BoxplotSummary> boxplot_summary(const std::map<std::string, double>& scores,
                                            const std::map<std::string, std::string>& classes,
                                            const std::vector<std::string>& class_order,
                                            const std::string& default_label);

struct CompositionCell {
    std::string field;
    std::string cls;
    std::size_t count = 0;
    double share_pct = 0.0;  // of the whole journal set
};

struct Composition {
    std::vector<CompositionCell> cells;          // per (field, class)
    std::vector<CompositionCell> class_margins;  // field = "(all)"
    std::size_t total = 0;
};

/// Percentage composition of the journal set by (field, class). Journals
/// without a field label count under "unknown".
Composition composition(const std::vector<std::string>& journals,
                        const std::map<std::string, std::string>& classes,
                        const std::map<std::string, std::string>& fields,
                        const std::vector<std::string>& class_order,
                        const std::string& default_class);

// One year of the multi-year window.
struct YearSnapshot {
    int year = 0;
    CoCitationNetwork net;
    CentralityReport report;
};

struct EvolutionPoint {
    int year = 0;
    bool present = false;
    double eigenvector = 0.0;  // valid only when present
    double betweenness = 0.0;
};

struct EvolutionSeries {
    std::string journal;
    std::vector<EvolutionPoint> points;  // one per snapshot, years ascending
};

/// Per-journal trajectory across snapshots (which must be strictly
/// year-ascending). Throws UnknownJournal when the journal appears nowhere.
EvolutionSeries evolution_series(std::span<const YearSnapshot> snapshots,
                                 std::string_view journal);

// Median eigenvector score per authority level for one snapshot year.
struct GroupMedians {
    double level1_median = 0.0;
    double level2_median = 0.0;
};

/// Group medians for one snapshot; absent when either level group is empty.
std::optional<GroupMedians> medians_by_level(const YearSnapshot& snap,
                                             const std::map<std::string, DanishLevel>& levels);

enum class Action { IntroduceLevel1, Stay, PromoteLevel2, Remove };

std::string_view to_string(Action a);

struct Evidence {
    double latest_eigenvector = 0.0;  // at the latest present snapshot
    double level2_median = 0.0;       // latest year
    double level1_median = 0.0;
    double delta_over_window = 0.0;  // last present minus first present
    bool present_latest = false;
};

struct Recommendation {
    std::string journal;
    Action action = Action::Stay;
    Evidence evidence;
};

struct RecommendPolicy {
    double decline_delta = 0.005;  // absolute eigenvector units
    int promote_persistence = 2;   // consecutive snapshots above the level-2 median
};

/// Deterministic rule cascade:
///   1. Remove        absent from the latest network, or declined by more
///                    than decline_delta over the window while below the
///                    level-1 median
///   2. PromoteLevel2 currently level 1 and at/above the level-2 median in
///                    the last promote_persistence snapshots
///   3. IntroduceLevel1  not listed and at/above the level-1 median
///   4. Stay
/// Throws MissingMedians when the latest year has no group medians.
Recommendation recommend(const EvolutionSeries& series, DanishLevel current,
                         const std::map<int, GroupMedians>& medians,
                         const RecommendPolicy& policy = {});

/// recommend() over many series; output parallels the input order. Runs in
/// parallel with per-journal slots, so results match any thread count.
std::vector<Recommendation> recommend_all(std::span<const EvolutionSeries> series,
                                          const std::map<std::string, DanishLevel>& levels,
                                          const std::map<int, GroupMedians>& medians,
                                          const RecommendPolicy& policy = {}, unsigned threads = 1);

}  // namespace journalnet
