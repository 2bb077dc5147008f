#include "journalnet/audit.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "journalnet/errors.hpp"
#include "journalnet/parallel.hpp"
#include "journalnet/stats.hpp"

namespace journalnet {

CrossTab CrossTab::from_counts(std::vector<std::string> row_labels,
                               std::vector<std::vector<std::int64_t>> counts) {
    if (row_labels.size() != counts.size())
        throw DataError("cross-tab label/count row mismatch");
    CrossTab tab;
    tab.row_labels = std::move(row_labels);
    tab.col_labels = {"Q1", "Q2", "Q3", "Q4"};
    tab.counts = std::move(counts);
    tab.row_totals.assign(tab.counts.size(), 0);
    tab.col_totals.assign(4, 0);
    for (std::size_t r = 0; r < tab.counts.size(); ++r) {
        if (tab.counts[r].size() != 4)
            throw DataError("cross-tab row \"" + tab.row_labels[r] + "\" needs 4 quartile cells");
        for (std::size_t c = 0; c < 4; ++c) {
            if (tab.counts[r][c] < 0) throw DataError("negative cross-tab count");
            tab.row_totals[r] += tab.counts[r][c];
            tab.col_totals[c] += tab.counts[r][c];
            tab.grand_total += tab.counts[r][c];
        }
    }
    return tab;
}

double CrossTab::row_share(std::size_t row, std::size_t col) const {
    if (row_totals[row] == 0) return 0.0;
    return static_cast<double>(counts[row][col]) / static_cast<double>(row_totals[row]);
}

double CrossTab::column_share(std::span<const std::size_t> rows, std::size_t col) const {
    if (col_totals[col] == 0) return 0.0;
    std::int64_t sum = 0;
    for (const auto r : rows) sum += counts[r][col];
    return static_cast<double>(sum) / static_cast<double>(col_totals[col]);
}

std::size_t CrossTab::row_index(std::string_view label) const {
    for (std::size_t r = 0; r < row_labels.size(); ++r)
        if (row_labels[r] == label) return r;
    throw DataError("cross-tab has no row \"" + std::string(label) + "\"");
}

CrossTab crosstab(const std::vector<std::string>& journals, const QuartileAssignment& bins,
                  const std::map<std::string, std::string>& classes,
                  const std::vector<std::string>& row_order, const std::string& default_label) {
    if (journals.size() != bins.bins.size())
        throw DataError("journal list and quartile bins differ in length");

    std::map<std::string, std::size_t> row_of;
    for (std::size_t r = 0; r < row_order.size(); ++r) row_of[row_order[r]] = r;
    if (!row_of.contains(default_label))
        throw DataError("row order lacks the default label \"" + default_label + "\"");

    std::vector<std::vector<std::int64_t>> counts(row_order.size(),
                                                  std::vector<std::int64_t>(4, 0));
    for (std::size_t i = 0; i < journals.size(); ++i) {
        const auto it = classes.find(journals[i]);
        const std::string& label = it == classes.end() ? default_label : it->second;
        const auto row_it = row_of.find(label);
        if (row_it == row_of.end())
            throw DataError("class label \"" + label + "\" missing from the row order");
        counts[row_it->second][static_cast<std::size_t>(bins.bins[i])] += 1;
    }
    return CrossTab::from_counts(row_order, std::move(counts));
}

std::string_view to_string(BoxplotSummary::Skew s) {
    switch (s) {
        case BoxplotSummary::Skew::Left: return "left";
        case BoxplotSummary::Skew::Right: return "right";
        case BoxplotSummary::Skew::None: return "none";
    }
    return "?";
}

namespace {

BoxplotSummary summarize_group(const std::string& label, std::vector<double> values) {
    std::sort(values.begin(), values.end());
    BoxplotSummary box;
    box.label = label;
    box.count = values.size();
    box.min = values.front();
    box.max = values.back();
    box.q1 = percentile_sorted(values, 0.25);
    box.median = percentile_sorted(values, 0.50);
    box.q3 = percentile_sorted(values, 0.75);

    const double iqr = box.q3 - box.q1;
    const double fence_lo = box.q1 - 1.5 * iqr;
    const double fence_hi = box.q3 + 1.5 * iqr;
    box.whisker_lo = box.max;
    box.whisker_hi = box.min;
    for (const double v : values) {
        if (v >= fence_lo) {
            box.whisker_lo = v;  // first (smallest) value inside the fence
            break;
        }
    }
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
        if (*it <= fence_hi) {
            box.whisker_hi = *it;
            break;
        }
    }
    for (const double v : values)
        if (v < fence_lo || v > fence_hi) box.outliers.push_back(v);

    const double below = box.median - box.q1;
    const double above = box.q3 - box.median;
    if (iqr > 0.0 && below < above - 0.1 * iqr)
        box.skew = BoxplotSummary::Skew::Left;
    else if (iqr > 0.0 && above < below - 0.1 * iqr)
        box.skew = BoxplotSummary::Skew::Right;
    else
        box.skew = BoxplotSummary::Skew::None;
    return box;
}

// Orders group labels by the caller's class order, then alphabetically.
std::vector<std::string> ordered_labels(const std::map<std::string, std::vector<double>>& groups,
                                        const std::vector<std::string>& class_order) {
    std::vector<std::string> out;
    for (const auto& label : class_order)
        if (groups.contains(label)) out.push_back(label);
    for (const auto& [label, values] : groups) {
        (void)values;
        if (std::find(class_order.begin(), class_order.end(), label) == class_order.end())
            out.push_back(label);
    }
    return out;
}

}  // namespace

std::vector<BoxplotSummary> boxplot_summary(const std::map<std::string, double>& scores,
                                            const std::map<std::string, std::string>& classes,
                                            const std::vector<std::string>& class_order,
                                            const std::string& default_label) {
    std::map<std::string, std::vector<double>> groups;
    for (const auto& [journal, score] : scores) {
        const auto it = classes.find(journal);
        const std::string& label = it == classes.end() ? default_label : it->second;
        groups[label].push_back(score);
    }
    if (groups.empty()) throw EmptyGroup("no journals to summarize");

    std::vector<BoxplotSummary> out;
    for (const auto& label : ordered_labels(groups, class_order))
        out.push_back(summarize_group(label, groups.at(label)));
    return out;
}

Composition composition(const std::vector<std::string>& journals,
                        const std::map<std::string, std::string>& classes,
                        const std::map<std::string, std::string>& fields,
                        const std::vector<std::string>& class_order,
                        const std::string& default_class) {
    Composition comp;
    comp.total = journals.size();
    if (comp.total == 0) return comp;

    std::map<std::pair<std::string, std::string>, std::size_t> cell_counts;  // (class, field)
    std::map<std::string, std::size_t> class_counts;
    for (const auto& journal : journals) {
        const auto cit = classes.find(journal);
        const std::string& cls = cit == classes.end() ? default_class : cit->second;
        const auto fit = fields.find(journal);
        const std::string field = fit == fields.end() ? "unknown" : fit->second;
        ++cell_counts[{cls, field}];
        ++class_counts[cls];
    }

    auto class_rank = [&](const std::string& cls) {
        const auto it = std::find(class_order.begin(), class_order.end(), cls);
        return it == class_order.end() ? class_order.size() : static_cast<std::size_t>(
                                                                  it - class_order.begin());
    };
    std::vector<std::pair<std::string, std::string>> keys;
    keys.reserve(cell_counts.size());
    for (const auto& [key, count] : cell_counts) {
        (void)count;
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        const auto ra = class_rank(a.first), rb = class_rank(b.first);
        if (ra != rb) return ra < rb;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });

    const double denom = static_cast<double>(comp.total);
    for (const auto& [cls, field] : keys) {
        const std::size_t count = cell_counts.at({cls, field});
        comp.cells.push_back(
            {field, cls, count, 100.0 * static_cast<double>(count) / denom});
    }
    std::vector<std::string> class_keys;
    for (const auto& [cls, count] : class_counts) {
        (void)count;
        class_keys.push_back(cls);
    }
    std::sort(class_keys.begin(), class_keys.end(), [&](const auto& a, const auto& b) {
        const auto ra = class_rank(a), rb = class_rank(b);
        if (ra != rb) return ra < rb;
        return a < b;
    });
    for (const auto& cls : class_keys) {
        const std::size_t count = class_counts.at(cls);
        comp.class_margins.push_back(
            {"(all)", cls, count, 100.0 * static_cast<double>(count) / denom});
    }
    return comp;
}

EvolutionSeries evolution_series(std::span<const YearSnapshot> snapshots,
                                 std::string_view journal) {
    if (snapshots.empty()) throw DataError("evolution needs at least one snapshot");
    for (std::size_t i = 1; i < snapshots.size(); ++i)
        if (snapshots[i].year <= snapshots[i - 1].year)
            throw DataError("snapshots must be strictly year-ascending");

    EvolutionSeries series;
    series.journal = std::string(journal);
    bool found_anywhere = false;
    for (const auto& snap : snapshots) {
        EvolutionPoint point;
        point.year = snap.year;
        if (const auto idx = snap.net.find(journal)) {
            point.present = true;
            point.eigenvector = snap.report.eigenvector.at(*idx);
            point.betweenness = snap.report.betweenness.at(*idx);
            found_anywhere = true;
        }
        series.points.push_back(point);
    }
    if (!found_anywhere)
        throw UnknownJournal("journal \"" + series.journal + "\" appears in no snapshot");
    return series;
}

std::optional<GroupMedians> medians_by_level(const YearSnapshot& snap,
                                             const std::map<std::string, DanishLevel>& levels) {
    std::vector<double> level1, level2;
    for (std::size_t v = 0; v < snap.net.size(); ++v) {
        const auto it = levels.find(snap.net.names()[v]);
        if (it == levels.end()) continue;
        if (it->second == DanishLevel::Level1)
            level1.push_back(snap.report.eigenvector.at(v));
        else if (it->second == DanishLevel::Level2)
            level2.push_back(snap.report.eigenvector.at(v));
    }
    if (level1.empty() || level2.empty()) return std::nullopt;
    std::sort(level1.begin(), level1.end());
    std::sort(level2.begin(), level2.end());
    return GroupMedians{median_sorted(level1), median_sorted(level2)};
}

std::string_view to_string(Action a) {
    switch (a) {
        case Action::IntroduceLevel1: return "IntroduceLevel1";
        case Action::Stay: return "Stay";
        case Action::PromoteLevel2: return "PromoteLevel2";
        case Action::Remove: return "Remove";
    }
    return "?";
}

Recommendation recommend(const EvolutionSeries& series, DanishLevel current,
                         const std::map<int, GroupMedians>& medians,
                         const RecommendPolicy& policy) {
    if (series.points.empty()) throw DataError("empty evolution series");
    const auto& latest = series.points.back();
    const auto med_it = medians.find(latest.year);
    if (med_it == medians.end())
        throw MissingMedians("no group medians for year " + std::to_string(latest.year));
    const GroupMedians& latest_medians = med_it->second;

    const EvolutionPoint* first_present = nullptr;
    const EvolutionPoint* last_present = nullptr;
    for (const auto& p : series.points) {
        if (!p.present) continue;
        if (!first_present) first_present = &p;
        last_present = &p;
    }

    Recommendation rec;
    rec.journal = series.journal;
    rec.evidence.present_latest = latest.present;
    rec.evidence.level1_median = latest_medians.level1_median;
    rec.evidence.level2_median = latest_medians.level2_median;
    rec.evidence.latest_eigenvector = last_present ? last_present->eigenvector : 0.0;
    rec.evidence.delta_over_window =
        last_present ? last_present->eigenvector - first_present->eigenvector : 0.0;

    // 1. Remove: gone from the latest network, or in decline below the
    //    level-1 median.
    const bool declined = rec.evidence.delta_over_window < -policy.decline_delta;
    const bool below_level1 = rec.evidence.latest_eigenvector < latest_medians.level1_median;
    if (!latest.present || (declined && below_level1)) {
        rec.action = Action::Remove;
        return rec;
    }

    // 2. PromoteLevel2: level 1 now, and above the level-2 median in each of
    //    the last promote_persistence snapshots (medians required per year).
    if (current == DanishLevel::Level1) {
        const int need = std::max(policy.promote_persistence, 1);
        int cleared = 0;
        for (auto it = series.points.rbegin(); it != series.points.rend() && cleared < need;
             ++it) {
            const auto year_medians = medians.find(it->year);
            if (!it->present || year_medians == medians.end() ||
                it->eigenvector < year_medians->second.level2_median)
                break;
            ++cleared;
        }
        if (cleared >= need) {
            rec.action = Action::PromoteLevel2;
            return rec;
        }
    }

    // 3. IntroduceLevel1: unlisted but at or above the level-1 median.
    if (current == DanishLevel::NotListed &&
        rec.evidence.latest_eigenvector >= latest_medians.level1_median) {
        rec.action = Action::IntroduceLevel1;
        return rec;
    }

    rec.action = Action::Stay;
    return rec;
}

std::vector<Recommendation> recommend_all(std::span<const EvolutionSeries> series,
                                          const std::map<std::string, DanishLevel>& levels,
                                          const std::map<int, GroupMedians>& medians,
                                          const RecommendPolicy& policy, unsigned threads) {
    std::vector<std::exception_ptr> errors(series.size());
    auto out = parallel_map<Recommendation>(series.size(), threads, [&](std::size_t i) {
        try {
            const auto it = levels.find(series[i].journal);
            const DanishLevel current = it == levels.end() ? DanishLevel::NotListed : it->second;
            return recommend(series[i], current, medians, policy);
        } catch (...) {
            errors[i] = std::current_exception();
            return Recommendation{};
        }
    });
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace journalnet
