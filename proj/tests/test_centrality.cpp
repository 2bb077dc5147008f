#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "journalnet/centrality.hpp"
#include "journalnet/errors.hpp"
#include "journalnet/stats.hpp"
#include "support/test_graphs.hpp"

using namespace journalnet;
using testsupport::EdgeSpec;
using testsupport::net_of;

namespace {

CoCitationNetwork star(std::size_t leaves) {
    std::vector<std::string> names{"CENTER"};
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < leaves; ++i) {
        names.push_back("LEAF" + std::to_string(i));
        edges.push_back({"CENTER", names.back(), 1.0});
    }
    return net_of(names, edges);
}

CoCitationNetwork complete(std::size_t n, double w = 1.0) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(testsupport::node_name(i));
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({names[i], names[j], w});
    return net_of(names, edges);
}

}  // namespace

TEST_CASE("degree centrality, binary and weighted") {
    const auto s = star(4);
    const auto deg = degree_centrality(s, WeightMode::Binary);
    CHECK(deg[*s.find("CENTER")] == 4.0);
    for (int i = 0; i < 4; ++i) CHECK(deg[*s.find("LEAF" + std::to_string(i))] == 1.0);

    const auto iso = net_of({"ONLY"}, {});
    CHECK(degree_centrality(iso, WeightMode::Binary)[0] == 0.0);

    // triangle with weights 2, 3, 5: weighted degrees 5, 7, 8
    const auto tri = net_of({"A", "B", "C"},
                            {{"A", "B", 2.0}, {"A", "C", 3.0}, {"B", "C", 5.0}});
    const auto wdeg = degree_centrality(tri, WeightMode::Weighted);
    CHECK(wdeg[*tri.find("A")] == 5.0);
    CHECK(wdeg[*tri.find("B")] == 7.0);
    CHECK(wdeg[*tri.find("C")] == 8.0);
}

TEST_CASE("closeness on the 5-node star") {
    // leaf distances: 1 to the center, 2 to each other leaf -> 1+2+2+2 = 7
    const auto s = star(4);
    const auto scores = closeness_centrality(s);
    CHECK(scores[*s.find("CENTER")] == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < 4; ++i)
        CHECK(scores[*s.find("LEAF" + std::to_string(i))] ==
              doctest::Approx(4.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("closeness on complete graphs and split components") {
    const auto k6 = complete(6);
    for (const double c : closeness_centrality(k6))
        CHECK(c == doctest::Approx(1.0).epsilon(1e-12));

    // pair + singleton: the singleton scores 0, the pair is scaled by
    // (m-1)/(n-1) = 1/2
    const auto split = net_of({"A", "B", "LONER"}, {{"A", "B", 1.0}});
    const auto scores = closeness_centrality(split);
    CHECK(scores[*split.find("LONER")] == 0.0);
    CHECK(scores[*split.find("A")] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("betweenness on a path, a star, and a complete graph") {
    const auto path = net_of({"A", "B", "C"}, {{"A", "B", 1.0}, {"B", "C", 1.0}});
    const auto bc = betweenness_centrality(path);
    CHECK(bc[*path.find("B")] == doctest::Approx(1.0));
    CHECK(bc[*path.find("A")] == 0.0);
    CHECK(bc[*path.find("C")] == 0.0);

    const auto s = star(4);
    CHECK(betweenness_centrality(s)[*s.find("CENTER")] == doctest::Approx(6.0));

    for (const double b : betweenness_centrality(complete(5))) CHECK(b == 0.0);
}

TEST_CASE("betweenness normalization divides by the pair count") {
    const auto s = star(4);
    const auto bc = betweenness_centrality(s, PathMode::Binary, true);
    CHECK(bc[*s.find("CENTER")] == doctest::Approx(1.0));  // 6 / C(4,2)
}

TEST_CASE("degree-1 nodes of a connected graph have zero betweenness") {
    std::mt19937 rng(314);
    for (int trial = 0; trial < 20; ++trial) {
        const auto net = testsupport::random_connected_graph(rng, 9, 0.2);
        const auto deg = degree_centrality(net, WeightMode::Binary);
        const auto bc = betweenness_centrality(net);
        for (std::size_t v = 0; v < net.size(); ++v)
            if (deg[v] == 1.0) CHECK(bc[v] == 0.0);
    }
}

TEST_CASE("betweenness matches the brute-force oracle on small random graphs") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        const auto net = testsupport::random_connected_graph(rng, 8, 0.25);
        const auto expected = testsupport::brute_betweenness(net, false);
        const auto actual = betweenness_centrality(net);
        for (std::size_t v = 0; v < net.size(); ++v)
            CHECK(actual[v] == doctest::Approx(expected[v]).epsilon(1e-9));
    }
}

TEST_CASE("inverse-weight betweenness matches the oracle with exact lengths") {
    // Power-of-two weights make 1/w sums exact, so distance equality in the
    // oracle is exact too.
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 25; ++trial) {
        const auto net = testsupport::random_connected_graph(rng, 8, 0.3, {1.0, 2.0, 4.0, 8.0});
        const auto expected = testsupport::brute_betweenness(net, true);
        const auto actual = betweenness_centrality(net, PathMode::InverseWeight);
        for (std::size_t v = 0; v < net.size(); ++v)
            CHECK(actual[v] == doctest::Approx(expected[v]).epsilon(1e-9));
    }
}

TEST_CASE("betweenness is identical across thread counts") {
    std::mt19937 rng(555);
    const auto net = testsupport::random_connected_graph(rng, 40, 0.1, {1.0, 2.0, 3.0});
    const auto base = betweenness_centrality(net, PathMode::Binary, false, 1);
    for (const unsigned threads : {2u, 3u, 8u}) {
        const auto other = betweenness_centrality(net, PathMode::Binary, false, threads);
        CHECK(other == base);  // bit-identical, not approximately equal
    }
}

TEST_CASE("eigenvector centrality on K5 is uniform") {
    const auto result = eigenvector_centrality(complete(5), WeightMode::Binary, 1e-10, 1000);
    for (const double v : result.scores)
        CHECK(v == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(result.eigenvalue == doctest::Approx(4.0));
    CHECK_FALSE(result.disconnected);
}

TEST_CASE("eigenvector centrality on the 4-node star matches the analytic solution") {
    // Eigen pair worked out by hand: lambda = sqrt(3), center = 1/sqrt(2),
    // each leaf = 1/sqrt(6).
    const auto s = star(3);
    const auto result = eigenvector_centrality(s, WeightMode::Binary, 1e-12, 10000);
    CHECK(result.scores[*s.find("CENTER")] ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    for (int i = 0; i < 3; ++i)
        CHECK(result.scores[*s.find("LEAF" + std::to_string(i))] ==
              doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-9));
    CHECK(result.eigenvalue == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("eigenvector output is unit-norm, nonnegative, and within tolerance") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        const auto net =
            testsupport::random_connected_graph(rng, 9, 0.25, {1.0, 2.0, 3.0, 7.0});
        const double tol = 1e-10;
        const auto result = eigenvector_centrality(net, WeightMode::Weighted, tol, 20000);
        double norm = 0.0;
        for (const double v : result.scores) {
            CHECK(v >= 0.0);
            norm += v * v;
        }
        CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(result.residual <= tol * result.eigenvalue);
    }
}

TEST_CASE("uniform edge-weight rescaling leaves eigenvector scores unchanged") {
    std::mt19937 rng(808);
    const auto net = testsupport::random_connected_graph(rng, 10, 0.3, {1.0, 2.0, 5.0});
    std::vector<EdgeSpec> scaled_edges;
    for (const auto& [key, w] : net.edges())
        scaled_edges.push_back({net.names()[key.first], net.names()[key.second], 7.0 * w});
    const auto scaled = net_of(net.names(), scaled_edges);

    const auto base = eigenvector_centrality(net, WeightMode::Weighted, 1e-10, 20000);
    const auto other = eigenvector_centrality(scaled, WeightMode::Weighted, 1e-10, 20000);
    CHECK(other.eigenvalue == doctest::Approx(7.0 * base.eigenvalue).epsilon(1e-9));
    for (std::size_t v = 0; v < net.size(); ++v)
        CHECK(std::abs(other.scores[v] - base.scores[v]) <= 1e-12);
}

TEST_CASE("eigenvector flags disconnected graphs and favors the dominant component") {
    const auto net = net_of({"A", "B", "C", "X", "Y"},
                            {{"A", "B", 1.0}, {"A", "C", 1.0}, {"B", "C", 1.0}, {"X", "Y", 1.0}});
    const auto result = eigenvector_centrality(net, WeightMode::Binary, 1e-10, 10000);
    CHECK(result.disconnected);
    // the triangle (eigenvalue 2) dominates the pair (eigenvalue 1)
    CHECK(result.scores[*net.find("A")] > 0.1);
    CHECK(result.scores[*net.find("X")] < 1e-6);
}

TEST_CASE("eigenvector centrality error paths") {
    CHECK_THROWS_AS(eigenvector_centrality(CoCitationNetwork{}, WeightMode::Binary, 1e-10, 100),
                    DataError);
    std::mt19937 rng(99);
    const auto net = testsupport::random_connected_graph(rng, 8, 0.2);
    CHECK_THROWS_AS(eigenvector_centrality(net, WeightMode::Binary, 1e-16, 2), NoConvergence);
}

TEST_CASE("relabeling nodes permutes all centrality scores identically") {
    std::mt19937 rng(4242);
    const auto net = testsupport::random_connected_graph(rng, 9, 0.25, {1.0, 2.0});
    // prefixing a letter reorders the name-sorted node list
    std::vector<std::string> renamed;
    for (const auto& name : net.names()) {
        std::string copy = name;
        copy[0] = static_cast<char>('Z' - (copy.back() - '0'));
        renamed.push_back(copy);
    }
    std::vector<EdgeSpec> edges;
    for (const auto& [key, w] : net.edges())
        edges.push_back({renamed[key.first], renamed[key.second], w});
    const auto permuted = net_of(renamed, edges);

    const auto report_a = compute_centrality(net);
    const auto report_b = compute_centrality(permuted);
    for (std::size_t v = 0; v < net.size(); ++v) {
        const auto u = *permuted.find(renamed[v]);
        CHECK(report_b.degree[u] == report_a.degree[v]);
        CHECK(report_b.weighted_degree[u] == doctest::Approx(report_a.weighted_degree[v]));
        CHECK(report_b.closeness[u] == doctest::Approx(report_a.closeness[v]));
        CHECK(report_b.betweenness[u] == doctest::Approx(report_a.betweenness[v]));
        CHECK(report_b.eigenvector[u] ==
              doctest::Approx(report_a.eigenvector[v]).epsilon(1e-8));
    }
}

TEST_CASE("quartile_bins splits distinct scores into equal quarters") {
    const std::vector<double> scores{4.0, 3.0, 2.0, 1.0};
    const auto q = quartile_bins(scores);
    CHECK(q.bins[0] == Quartile::Q1);
    CHECK(q.bins[1] == Quartile::Q2);
    CHECK(q.bins[2] == Quartile::Q3);
    CHECK(q.bins[3] == Quartile::Q4);
}

TEST_CASE("quartile_bins sends all-equal scores to Q1") {
    const std::vector<double> scores{0.5, 0.5, 0.5};
    const auto q = quartile_bins(scores);
    for (const auto bin : q.bins) CHECK(bin == Quartile::Q1);
}

TEST_CASE("quartile_bins keeps ties together and never inverts ordering") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> score(0, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> scores;
        for (int i = 0; i < 151; ++i) scores.push_back(static_cast<double>(score(rng)));
        const auto q = quartile_bins(scores);
        for (std::size_t i = 0; i < scores.size(); ++i)
            for (std::size_t j = 0; j < scores.size(); ++j) {
                if (scores[i] == scores[j]) CHECK(q.bins[i] == q.bins[j]);
                // a better bin implies a score at least as high
                if (static_cast<int>(q.bins[i]) < static_cast<int>(q.bins[j]))
                    CHECK(scores[i] >= scores[j]);
            }
    }
}

TEST_CASE("correlate_measures has unit diagonal and symmetric entries") {
    std::mt19937 rng(777);
    const auto net = testsupport::random_connected_graph(rng, 10, 0.3, {1.0, 2.0, 3.0});
    const auto report = compute_centrality(net);
    const auto m = correlate_measures(report);
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        if (m.degenerate[i]) continue;
        CHECK(m.pearson[i][i] == 1.0);
        CHECK(m.spearman[i][i] == 1.0);
        for (std::size_t j = 0; j < m.labels.size(); ++j) {
            if (m.degenerate[j]) continue;
            CHECK(m.pearson[i][j] == m.pearson[j][i]);
            CHECK(m.pearson[i][j] >= -1.0);
            CHECK(m.pearson[i][j] <= 1.0);
        }
    }
}

TEST_CASE("correlate_measures matches direct-formula reference values") {
    // Independent recomputation of Pearson and Spearman straight from the
    // definitions, on a fixed 10-node graph.
    std::mt19937 rng(888);
    const auto net = testsupport::random_connected_graph(rng, 10, 0.35, {1.0, 2.0, 4.0});
    const auto report = compute_centrality(net);
    const auto m = correlate_measures(report);

    auto direct_pearson = [](const std::vector<double>& x, const std::vector<double>& y) {
        const auto n = static_cast<double>(x.size());
        double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            sx += x[i];
            sy += y[i];
            sxx += x[i] * x[i];
            syy += y[i] * y[i];
            sxy += x[i] * y[i];
        }
        return (n * sxy - sx * sy) /
               (std::sqrt(n * sxx - sx * sx) * std::sqrt(n * syy - sy * sy));
    };
    auto ranks_of = [](const std::vector<double>& x) {
        std::vector<double> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            double less = 0, equal = 0;
            for (const double v : x) {
                if (v < x[i]) ++less;
                if (v == x[i]) ++equal;
            }
            r[i] = less + (equal + 1.0) / 2.0;  // average rank over the tie run
        }
        return r;
    };

    std::vector<std::vector<double>> cols(5);
    cols[0].assign(report.degree.begin(), report.degree.end());
    cols[1] = report.weighted_degree;
    cols[2] = report.closeness;
    cols[3] = report.betweenness;
    cols[4] = report.eigenvector;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            if (m.degenerate[i] || m.degenerate[j]) continue;
            if (i == j) continue;
            CHECK(m.pearson[i][j] ==
                  doctest::Approx(direct_pearson(cols[i], cols[j])).epsilon(1e-12));
            CHECK(m.spearman[i][j] ==
                  doctest::Approx(direct_pearson(ranks_of(cols[i]), ranks_of(cols[j])))
                      .epsilon(1e-12));
        }
}

TEST_CASE("correlate_measures reports rank reversals and degenerate columns") {
    // Hand-built report: recovery of Spearman -1 and NaN for constant columns.
    CentralityReport report;
    report.degree = {1, 2, 3, 4};
    report.weighted_degree = {4.0, 3.0, 2.0, 1.0};  // exact reversal of degree
    report.closeness = {0.5, 0.5, 0.5, 0.5};        // constant -> undefined
    report.betweenness = {0.0, 1.0, 2.0, 4.0};
    report.eigenvector = {0.1, 0.2, 0.3, 0.4};
    const auto m = correlate_measures(report);
    CHECK(m.spearman[0][1] == doctest::Approx(-1.0));
    CHECK(m.degenerate[2]);
    CHECK(std::isnan(m.pearson[2][0]));
    CHECK(std::isnan(m.pearson[0][2]));
    CHECK(std::isnan(m.pearson[2][2]));

    CentralityReport tiny;
    tiny.degree = {1, 2};
    tiny.weighted_degree = {1.0, 2.0};
    tiny.closeness = {1.0, 2.0};
    tiny.betweenness = {1.0, 2.0};
    tiny.eigenvector = {1.0, 2.0};
    CHECK_THROWS_AS(correlate_measures(tiny), DegenerateInput);
}
