#include "journalnet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>

#include "journalnet/errors.hpp"
#include "journalnet/parallel.hpp"
#include "journalnet/stats.hpp"

namespace journalnet {

namespace {

using Adjacency = std::vector<std::vector<std::pair<std::uint32_t, double>>>;

// Single-source pair dependencies, binary distances (BFS).
void accumulate_source_binary(const Adjacency& adj, std::uint32_t s, std::vector<double>& bc) {
    const std::size_t n = adj.size();
    std::vector<std::int64_t> sigma(n, 0);
    std::vector<int> dist(n, -1);
    std::vector<std::vector<std::uint32_t>> preds(n);
    std::vector<std::uint32_t> order;
    order.reserve(n);

    std::deque<std::uint32_t> queue{s};
    sigma[s] = 1;
    dist[s] = 0;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (const auto& [u, w] : adj[v]) {
            (void)w;
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
            if (dist[u] == dist[v] + 1) {
                sigma[u] += sigma[v];
                preds[u].push_back(v);
            }
        }
    }

    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = *it;
        for (const auto p : preds[v])
            delta[p] += static_cast<double>(sigma[p]) / static_cast<double>(sigma[v]) *
                        (1.0 + delta[v]);
        if (v != s) bc[v] += delta[v];
    }
}

// Single-source pair dependencies over lengths 1/weight (Dijkstra).
void accumulate_source_weighted(const Adjacency& adj, std::uint32_t s, std::vector<double>& bc) {
    const std::size_t n = adj.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, kInf);
    std::vector<std::int64_t> sigma(n, 0);
    std::vector<std::vector<std::uint32_t>> preds(n);
    std::vector<bool> settled(n, false);
    std::vector<std::uint32_t> order;
    order.reserve(n);

    using Item = std::pair<double, std::uint32_t>;  // (dist, node): index breaks ties
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0.0;
    sigma[s] = 1;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (settled[v]) continue;
        settled[v] = true;
        order.push_back(v);
        for (const auto& [u, w] : adj[v]) {
            const double candidate = d + 1.0 / w;
            if (candidate < dist[u]) {
                dist[u] = candidate;
                sigma[u] = sigma[v];
                preds[u].assign(1, v);
                heap.emplace(candidate, u);
            } else if (candidate == dist[u] && !settled[u]) {
                sigma[u] += sigma[v];
                preds[u].push_back(v);
            }
        }
    }

    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = *it;
        for (const auto p : preds[v])
            delta[p] += static_cast<double>(sigma[p]) / static_cast<double>(sigma[v]) *
                        (1.0 + delta[v]);
        if (v != s) bc[v] += delta[v];
    }
}

}  // namespace

std::vector<double> degree_centrality(const CoCitationNetwork& net, WeightMode mode) {
    std::vector<double> deg(net.size(), 0.0);
    for (const auto& [key, w] : net.edges()) {
        const double inc = mode == WeightMode::Weighted ? w : 1.0;
        deg[key.first] += inc;
        deg[key.second] += inc;
    }
    return deg;
}

std::vector<double> closeness_centrality(const CoCitationNetwork& net) {
    const std::size_t n = net.size();
    const auto adj = net.adjacency();
    std::vector<double> scores(n, 0.0);
    std::vector<int> dist(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(s)};
        std::int64_t sum = 0;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            for (const auto& [u, w] : adj[v]) {
                (void)w;
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    sum += dist[u];
                    ++reached;
                    queue.push_back(u);
                }
            }
        }
        if (reached < 2 || sum == 0) continue;  // isolated node scores 0
        const double m1 = static_cast<double>(reached - 1);
        scores[s] = m1 / static_cast<double>(sum) * (m1 / static_cast<double>(n - 1));
    }
    return scores;
}

std::vector<double> betweenness_centrality(const CoCitationNetwork& net, PathMode mode,
                                           bool normalized, unsigned threads) {
    const std::size_t n = net.size();
    if (n < 3) return std::vector<double>(n, 0.0);
    const auto adj = net.adjacency();

    constexpr std::size_t kBlock = 64;  // fixed block layout keeps sums thread-count independent
    auto block_fn = [&](std::size_t begin, std::size_t end) {
        std::vector<double> partial(n, 0.0);
        for (std::size_t s = begin; s < end; ++s) {
            if (mode == PathMode::Binary)
                accumulate_source_binary(adj, static_cast<std::uint32_t>(s), partial);
            else
                accumulate_source_weighted(adj, static_cast<std::uint32_t>(s), partial);
        }
        return partial;
    };
    auto bc = blocked_parallel_sum(n, n, kBlock, threads, block_fn);

    double scale = 0.5;  // each unordered pair was visited from both endpoints
    if (normalized)
        scale /= static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (auto& v : bc) v *= scale;
    return bc;
}

EigenvectorResult eigenvector_centrality(const CoCitationNetwork& net, WeightMode mode,
                                         double tol, int max_iter) {
    const std::size_t n = net.size();
    if (n == 0) throw DataError("eigenvector centrality of an empty network");
    if (tol <= 0.0) throw DataError("tolerance must be positive");

    EigenvectorResult result;
    result.disconnected = net.component_count() > 1;

    const auto adj = net.adjacency();
    auto edge_value = [&](double w) { return mode == WeightMode::Weighted ? w : 1.0; };

    // Diagonal shift: iterate on A + sI so that the top of the spectrum is
    // strictly dominant even for bipartite-like graphs. s tracks the weight
    // scale, which keeps the iteration invariant under uniform rescaling.
    double shift = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        double row = 0.0;
        for (const auto& [u, w] : adj[v]) {
            (void)u;
            row += edge_value(w);
        }
        shift = std::max(shift, row);
    }

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    if (shift == 0.0) {  // no edges at all: nothing to iterate
        result.scores = std::move(v);
        result.eigenvalue = 0.0;
        result.residual = 0.0;
        result.iterations = 0;
        return result;
    }

    std::vector<double> av(n);
    for (int iter = 1; iter <= max_iter; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (const auto& [u, w] : adj[i]) sum += edge_value(w) * v[u];
            av[i] = sum;
        }
        const double lambda = std::inner_product(v.begin(), v.end(), av.begin(), 0.0);
        double res_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = av[i] - lambda * v[i];
            res_sq += r * r;
        }
        const double residual = std::sqrt(res_sq);
        if (lambda > 0.0 && residual <= tol * lambda) {
            result.scores = std::move(v);
            result.eigenvalue = lambda;
            result.residual = residual;
            result.iterations = iter;
            return result;
        }
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            av[i] += shift * v[i];
            norm_sq += av[i] * av[i];
        }
        const double norm = std::sqrt(norm_sq);
        for (std::size_t i = 0; i < n; ++i) v[i] = av[i] / norm;
    }
    throw NoConvergence("power iteration did not reach tolerance " + std::to_string(tol) +
                        " within " + std::to_string(max_iter) + " iterations");
}

CentralityReport compute_centrality(const CoCitationNetwork& net, const CentralityOptions& opt) {
    CentralityReport report;
    const auto deg = degree_centrality(net, WeightMode::Binary);
    report.degree.reserve(deg.size());
    for (const double d : deg) report.degree.push_back(static_cast<int>(d));
    report.weighted_degree = degree_centrality(net, WeightMode::Weighted);
    report.closeness = closeness_centrality(net);
    report.betweenness = betweenness_centrality(net, opt.betweenness_mode,
                                                opt.normalized_betweenness, opt.threads);
    auto eig = eigenvector_centrality(net, opt.eigen_mode, opt.tolerance, opt.max_iterations);
    report.eigenvector = std::move(eig.scores);
    report.eigen_mode = opt.eigen_mode;
    report.betweenness_mode = opt.betweenness_mode;
    report.normalized_betweenness = opt.normalized_betweenness;
    report.tolerance = opt.tolerance;
    report.iterations = eig.iterations;
    report.eigenvalue = eig.eigenvalue;
    report.residual = eig.residual;
    report.disconnected = eig.disconnected;
    return report;
}

std::string_view to_string(Quartile q) {
    switch (q) {
        case Quartile::Q1: return "Q1";
        case Quartile::Q2: return "Q2";
        case Quartile::Q3: return "Q3";
        case Quartile::Q4: return "Q4";
    }
    return "Q?";
}

QuartileAssignment quartile_bins(std::span<const double> scores) {
    if (scores.empty()) throw DataError("quartile binning needs at least one score");
    std::vector<double> sorted(scores.begin(), scores.end());
    std::sort(sorted.begin(), sorted.end());

    QuartileAssignment out;
    out.t25 = percentile_sorted(sorted, 0.25);
    out.t50 = percentile_sorted(sorted, 0.50);
    out.t75 = percentile_sorted(sorted, 0.75);
    out.bins.reserve(scores.size());
    for (const double s : scores) {
        if (s >= out.t75)
            out.bins.push_back(Quartile::Q1);
        else if (s >= out.t50)
            out.bins.push_back(Quartile::Q2);
        else if (s >= out.t25)
            out.bins.push_back(Quartile::Q3);
        else
            out.bins.push_back(Quartile::Q4);
    }
    return out;
}

CorrelationMatrix correlate_measures(const CentralityReport& report) {
    const std::size_t n = report.weighted_degree.size();
    if (n < 3) throw DegenerateInput("correlation needs at least 3 nodes");

    CorrelationMatrix m;
    m.labels = {"degree", "weighted_degree", "closeness", "betweenness", "eigenvector"};
    std::vector<std::vector<double>> cols(5);
    cols[0].assign(report.degree.begin(), report.degree.end());
    cols[1] = report.weighted_degree;
    cols[2] = report.closeness;
    cols[3] = report.betweenness;
    cols[4] = report.eigenvector;

    m.degenerate.resize(5, false);
    for (std::size_t i = 0; i < 5; ++i)
        m.degenerate[i] =
            std::all_of(cols[i].begin(), cols[i].end(), [&](double v) { return v == cols[i][0]; });

    const double nan = std::numeric_limits<double>::quiet_NaN();
    m.pearson.assign(5, std::vector<double>(5, nan));
    m.spearman.assign(5, std::vector<double>(5, nan));
    for (std::size_t i = 0; i < 5; ++i) {
        if (m.degenerate[i]) continue;
        m.pearson[i][i] = 1.0;
        m.spearman[i][i] = 1.0;
        for (std::size_t j = i + 1; j < 5; ++j) {
            if (m.degenerate[j]) continue;
            m.pearson[i][j] = m.pearson[j][i] = pearson(cols[i], cols[j]);
            m.spearman[i][j] = m.spearman[j][i] = spearman(cols[i], cols[j]);
        }
    }
    return m;
}

}  // namespace journalnet
