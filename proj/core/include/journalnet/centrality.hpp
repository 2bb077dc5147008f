#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "journalnet/network.hpp"

namespace journalnet {

enum class WeightMode { Binary, Weighted };
enum class PathMode { Binary, InverseWeight };

struct CentralityOptions {
    WeightMode eigen_mode = WeightMode::Weighted;
    PathMode betweenness_mode = PathMode::Binary;
    bool normalized_betweenness = false;
    double tolerance = 1e-10;
    int max_iterations = 10000;
    unsigned threads = 1;
};

// Per-node scores in node order, plus the eigensolver run metadata.
struct CentralityReport {
    std::vector<int> degree;
    std::vector<double> weighted_degree;
    std::vector<double> closeness;
    std::vector<double> betweenness;
    std::vector<double> eigenvector;

    WeightMode eigen_mode = WeightMode::Weighted;
    PathMode betweenness_mode = PathMode::Binary;
    bool normalized_betweenness = false;
    double tolerance = 0.0;
    int iterations = 0;
    double eigenvalue = 0.0;
    double residual = 0.0;
    bool disconnected = false;
};

/// Incident edge count (Binary) or incident weight sum (Weighted).
std::vector<double> degree_centrality(const CoCitationNetwork& net, WeightMode mode);

/// Component-scaled closeness over unit edge lengths: for a node v in a
/// component of size m inside an n-node graph,
/// (m-1)/sum(dist) * (m-1)/(n-1); isolated nodes score 0.
std::vector<double> closeness_centrality(const CoCitationNetwork& net);

/// Exact betweenness by pair-dependency accumulation. Binary mode treats all
/// edges as length 1; InverseWeight uses length 1/weight. Each unordered pair
/// counts once. `normalized` divides by (n-1)(n-2)/2. Deterministic for any
/// thread count.
std::vector<double> betweenness_centrality(const CoCitationNetwork& net,
                                           PathMode mode = PathMode::Binary,
                                           bool normalized = false, unsigned threads = 1);

struct EigenvectorResult {
    std::vector<double> scores;  // L2-normalized, entrywise nonnegative
    double eigenvalue = 0.0;
    double residual = 0.0;  // ||Av - lambda v|| on the unshifted adjacency
    int iterations = 0;
    bool disconnected = false;
};

/// Principal eigenvector of the (weighted or binarized) adjacency matrix by
/// power iteration from the uniform positive vector. Internally iterates on
/// A + sI with s = max degree, which leaves the eigenvector unchanged but
/// converges on bipartite-like spectra too; s scales with the weights, so a
/// uniform edge-weight rescale reproduces the same scores. Converges when the
/// relative residual ||Av - lambda v|| / lambda drops to tol; throws
/// NoConvergence past max_iter. Sets `disconnected` when the graph has more
/// than one component (the mass then concentrates on the dominant one).
EigenvectorResult eigenvector_centrality(const CoCitationNetwork& net,
                                         WeightMode mode = WeightMode::Weighted,
                                         double tol = 1e-10, int max_iter = 10000);

/// All measures in one pass.
CentralityReport compute_centrality(const CoCitationNetwork& net,
                                    const CentralityOptions& opt = {});

enum class Quartile { Q1, Q2, Q3, Q4 };  // Q1 holds the highest scores

std::string_view to_string(Quartile q);

struct QuartileAssignment {
    std::vector<Quartile> bins;  // parallel to the score input
    double t25 = 0.0;            // 25th percentile threshold
    double t50 = 0.0;
    double t75 = 0.0;
};

/// Value-threshold binning at the 75th/50th/25th percentiles: Q1 means
/// score >= t75, and so on down. Equal scores always share a bin, so bin
/// sizes need not be equal quarters. Requires at least one score.
QuartileAssignment quartile_bins(std::span<const double> scores);

struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> pearson;   // NaN rows/cols when degenerate
    std::vector<std::vector<double>> spearman;
    std::vector<bool> degenerate;  // measure constant across nodes
};

/// Pairwise Pearson and Spearman coefficients between the five measures.
/// Throws DegenerateInput below 3 nodes; constant measures are kept but
/// reported as undefined (NaN row/column).
CorrelationMatrix correlate_measures(const CentralityReport& report);

}  // namespace journalnet
