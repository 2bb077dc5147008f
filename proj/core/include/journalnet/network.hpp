#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "journalnet/bib.hpp"

namespace journalnet {

// Undirected weighted journal co-citation network. Nodes are canonical
// journal names held in ascending byte order; edges are keyed by index pairs
// (i, j) with i < j. No self-loops.
class CoCitationNetwork {
public:
    using EdgeKey = std::pair<std::uint32_t, std::uint32_t>;
    using EdgeMap = std::map<EdgeKey, double>;
    using NameEdgeMap = std::map<std::pair<std::string, std::string>, double>;

    CoCitationNetwork() = default;

    // Builds from name-keyed counts and edge weights. Edge name pairs may come
    // in either order; duplicates are summed. Throws DataError on self-loops,
    // non-positive weights, or edges whose endpoint has no node entry.
    CoCitationNetwork(int year_label,
                      const std::map<std::string, std::int64_t>& citation_counts,
                      const NameEdgeMap& edge_weights);

    int year_label() const { return year_label_; }
    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::int64_t>& citations() const { return citations_; }
    const EdgeMap& edges() const { return edges_; }

    std::optional<std::size_t> find(std::string_view name) const;
    double weight(std::size_t a, std::size_t b) const;  // 0 when absent
    double weighted_degree(std::size_t v) const;

    // Neighbor lists, index-sorted.
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency() const;

    std::size_t component_count() const;

    // Structural invariants: index ordering, no self-loops, positive weights,
    // and weight(a,b) <= min(citations(a), citations(b)). Throws DataError.
    void validate() const;

    friend bool operator==(const CoCitationNetwork&, const CoCitationNetwork&) = default;

private:
    int year_label_ = 0;
    std::vector<std::string> names_;       // ascending
    std::vector<std::int64_t> citations_;  // parallel to names_
    EdgeMap edges_;
};

// Node-retention rule for the final network: keep journals with at least
// min_citations citations, then cap at the top_n by count (ties broken by
// name ascending).
struct ThresholdConfig {
    std::int64_t min_citations = 111;
    std::size_t top_n = 151;
};

struct ThresholdResult {
    CoCitationNetwork net;
    std::size_t nodes_before = 0;
    std::size_t nodes_after = 0;
    std::size_t edges_before = 0;
    std::size_t edges_after = 0;
};

/// Citation count per canonical journal. A record contributes at most 1 to a
/// given journal no matter how often its reference list repeats it.
std::map<std::string, std::int64_t> count_citations(std::span<const BibRecord> records,
                                                    const AliasTable& aliases);

/// Full (unthresholded) co-citation network: each record adds +1 to every
/// unordered pair of distinct canonical journals it cites.
CoCitationNetwork build_cocitation(std::span<const BibRecord> records,
                                   const AliasTable& aliases, int year_label);

/// Most frequent publication year in the corpus (smallest wins a tie).
int infer_corpus_year(std::span<const BibRecord> records);

/// Applies the citation threshold and top-N cap; edges with a dropped
/// endpoint disappear. Throws EmptyResult when nothing survives.
ThresholdResult apply_threshold(const CoCitationNetwork& net, const ThresholdConfig& cfg);

}  // namespace journalnet
