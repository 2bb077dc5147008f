#include "journalnet/network.hpp"

#include <algorithm>
#include <set>

#include "journalnet/errors.hpp"

namespace journalnet {

CoCitationNetwork::CoCitationNetwork(int year_label,
                                     const std::map<std::string, std::int64_t>& citation_counts,
                                     const NameEdgeMap& edge_weights)
    : year_label_(year_label) {
    names_.reserve(citation_counts.size());
    citations_.reserve(citation_counts.size());
    for (const auto& [name, count] : citation_counts) {  // std::map iterates in name order
        if (count < 0) throw DataError("negative citation count for \"" + name + "\"");
        names_.push_back(name);
        citations_.push_back(count);
    }
    for (const auto& [pair, w] : edge_weights) {
        if (pair.first == pair.second)
            throw DataError("self-loop on \"" + pair.first + "\"");
        if (!(w > 0.0)) throw DataError("non-positive edge weight on \"" + pair.first + "\"");
        const auto a = find(pair.first);
        const auto b = find(pair.second);
        if (!a || !b)
            throw DataError("edge endpoint \"" + (a ? pair.second : pair.first) +
                            "\" has no node entry");
        const EdgeKey key{static_cast<std::uint32_t>(std::min(*a, *b)),
                          static_cast<std::uint32_t>(std::max(*a, *b))};
        edges_[key] += w;
    }
}

std::optional<std::size_t> CoCitationNetwork::find(std::string_view name) const {
    const auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

double CoCitationNetwork::weight(std::size_t a, std::size_t b) const {
    if (a == b) return 0.0;
    const EdgeKey key{static_cast<std::uint32_t>(std::min(a, b)),
                      static_cast<std::uint32_t>(std::max(a, b))};
    const auto it = edges_.find(key);
    return it == edges_.end() ? 0.0 : it->second;
}

double CoCitationNetwork::weighted_degree(std::size_t v) const {
    double sum = 0.0;
    for (const auto& [key, w] : edges_)
        if (key.first == v || key.second == v) sum += w;
    return sum;
}

std::vector<std::vector<std::pair<std::uint32_t, double>>> CoCitationNetwork::adjacency() const {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(size());
    for (const auto& [key, w] : edges_) {
        adj[key.first].emplace_back(key.second, w);
        adj[key.second].emplace_back(key.first, w);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::size_t CoCitationNetwork::component_count() const {
    const auto adj = adjacency();
    std::vector<bool> seen(size(), false);
    std::size_t components = 0;
    std::vector<std::uint32_t> stack;
    for (std::size_t s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = true;
        stack.push_back(static_cast<std::uint32_t>(s));
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (const auto& [u, w] : adj[v]) {
                (void)w;
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    return components;
}

void CoCitationNetwork::validate() const {
    if (names_.size() != citations_.size())
        throw DataError("node/citation size mismatch");
    if (!std::is_sorted(names_.begin(), names_.end()))
        throw DataError("node names are not sorted");
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
        throw DataError("duplicate node name");
    for (const auto& [key, w] : edges_) {
        if (key.first >= key.second) throw DataError("edge key not ordered");
        if (key.second >= names_.size()) throw DataError("edge endpoint out of range");
        if (!(w > 0.0)) throw DataError("non-positive edge weight");
        const double cap =
            static_cast<double>(std::min(citations_[key.first], citations_[key.second]));
        if (w > cap)
            throw DataError("edge weight " + std::to_string(w) + " exceeds citation counts of " +
                            names_[key.first] + "/" + names_[key.second]);
    }
}

namespace {

// Distinct canonical journals cited by one record.
std::set<std::string> cited_set(const BibRecord& rec, const AliasTable& aliases) {
    std::set<std::string> cited;
    for (const auto& ref : rec.cited_refs) {
        const auto journal = extract_cited_journal(ref);
        if (!journal) continue;
        auto canon = aliases.resolve(normalize_name(*journal));
        if (!canon.empty()) cited.insert(std::move(canon));
    }
    return cited;
}

}  // namespace

std::map<std::string, std::int64_t> count_citations(std::span<const BibRecord> records,
                                                    const AliasTable& aliases) {
    std::map<std::string, std::int64_t> counts;
    for (const auto& rec : records)
        for (const auto& journal : cited_set(rec, aliases)) ++counts[journal];
    return counts;
}

CoCitationNetwork build_cocitation(std::span<const BibRecord> records, const AliasTable& aliases,
                                   int year_label) {
    std::map<std::string, std::int64_t> counts;
    CoCitationNetwork::NameEdgeMap weights;
    for (const auto& rec : records) {
        const auto cited = cited_set(rec, aliases);
        for (const auto& journal : cited) ++counts[journal];
        for (auto a = cited.begin(); a != cited.end(); ++a)
            for (auto b = std::next(a); b != cited.end(); ++b)
                weights[{*a, *b}] += 1.0;  // set iteration keeps *a < *b
    }
    return CoCitationNetwork(year_label, counts, weights);
}

int infer_corpus_year(std::span<const BibRecord> records) {
    std::map<int, std::size_t> freq;
    for (const auto& rec : records) ++freq[rec.pub_year];
    int best_year = 0;
    std::size_t best_count = 0;
    for (const auto& [year, count] : freq) {
        if (count > best_count) {  // map order makes the smallest year win ties
            best_year = year;
            best_count = count;
        }
    }
    return best_year;
}

ThresholdResult apply_threshold(const CoCitationNetwork& net, const ThresholdConfig& cfg) {
    std::vector<std::size_t> kept;
    for (std::size_t v = 0; v < net.size(); ++v)
        if (net.citations()[v] >= cfg.min_citations) kept.push_back(v);
    if (kept.empty())
        throw EmptyResult("no journal reaches " + std::to_string(cfg.min_citations) +
                          " citations");

    if (kept.size() > cfg.top_n) {
        std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
            if (net.citations()[a] != net.citations()[b])
                return net.citations()[a] > net.citations()[b];
            return net.names()[a] < net.names()[b];
        });
        kept.resize(cfg.top_n);
        std::sort(kept.begin(), kept.end());
    }

    std::map<std::string, std::int64_t> counts;
    std::vector<bool> keep_mask(net.size(), false);
    for (const auto v : kept) {
        counts[net.names()[v]] = net.citations()[v];
        keep_mask[v] = true;
    }
    CoCitationNetwork::NameEdgeMap weights;
    for (const auto& [key, w] : net.edges())
        if (keep_mask[key.first] && keep_mask[key.second])
            weights[{net.names()[key.first], net.names()[key.second]}] = w;

    ThresholdResult result;
    result.net = CoCitationNetwork(net.year_label(), counts, weights);
    result.nodes_before = net.size();
    result.nodes_after = result.net.size();
    result.edges_before = net.edges().size();
    result.edges_after = result.net.edges().size();
    return result;
}

}  // namespace journalnet
