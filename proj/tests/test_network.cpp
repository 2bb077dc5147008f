#include <doctest.h>

#include <algorithm>
#include <random>

#include "journalnet/errors.hpp"
#include "journalnet/network.hpp"

using namespace journalnet;

namespace {

BibRecord record(std::string id, std::initializer_list<std::string> journals) {
    BibRecord rec;
    rec.record_id = std::move(id);
    rec.pub_year = 2015;
    rec.source_journal = "SRC";
    for (const auto& j : journals) rec.cited_refs.push_back("Author, 2010, " + j + ", V1, P1");
    return rec;
}

}  // namespace

TEST_CASE("count_citations dedups within a record") {
    const std::vector<BibRecord> records{record("r1", {"A", "B", "A"})};
    const auto counts = count_citations(records, {});
    CHECK(counts.at("A") == 1);
    CHECK(counts.at("B") == 1);
    CHECK(counts.size() == 2);
}

TEST_CASE("count_citations adds across records") {
    const std::vector<BibRecord> records{record("r1", {"A"}), record("r2", {"A", "B"}),
                                         record("r3", {"B"})};
    const auto counts = count_citations(records, {});
    CHECK(counts.at("A") == 2);
    CHECK(counts.at("B") == 2);
}

TEST_CASE("count_citations merges aliased names") {
    // Hand count: OLD NAME and NEW NAME are one journal; r1 cites it once
    // (despite two spellings), r2 once, r3 never; X appears in r3 and r5.
    AliasTable aliases;
    aliases.add("OLD NAME", "NEW NAME");
    aliases.finalize();
    const std::vector<BibRecord> records{
        record("r1", {"OLD NAME", "NEW NAME"}), record("r2", {"OLD NAME"}),
        record("r3", {"X"}),                    record("r4", {"NEW NAME", "Y"}),
        record("r5", {"X", "Y"}),
    };
    const auto counts = count_citations(records, aliases);
    CHECK(counts.at("NEW NAME") == 3);
    CHECK(counts.at("X") == 2);
    CHECK(counts.at("Y") == 2);
    CHECK_FALSE(counts.contains("OLD NAME"));
}

TEST_CASE("build_cocitation forms all pairs within one record") {
    const std::vector<BibRecord> records{record("r1", {"A", "B", "C"})};
    const auto net = build_cocitation(records, {}, 2015);
    net.validate();
    CHECK(net.size() == 3);
    CHECK(net.weight(*net.find("A"), *net.find("B")) == 1.0);
    CHECK(net.weight(*net.find("A"), *net.find("C")) == 1.0);
    CHECK(net.weight(*net.find("B"), *net.find("C")) == 1.0);
}

TEST_CASE("build_cocitation accumulates across records and dedups inside") {
    const std::vector<BibRecord> two{record("r1", {"A", "B"}), record("r2", {"A", "B"})};
    const auto net2 = build_cocitation(two, {}, 2015);
    CHECK(net2.weight(*net2.find("A"), *net2.find("B")) == 2.0);

    const std::vector<BibRecord> dup{record("r1", {"A", "A", "B"})};
    const auto net1 = build_cocitation(dup, {}, 2015);
    CHECK(net1.weight(*net1.find("A"), *net1.find("B")) == 1.0);
}

TEST_CASE("build_cocitation is order-independent") {
    std::mt19937 rng(99);
    std::vector<BibRecord> records;
    const std::vector<std::string> pool{"A", "B", "C", "D", "E", "F", "G"};
    std::uniform_int_distribution<std::size_t> count(0, 5);
    for (int i = 0; i < 60; ++i) {
        auto shuffled = pool;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.resize(count(rng));
        BibRecord rec = record("r" + std::to_string(i), {});
        for (const auto& j : shuffled)
            rec.cited_refs.push_back("Author, 2010, " + j + ", V1, P1");
        records.push_back(std::move(rec));
    }
    const auto net = build_cocitation(records, {}, 2015);
    auto permuted = records;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    CHECK(build_cocitation(permuted, {}, 2015) == net);
}

TEST_CASE("total edge weight is bounded by per-record pair counts") {
    std::mt19937 rng(123);
    const std::vector<std::string> pool{"A", "B", "C", "D", "E", "F"};
    std::uniform_int_distribution<std::size_t> count(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BibRecord> records;
        double bound = 0.0;
        for (int i = 0; i < 30; ++i) {
            auto shuffled = pool;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            shuffled.resize(count(rng));
            const double k = static_cast<double>(shuffled.size());
            bound += k * (k - 1.0) / 2.0;
            BibRecord rec = record("r" + std::to_string(i), {});
            for (const auto& j : shuffled)
                rec.cited_refs.push_back("x, 1, " + j + ", V1");
            records.push_back(std::move(rec));
        }
        const auto net = build_cocitation(records, {}, 2015);
        net.validate();
        double total = 0.0;
        for (const auto& [key, w] : net.edges()) {
            (void)key;
            total += w;
        }
        CHECK(total <= bound);
    }
}

TEST_CASE("apply_threshold keeps qualifying nodes and their edges") {
    std::vector<BibRecord> records;
    // A and B co-cited in 3 records; C tags along once.
    for (int i = 0; i < 3; ++i)
        records.push_back(record("r" + std::to_string(i), {"A", "B"}));
    records.push_back(record("rc", {"A", "C"}));
    const auto net = build_cocitation(records, {}, 2015);

    SUBCASE("low threshold keeps everything") {
        const auto result = apply_threshold(net, {1, 10});
        CHECK(result.net == net);
        CHECK(result.nodes_before == 3);
        CHECK(result.nodes_after == 3);
    }
    SUBCASE("threshold drops rare journals and dangling edges") {
        const auto result = apply_threshold(net, {2, 10});
        CHECK(result.net.size() == 2);
        CHECK(result.net.find("C") == std::nullopt);
        CHECK(result.net.edges().size() == 1);
        CHECK(result.edges_before == 2);
        CHECK(result.edges_after == 1);
    }
    SUBCASE("nothing qualifies") {
        CHECK_THROWS_AS(apply_threshold(net, {100, 10}), EmptyResult);
    }
}

TEST_CASE("apply_threshold cap breaks ties by name") {
    std::vector<BibRecord> records;
    // Z, M, A all cited twice; cap of 2 keeps A and M (names ascending).
    records.push_back(record("r1", {"Z", "M", "A"}));
    records.push_back(record("r2", {"Z", "M", "A"}));
    const auto net = build_cocitation(records, {}, 2015);
    const auto result = apply_threshold(net, {1, 2});
    REQUIRE(result.net.size() == 2);
    CHECK(result.net.names()[0] == "A");
    CHECK(result.net.names()[1] == "M");
}

TEST_CASE("apply_threshold is idempotent") {
    std::mt19937 rng(5);
    std::vector<BibRecord> records;
    const std::vector<std::string> pool{"A", "B", "C", "D", "E", "F", "G", "H"};
    std::uniform_int_distribution<std::size_t> count(1, 6);
    for (int i = 0; i < 40; ++i) {
        auto shuffled = pool;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.resize(count(rng));
        BibRecord rec = record("r" + std::to_string(i), {});
        for (const auto& j : shuffled) rec.cited_refs.push_back("x, 1, " + j + ", V1");
        records.push_back(std::move(rec));
    }
    const auto net = build_cocitation(records, {}, 2015);
    const ThresholdConfig cfg{5, 4};
    const auto once = apply_threshold(net, cfg);
    const auto twice = apply_threshold(once.net, cfg);
    CHECK(once.net == twice.net);
}

TEST_CASE("network invariants hold after construction") {
    const std::vector<BibRecord> records{record("r1", {"A", "B", "C"}),
                                         record("r2", {"B", "C"})};
    const auto net = build_cocitation(records, {}, 2015);
    net.validate();
    for (const auto& [key, w] : net.edges()) {
        CHECK(key.first < key.second);
        CHECK(w <= static_cast<double>(
                       std::min(net.citations()[key.first], net.citations()[key.second])));
    }
}

TEST_CASE("infer_corpus_year picks the most frequent year") {
    std::vector<BibRecord> records{record("a", {}), record("b", {}), record("c", {})};
    records[0].pub_year = 2015;
    records[1].pub_year = 2015;
    records[2].pub_year = 2011;
    CHECK(infer_corpus_year(records) == 2015);
    records[1].pub_year = 2011;  // tie: smallest year wins
    CHECK(infer_corpus_year(records) == 2011);
}
