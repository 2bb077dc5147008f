#include <benchmark/benchmark.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "journalnet/bib.hpp"
#include "journalnet/centrality.hpp"
#include "journalnet/formats.hpp"
#include "journalnet/network.hpp"

namespace {

using namespace journalnet;

// 4,000 records over 160 well-cited "core" journals plus a 140-journal tail,
// the same shape the acceptance pipeline uses.
std::string corpus_tsv() {
    static const int offsets[] = {0, 1, 3, 7, 12, 20, 30, 50};
    std::ostringstream out;
    out << "id\tyear\tsource\tcited\n";
    char name[16];
    for (int i = 0; i < 4000; ++i) {
        out << 'W' << i << "\t2015\tSRC\t";
        bool first = true;
        for (const int off : offsets) {
            std::snprintf(name, sizeof name, "CORE J%04d", (i + off) % 160);
            out << (first ? "" : "; ") << "Author, 2010, " << name << ", V1, P1";
            first = false;
        }
        for (int j = 0; j < 3; ++j) {
            std::snprintf(name, sizeof name, "TAIL J%04d", (3 * i + j) % 140);
            out << "; Author, 2010, " << name << ", V1, P1";
        }
        out << '\n';
    }
    return out.str();
}

const std::vector<BibRecord>& records() {
    static const std::vector<BibRecord> cached = [] {
        std::istringstream in(corpus_tsv());
        return parse_records(in).records;
    }();
    return cached;
}

const CoCitationNetwork& thresholded() {
    static const CoCitationNetwork cached = [] {
        const auto full = build_cocitation(records(), {}, 2015);
        return apply_threshold(full, {111, 151}).net;
    }();
    return cached;
}

void BM_ParseRecords(benchmark::State& state) {
    const auto tsv = corpus_tsv();
    for (auto _ : state) {
        std::istringstream in(tsv);
        benchmark::DoNotOptimize(parse_records(in));
    }
}
BENCHMARK(BM_ParseRecords)->Unit(benchmark::kMillisecond);

void BM_BuildCocitation(benchmark::State& state) {
    const auto& recs = records();
    for (auto _ : state) benchmark::DoNotOptimize(build_cocitation(recs, {}, 2015));
}
BENCHMARK(BM_BuildCocitation)->Unit(benchmark::kMillisecond);

void BM_Betweenness(benchmark::State& state) {
    const auto& net = thresholded();
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            betweenness_centrality(net, PathMode::Binary, false, threads));
}
BENCHMARK(BM_Betweenness)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Eigenvector(benchmark::State& state) {
    const auto& net = thresholded();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            eigenvector_centrality(net, WeightMode::Weighted, 1e-10, 10000));
}
BENCHMARK(BM_Eigenvector)->Unit(benchmark::kMillisecond);

void BM_PajekRoundTrip(benchmark::State& state) {
    const auto text = write_pajek(thresholded());
    for (auto _ : state) {
        std::istringstream in(text);
        benchmark::DoNotOptimize(read_pajek(in));
    }
}
BENCHMARK(BM_PajekRoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
