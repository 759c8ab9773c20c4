#include <benchmark/benchmark.h>

#include <random>

#include "gog/gbs.hpp"
#include "gog/random.hpp"
#include "gog/reduce.hpp"

namespace {

gog::GbsGraph makeGraph(unsigned seed, int edges) {
    std::mt19937_64 rng(seed);
    return gog::randomGbsGraph(rng, edges, 9);
}

void BM_reduceWord(benchmark::State& state) {
    gog::GbsGraph g = makeGraph(7, 6);
    std::mt19937_64 rng(11);
    std::vector<gog::LoopWord> words;
    for (int i = 0; i < 64; ++i) words.push_back(gog::randomWord(g.graph, rng, 12));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gog::reduceWord(g.graph, words[i % words.size()], true));
        ++i;
    }
}
BENCHMARK(BM_reduceWord);

void BM_canonicalKey(benchmark::State& state) {
    gog::GbsGraph g = makeGraph(13, 5);
    for (auto _ : state) benchmark::DoNotOptimize(gog::gbsCanonicalKey(g.graph));
}
BENCHMARK(BM_canonicalKey);

void BM_connectSearch(benchmark::State& state) {
    gog::GbsGraph a = makeGraph(3, 3);
    gog::GbsGraph b = makeGraph(5, 3);
    gog::ConnectBounds bounds;
    bounds.maxDepth = 2;
    for (auto _ : state) benchmark::DoNotOptimize(gog::connectSearch(a, b, bounds));
}
BENCHMARK(BM_connectSearch);

}  // namespace

BENCHMARK_MAIN();
