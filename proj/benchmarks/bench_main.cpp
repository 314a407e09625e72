#include "mub/bigraph.hpp"
#include "mub/families.hpp"
#include "mub/fixtures.hpp"
#include "mub/recognizer.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

mub::Bigraph path(std::size_t n) {
    mub::Bigraph b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_vertex((i % 2 ? "y" : "x") + std::to_string(i), i % 2 ? mub::Side::Y : mub::Side::X);
    for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b;
}

mub::Bigraph cycle(std::size_t n) {
    auto b = path(n);
    b.add_edge(0, n - 1);
    return b;
}

void BM_RecognizePath(benchmark::State& st) {
    auto g = path(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(mub::recognize_mixed_unit(g));
}
BENCHMARK(BM_RecognizePath)->Arg(6)->Arg(10)->Arg(14);

void BM_RecognizeCycle(benchmark::State& st) {
    auto g = cycle(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(mub::recognize_mixed_unit(g));
}
BENCHMARK(BM_RecognizeCycle)->Arg(6)->Arg(8)->Arg(10);

void BM_RecognizeFixture(benchmark::State& st) {
    auto f = mub::fixture({mub::FixtureTag::H1});
    for (auto _ : st) benchmark::DoNotOptimize(mub::recognize_mixed_unit(f.graph));
}
BENCHMARK(BM_RecognizeFixture);

void BM_ClosedSearch(benchmark::State& st) {
    auto g = path(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(mub::recognize_interval_closed(g));
}
BENCHMARK(BM_ClosedSearch)->Arg(8)->Arg(12);

void BM_CanonicalForm(benchmark::State& st) {
    auto g = mub::fixture({mub::FixtureTag::H2_a}).graph;
    for (auto _ : st) benchmark::DoNotOptimize(mub::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

void BM_Enumerate(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(mub::enumerate_connected_bipartite(static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CatalogScan(benchmark::State& st) {
    auto cat = mub::forbidden_catalog(static_cast<std::size_t>(st.range(0)));
    auto host = path(16);
    host.add_edge(std::size_t{3}, std::size_t{8});
    for (auto _ : st) {
        std::size_t hits = 0;
        for (const auto& e : cat) hits += !mub::induced_subgraph_search(host, e.graph).empty();
        benchmark::DoNotOptimize(hits);
    }
}
BENCHMARK(BM_CatalogScan)->Arg(8)->Arg(12);

} // namespace
BENCHMARK_MAIN();
