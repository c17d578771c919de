#include <snc/criminal_filter.hh>
#include <snc/generators.hh>
#include <snc/product.hh>
#include <snc/search.hh>

#include <benchmark/benchmark.h>

using namespace snc;

static void BM_ExhaustiveSearch(benchmark::State & state)
{
    SearchSpec spec;
    spec.n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_search(spec).graphs_examined);
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(digon_free_count(spec.n)));
}
BENCHMARK(BM_ExhaustiveSearch)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_RandomTournaments(benchmark::State & state)
{
    SearchSpec spec;
    spec.mode = SearchMode::random;
    spec.n = static_cast<std::size_t>(state.range(0));
    spec.count = 100;
    spec.seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_search(spec).counterexamples_found);
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_RandomTournaments)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_Profiles(benchmark::State & state)
{
    auto g = random_digon_free(static_cast<std::size_t>(state.range(0)), 0.3, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(profiles(g));
}
BENCHMARK(BM_Profiles)->RangeMultiplier(4)->Range(16, 256);

static void BM_FilterFull(benchmark::State & state)
{
    auto g = random_digon_free(static_cast<std::size_t>(state.range(0)), 0.5, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_filter(g, false));
}
BENCHMARK(BM_FilterFull)->Arg(8)->Arg(32)->Arg(64);

static void BM_BuildProduct(benchmark::State & state)
{
    auto d = random_tournament(static_cast<std::size_t>(state.range(0)), 3);
    auto h = random_digon_free(static_cast<std::size_t>(state.range(0)), 0.4, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_product(d, h));
}
BENCHMARK(BM_BuildProduct)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
