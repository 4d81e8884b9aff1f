#include <pka/completions.hpp>
#include <pka/constructions.hpp>
#include <pka/corpus.hpp>
#include <pka/homsearch.hpp>
#include <pka/verify.hpp>

#include <benchmark/benchmark.h>

using namespace pka;

namespace {

auto corpus_member(std::int64_t i) -> FinitePKA { return standard_corpus().at(static_cast<std::size_t>(i)); }

void BM_VerifyPka(benchmark::State &state)
{
    const auto k = corpus_member(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_pka(k).pass());
    state.SetLabel(k.name());
}
BENCHMARK(BM_VerifyPka)->DenseRange(0, 4);

void BM_StarContinuity(benchmark::State &state)
{
    const auto k = corpus_member(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_star_continuity(k).pass());
    state.SetLabel(k.name());
}
BENCHMARK(BM_StarContinuity)->DenseRange(0, 4);

void BM_TotalCompletion(benchmark::State &state)
{
    const auto k = corpus_member(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(total_completion(k).parts.size());
    state.SetLabel(k.name());
}
BENCHMARK(BM_TotalCompletion)->DenseRange(0, 4);

void BM_QuotientStarContinuous(benchmark::State &state)
{
    const auto k = corpus_member(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(quotient_star_continuous(k).parts.size());
    state.SetLabel(k.name());
}
BENCHMARK(BM_QuotientStarContinuous)->DenseRange(0, 4);

void BM_ClosedSemiringFromKa(benchmark::State &state)
{
    const auto t = total_completion(corpus_member(state.range(0))).pka();
    for (auto _ : state)
        benchmark::DoNotOptimize(cs_from_ka(t).parts.size());
    state.SetLabel(t.name());
}
BENCHMARK(BM_ClosedSemiringFromKa)->DenseRange(0, 4);

void BM_EnumerateHoms(benchmark::State &state)
{
    const Structure t = total_completion(corpus_member(state.range(0))).pka();
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_homs(t, t, StructureKind::KA).size());
    state.SetLabel(structure_name(t));
}
BENCHMARK(BM_EnumerateHoms)->DenseRange(0, 4);

void BM_PfnGeneration(benchmark::State &state)
{
    const StringContext ctx({"p", "q"}, {"q"});
    for (auto _ : state)
        benchmark::DoNotOptimize(pfn_algebra(ctx).carrier.size());
}
BENCHMARK(BM_PfnGeneration);

void BM_SmallPkaSearch(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_small_pkas(n, 100'000'000, [](const FinitePKA &) { return true; }).algebras);
}
BENCHMARK(BM_SmallPkaSearch)->DenseRange(2, 4);

} // namespace

BENCHMARK_MAIN();
