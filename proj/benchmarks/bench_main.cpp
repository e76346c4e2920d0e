#include "diagcell/cover.hpp"
#include "diagcell/forms.hpp"
#include "diagcell/matrix.hpp"
#include "diagcell/tor.hpp"
#include "diagcell/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace diagcell;

namespace {

StructureAlgebra tl(std::size_t n, long delta, const Ring& r) { return build_algebra(Family::tl, n, r.from_int(delta), r); }

void BM_BuildBrauer(benchmark::State& st) {
    Ring r = Ring::prime_field(5);
    for (auto _ : st) benchmark::DoNotOptimize(build_algebra(Family::brauer, st.range(0), r.from_int(2), r).dim());
}
BENCHMARK(BM_BuildBrauer)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BuildJones(benchmark::State& st) {
    Ring r = Ring::prime_field(5);
    for (auto _ : st) benchmark::DoNotOptimize(build_algebra(Family::jones, st.range(0), r.zero(), r).dim());
}
BENCHMARK(BM_BuildJones)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_VerifyTL(benchmark::State& st) {
    auto a = tl(st.range(0), 0, Ring::prime_field(5));
    auto d = CellDatum::build(a);
    for (auto _ : st) {
        benchmark::DoNotOptimize(verify_naive_cellular(a, d).passed);
        benchmark::DoNotOptimize(verify_diagram_like(a, d).passed);
    }
}
BENCHMARK(BM_VerifyTL)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_GramBrauer4(benchmark::State& st) {
    Ring r = Ring::rationals();
    auto a = build_algebra(Family::brauer, 4, r.from_int(2), r);
    auto d = CellDatum::build(a);
    for (auto _ : st)
        for (int li = 0; li < static_cast<int>(d.levels().size()); ++li) benchmark::DoNotOptimize(gram_table(a, d, li));
}
BENCHMARK(BM_GramBrauer4)->Unit(benchmark::kMillisecond);

void BM_CoverTL(benchmark::State& st) {
    auto a = tl(st.range(0), 0, Ring::prime_field(5));
    for (auto _ : st) benchmark::DoNotOptimize(tl_cover(a).height);
}
BENCHMARK(BM_CoverTL)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_TorTL(benchmark::State& st) {
    auto a = tl(st.range(0), 0, Ring::prime_field(2));
    TorOptions o;
    o.qmax = 3;
    for (auto _ : st) benchmark::DoNotOptimize(tor_dims(a, o).dims);
}
BENCHMARK(BM_TorTL)->DenseRange(5, 7, 2)->Unit(benchmark::kMillisecond);

void BM_RankRational(benchmark::State& st) {
    Ring q = Ring::rationals();
    std::mt19937 rng(1);
    const std::size_t n = st.range(0);
    Matrix m(q, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = q.from_int(static_cast<long>(rng() % 19) - 9);
    for (auto _ : st) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
