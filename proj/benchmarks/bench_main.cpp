#include <benchmark/benchmark.h>

#include "hecl/cyclo.hpp"
#include "hecl/frobenius.hpp"
#include "hecl/gf.hpp"
#include "hecl/lfunc.hpp"
#include "hecl/oracle.hpp"
#include "hecl/stats.hpp"

using namespace hecl;

// Field construction including log/Zech tables.
static void BM_BuildField(benchmark::State& state) {
    const auto d = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf::build_field(5, d, std::nullopt, {}));
}
BENCHMARK(BM_BuildField)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_JacobiSum(benchmark::State& state) {
    // F_{5^6} and F_{3^10}, ell | order - 1
    const bool larger = state.range(0) == 1;
    auto f = larger ? gf::build_field(3, 10) : gf::build_field(5, 6);
    const unsigned ell = larger ? 11 : 31;
    for (auto _ : state) benchmark::DoNotOptimize(cyclo::jacobi_sum(f, ell, f->gen()));
    state.SetLabel(f->name());
}
BENCHMARK(BM_JacobiSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SignedPower(benchmark::State& state) {
    auto f = gf::build_field(83, 1);
    const auto j = cyclo::jacobi_sum(f, 41, f->from_int(5));
    for (auto _ : state) benchmark::DoNotOptimize(cyclo::signed_power(j, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SignedPower)->Arg(5)->Arg(20)->Arg(80);

static void BM_LPolyFromCurve(benchmark::State& state) {
    auto f = gf::build_field(83, 1);
    const auto curve = frobenius::make_curve(41, f, f->from_int(23), f->from_int(13));
    frobenius::AnalyzeOptions opts;
    opts.char_base = f->from_int(5);
    for (auto _ : state) benchmark::DoNotOptimize(lfunc::lpoly_from_profile(frobenius::analyze(curve, opts), curve));
}
BENCHMARK(BM_LPolyFromCurve)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormEven(benchmark::State& state) {
    auto f = gf::build_field(11, 1);
    for (auto _ : state) benchmark::DoNotOptimize(lfunc::closed_form(199, f, std::nullopt, 0));
}
BENCHMARK(BM_ClosedFormEven);

static void BM_PointCounter(benchmark::State& state) {
    auto f = gf::build_field(31, 1);
    const auto t = static_cast<unsigned>(state.range(0));
    oracle::PointCounter counter(5, f, t);
    const auto a = f->from_int(3), b = f->from_int(7);
    for (auto _ : state) benchmark::DoNotOptimize(counter.count(a, b));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(counter.field()->order()));
}
BENCHMARK(BM_PointCounter)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_AverageClassNumber(benchmark::State& state) {
    auto f = gf::build_field(static_cast<std::uint64_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(stats::average_class_number(11, f, stats::Split::All));
}
BENCHMARK(BM_AverageClassNumber)->Arg(23)->Arg(67)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
