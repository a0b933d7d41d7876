#include <benchmark/benchmark.h>

#include <cmv/algrec.hpp>
#include <cmv/gammazeta.hpp>
#include <cmv/heights.hpp>
#include <cmv/modforms.hpp>
#include <cmv/quadratic.hpp>
#include <cmv/units.hpp>

using namespace cmv;

static void BM_eta(benchmark::State& state) {
    long bits = state.range(0);
    PrecisionContext ctx(bits);
    long p = ctx.work_bits();
    BigComplex tau(BigReal::of(mpq_class(1, 3), p),
                   BigReal::of(mpq_class(7, 5), p));
    for (auto _ : state)
        benchmark::DoNotOptimize(eta(tau, ctx));
}
BENCHMARK(BM_eta)->Arg(128)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_lngamma(benchmark::State& state) {
    long bits = state.range(0);
    PrecisionContext ctx(bits);
    BigReal x = BigReal::of(mpq_class(9, 23), ctx.work_bits());
    for (auto _ : state)
        benchmark::DoNotOptimize(lngamma_real(x, ctx));
}
BENCHMARK(BM_lngamma)->Arg(256)->Arg(1024);

static void BM_cs_verify(benchmark::State& state) {
    long D = state.range(0);
    PrecisionContext ctx(256);
    ClassGroup cg = reduced_forms(field_data(D % 4 == 0 ? D / 4 : D));
    for (auto _ : state)
        benchmark::DoNotOptimize(cs_verify(cg, ctx));
}
BENCHMARK(BM_cs_verify)->Arg(4)->Arg(23)->Arg(191);

static void BM_rho_table(benchmark::State& state) {
    long D = state.range(0);
    FieldData field = field_data(D % 4 == 0 ? D / 4 : D);
    PrecisionContext ctx(256);
    for (auto _ : state)
        benchmark::DoNotOptimize(rho_table(field, ctx));
}
BENCHMARK(BM_rho_table)->Arg(23)->Arg(95)->Arg(191);

static void BM_compose_forms(benchmark::State& state) {
    ClassGroup cg = reduced_forms(field_data(191));
    for (auto _ : state)
        for (const QuadForm& f : cg.forms)
            for (const QuadForm& g : cg.forms)
                benchmark::DoNotOptimize(compose_forms(f, g));
}
BENCHMARK(BM_compose_forms);

static void BM_lll_algdep(benchmark::State& state) {
    long bits = state.range(0);
    PrecisionContext ctx(bits);
    BigReal x = BigReal::of(2L, ctx.work_bits()).pow_q(mpq_class(1, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(algdep(x, 3, ctx));
}
BENCHMARK(BM_lll_algdep)->Arg(128)->Arg(256)->Arg(512);

static void BM_hilbert_class_polynomial(benchmark::State& state) {
    long D = state.range(0);
    PrecisionContext ctx(256);
    ClassGroup cg = reduced_forms(field_data(D % 4 == 0 ? D / 4 : D));
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert_class_polynomial(cg, ctx));
}
BENCHMARK(BM_hilbert_class_polynomial)->Arg(23)->Arg(95);

BENCHMARK_MAIN();
