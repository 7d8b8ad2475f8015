#include "limshape/family.hpp"
#include "limshape/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace limshape;

namespace {

MonomialIdeal sample(std::int64_t scale) {
    // Borel ideal in four variables with generators spread over several degrees
    return MonomialIdeal(4, {{2 * scale, 0, 0, 0},
                             {scale, scale, 0, 0},
                             {scale, 0, scale, 0},
                             {0, 3 * scale, 0, 0},
                             {0, 2 * scale, scale, 0},
                             {0, scale, 2 * scale, 0},
                             {0, 0, 3 * scale, 0}});
}

void BM_hf_reference(benchmark::State& st) {
    auto I = sample(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hf_reference(I, 8 * st.range(0)));
}
void BM_hf_serial(benchmark::State& st) {
    auto I = sample(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hf_serial(I, 8 * st.range(0)));
}
void BM_hf_parallel(benchmark::State& st) {
    auto I = sample(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hf_parallel(I, 8 * st.range(0)));
}
void BM_hf_range_serial(benchmark::State& st) {
    auto I = sample(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hf_range_serial(I, 8 * st.range(0)));
}
void BM_hf_range(benchmark::State& st) {
    auto I = sample(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hf_range(I, 8 * st.range(0)));
}

GradedFamily chain() {
    return make_chain_family({{Rational(4), Rational(0)}, {Rational(3), Rational(1)}, {Rational(1), Rational(4)}, {Rational(0), Rational(7)}});
}
void BM_graded_serial(benchmark::State& st) {
    auto F = chain();
    for (auto _ : st) benchmark::DoNotOptimize(verify_graded_serial(F, st.range(0)).pairs_checked);
}
void BM_graded_parallel(benchmark::State& st) {
    auto F = chain();
    for (auto _ : st) benchmark::DoNotOptimize(verify_graded(F, st.range(0)).pairs_checked);
}

}  // namespace

BENCHMARK(BM_hf_reference)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hf_serial)->Arg(2)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hf_parallel)->Arg(2)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hf_range_serial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hf_range)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graded_serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graded_parallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
