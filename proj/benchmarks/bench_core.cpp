#include <benchmark/benchmark.h>

#include "e7/dims.hpp"
#include "e7/pde.hpp"
#include "e7/rep.hpp"
#include "e7/singular.hpp"
#include "e7/zeta.hpp"

namespace {

void bm_generate_full_rep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(e7::rep::generate_full_rep());
}
BENCHMARK(bm_generate_full_rep)->Unit(benchmark::kMillisecond);

void bm_verify_rep(benchmark::State& state) {
    const auto& t = e7::rep::full_rep();
    for (auto _ : state) benchmark::DoNotOptimize(e7::rep::verify_rep(t));
}
BENCHMARK(bm_verify_rep)->Unit(benchmark::kMillisecond);

void bm_build_zeta_basis(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(e7::zeta::build_zeta_basis());
}
BENCHMARK(bm_build_zeta_basis)->Unit(benchmark::kMillisecond);

void bm_zeta_rank(benchmark::State& state) {
    const auto& z = e7::zeta::zeta_basis();
    for (auto _ : state) benchmark::DoNotOptimize(e7::zeta::zeta_rank(z));
}
BENCHMARK(bm_zeta_rank)->Unit(benchmark::kMillisecond);

void bm_singular_space(benchmark::State& state) {
    using namespace e7::singular;
    const int which = static_cast<int>(state.range(0));
    const Fund w = which == 0 ? fund(1) : which == 1 ? fund(7) : which == 2 ? fund(6) : Fund{};
    const int d = which == 0 ? 2 : which == 1 ? 3 : 4;
    for (auto _ : state) benchmark::DoNotOptimize(singular_space(d, w));
}
BENCHMARK(bm_singular_space)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void bm_annihilation(benchmark::State& state) {
    const int m1 = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(e7::pde::check_annihilation(m1, 0, 0, 1));
}
BENCHMARK(bm_annihilation)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void bm_decomposition(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(e7::dims::decomposition_check(d));
}
BENCHMARK(bm_decomposition)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
