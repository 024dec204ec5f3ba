// Serial reference vs OpenMP variant of each hot loop. Arg(0) = serial, Arg(1) = parallel.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "jumpkit/averaging.hpp"
#include "jumpkit/geometry.hpp"
#include "jumpkit/kernels.hpp"
#include "jumpkit/random.hpp"

using namespace jumpkit;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(rng, -1, 1);
    return v;
}

void BM_CubeAverage(benchmark::State& st) {
    const int d = 5, M = 16;
    auto f = random_values(1u << 20, 1);
    std::vector<double> out(f.size());
    for (auto _ : st) {
        avg_discrete_cube_real(f, out, d, M, 4, exec_of(st));
        benchmark::DoNotOptimize(out.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(f.size()));
}
BENCHMARK(BM_CubeAverage)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_JumpEvents(benchmark::State& st) {
    auto v = random_values(3u << 18, 2);
    for (auto _ : st) {
        auto ev = kernels::collect_jump_events(v, 3, exec_of(st));
        benchmark::DoNotOptimize(ev.data());
    }
}
BENCHMARK(BM_JumpEvents)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PowSum(benchmark::State& st) {
    auto v = random_values(1u << 22, 3);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::blocked_pow_sum(v, 1.51, exec_of(st)));
}
BENCHMARK(BM_PowSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GridMax(benchmark::State& st) {
    auto v = random_values(1u << 22, 4);
    for (auto _ : st) {
        auto m = kernels::grid_max(v.size(), [&](std::size_t i) { return std::sin(v[i]) * std::exp(v[i]); },
                                   exec_of(st));
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_GridMax)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BoundaryMc(benchmark::State& st) {
    auto body = ConvexBodySpec::lq_ball(3, 2);
    for (auto _ : st) benchmark::DoNotOptimize(boundary_neighborhood_measure(body, 0.1, 1u << 20, 5, exec_of(st)));
}
BENCHMARK(BM_BoundaryMc)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
