// Microbenchmarks for the two parallel kernels against their serial
// references. The parallel paths replay the identical arithmetic, so these
// runs show the threading overhead/payoff without any accuracy tradeoff.

#include <benchmark/benchmark.h>

#include <complex>
#include <cstdint>
#include <random>

#include "subtile/eig.hpp"
#include "subtile/finite.hpp"

namespace {

subtile::eig::CMat random_hermitian(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    subtile::eig::CMat a(n, n);
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = subtile::eig::cplx(u(rng), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const subtile::eig::cplx v(u(rng), u(rng));
            a.at(i, j) = v;
            a.at(j, i) = std::conj(v);
        }
    }
    return a;
}

subtile::FiniteScene accumulation_scene() {
    subtile::FiniteScene s;
    s.moduli = {32, 32};
    s.lambda_divisors = {4, 4};
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) s.omega.push_back({x, y});
    s.shifts = {{0, 0}, {1, 3}, {5, 2}};
    return s;
}

void BM_JacobiSerial(benchmark::State& state) {
    const auto a = random_hermitian(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(subtile::eig::jacobi_eigenvalues_serial(a));
}

void BM_JacobiParallel(benchmark::State& state) {
    const auto a = random_hermitian(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(subtile::eig::jacobi_eigenvalues(a));
}

void BM_FrameOperatorSerial(benchmark::State& state) {
    const auto s = accumulation_scene();
    for (auto _ : state) benchmark::DoNotOptimize(subtile::frame_operator_serial(s));
}

void BM_FrameOperatorParallel(benchmark::State& state) {
    const auto s = accumulation_scene();
    for (auto _ : state) benchmark::DoNotOptimize(subtile::frame_operator(s));
}

} // namespace

// 64 stays under the parallel threshold, 256 sits at it, 320 is above it.
BENCHMARK(BM_JacobiSerial)->Arg(64)->Arg(256)->Arg(320)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(64)->Arg(256)->Arg(320)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrameOperatorSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrameOperatorParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
