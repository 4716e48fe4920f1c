// Serial reference vs OpenMP kernels on symmetric random matrices.
#include "rsusy/grid/kernels.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

using namespace rsusy;

namespace {

Matrix random_symmetric(int n, unsigned seed = 7) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) A(i, j) = A(j, i) = u(rng);
    return A;
}

template <class F>
void BM_matvec(benchmark::State& s, F f) {
    const int n = static_cast<int>(s.range(0));
    const Matrix A = random_symmetric(n);
    const std::vector<double> x(n, 1.0);
    for (auto _ : s) benchmark::DoNotOptimize(f(A, x));
    s.SetItemsProcessed(s.iterations() * int64_t(n) * n);
}

template <class F>
void BM_matmul(benchmark::State& s, F f) {
    const int n = static_cast<int>(s.range(0));
    const Matrix A = random_symmetric(n, 1), B = random_symmetric(n, 2);
    for (auto _ : s) benchmark::DoNotOptimize(f(A, B));
}

template <class F>
void BM_tridiagonalize(benchmark::State& s, F f) {
    const int n = static_cast<int>(s.range(0));
    const Matrix A = random_symmetric(n);
    for (auto _ : s) benchmark::DoNotOptimize(f(A));
}

}  // namespace

BENCHMARK_CAPTURE(BM_matvec, serial, &kernels::serial::matvec)->Arg(512)->Arg(2048);
BENCHMARK_CAPTURE(BM_matvec, parallel, &kernels::parallel::matvec)->Arg(512)->Arg(2048);
BENCHMARK_CAPTURE(BM_matmul, serial, &kernels::serial::matmul)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_matmul, parallel, &kernels::parallel::matmul)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_tridiagonalize, serial, &kernels::serial::tridiagonalize)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_tridiagonalize, parallel, &kernels::parallel::tridiagonalize)->Arg(128)->Arg(256);

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
