#include <benchmark/benchmark.h>

#include <vector>

#include "gausswidth/assemble.hpp"
#include "gausswidth/expansion.hpp"
#include "gausswidth/hermite.hpp"
#include "gausswidth/ou_kernel.hpp"
#include "gausswidth/quadrature.hpp"
#include "gausswidth/test_functions.hpp"

namespace {

void BM_hermite_eval(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gw::hermite_eval(k, x));
        x += 1e-9; // defeat caching
    }
}
BENCHMARK(BM_hermite_eval)->Arg(8)->Arg(64)->Arg(512);

void BM_gauss_hermite_rule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rule = gw::gauss_hermite_rule(n);
        benchmark::DoNotOptimize(rule.nodes[0]);
    }
}
BENCHMARK(BM_gauss_hermite_rule)->Arg(16)->Arg(64)->Arg(256);

void BM_mehler(benchmark::State& state) {
    std::vector<double> x{0.3, -1.1}, y{0.7, 0.2};
    double t = 0.25;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gw::mehler(t, x, y));
        t += 1e-12;
    }
}
BENCHMARK(BM_mehler);

void BM_k_sigma(benchmark::State& state) {
    std::vector<double> x{0.0}, y{0.8};
    gw::KernelEvalConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gw::k_sigma(1.0, x, y, cfg));
    }
}
BENCHMARK(BM_k_sigma);

void BM_expand_2d(benchmark::State& state) {
    gw::TestFunction f = gw::test_function("gauss-bump", 2);
    for (auto _ : state) {
        auto e = gw::expand(f.eval, 2, 8, 40);
        benchmark::DoNotOptimize(e.coeffs.size());
    }
}
BENCHMARK(BM_expand_2d);

void BM_allocate(benchmark::State& state) {
    gw::AuxParams aux = gw::choose_aux_params(2.0, 1.0, 1.0, 2);
    for (auto _ : state) {
        auto alloc = gw::allocate(static_cast<long long>(state.range(0)), aux);
        benchmark::DoNotOptimize(alloc.total);
    }
}
BENCHMARK(BM_allocate)->Arg(1000)->Arg(100000);

void BM_partition_eval(benchmark::State& state) {
    gw::PartitionOfUnity part = gw::build_partition(1.5, 2, 2);
    std::vector<double> x{0.31, -0.77};
    for (auto _ : state) {
        benchmark::DoNotOptimize(part.phi(x));
        x[0] += 1e-9;
    }
}
BENCHMARK(BM_partition_eval);

void BM_assemble_small(benchmark::State& state) {
    gw::TestFunction f = gw::test_function("gauss-bump", 1);
    gw::AuxParams aux = gw::choose_aux_params(2.0, 1.0, 1.5, 1);
    gw::PartitionOfUnity part = gw::build_partition(1.5, 1, 2);
    gw::LocalOperator lop = gw::local_spline_sampler_operator(3);
    for (auto _ : state) {
        auto A = gw::assemble(f.eval, 128, part, aux, lop);
        benchmark::DoNotOptimize(A.total_rank());
    }
}
BENCHMARK(BM_assemble_small);

} // namespace

BENCHMARK_MAIN();
