// Serial reference kernels against their OpenMP counterparts.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "genkron/kernels.hpp"
#include "genkron/series.hpp"
#include "genkron/verify.hpp"

namespace {

using namespace genkron;

std::vector<Rational> dense_operand(int trunc, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    std::vector<Rational> c(kernels::tri_size(trunc));
    for (auto& x : c) {
        x = make_rational(num(rng), den(rng));
    }
    return c;
}

template <auto Mul>
void BM_BiMul(benchmark::State& state)
{
    const int p = static_cast<int>(state.range(0));
    auto lhs = dense_operand(p, 1);
    auto rhs = dense_operand(p, 2);
    std::vector<Rational> out(kernels::tri_size(p));
    for (auto _ : state) {
        Mul(lhs, rhs, out, p);
        benchmark::DoNotOptimize(out.data());
    }
}

template <auto Sum>
void BM_BracketSum(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Sum(m, m / 2, m, true));
    }
}

void BM_GeneralizedSweep(benchmark::State& state)
{
    const auto exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
    const auto checks = generalized_checks(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto report = run_checks("generalized", checks, exec);
        benchmark::DoNotOptimize(report.failures);
    }
}

} // namespace

BENCHMARK(BM_BiMul<genkron::kernels::serial::bi_mul>)->Name("bi_mul/serial")->Arg(8)->Arg(12)->Arg(16)->Arg(24);
BENCHMARK(BM_BiMul<genkron::kernels::omp::bi_mul>)->Name("bi_mul/omp")->Arg(8)->Arg(12)->Arg(16)->Arg(24)->UseRealTime();
BENCHMARK(BM_BracketSum<genkron::kernels::serial::bracket_sum>)->Name("bracket_sum/serial")->Arg(50)->Arg(100)->Arg(200);
BENCHMARK(BM_BracketSum<genkron::kernels::omp::bracket_sum>)->Name("bracket_sum/omp")->Arg(50)->Arg(100)->Arg(200)->UseRealTime();
BENCHMARK(BM_GeneralizedSweep)->Name("generalized_sweep")->Args({0, 15})->Args({1, 15})->UseRealTime();

BENCHMARK_MAIN();
