#include <benchmark/benchmark.h>

#include <random>

#include "bellkit/ks.hpp"
#include "bellkit/lhv.hpp"
#include "bellkit/quantum.hpp"

namespace {

bellkit::ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    bellkit::ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = bellkit::Complex{dist(rng), 0.0};
        for (std::size_t j = i + 1; j < dim; ++j) {
            const bellkit::Complex z{dist(rng), dist(rng)};
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

void BM_MatMul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const bellkit::ComplexMatrix a = random_hermitian(rng, n);
    const bellkit::ComplexMatrix b = random_hermitian(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_MatMul)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_HermitianEigensystem(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const bellkit::ComplexMatrix a = random_hermitian(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellkit::hermitian_eigensystem(a));
    }
}
BENCHMARK(BM_HermitianEigensystem)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ChshQuantum(benchmark::State& state) {
    const bellkit::QuantumState psi = bellkit::phased_bell_state();
    const bellkit::ChshSettings settings = bellkit::ChshSettings::pauli_xy();
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellkit::chsh_value(psi, settings));
    }
}
BENCHMARK(BM_ChshQuantum);

void BM_TsirelsonMax(benchmark::State& state) {
    const bellkit::ChshSettings settings = bellkit::ChshSettings::pauli_xy();
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellkit::tsirelson_max(settings));
    }
}
BENCHMARK(BM_TsirelsonMax);

void BM_LhvEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellkit::enumerate_deterministic_strategies());
    }
}
BENCHMARK(BM_LhvEnumeration);

void BM_SquareColoringSearch(benchmark::State& state) {
    const bellkit::KSInstance square = bellkit::mermin_peres_square();
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellkit::find_coloring(square));
    }
}
BENCHMARK(BM_SquareColoringSearch);

void BM_SquareVerification(benchmark::State& state) {
    const bellkit::KSInstance square = bellkit::mermin_peres_square();
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellkit::verify_instance(square));
    }
}
BENCHMARK(BM_SquareVerification);

}  // namespace

BENCHMARK_MAIN();
