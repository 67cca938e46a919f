#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <ramanpt/hilbert.hpp>
#include <ramanpt/perturb.hpp>
#include <ramanpt/propagate.hpp>
#include <ramanpt/raman.hpp>
#include <ramanpt/trigpoly.hpp>

using namespace ramanpt;

namespace {

RamanConfig raman_config(int fock_cutoff)
{
    RamanConfig cfg;
    cfg.omega1 = 0.0;
    cfg.omega2 = 3.0;
    cfg.omega3 = 50.0;
    cfg.trap_freq = 1.0;
    cfg.space = SpaceSpec{.atomic_dim = 3, .mode_count = 1, .fock_cutoff = fock_cutoff, .buffer = 10};
    cfg.schemes.push_back(LaserPair{.g13 = 1.0, .g23 = 1.0, .eta13 = {0.1}, .eta23 = {-0.1}, .detuning = 100.0});
    return cfg;
}

Matrix random_anti_hermitian(Index n)
{
    std::mt19937_64 rng(42);
    std::normal_distribution<double> nd;
    Matrix a(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            a(i, j) = cplx(nd(rng), nd(rng));
    return (a - a.adjoint()) * 0.5;
}

void BM_MatrixExponential(benchmark::State& state)
{
    const Matrix a = random_anti_hermitian(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix_exponential(a));
}
BENCHMARK(BM_MatrixExponential)->Arg(8)->Arg(32)->Arg(93);

void BM_TrigPolyProduct(benchmark::State& state)
{
    const RamanConfig cfg = raman_config(static_cast<int>(state.range(0)));
    const TrigPolyOp h1 = build_interaction_orders(cfg).orders.front();
    for (auto _ : state)
        benchmark::DoNotOptimize(tp_product(h1, h1));
}
BENCHMARK(BM_TrigPolyProduct)->Arg(10)->Arg(20);

void BM_ComputeCZOrders(benchmark::State& state)
{
    const HamiltonianOrders h = build_interaction_orders(raman_config(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_cz_orders(h, 2));
}
BENCHMARK(BM_ComputeCZOrders)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PropagationStep(benchmark::State& state)
{
    const RamanConfig cfg = raman_config(20);
    const double dt = kStepFraction / max_frequency(cfg);
    const std::vector<double> samples{dt};
    PropagationSettings settings{.max_frequency = max_frequency(cfg), .period = std::nullopt, .n_phys = 10};
    settings.interior_only = state.range(0) != 0;
    const HamiltonianFn h = [&](double t) { return interaction_hamiltonian(cfg, t); };
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_propagate(h, dt, dt, samples, settings));
}
BENCHMARK(BM_PropagationStep)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

} // namespace
BENCHMARK_MAIN();
