// Serial reference path against the OpenMP path for the two hot loops:
// the radial kernel with its derivatives and the hop-1 simulator.

#include <benchmark/benchmark.h>

#include "fdnet/kernels.hpp"
#include "fdnet/model.hpp"
#include "fdnet/montecarlo.hpp"

namespace {

using fdnet::Execution;

void BM_UpsilonDerivatives(benchmark::State& state, Execution exec)
{
    fdnet::NetworkConfig const cfg;
    fdnet::QuadratureSettings q;
    q.exec = exec;
    int const order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            fdnet::upsilon_derivatives(625, order, cfg, q));
}

void BM_SimulateHop1(benchmark::State& state, Execution exec)
{
    fdnet::NetworkConfig cfg;
    cfg.lambda = 1e-4;
    cfg.n_rx = cfg.n_tx = 2;
    fdnet::SimulationSettings sim;
    sim.exec = exec;
    auto const trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fdnet::simulate_hop1(cfg, trials, 1, sim));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_UpsilonDerivatives, serial, Execution::Serial)
    ->Arg(0)
    ->Arg(7)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_UpsilonDerivatives, parallel, Execution::Parallel)
    ->Arg(0)
    ->Arg(7)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SimulateHop1, serial, Execution::Serial)
    ->Arg(20000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SimulateHop1, parallel, Execution::Parallel)
    ->Arg(20000)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
