// Microbenchmarks for the hot paths: simulator kernels, encoders, classical
// solvers, and one full expectation-estimation step.
#include <benchmark/benchmark.h>

#include <vector>

#include "copq/ansatz.hpp"
#include "copq/instance.hpp"
#include "copq/ising.hpp"
#include "copq/qubo.hpp"
#include "copq/solvers.hpp"
#include "copq/statevector.hpp"
#include "copq/transpile.hpp"

using namespace copq;

namespace {

Statevector scrambled_state(int width) {
    Circuit circ;
    circ.width = width;
    for (int q = 0; q < width; ++q) circ.add(Gate::h(q));
    for (int q = 0; q + 1 < width; ++q) circ.add(Gate::cx(q, q + 1));
    return run(circ);
}

void hadamard_layer(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    Statevector sv = scrambled_state(width);
    for (auto _ : state) {
        for (int q = 0; q < width; ++q) apply_gate(sv, Gate::h(q));
        benchmark::DoNotOptimize(sv.amps.data());
    }
    state.SetItemsProcessed(state.iterations() * width);
}
BENCHMARK(hadamard_layer)->Arg(10)->Arg(14)->Arg(18);

void cx_chain(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    Statevector sv = scrambled_state(width);
    for (auto _ : state) {
        for (int q = 0; q + 1 < width; ++q) apply_gate(sv, Gate::cx(q, q + 1));
        benchmark::DoNotOptimize(sv.amps.data());
    }
    state.SetItemsProcessed(state.iterations() * (width - 1));
}
BENCHMARK(cx_chain)->Arg(10)->Arg(14)->Arg(18);

void rzz_layer(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    Statevector sv = scrambled_state(width);
    for (auto _ : state) {
        for (int q = 0; q + 1 < width; ++q) apply_gate(sv, Gate::rzz(q, q + 1, 0.3));
        benchmark::DoNotOptimize(sv.amps.data());
    }
    state.SetItemsProcessed(state.iterations() * (width - 1));
}
BENCHMARK(rzz_layer)->Arg(10)->Arg(14)->Arg(18);

void sample_shots(benchmark::State& state) {
    const Statevector sv = scrambled_state(12);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(sv, state.range(0), ++seed));
    }
}
BENCHMARK(sample_shots)->Arg(1024)->Arg(8192);

void encode_tour(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TspInstance inst = std::get<TspInstance>(random_instance(true, n, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_tsp(inst, double(10 * n)));
    }
}
BENCHMARK(encode_tour)->Arg(4)->Arg(6)->Arg(8);

void encode_assignment(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QapInstance inst = std::get<QapInstance>(random_instance(false, n, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_qap(inst, double(100 * n * n)));
    }
}
BENCHMARK(encode_assignment)->Arg(4)->Arg(6)->Arg(8);

void binary_to_spin(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst = random_instance(true, n, 1);
    const QuboModel q = encode(inst, default_penalty(inst));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qubo_to_ising(q));
    }
}
BENCHMARK(binary_to_spin)->Arg(4)->Arg(6)->Arg(8);

void spectrum_diagonal(benchmark::State& state) {
    const ProblemInstance inst = random_instance(true, 4, 1);
    const IsingHamiltonian h = qubo_to_ising(encode(inst, default_penalty(inst)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy_diagonal(h));
    }
}
BENCHMARK(spectrum_diagonal);

void best_first_search(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst = random_instance(true, n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bnb_solve(inst));
    }
}
BENCHMARK(best_first_search)->Arg(6)->Arg(8)->Arg(10);

void annealing_run(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst = random_instance(false, n, 1);
    const SaConfig cfg{1.0, 20, 0.90, 20.0};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sa_solve(inst, cfg, ++seed));
    }
}
BENCHMARK(annealing_run)->Arg(5)->Arg(8)->Arg(12);

void expectation_step(benchmark::State& state) {
    const ProblemInstance inst = random_instance(true, 3, 1);
    const IsingHamiltonian h = qubo_to_ising(encode(inst, default_penalty(inst)));
    const Circuit circ = transpile_to_basis(build_ansatz({AnsatzForm::two_local, 1, 9}, &h));
    std::vector<double> theta(18, 0.4);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_expectation(circ, theta, h, 1024, ++seed));
    }
}
BENCHMARK(expectation_step);

} // namespace

BENCHMARK_MAIN();
