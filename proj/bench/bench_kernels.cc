// Copyright 2026 The symmetric-povm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference vs OpenMP kernels on the operations the simulator uses.

#include <random>

#include <benchmark/benchmark.h>

#include "povm/circuit.hpp"
#include "povm/kernels.hpp"
#include "povm/simulator.hpp"

namespace {

using povm::Complex;
using povm::kernels::Backend;

std::vector<Complex> random_state(std::size_t n) {
    std::mt19937_64 gen(n);
    std::normal_distribution<double> g;
    std::vector<Complex> v(n);
    for (auto &z : v) {
        z = Complex(g(gen), g(gen));
    }
    return v;
}

povm::kernels::DenseOp two_qubit_op(std::size_t n) {
    const povm::ComplexMatrix f = povm::fourier_matrix(4);
    return {{0, n - 1}, {f.entries().begin(), f.entries().end()}, {}};
}

Backend backend_of(const benchmark::State &state) {
    return state.range(1) == 0 ? Backend::Serial : Backend::OpenMP;
}

void BM_Apply(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto op = two_qubit_op(n);
    std::vector<Complex> v = random_state(std::size_t{1} << n);
    for (auto _ : state) {
        povm::kernels::apply(backend_of(state), v, n, op);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_Apply)->ArgsProduct({{12, 16, 20}, {0, 1}});

void BM_EvolveDensity(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto op = two_qubit_op(n);
    std::vector<Complex> rho = random_state(std::size_t{1} << (2 * n));
    for (auto _ : state) {
        povm::kernels::evolve_density(backend_of(state), rho, n, op);
        benchmark::DoNotOptimize(rho.data());
    }
}
BENCHMARK(BM_EvolveDensity)->ArgsProduct({{5, 7, 9}, {0, 1}});

void BM_CompileDodecahedron(benchmark::State &state) {
    const povm::Circuit c = povm::synthesize_circuit(povm::PovmFamily::platonic(povm::FamilyKind::Dodecahedron));
    for (auto _ : state) {
        benchmark::DoNotOptimize(povm::compile_circuit(c, backend_of(state)));
    }
}
BENCHMARK(BM_CompileDodecahedron)->ArgsProduct({{5}, {0, 1}});

void BM_Sample(benchmark::State &state) {
    const povm::ProbabilityVector pv = povm::make_probability_vector(std::vector<double>(20, 0.05));
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(povm::sample(pv, shots, povm::kDefaultSeed, backend_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->ArgsProduct({{1 << 20}, {0, 1}});

void BM_VerifyIcosahedron(benchmark::State &state) {
    povm::VerifyOptions options;
    options.backend = backend_of(state);
    const auto f = povm::PovmFamily::platonic(povm::FamilyKind::Icosahedron);
    for (auto _ : state) {
        benchmark::DoNotOptimize(povm::verify_family(f, options));
    }
}
BENCHMARK(BM_VerifyIcosahedron)->ArgsProduct({{4}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
