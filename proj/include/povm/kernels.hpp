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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "povm/matrix.hpp"

// Gate-application kernels on a register of n qubits, qubit 0 being the most
// significant bit of the basis index. Two implementations share one contract:
// `serial` is the plain reference used by the tests as ground truth, `omp`
// parallelizes the independent index groups with OpenMP. Both produce
// bit-identical results because every output amplitude is computed by the same
// arithmetic in the same order; only the distribution over threads differs.

namespace povm::kernels {

struct Control {
    std::size_t qubit;
    int value;
};

/// Dense 2^k x 2^k matrix (row-major) acting on `targets`, where targets[0]
/// is the most significant bit of the local index. The operation only touches
/// basis states whose control qubits carry the requested values.
struct DenseOp {
    std::vector<std::size_t> targets;
    std::vector<Complex> matrix;
    std::vector<Control> controls;

    /// Entrywise complex conjugate of the matrix; same wiring.
    DenseOp conjugated() const;
};

enum class Backend { Serial, OpenMP };

bool openmp_available();
/// OpenMP when compiled in, Serial otherwise.
Backend default_backend();
/// Thread count the OpenMP backend will use (1 without OpenMP).
int max_threads();
void set_threads(int n);

namespace serial {
/// amplitudes <- U amplitudes.
void apply(std::span<Complex> amplitudes, std::size_t n_qubits, const DenseOp &op);
/// Row-major r x r `matrix` <- U matrix (U applied to every column).
void apply_to_columns(std::span<Complex> matrix, std::size_t n_qubits, const DenseOp &op);
/// Row-major r x r `rho` <- U rho U^dagger.
void evolve_density(std::span<Complex> rho, std::size_t n_qubits, const DenseOp &op);
}  // namespace serial

namespace omp {
void apply(std::span<Complex> amplitudes, std::size_t n_qubits, const DenseOp &op);
void apply_to_columns(std::span<Complex> matrix, std::size_t n_qubits, const DenseOp &op);
void evolve_density(std::span<Complex> rho, std::size_t n_qubits, const DenseOp &op);
}  // namespace omp

void apply(Backend backend, std::span<Complex> amplitudes, std::size_t n_qubits, const DenseOp &op);
void apply_to_columns(Backend backend, std::span<Complex> matrix, std::size_t n_qubits, const DenseOp &op);
void evolve_density(Backend backend, std::span<Complex> rho, std::size_t n_qubits, const DenseOp &op);

/// Throws InvalidGate when the op does not fit an n-qubit register.
void validate(const DenseOp &op, std::size_t n_qubits);

}  // namespace povm::kernels
