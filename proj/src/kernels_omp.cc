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

#include <string>

#ifdef POVM_HAVE_OPENMP
#include <omp.h>
#endif

#include "kernels_detail.hpp"
#include "povm/error.hpp"
#include "povm/kernels.hpp"

namespace povm::kernels {

namespace {

// Below this many independent work items the fork/join cost dominates.
constexpr std::ptrdiff_t kParallelThreshold = 1 << 11;

/// Scatters the bits of `compressed` into the positions of `free_bits`
/// (ascending bit positions), leaving the target bits zero.
std::size_t expand(std::size_t compressed, const std::vector<std::size_t> &free_bits) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < free_bits.size(); ++k) {
        if ((compressed >> k) & 1) {
            out |= free_bits[k];
        }
    }
    return out;
}

std::vector<std::size_t> free_bits_of(const detail::Wiring &w, std::size_t n_qubits) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < n_qubits; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        if ((w.target_mask & bit) == 0) {
            out.push_back(bit);
        }
    }
    return out;
}

void apply_strided_parallel(Complex *base, std::size_t stride, std::size_t n_qubits, const DenseOp &op,
                            const detail::Wiring &w) {
    const std::vector<std::size_t> free_bits = free_bits_of(w, n_qubits);
    const auto groups = static_cast<std::ptrdiff_t>(std::size_t{1} << free_bits.size());
#pragma omp parallel if (groups >= kParallelThreshold)
    {
        std::vector<Complex> scratch(2 * w.local_dim);
#pragma omp for schedule(static)
        for (std::ptrdiff_t g = 0; g < groups; ++g) {
            const std::size_t anchor = expand(static_cast<std::size_t>(g), free_bits);
            if ((anchor & w.control_mask) != w.control_value) {
                continue;
            }
            detail::apply_group(base, stride, anchor, w, op.matrix, scratch.data());
        }
    }
}

/// Applies the gate along `lines` independent strided lines in parallel; each
/// line runs the serial kernel.
void apply_lines(Complex *data, std::size_t lines, std::size_t line_step, std::size_t stride, std::size_t n_qubits,
                 const DenseOp &op, const detail::Wiring &w) {
    const auto count = static_cast<std::ptrdiff_t>(lines);
    const auto work = static_cast<std::ptrdiff_t>(lines * lines);
#pragma omp parallel for schedule(static) if (work >= kParallelThreshold)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        detail::apply_strided_serial(data + static_cast<std::size_t>(k) * line_step, stride, n_qubits, op, w);
    }
}

}  // namespace

bool openmp_available() {
#ifdef POVM_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

Backend default_backend() {
    return openmp_available() ? Backend::OpenMP : Backend::Serial;
}

int max_threads() {
#ifdef POVM_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef POVM_HAVE_OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

namespace omp {

void apply(std::span<Complex> amplitudes, std::size_t n_qubits, const DenseOp &op) {
    validate(op, n_qubits);
    if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
        fail(ErrorKind::InvalidDimension, "state vector length does not match the register");
    }
    apply_strided_parallel(amplitudes.data(), 1, n_qubits, op, detail::wire(op, n_qubits));
}

void apply_to_columns(std::span<Complex> matrix, std::size_t n_qubits, const DenseOp &op) {
    validate(op, n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (matrix.size() != dim * dim) {
        fail(ErrorKind::InvalidDimension, "matrix size does not match the register");
    }
    apply_lines(matrix.data(), dim, 1, dim, n_qubits, op, detail::wire(op, n_qubits));
}

void evolve_density(std::span<Complex> rho, std::size_t n_qubits, const DenseOp &op) {
    apply_to_columns(rho, n_qubits, op);
    const std::size_t dim = std::size_t{1} << n_qubits;
    const DenseOp conj = op.conjugated();
    apply_lines(rho.data(), dim, dim, 1, n_qubits, conj, detail::wire(conj, n_qubits));
}

}  // namespace omp

void apply(Backend backend, std::span<Complex> amplitudes, std::size_t n_qubits, const DenseOp &op) {
    backend == Backend::OpenMP ? omp::apply(amplitudes, n_qubits, op) : serial::apply(amplitudes, n_qubits, op);
}

void apply_to_columns(Backend backend, std::span<Complex> matrix, std::size_t n_qubits, const DenseOp &op) {
    backend == Backend::OpenMP ? omp::apply_to_columns(matrix, n_qubits, op)
                               : serial::apply_to_columns(matrix, n_qubits, op);
}

void evolve_density(Backend backend, std::span<Complex> rho, std::size_t n_qubits, const DenseOp &op) {
    backend == Backend::OpenMP ? omp::evolve_density(rho, n_qubits, op) : serial::evolve_density(rho, n_qubits, op);
}

}  // namespace povm::kernels
