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

#include "kernels_detail.hpp"
#include "povm/error.hpp"
#include "povm/kernels.hpp"

namespace povm::kernels {

DenseOp DenseOp::conjugated() const {
    DenseOp out = *this;
    for (Complex &z : out.matrix) {
        z = std::conj(z);
    }
    return out;
}

void validate(const DenseOp &op, std::size_t n_qubits) {
    const std::size_t k = op.targets.size();
    if (k == 0 || k > n_qubits) {
        fail(ErrorKind::InvalidGate, "gate needs between 1 and " + std::to_string(n_qubits) + " targets");
    }
    if (op.matrix.size() != (std::size_t{1} << (2 * k))) {
        fail(ErrorKind::InvalidGate, "gate matrix size does not match its target count");
    }
    std::vector<bool> used(n_qubits, false);
    auto claim = [&](std::size_t q) {
        if (q >= n_qubits) {
            fail(ErrorKind::InvalidGate, "qubit " + std::to_string(q) + " outside a " + std::to_string(n_qubits) +
                                             "-qubit register");
        }
        if (used[q]) {
            fail(ErrorKind::InvalidGate, "qubit " + std::to_string(q) + " used twice by one gate");
        }
        used[q] = true;
    };
    for (std::size_t q : op.targets) {
        claim(q);
    }
    for (const Control &c : op.controls) {
        claim(c.qubit);
        if (c.value != 0 && c.value != 1) {
            fail(ErrorKind::InvalidGate, "control value must be 0 or 1");
        }
    }
}

namespace detail {

Wiring wire(const DenseOp &op, std::size_t n_qubits) {
    Wiring w;
    const std::size_t k = op.targets.size();
    w.local_dim = std::size_t{1} << k;
    w.offsets.assign(w.local_dim, 0);
    for (std::size_t s = 0; s < w.local_dim; ++s) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((s >> (k - 1 - t)) & 1) {
                w.offsets[s] |= bit_of(n_qubits, op.targets[t]);
            }
        }
    }
    for (std::size_t q : op.targets) {
        w.target_mask |= bit_of(n_qubits, q);
    }
    for (const Control &c : op.controls) {
        const std::size_t b = bit_of(n_qubits, c.qubit);
        w.control_mask |= b;
        if (c.value == 1) {
            w.control_value |= b;
        }
    }
    return w;
}

void apply_group(Complex *base, std::size_t stride, std::size_t anchor, const Wiring &w,
                 const std::vector<Complex> &matrix, Complex *scratch) {
    for (std::size_t s = 0; s < w.local_dim; ++s) {
        scratch[s] = base[(anchor | w.offsets[s]) * stride];
    }
    for (std::size_t row = 0; row < w.local_dim; ++row) {
        Complex acc{};
        const Complex *m = matrix.data() + row * w.local_dim;
        for (std::size_t col = 0; col < w.local_dim; ++col) {
            acc += m[col] * scratch[col];
        }
        scratch[w.local_dim + row] = acc;
    }
    for (std::size_t s = 0; s < w.local_dim; ++s) {
        base[(anchor | w.offsets[s]) * stride] = scratch[w.local_dim + s];
    }
}

void apply_strided_serial(Complex *base, std::size_t stride, std::size_t n_qubits, const DenseOp &op,
                          const Wiring &w) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<Complex> scratch(2 * w.local_dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & w.target_mask) != 0 || (i & w.control_mask) != w.control_value) {
            continue;
        }
        apply_group(base, stride, i, w, op.matrix, scratch.data());
    }
}

}  // namespace detail

namespace serial {

void apply(std::span<Complex> amplitudes, std::size_t n_qubits, const DenseOp &op) {
    validate(op, n_qubits);
    if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
        fail(ErrorKind::InvalidDimension, "state vector length does not match the register");
    }
    detail::apply_strided_serial(amplitudes.data(), 1, n_qubits, op, detail::wire(op, n_qubits));
}

void apply_to_columns(std::span<Complex> matrix, std::size_t n_qubits, const DenseOp &op) {
    validate(op, n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (matrix.size() != dim * dim) {
        fail(ErrorKind::InvalidDimension, "matrix size does not match the register");
    }
    const detail::Wiring w = detail::wire(op, n_qubits);
    for (std::size_t c = 0; c < dim; ++c) {
        detail::apply_strided_serial(matrix.data() + c, dim, n_qubits, op, w);
    }
}

void evolve_density(std::span<Complex> rho, std::size_t n_qubits, const DenseOp &op) {
    apply_to_columns(rho, n_qubits, op);
    const std::size_t dim = std::size_t{1} << n_qubits;
    const DenseOp conj = op.conjugated();
    const detail::Wiring w = detail::wire(conj, n_qubits);
    // (X U^dagger) row i = conj(U) applied to row i of X.
    for (std::size_t r = 0; r < dim; ++r) {
        detail::apply_strided_serial(rho.data() + r * dim, 1, n_qubits, conj, w);
    }
}

}  // namespace serial

}  // namespace povm::kernels
