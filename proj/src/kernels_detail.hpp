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
#include <vector>

#include "povm/kernels.hpp"

namespace povm::kernels::detail {

inline std::size_t bit_of(std::size_t n_qubits, std::size_t qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

/// Precomputed bit layout of one gate on one register size.
struct Wiring {
    std::size_t local_dim = 0;
    /// offsets[s] is the basis-index contribution of local index s.
    std::vector<std::size_t> offsets;
    std::size_t target_mask = 0;
    std::size_t control_mask = 0;
    std::size_t control_value = 0;
};

Wiring wire(const DenseOp &op, std::size_t n_qubits);

/// Applies the gate to the amplitude group anchored at `anchor` (target bits
/// zero). `scratch` must hold 2 * local_dim entries.
void apply_group(Complex *base, std::size_t stride, std::size_t anchor, const Wiring &w,
                 const std::vector<Complex> &matrix, Complex *scratch);

void apply_strided_serial(Complex *base, std::size_t stride, std::size_t n_qubits, const DenseOp &op,
                          const Wiring &w);

}  // namespace povm::kernels::detail
