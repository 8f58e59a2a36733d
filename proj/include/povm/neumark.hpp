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

#include <optional>
#include <vector>

#include "povm/families.hpp"
#include "povm/matrix.hpp"

namespace povm {

/// Basis index -> POVM outcome, or nullopt for a zero-operator (padding) slot.
using OutcomeMap = std::vector<std::optional<std::size_t>>;

/// Orthogonal measurement on an l-qubit register reproducing a POVM.
///
/// Rows 0 and 1 of `m_tilde` are the POVM vectors laid out in basis-state
/// order; measuring in the computational basis after applying m_tilde^dagger
/// to rho (+) 0 yields outcome `outcome_map[k]` for basis state k.
struct DilatedMeasurement {
    ComplexMatrix m_tilde;
    std::size_t n_qubits = 0;
    OutcomeMap outcome_map;

    std::size_t dimension() const noexcept {
        return std::size_t{1} << n_qubits;
    }
};

/// Smallest l >= 1 with 2^l >= n.
std::size_t register_qubits(std::size_t n);

/// Basis index assigned to each outcome on a register of dimension r:
///   cyclic, tetrahedron, untagged   j
///   dihedral, octahedron            first orbit j, second orbit r/2 + j
///   cube                            as dihedral, with j -> -j mod 4 inside each orbit
///   dodecahedron, icosahedron       orbit k at k*r/4 + j
/// Throws InvalidDimension when r is not a power of two and RegisterTooSmall
/// when the layout does not fit.
std::vector<std::size_t> canonical_basis_indices(const Povm &p, std::size_t r);

OutcomeMap outcome_map_for(const Povm &p, std::size_t r);

/// 2 x r matrix whose columns are the POVM vectors at their canonical basis
/// indices and zero elsewhere.
ComplexMatrix pad_with_zero_operators(const Povm &p, std::size_t r);

/// Permutation matrix of an XOR gate (qubit 0 is the most significant bit).
ComplexMatrix cnot_permutation(std::size_t n_qubits, std::size_t control, std::size_t target);

/// T_r for a dihedral seed: four r/2 x r/2 diagonal blocks whose pattern
/// alternates with the index parity,
///   [ alpha        (+beta, -conj beta, ...) ]
///   [ (conj beta, beta, ...)  (-alpha, +alpha, ...) ].
ComplexMatrix dihedral_t_matrix(std::size_t r, const DihedralSeed &seed);

/// Matrix coupling the cyclic orbits of a platonic solid: [[a,b],[b,-a]] for
/// tetrahedron, cube and octahedron; the 4x4 sign-patterned A/sqrt(2) for
/// dodecahedron and icosahedron. Always unitary.
ComplexMatrix orbit_coupling_matrix(FamilyKind kind);

/// Factorized dilation for each family; see the README for the per-family forms.
DilatedMeasurement structured_dilation(const PovmFamily &family);

/// Completes a 2 x r matrix with orthonormal rows (within 1e-8) to a unitary by
/// modified Gram-Schmidt over e_0, e_1, ... in index order. Candidates whose
/// residual norm drops below 1e-6 are skipped. Throws NotIsometry otherwise.
/// Without an explicit map, zero columns are padding and the remaining
/// columns are numbered left to right.
DilatedMeasurement generic_completion(const ComplexMatrix &padded);
DilatedMeasurement generic_completion(const ComplexMatrix &padded, OutcomeMap outcome_map);
/// Pads `p` onto its smallest register and completes it.
DilatedMeasurement generic_completion(const Povm &p);

}  // namespace povm
