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

#include "povm/neumark.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "povm/error.hpp"

namespace povm {

namespace {

constexpr double kIsometryTol = 1e-8;
constexpr double kSkipThreshold = 1e-6;
constexpr double kZeroColumn = 1e-12;

std::size_t log2_exact(std::size_t r) {
    if (r == 0 || !std::has_single_bit(r)) {
        fail(ErrorKind::InvalidDimension, "register dimension " + std::to_string(r) + " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(r));
}

ComplexMatrix padded_fourier(std::size_t m, std::size_t size) {
    return direct_sum(fourier_matrix(m), ComplexMatrix::identity(size - m));
}

OutcomeMap invert(const std::vector<std::size_t> &placement, std::size_t r) {
    OutcomeMap map(r);
    for (std::size_t j = 0; j < placement.size(); ++j) {
        map[placement[j]] = j;
    }
    return map;
}

void require_fits(bool ok, std::size_t r, std::size_t n) {
    if (!ok) {
        fail(ErrorKind::RegisterTooSmall,
             "register of dimension " + std::to_string(r) + " cannot hold " + std::to_string(n) + " outcomes");
    }
}

}  // namespace

std::size_t register_qubits(std::size_t n) {
    std::size_t l = 1;
    while ((std::size_t{1} << l) < n) {
        ++l;
    }
    return l;
}

std::vector<std::size_t> canonical_basis_indices(const Povm &p, std::size_t r) {
    log2_exact(r);
    const std::size_t n = p.size();
    require_fits(r >= n, r, n);
    std::vector<std::size_t> out(n);
    const FamilyKind kind = p.family() ? p.family()->kind() : FamilyKind::Cyclic;
    switch (kind) {
        case FamilyKind::Dihedral:
        case FamilyKind::Octahedron:
        case FamilyKind::Cube: {
            const std::size_t m = n / 2;
            require_fits(r / 2 >= m, r, n);
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t slot = kind == FamilyKind::Cube ? (m - j) % m : j;
                out[j] = slot;
                out[m + j] = r / 2 + slot;
            }
            break;
        }
        case FamilyKind::Dodecahedron:
        case FamilyKind::Icosahedron: {
            const std::size_t m = n / 4;
            require_fits(r / 4 >= m, r, n);
            for (std::size_t k = 0; k < 4; ++k) {
                for (std::size_t j = 0; j < m; ++j) {
                    out[k * m + j] = k * (r / 4) + j;
                }
            }
            break;
        }
        case FamilyKind::Tetrahedron:
            // Two orbits of two; contiguous on the native 2-qubit register.
            for (std::size_t j = 0; j < n; ++j) {
                out[j] = (j / 2) * (r / 2) + (j % 2);
            }
            break;
        case FamilyKind::Cyclic:
            for (std::size_t j = 0; j < n; ++j) {
                out[j] = j;
            }
            break;
    }
    return out;
}

OutcomeMap outcome_map_for(const Povm &p, std::size_t r) {
    return invert(canonical_basis_indices(p, r), r);
}

ComplexMatrix pad_with_zero_operators(const Povm &p, std::size_t r) {
    const std::vector<std::size_t> placement = canonical_basis_indices(p, r);
    std::vector<Complex> entries(2 * r, Complex{});
    for (std::size_t j = 0; j < p.size(); ++j) {
        entries[placement[j]] = p.vectors()[j][0];
        entries[r + placement[j]] = p.vectors()[j][1];
    }
    return ComplexMatrix(2, r, entries);
}

ComplexMatrix cnot_permutation(std::size_t n_qubits, std::size_t control, std::size_t target) {
    if (control >= n_qubits || target >= n_qubits || control == target) {
        fail(ErrorKind::InvalidGate, "bad XOR gate wiring");
    }
    const std::size_t r = std::size_t{1} << n_qubits;
    const std::size_t cbit = std::size_t{1} << (n_qubits - 1 - control);
    const std::size_t tbit = std::size_t{1} << (n_qubits - 1 - target);
    return ComplexMatrix::from_function(r, r, [&](std::size_t row, std::size_t col) {
        const std::size_t image = (col & cbit) ? (col ^ tbit) : col;
        return Complex(image == row ? 1.0 : 0.0);
    });
}

ComplexMatrix dihedral_t_matrix(std::size_t r, const DihedralSeed &seed) {
    log2_exact(r);
    if (r < 2) {
        fail(ErrorKind::InvalidDimension, "T_r needs r >= 2");
    }
    const std::size_t h = r / 2;
    const Complex a = seed.alpha;
    const Complex b = seed.beta;
    return ComplexMatrix::from_function(r, r, [&](std::size_t row, std::size_t col) -> Complex {
        const std::size_t k = row % h;
        if (col % h != k) {
            return 0.0;
        }
        const bool even = k % 2 == 0;
        const bool upper = row < h;
        const bool left = col < h;
        if (upper && left) return a;
        if (upper) return even ? b : -std::conj(b);
        if (left) return even ? std::conj(b) : b;
        return even ? -a : a;
    });
}

ComplexMatrix orbit_coupling_matrix(FamilyKind kind) {
    const PlatonicConstants k = platonic_constants(kind);
    const double a = k.alpha;
    const double b = k.beta;
    const double g = k.gamma;
    const double d = k.delta;
    switch (kind) {
        case FamilyKind::Tetrahedron:
        case FamilyKind::Cube:
        case FamilyKind::Octahedron:
            return ComplexMatrix{{a, b}, {b, -a}};
        default: {
            const double s = std::sqrt(0.5);
            return ComplexMatrix{
                {s * a, s * b, s * g, s * d},
                {s * b, -s * a, s * d, -s * g},
                {s * g, -s * d, -s * a, s * b},
                {s * d, s * g, -s * b, -s * a},
            };
        }
    }
}

DilatedMeasurement structured_dilation(const PovmFamily &family) {
    // Throws DegenerateOrbit for collapsed dihedral seeds.
    const Povm p = build_povm(family);
    DilatedMeasurement out;
    switch (family.kind()) {
        case FamilyKind::Cyclic: {
            const std::size_t m = family.m();
            out.n_qubits = register_qubits(m);
            out.m_tilde = padded_fourier(m, out.dimension());
            break;
        }
        case FamilyKind::Dihedral: {
            const std::size_t m = family.m();
            out.n_qubits = register_qubits(2 * m);
            const std::size_t r = out.dimension();
            out.m_tilde = cnot_permutation(out.n_qubits, out.n_qubits - 1, 0) * dihedral_t_matrix(r, family.seed()) *
                          tensor_product(ComplexMatrix::identity(2), padded_fourier(m, r / 2));
            break;
        }
        case FamilyKind::Tetrahedron: {
            const PlatonicConstants k = platonic_constants(FamilyKind::Tetrahedron);
            const double a = k.alpha * k.rescale;
            const double b = k.beta * k.rescale;
            const ComplexMatrix body{
                {a, a, b, b},
                {a, -a, -kI * b, kI * b},
                {b, b, -a, -a},
                {b, -b, kI * a, -kI * a},
            };
            out.n_qubits = 2;
            out.m_tilde = cnot_permutation(2, 1, 0) * body;
            break;
        }
        case FamilyKind::Cube:
            out.n_qubits = 3;
            out.m_tilde =
                cnot_permutation(3, 2, 0) * tensor_product(orbit_coupling_matrix(FamilyKind::Cube), fourier_matrix(4));
            break;
        case FamilyKind::Octahedron:
            out.n_qubits = 3;
            out.m_tilde = cnot_permutation(3, 2, 0) *
                          tensor_product(orbit_coupling_matrix(FamilyKind::Octahedron), padded_fourier(3, 4));
            break;
        case FamilyKind::Dodecahedron:
            out.n_qubits = 5;
            out.m_tilde = cnot_permutation(5, 4, 1) *
                          tensor_product(orbit_coupling_matrix(FamilyKind::Dodecahedron), padded_fourier(5, 8));
            break;
        case FamilyKind::Icosahedron:
            out.n_qubits = 4;
            out.m_tilde = cnot_permutation(4, 3, 1) *
                          tensor_product(orbit_coupling_matrix(FamilyKind::Icosahedron), padded_fourier(3, 4));
            break;
    }
    out.outcome_map = outcome_map_for(p, out.dimension());
    return out;
}

DilatedMeasurement generic_completion(const ComplexMatrix &padded) {
    OutcomeMap map(padded.cols());
    std::size_t next = 0;
    for (std::size_t c = 0; c < padded.cols(); ++c) {
        if (std::abs(padded(0, c)) > kZeroColumn || std::abs(padded(1, c)) > kZeroColumn) {
            map[c] = next++;
        }
    }
    return generic_completion(padded, std::move(map));
}

DilatedMeasurement generic_completion(const ComplexMatrix &padded, OutcomeMap outcome_map) {
    if (padded.rows() != 2) {
        fail(ErrorKind::InvalidDimension, "completion expects a 2 x r matrix");
    }
    const std::size_t r = padded.cols();
    const std::size_t l = log2_exact(r);
    if (outcome_map.size() != r) {
        fail(ErrorKind::InvalidDimension, "outcome map length does not match the register");
    }
    const ComplexMatrix gram = padded * padded.adjoint();
    if ((gram - ComplexMatrix::identity(2)).max_abs() > kIsometryTol) {
        fail(ErrorKind::NotIsometry, "rows are not orthonormal");
    }

    // Rows of the result, as vectors; <u,v> = sum conj(u_i) v_i.
    std::vector<std::vector<Complex>> basis{padded.row(0), padded.row(1)};
    auto project_out = [&](std::vector<Complex> &v) {
        for (const auto &b : basis) {
            Complex overlap{};
            for (std::size_t i = 0; i < r; ++i) {
                overlap += std::conj(b[i]) * v[i];
            }
            for (std::size_t i = 0; i < r; ++i) {
                v[i] -= overlap * b[i];
            }
        }
    };
    for (std::size_t k = 0; k < r && basis.size() < r; ++k) {
        std::vector<Complex> v(r, Complex{});
        v[k] = 1.0;
        project_out(v);
        // Second sweep restores orthogonality lost to rounding.
        project_out(v);
        double norm = 0.0;
        for (const Complex &z : v) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        if (norm < kSkipThreshold) {
            continue;
        }
        for (Complex &z : v) {
            z /= norm;
        }
        basis.push_back(std::move(v));
    }
    if (basis.size() != r) {
        fail(ErrorKind::NotIsometry, "could not complete the rows to a basis");
    }

    DilatedMeasurement out;
    out.n_qubits = l;
    out.m_tilde = ComplexMatrix::from_function(r, r, [&](std::size_t row, std::size_t col) {
        return basis[row][col];
    });
    out.outcome_map = std::move(outcome_map);
    return out;
}

DilatedMeasurement generic_completion(const Povm &p) {
    const std::size_t r = std::size_t{1} << register_qubits(p.size());
    return generic_completion(pad_with_zero_operators(p, r), outcome_map_for(p, r));
}

}  // namespace povm
