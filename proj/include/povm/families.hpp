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
#include <string>
#include <string_view>
#include <vector>

#include "povm/bloch.hpp"
#include "povm/matrix.hpp"

namespace povm {

enum class FamilyKind {
    Cyclic,
    Dihedral,
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
};

std::string_view to_string(FamilyKind kind);
/// Case-insensitive; accepts "tetra", "octa", ... as short forms.
std::optional<FamilyKind> parse_family_kind(std::string_view name);
bool is_platonic(FamilyKind kind);

/// Unit-length orbit seed (alpha, beta) with alpha real and non-negative.
struct DihedralSeed {
    double alpha = 1.0;
    Complex beta = 0.0;

    /// (cos(theta/2), sin(theta/2)) for a polar angle theta in radians.
    static DihedralSeed from_polar(double theta);
};

/// Which symmetric POVM to build. Construction validates the parameters.
class PovmFamily {
   public:
    static PovmFamily cyclic(std::size_t m);
    static PovmFamily dihedral(std::size_t m, DihedralSeed seed);
    static PovmFamily platonic(FamilyKind kind);

    FamilyKind kind() const noexcept {
        return kind_;
    }
    /// Orbit size; 0 for the platonic solids.
    std::size_t m() const noexcept {
        return m_;
    }
    const DihedralSeed &seed() const noexcept {
        return seed_;
    }
    /// Short human-readable label, e.g. "dihedral(m=5)".
    std::string label() const;

   private:
    PovmFamily(FamilyKind kind, std::size_t m, DihedralSeed seed) : kind_(kind), m_(m), seed_(seed) {
    }

    FamilyKind kind_;
    std::size_t m_;
    DihedralSeed seed_;
};

/// Radical closed forms for the platonic solids, before the completeness
/// rescaling. gamma and delta are zero for tetrahedron, cube and octahedron.
struct PlatonicConstants {
    double alpha;
    double beta;
    double gamma;
    double delta;
    /// Order of the root of unity used by the orbit (4 for the i-factors of the tetrahedron).
    std::size_t omega_order;
    /// Factor applied to every vector so that the elements sum to I_2.
    double rescale;
};

PlatonicConstants platonic_constants(FamilyKind kind);

/// Ordered rank-one outcome vectors. The family tag is provenance only; a
/// Povm built from raw vectors carries none and is not validated on
/// construction (see validate_povm).
class Povm {
   public:
    explicit Povm(std::vector<Spinor> vectors, std::optional<PovmFamily> family = std::nullopt);

    const std::vector<Spinor> &vectors() const noexcept {
        return vectors_;
    }
    std::size_t size() const noexcept {
        return vectors_.size();
    }
    const std::optional<PovmFamily> &family() const noexcept {
        return family_;
    }

    /// A_j = |Psi_j><Psi_j|.
    ComplexMatrix element(std::size_t j) const;
    /// M = (|Psi_1> ... |Psi_n>), 2 x n.
    ComplexMatrix vector_matrix() const;

   private:
    std::vector<Spinor> vectors_;
    std::optional<PovmFamily> family_;
};

Povm cyclic_povm(std::size_t m);
Povm dihedral_povm(std::size_t m, DihedralSeed seed);
Povm platonic_povm(FamilyKind kind);
Povm build_povm(const PovmFamily &family);

/// |Psi_j> -> u|Psi_j>. Throws InvalidRotation unless u is a 2x2 unitary within 1e-10.
Povm rotate_povm(const Povm &p, const ComplexMatrix &u);

struct PovmValidation {
    double completeness_residual;
    double norm_spread;
    std::size_t distinct_points;
    /// Completeness and norm spread both within the tolerance.
    bool pass;
};

PovmValidation validate_povm(const Povm &p, Tolerance tol = Tolerance{});

/// Number of distinct Bloch images among the non-zero vectors; two points are
/// the same when they are closer than `tol`.
std::size_t count_distinct_bloch_points(const std::vector<Spinor> &vectors, double tol = 1e-8);

}  // namespace povm
