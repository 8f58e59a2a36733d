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

#include <array>

#include "povm/matrix.hpp"

namespace povm {

/// A (possibly unnormalized) single-qubit vector.
using Spinor = std::array<Complex, 2>;

struct BlochPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    double dot(const BlochPoint &other) const;
    /// Azimuth in (-pi, pi].
    double azimuth() const;
};

/// Validated single-qubit density matrix: Hermitian, unit trace, eigenvalues
/// >= -1e-10 (all within 1e-10). Construction throws InvalidState otherwise.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix rho);

    /// |psi><psi| / <psi|psi>; throws ZeroOperator for psi = 0.
    static DensityMatrix pure(const Spinor &psi);
    static DensityMatrix maximally_mixed();

    const ComplexMatrix &matrix() const noexcept {
        return rho_;
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return rho_(r, c);
    }

   private:
    // Points slightly outside the ball map to eigenvalues down to -slack/2.
    DensityMatrix(ComplexMatrix rho, double eigen_floor);
    friend DensityMatrix bloch_to_state(const BlochPoint &p);

    ComplexMatrix rho_;
};

const ComplexMatrix &pauli_x();
const ComplexMatrix &pauli_y();
const ComplexMatrix &pauli_z();

/// (tr sigma_x rho, tr sigma_y rho, tr sigma_z rho).
BlochPoint state_to_bloch(const DensityMatrix &rho);

/// (1/2)[[1+z, x-iy],[x+iy, 1-z]]. Throws OutsideBall when |p| > 1 + 1e-9; points
/// just outside the sphere within that slack are kept as given.
DensityMatrix bloch_to_state(const BlochPoint &p);

/// Bloch image of the rank-one operator |psi><psi| rescaled to unit trace.
/// Throws ZeroOperator for a (numerically) zero vector.
BlochPoint povm_element_to_bloch(const Spinor &psi);

/// SO(3) image of a 2x2 unitary: R_ij = tr(sigma_i U sigma_j U^dagger)/2, row-major.
std::array<double, 9> bloch_rotation(const ComplexMatrix &u);

BlochPoint rotate(const std::array<double, 9> &rotation, const BlochPoint &p);

}  // namespace povm
