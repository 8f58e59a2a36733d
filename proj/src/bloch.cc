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

#include "povm/bloch.hpp"

#include <cmath>
#include <string>

#include "povm/error.hpp"

namespace povm {

namespace {

constexpr double kStateTol = 1e-10;
constexpr double kBallSlack = 1e-9;

}  // namespace

double BlochPoint::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

double BlochPoint::dot(const BlochPoint &other) const {
    return x * other.x + y * other.y + z * other.z;
}

double BlochPoint::azimuth() const {
    return std::atan2(y, x);
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : DensityMatrix(std::move(rho), -kStateTol) {
}

DensityMatrix::DensityMatrix(ComplexMatrix rho, double eigen_floor) : rho_(std::move(rho)) {
    if (rho_.rows() != 2 || rho_.cols() != 2) {
        fail(ErrorKind::InvalidState, "density matrix must be 2x2");
    }
    if ((rho_ - rho_.adjoint()).max_abs() > kStateTol) {
        fail(ErrorKind::InvalidState, "density matrix is not Hermitian");
    }
    const Complex tr = rho_.trace();
    if (std::abs(tr - 1.0) > kStateTol) {
        fail(ErrorKind::InvalidState, "density matrix trace is " + std::to_string(tr.real()));
    }
    // Smallest eigenvalue of a Hermitian 2x2 with unit trace.
    const double a = rho_(0, 0).real();
    const double d = rho_(1, 1).real();
    const double off = std::abs(rho_(0, 1));
    const double lambda_min = 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + off * off);
    if (lambda_min < eigen_floor) {
        fail(ErrorKind::InvalidState, "density matrix has eigenvalue " + std::to_string(lambda_min));
    }
}

DensityMatrix DensityMatrix::pure(const Spinor &psi) {
    const double n2 = std::norm(psi[0]) + std::norm(psi[1]);
    if (n2 <= 1e-300) {
        fail(ErrorKind::ZeroOperator, "zero vector has no pure state");
    }
    return DensityMatrix(ComplexMatrix::from_function(2, 2, [&](std::size_t r, std::size_t c) {
        return psi[r] * std::conj(psi[c]) / n2;
    }));
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(ComplexMatrix::identity(2) * 0.5);
}

const ComplexMatrix &pauli_x() {
    static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}

const ComplexMatrix &pauli_y() {
    static const ComplexMatrix m{{0.0, -kI}, {kI, 0.0}};
    return m;
}

const ComplexMatrix &pauli_z() {
    static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

BlochPoint state_to_bloch(const DensityMatrix &rho) {
    const ComplexMatrix &m = rho.matrix();
    return {(pauli_x() * m).trace().real(), (pauli_y() * m).trace().real(), (pauli_z() * m).trace().real()};
}

DensityMatrix bloch_to_state(const BlochPoint &p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
        fail(ErrorKind::OutsideBall, "Bloch point is not finite");
    }
    if (p.norm() > 1.0 + kBallSlack) {
        fail(ErrorKind::OutsideBall, "Bloch point has norm " + std::to_string(p.norm()));
    }
    return DensityMatrix(
        ComplexMatrix{
            {0.5 * (1.0 + p.z), 0.5 * Complex(p.x, -p.y)},
            {0.5 * Complex(p.x, p.y), 0.5 * (1.0 - p.z)},
        },
        -kStateTol - 0.5 * kBallSlack);
}

BlochPoint povm_element_to_bloch(const Spinor &psi) {
    const double n2 = std::norm(psi[0]) + std::norm(psi[1]);
    if (n2 <= 1e-24) {
        fail(ErrorKind::ZeroOperator, "zero POVM element has no Bloch image");
    }
    // Closed form of tr(sigma_k |psi><psi|)/<psi|psi>.
    const Complex cross = std::conj(psi[0]) * psi[1];
    return {2.0 * cross.real() / n2, 2.0 * cross.imag() / n2, (std::norm(psi[0]) - std::norm(psi[1])) / n2};
}

std::array<double, 9> bloch_rotation(const ComplexMatrix &u) {
    const ComplexMatrix *paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    const ComplexMatrix ud = u.adjoint();
    std::array<double, 9> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            out[3 * i + j] = 0.5 * (*paulis[i] * u * *paulis[j] * ud).trace().real();
        }
    }
    return out;
}

BlochPoint rotate(const std::array<double, 9> &r, const BlochPoint &p) {
    return {r[0] * p.x + r[1] * p.y + r[2] * p.z, r[3] * p.x + r[4] * p.y + r[5] * p.z,
            r[6] * p.x + r[7] * p.y + r[8] * p.z};
}

}  // namespace povm
