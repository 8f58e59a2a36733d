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

#include "povm/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "povm/error.hpp"

namespace povm {

namespace {

constexpr double kSeedTol = 1e-10;

Complex root_of_unity(std::size_t order, std::size_t power) {
    return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(power % order) / static_cast<double>(order));
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

/// Appends (p, sign * q * w^j) for j = 0..order-1, all scaled by `scale`.
void append_orbit(std::vector<Spinor> &out, double p, double q, double sign, std::size_t order, double scale) {
    for (std::size_t j = 0; j < order; ++j) {
        out.push_back({Complex(p * scale), sign * q * scale * root_of_unity(order, j)});
    }
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Cyclic:
            return "cyclic";
        case FamilyKind::Dihedral:
            return "dihedral";
        case FamilyKind::Tetrahedron:
            return "tetrahedron";
        case FamilyKind::Cube:
            return "cube";
        case FamilyKind::Octahedron:
            return "octahedron";
        case FamilyKind::Dodecahedron:
            return "dodecahedron";
        case FamilyKind::Icosahedron:
            return "icosahedron";
    }
    return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
    const std::string key = lowercase(name);
    for (FamilyKind k : {FamilyKind::Cyclic, FamilyKind::Dihedral, FamilyKind::Tetrahedron, FamilyKind::Cube,
                         FamilyKind::Octahedron, FamilyKind::Dodecahedron, FamilyKind::Icosahedron}) {
        if (key == to_string(k)) {
            return k;
        }
    }
    if (key == "tetra") return FamilyKind::Tetrahedron;
    if (key == "octa") return FamilyKind::Octahedron;
    if (key == "dodeca") return FamilyKind::Dodecahedron;
    if (key == "icosa") return FamilyKind::Icosahedron;
    return std::nullopt;
}

bool is_platonic(FamilyKind kind) {
    return kind != FamilyKind::Cyclic && kind != FamilyKind::Dihedral;
}

DihedralSeed DihedralSeed::from_polar(double theta) {
    return {std::cos(theta / 2.0), Complex(std::sin(theta / 2.0))};
}

PovmFamily PovmFamily::cyclic(std::size_t m) {
    if (m < 2) {
        fail(ErrorKind::InvalidParameter, "cyclic POVM needs m >= 2, got " + std::to_string(m));
    }
    return PovmFamily(FamilyKind::Cyclic, m, DihedralSeed{});
}

PovmFamily PovmFamily::dihedral(std::size_t m, DihedralSeed seed) {
    if (m < 2) {
        fail(ErrorKind::InvalidParameter, "dihedral POVM needs m >= 2, got " + std::to_string(m));
    }
    if (!std::isfinite(seed.alpha) || !std::isfinite(seed.beta.real()) || !std::isfinite(seed.beta.imag())) {
        fail(ErrorKind::InvalidParameter, "dihedral seed is not finite");
    }
    if (seed.alpha < 0.0) {
        fail(ErrorKind::InvalidParameter, "dihedral seed alpha must be real and non-negative");
    }
    const double n2 = seed.alpha * seed.alpha + std::norm(seed.beta);
    if (std::abs(n2 - 1.0) > kSeedTol) {
        fail(ErrorKind::InvalidParameter, "dihedral seed must satisfy alpha^2 + |beta|^2 = 1");
    }
    return PovmFamily(FamilyKind::Dihedral, m, seed);
}

PovmFamily PovmFamily::platonic(FamilyKind kind) {
    if (!is_platonic(kind)) {
        fail(ErrorKind::InvalidParameter, std::string(to_string(kind)) + " is not a platonic solid");
    }
    return PovmFamily(kind, 0, DihedralSeed{});
}

std::string PovmFamily::label() const {
    std::string out(to_string(kind_));
    if (!is_platonic(kind_)) {
        out += "(m=" + std::to_string(m_) + ")";
    }
    return out;
}

PlatonicConstants platonic_constants(FamilyKind kind) {
    const double s3 = std::sqrt(3.0);
    const double s5 = std::sqrt(5.0);
    // Shared by the three solids whose top face/edge sits at polar cos = 1/sqrt(3).
    const double a3 = std::sqrt((3.0 + s3) / 6.0);
    const double b3 = std::sqrt((3.0 - s3) / 6.0);
    // Dodecahedron and icosahedron.
    const double a5 = std::sqrt(0.5 + std::sqrt(75.0 + 30.0 * s5) / 30.0);
    const double b5 = std::sqrt(0.5 - std::sqrt(75.0 + 30.0 * s5) / 30.0);
    const double g5 = std::sqrt(0.5 + std::sqrt(75.0 - 30.0 * s5) / 30.0);
    const double d5 = std::sqrt(0.5 - std::sqrt(75.0 - 30.0 * s5) / 30.0);
    switch (kind) {
        case FamilyKind::Tetrahedron:
            return {a3, b3, 0.0, 0.0, 4, std::sqrt(0.5)};
        case FamilyKind::Cube:
            return {a3, b3, 0.0, 0.0, 4, 0.5};
        case FamilyKind::Octahedron:
            return {a3, b3, 0.0, 0.0, 3, std::sqrt(1.0 / 3.0)};
        case FamilyKind::Dodecahedron:
            return {a5, b5, g5, d5, 5, std::sqrt(0.1)};
        case FamilyKind::Icosahedron:
            // gamma and delta trade places relative to the dodecahedron.
            return {a5, b5, d5, g5, 3, std::sqrt(1.0 / 6.0)};
        default:
            fail(ErrorKind::InvalidParameter, std::string(to_string(kind)) + " has no platonic constants");
    }
}

Povm::Povm(std::vector<Spinor> vectors, std::optional<PovmFamily> family)
    : vectors_(std::move(vectors)), family_(std::move(family)) {
    for (const Spinor &v : vectors_) {
        for (const Complex &z : v) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                fail(ErrorKind::NonFinite, "POVM vector entry is not finite");
            }
        }
    }
}

ComplexMatrix Povm::element(std::size_t j) const {
    const Spinor &v = vectors_.at(j);
    return ComplexMatrix::from_function(2, 2, [&](std::size_t r, std::size_t c) {
        return v[r] * std::conj(v[c]);
    });
}

ComplexMatrix Povm::vector_matrix() const {
    return ComplexMatrix::from_function(2, vectors_.size(), [&](std::size_t r, std::size_t c) {
        return vectors_[c][r];
    });
}

Povm cyclic_povm(std::size_t m) {
    const PovmFamily family = PovmFamily::cyclic(m);
    std::vector<Spinor> vs;
    append_orbit(vs, 1.0, 1.0, 1.0, m, 1.0 / std::sqrt(static_cast<double>(m)));
    return Povm(std::move(vs), family);
}

Povm dihedral_povm(std::size_t m, DihedralSeed seed) {
    const PovmFamily family = PovmFamily::dihedral(m, seed);
    if (seed.alpha <= kSeedTol || std::abs(seed.beta) <= kSeedTol) {
        fail(ErrorKind::DegenerateOrbit, "orbit collapses to the two points (1,0) and (0,1)");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<Spinor> vs;
    vs.reserve(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        vs.push_back({Complex(seed.alpha * scale), seed.beta * scale * root_of_unity(m, j)});
    }
    for (std::size_t j = 0; j < m; ++j) {
        vs.push_back({seed.beta * scale, seed.alpha * scale * root_of_unity(m, j)});
    }
    const std::size_t distinct = count_distinct_bloch_points(vs);
    if (distinct < 2 * m) {
        fail(ErrorKind::DegenerateOrbit, "orbit has only " + std::to_string(distinct) + " distinct Bloch points, expected " +
                                             std::to_string(2 * m));
    }
    return Povm(std::move(vs), family);
}

Povm platonic_povm(FamilyKind kind) {
    const PovmFamily family = PovmFamily::platonic(kind);
    const PlatonicConstants k = platonic_constants(kind);
    const double a = k.alpha * k.rescale;
    const double b = k.beta * k.rescale;
    std::vector<Spinor> vs;
    switch (kind) {
        case FamilyKind::Tetrahedron:
            vs = {{Complex(a), Complex(b)}, {Complex(a), Complex(-b)}, {Complex(b), kI * a}, {Complex(b), -kI * a}};
            break;
        case FamilyKind::Cube:
            // Listed with i^j in the second component, as printed; the dilation's
            // outcome map reconciles this with F_4's exp(-2 pi i/4).
            vs = {{Complex(a), Complex(b)},  {Complex(a), kI * b},  {Complex(a), Complex(-b)}, {Complex(a), -kI * b},
                  {Complex(b), Complex(-a)}, {Complex(b), -kI * a}, {Complex(b), Complex(a)},  {Complex(b), kI * a}};
            break;
        case FamilyKind::Octahedron:
            append_orbit(vs, k.alpha, k.beta, 1.0, 3, k.rescale);
            append_orbit(vs, k.beta, k.alpha, -1.0, 3, k.rescale);
            break;
        case FamilyKind::Dodecahedron:
        case FamilyKind::Icosahedron:
            append_orbit(vs, k.alpha, k.beta, 1.0, k.omega_order, k.rescale);
            append_orbit(vs, k.beta, k.alpha, -1.0, k.omega_order, k.rescale);
            append_orbit(vs, k.gamma, k.delta, 1.0, k.omega_order, k.rescale);
            append_orbit(vs, k.delta, k.gamma, -1.0, k.omega_order, k.rescale);
            break;
        default:
            break;
    }
    return Povm(std::move(vs), family);
}

Povm build_povm(const PovmFamily &family) {
    switch (family.kind()) {
        case FamilyKind::Cyclic:
            return cyclic_povm(family.m());
        case FamilyKind::Dihedral:
            return dihedral_povm(family.m(), family.seed());
        default:
            return platonic_povm(family.kind());
    }
}

Povm rotate_povm(const Povm &p, const ComplexMatrix &u) {
    if (u.rows() != 2 || u.cols() != 2 || check_unitary(u) > kStructuralTol) {
        fail(ErrorKind::InvalidRotation, "rotation must be a 2x2 unitary");
    }
    std::vector<Spinor> out;
    out.reserve(p.size());
    for (const Spinor &v : p.vectors()) {
        out.push_back({u(0, 0) * v[0] + u(0, 1) * v[1], u(1, 0) * v[0] + u(1, 1) * v[1]});
    }
    return Povm(std::move(out), p.family());
}

PovmValidation validate_povm(const Povm &p, Tolerance tol) {
    ComplexMatrix sum(2, 2);
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        sum = sum + p.element(j);
        const double n = std::sqrt(std::norm(p.vectors()[j][0]) + std::norm(p.vectors()[j][1]));
        lo = j == 0 ? n : std::min(lo, n);
        hi = j == 0 ? n : std::max(hi, n);
    }
    PovmValidation v{};
    v.completeness_residual = (sum - ComplexMatrix::identity(2)).max_abs();
    v.norm_spread = hi - lo;
    v.distinct_points = count_distinct_bloch_points(p.vectors());
    v.pass = v.completeness_residual <= tol.eps() && v.norm_spread <= tol.eps();
    return v;
}

std::size_t count_distinct_bloch_points(const std::vector<Spinor> &vectors, double tol) {
    std::vector<BlochPoint> seen;
    for (const Spinor &v : vectors) {
        if (std::norm(v[0]) + std::norm(v[1]) <= 1e-24) {
            continue;
        }
        const BlochPoint p = povm_element_to_bloch(v);
        const bool dup = std::any_of(seen.begin(), seen.end(), [&](const BlochPoint &q) {
            return std::hypot(p.x - q.x, p.y - q.y, p.z - q.z) < tol;
        });
        if (!dup) {
            seen.push_back(p);
        }
    }
    return seen.size();
}

}  // namespace povm
