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


#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "povm/families.hpp"
#include "test_util.hpp"

namespace povm {
namespace {

using testing::expect_kind;

const double kS3 = std::sqrt(3.0);
const double kS5 = std::sqrt(5.0);

DihedralSeed tetra_seed() {
    return {std::sqrt((3.0 + kS3) / 6.0), std::sqrt((3.0 - kS3) / 6.0)};
}

std::vector<PovmFamily> all_families() {
    std::vector<PovmFamily> out;
    for (std::size_t m = 2; m <= 16; ++m) {
        out.push_back(PovmFamily::cyclic(m));
    }
    for (std::size_t m = 2; m <= 8; ++m) {
        for (double theta : {0.4, 1.1, 2.3}) {
            out.push_back(PovmFamily::dihedral(m, DihedralSeed::from_polar(theta)));
        }
    }
    for (FamilyKind k : {FamilyKind::Tetrahedron, FamilyKind::Cube, FamilyKind::Octahedron, FamilyKind::Dodecahedron,
                         FamilyKind::Icosahedron}) {
        out.push_back(PovmFamily::platonic(k));
    }
    return out;
}

std::vector<std::array<double, 3>> bloch_points(const Povm &p) {
    std::vector<std::array<double, 3>> out;
    for (const Spinor &v : p.vectors()) {
        out.push_back(oracle::bloch_of(v));
    }
    return out;
}

/// Completeness computed from the outer products written out.
double completeness_oracle(const Povm &p) {
    Complex s[2][2] = {};
    for (const Spinor &v : p.vectors()) {
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                s[r][c] += v[r] * std::conj(v[c]);
            }
        }
    }
    double worst = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            worst = std::max(worst, std::abs(s[r][c] - (r == c ? 1.0 : 0.0)));
        }
    }
    return worst;
}

bool same_point_set(const std::vector<std::array<double, 3>> &a, const std::vector<std::array<double, 3>> &b,
                    double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (const auto &p : a) {
        const bool found = std::any_of(b.begin(), b.end(), [&](const auto &q) {
            return std::abs(p[0] - q[0]) < tol && std::abs(p[1] - q[1]) < tol && std::abs(p[2] - q[2]) < tol;
        });
        if (!found) {
            return false;
        }
    }
    return true;
}

TEST(Families, ParseNames) {
    EXPECT_EQ(parse_family_kind("Tetrahedron"), FamilyKind::Tetrahedron);
    EXPECT_EQ(parse_family_kind("icosa"), FamilyKind::Icosahedron);
    EXPECT_EQ(parse_family_kind("DIHEDRAL"), FamilyKind::Dihedral);
    EXPECT_FALSE(parse_family_kind("prism"));
    EXPECT_TRUE(is_platonic(FamilyKind::Cube));
    EXPECT_FALSE(is_platonic(FamilyKind::Cyclic));
}

TEST(Families, ParameterChecks) {
    expect_kind(ErrorKind::InvalidParameter, [] { PovmFamily::cyclic(1); });
    expect_kind(ErrorKind::InvalidParameter, [] { PovmFamily::dihedral(1, tetra_seed()); });
    expect_kind(ErrorKind::InvalidParameter, [] { PovmFamily::dihedral(3, {0.5, 0.5}); });
    expect_kind(ErrorKind::InvalidParameter, [] { PovmFamily::dihedral(3, {-0.6, 0.8}); });
    expect_kind(ErrorKind::InvalidParameter, [] { PovmFamily::platonic(FamilyKind::Cyclic); });
}

TEST(Families, EveryFamilyIsCompleteWithEqualNorms) {
    for (const PovmFamily &f : all_families()) {
        const Povm p = build_povm(f);
        EXPECT_LE(completeness_oracle(p), 1e-10) << f.label();
        const PovmValidation v = validate_povm(p);
        EXPECT_TRUE(v.pass) << f.label();
        EXPECT_LE(v.norm_spread, 1e-10) << f.label();
        for (const auto &b : bloch_points(p)) {
            EXPECT_NEAR(oracle::dot(b, b), 1.0, 1e-10) << f.label();
        }
    }
}

TEST(Families, CyclicThree) {
    const Povm p = cyclic_povm(3);
    const Complex w = std::polar(1.0, -2.0 * M_PI / 3.0);
    const ComplexMatrix a1{{1.0, 1.0}, {1.0, 1.0}};
    const ComplexMatrix a2{{1.0, w * w}, {w, 1.0}};
    const ComplexMatrix a3{{1.0, w}, {w * w, 1.0}};
    EXPECT_LE(max_entry_distance(p.element(0), a1 * Complex(1.0 / 3.0)), 1e-12);
    EXPECT_LE(max_entry_distance(p.element(1), a2 * Complex(1.0 / 3.0)), 1e-12);
    EXPECT_LE(max_entry_distance(p.element(2), a3 * Complex(1.0 / 3.0)), 1e-12);
}

TEST(Families, CyclicTwoIsTheHadamardBasis) {
    const Povm p = cyclic_povm(2);
    const double s = std::sqrt(0.5);
    EXPECT_LE(std::abs(p.vectors()[0][0] - s), 1e-15);
    EXPECT_LE(std::abs(p.vectors()[1][1] + s), 1e-15);
    EXPECT_LE(std::abs(std::conj(p.vectors()[0][0]) * p.vectors()[1][0] +
                       std::conj(p.vectors()[0][1]) * p.vectors()[1][1]),
              1e-15);
}

TEST(Families, CyclicAzimuths) {
    for (std::size_t m : {3u, 8u, 13u}) {
        const Povm p = cyclic_povm(m);
        for (std::size_t j = 0; j < m; ++j) {
            const BlochPoint b = povm_element_to_bloch(p.vectors()[j]);
            EXPECT_NEAR(b.z, 0.0, 1e-12);
            const double want = -2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m);
            const double diff = std::remainder(b.azimuth() - want, 2.0 * M_PI);
            EXPECT_NEAR(diff, 0.0, 1e-10) << m << " " << j;
        }
    }
}

TEST(Families, DihedralFiveWithTetraConstants) {
    const Povm p = dihedral_povm(5, tetra_seed());
    EXPECT_EQ(p.size(), 10u);
    EXPECT_LE(completeness_oracle(p), 1e-10);
    EXPECT_EQ(count_distinct_bloch_points(p.vectors()), 10u);
}

TEST(Families, DihedralDegenerateSeeds) {
    const double s = std::sqrt(0.5);
    expect_kind(ErrorKind::DegenerateOrbit, [&] { dihedral_povm(2, {s, s}); });
    expect_kind(ErrorKind::DegenerateOrbit, [] { dihedral_povm(4, {1.0, 0.0}); });
    expect_kind(ErrorKind::DegenerateOrbit, [] { dihedral_povm(3, {0.0, 1.0}); });
    // Equatorial seed for m >= 3 folds the two orbits together.
    expect_kind(ErrorKind::DegenerateOrbit, [&] { dihedral_povm(4, {s, s}); });
}

TEST(Families, DihedralFourWithCubeConstantsIsTheCube) {
    const Povm d = dihedral_povm(4, tetra_seed());
    const Povm c = platonic_povm(FamilyKind::Cube);
    EXPECT_TRUE(same_point_set(bloch_points(d), bloch_points(c), 1e-10));
}

TEST(Families, TetrahedronVectors) {
    const Povm p = platonic_povm(FamilyKind::Tetrahedron);
    const double a = std::sqrt((3.0 + kS3) / 12.0);
    const double b = std::sqrt((3.0 - kS3) / 12.0);
    const Spinor want[] = {{a, b}, {a, -b}, {b, kI * a}, {b, -kI * a}};
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_LE(std::abs(p.vectors()[j][0] - want[j][0]), 1e-12);
        EXPECT_LE(std::abs(p.vectors()[j][1] - want[j][1]), 1e-12);
    }
    const auto pts = bloch_points(p);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            EXPECT_NEAR(oracle::dot(pts[i], pts[j]), -1.0 / 3.0, 1e-9);
        }
    }
}

TEST(Families, OctahedronAntipodalPairs) {
    const auto pts = bloch_points(platonic_povm(FamilyKind::Octahedron));
    ASSERT_EQ(pts.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) {
        int opposite = 0;
        int orthogonal = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            if (i == j) continue;
            const double d = oracle::dot(pts[i], pts[j]);
            opposite += std::abs(d + 1.0) < 1e-9;
            orthogonal += std::abs(d) < 1e-9;
        }
        EXPECT_EQ(opposite, 1);
        EXPECT_EQ(orthogonal, 4);
    }
}

TEST(Families, CubeAndOctahedronClosedUnderInversion) {
    for (FamilyKind k : {FamilyKind::Cube, FamilyKind::Octahedron}) {
        const auto pts = bloch_points(platonic_povm(k));
        auto flipped = pts;
        for (auto &p : flipped) {
            p = {-p[0], -p[1], -p[2]};
        }
        EXPECT_TRUE(same_point_set(pts, flipped, 1e-10)) << to_string(k);
    }
}

TEST(Families, IcosahedronDots) {
    const auto pts = bloch_points(platonic_povm(FamilyKind::Icosahedron));
    ASSERT_EQ(pts.size(), 12u);
    const double s = 1.0 / kS5;
    for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = i + 1; j < 12; ++j) {
            const double d = oracle::dot(pts[i], pts[j]);
            const bool ok = std::abs(d + 1.0) < 1e-9 || std::abs(d - s) < 1e-9 || std::abs(d + s) < 1e-9;
            EXPECT_TRUE(ok) << i << "," << j << " dot " << d;
        }
    }
}

TEST(Families, DodecahedronDots) {
    const auto pts = bloch_points(platonic_povm(FamilyKind::Dodecahedron));
    ASSERT_EQ(pts.size(), 20u);
    const double allowed[] = {-1.0, kS5 / 3.0, -kS5 / 3.0, 1.0 / 3.0, -1.0 / 3.0};
    for (std::size_t i = 0; i < 20; ++i) {
        for (std::size_t j = i + 1; j < 20; ++j) {
            const double d = oracle::dot(pts[i], pts[j]);
            EXPECT_TRUE(std::any_of(std::begin(allowed), std::end(allowed), [&](double a) {
                return std::abs(d - a) < 1e-9;
            })) << d;
        }
    }
}

TEST(Families, VertexOneCoordinates) {
    const std::array<double, 3> small{std::sqrt(2.0 / 3.0), 0.0, std::sqrt(1.0 / 3.0)};
    const std::array<double, 3> large{std::sqrt((10.0 - 2.0 * kS5) / 15.0), 0.0, std::sqrt((5.0 + 2.0 * kS5) / 15.0)};
    for (FamilyKind k : {FamilyKind::Tetrahedron, FamilyKind::Cube, FamilyKind::Octahedron, FamilyKind::Dodecahedron,
                         FamilyKind::Icosahedron}) {
        const auto want = (k == FamilyKind::Dodecahedron || k == FamilyKind::Icosahedron) ? large : small;
        const auto got = oracle::bloch_of(platonic_povm(k).vectors()[0]);
        for (int i = 0; i < 3; ++i) {
            EXPECT_NEAR(got[i], want[i], 1e-10) << to_string(k);
        }
    }
}

TEST(Families, ConstantsFromRadicals) {
    const PlatonicConstants t = platonic_constants(FamilyKind::Tetrahedron);
    EXPECT_NEAR(t.alpha, std::sqrt((3.0 + kS3) / 6.0), 1e-12);
    EXPECT_NEAR(t.alpha * t.rescale * t.alpha * t.rescale, (3.0 + kS3) / 12.0, 1e-12);
    const PlatonicConstants d = platonic_constants(FamilyKind::Dodecahedron);
    EXPECT_NEAR(d.alpha, std::sqrt(0.5 + std::sqrt(75.0 + 30.0 * kS5) / 30.0), 1e-12);
    EXPECT_EQ(platonic_povm(FamilyKind::Dodecahedron).size(), 20u);
}

TEST(Families, RotatePovm) {
    const Povm p = cyclic_povm(6);
    const Povm same = rotate_povm(p, ComplexMatrix::identity(2));
    for (std::size_t j = 0; j < p.size(); ++j) {
        EXPECT_EQ(same.vectors()[j], p.vectors()[j]);
    }
    const double theta = 0.3;
    const Povm turned = rotate_povm(p, ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, theta)}});
    for (std::size_t j = 0; j < p.size(); ++j) {
        const double before = povm_element_to_bloch(p.vectors()[j]).azimuth();
        const double after = povm_element_to_bloch(turned.vectors()[j]).azimuth();
        EXPECT_NEAR(std::remainder(after - before - theta, 2.0 * M_PI), 0.0, 1e-12);
    }
    const double c = std::cos(0.4), s = std::sin(0.4);
    const ComplexMatrix u{{c, -s * kI}, {-s * kI, c}};
    for (const PovmFamily &f : all_families()) {
        EXPECT_LE(completeness_oracle(rotate_povm(build_povm(f), u)), 1e-10) << f.label();
    }
    expect_kind(ErrorKind::InvalidRotation, [&] { rotate_povm(p, ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}); });
    expect_kind(ErrorKind::InvalidRotation, [&] { rotate_povm(p, ComplexMatrix::identity(3)); });
}

TEST(Families, ValidatePovm) {
    const PovmValidation six = validate_povm(cyclic_povm(6));
    EXPECT_LE(six.completeness_residual, 1e-12);
    EXPECT_LE(six.norm_spread, 1e-12);
    const PovmValidation basis = validate_povm(Povm({{1.0, 0.0}, {0.0, 1.0}}));
    EXPECT_LE(basis.completeness_residual, 1e-12);
    EXPECT_EQ(basis.distinct_points, 2u);
    const PovmValidation doubled = validate_povm(Povm({{1.0, 0.0}, {1.0, 0.0}}));
    EXPECT_GE(doubled.completeness_residual, 1.0);
    EXPECT_FALSE(doubled.pass);
}

}  // namespace
}  // namespace povm
