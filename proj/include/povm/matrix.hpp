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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace povm {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Default bound for structural checks (completeness, unitarity, row equality).
inline constexpr double kStructuralTol = 1e-10;
/// Default bound for comparing a compiled circuit against a dilation.
inline constexpr double kCircuitTol = 1e-9;

/// Absolute entrywise bound. Always strictly positive.
class Tolerance {
   public:
    explicit Tolerance(double eps = kStructuralTol);

    double eps() const noexcept {
        return eps_;
    }

   private:
    double eps_;
};

/// Dense complex matrix with value semantics. There are no mutating members:
/// every operation returns a fresh matrix. Entries are always finite.
class ComplexMatrix {
   public:
    using Storage = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    ComplexMatrix() = default;
    /// Zero matrix of the given shape.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; throws InvalidDimension on a length mismatch and
    /// NonFinite on NaN/Inf.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);
    explicit ComplexMatrix(Storage data);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    template <typename F>
    static ComplexMatrix from_function(std::size_t rows, std::size_t cols, F &&entry) {
        Storage data(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry(r, c);
            }
        }
        return ComplexMatrix(std::move(data));
    }

    std::size_t rows() const noexcept {
        return static_cast<std::size_t>(data_.rows());
    }
    std::size_t cols() const noexcept {
        return static_cast<std::size_t>(data_.cols());
    }
    bool is_square() const noexcept {
        return data_.rows() == data_.cols();
    }
    bool empty() const noexcept {
        return data_.size() == 0;
    }

    Complex operator()(std::size_t r, std::size_t c) const;

    /// Row-major view of all entries.
    std::span<const Complex> entries() const noexcept {
        return {data_.data(), static_cast<std::size_t>(data_.size())};
    }
    std::vector<Complex> row(std::size_t r) const;
    std::vector<Complex> col(std::size_t c) const;
    ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    /// Largest entry magnitude (0 for an empty matrix).
    double max_abs() const;

    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    ComplexMatrix operator+(const ComplexMatrix &rhs) const;
    ComplexMatrix operator-(const ComplexMatrix &rhs) const;
    ComplexMatrix operator*(Complex scale) const;
    friend ComplexMatrix operator*(Complex scale, const ComplexMatrix &m) {
        return m * scale;
    }

    /// Matrix-vector product.
    std::vector<Complex> apply(std::span<const Complex> v) const;

    const Storage &eigen() const noexcept {
        return data_;
    }

   private:
    Storage data_;
};

/// F_m with entry (j,k) = exp(-2 pi i jk/m)/sqrt(m). Throws InvalidDimension for m = 0.
ComplexMatrix fourier_matrix(std::size_t m);

/// Kronecker product; `a` supplies the high-order (block) index.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Block-diagonal diag(a, b).
ComplexMatrix direct_sum(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |a^dagger a - I|. Throws InvalidDimension for non-square input.
double check_unitary(const ComplexMatrix &a);

inline bool is_unitary(const ComplexMatrix &a, Tolerance tol = Tolerance{}) {
    return check_unitary(a) <= tol.eps();
}

/// max |a - b|; throws InvalidDimension on shape mismatch.
double max_entry_distance(const ComplexMatrix &a, const ComplexMatrix &b);

struct PhaseDistance {
    /// max |a - e^{i phi} b|, or the raw max |a - b| when the phase is undefined.
    double distance;
    double phase;
    /// False when tr(b^dagger a) vanishes (PhaseUndefined); `distance` is then unaligned.
    bool phase_defined;
};

/// Compares a and b modulo one global phase, aligned on arg tr(b^dagger a).
PhaseDistance distance_up_to_global_phase(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace povm
