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

#include "povm/matrix.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "povm/error.hpp"

namespace povm {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t n) {
    return static_cast<Index>(n);
}

void require_finite(const ComplexMatrix::Storage &data) {
    for (Index k = 0; k < data.size(); ++k) {
        const Complex z = data.data()[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            fail(ErrorKind::NonFinite, "matrix entry " + std::to_string(k) + " is not finite");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorKind::InvalidDimension,
             std::string(what) + ": shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                 " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        fail(ErrorKind::InvalidParameter, "tolerance must be a positive finite number");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : data_(Storage::Zero(idx(rows), idx(cols))) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> entries) {
    if (entries.size() != rows * cols) {
        fail(ErrorKind::InvalidDimension, "expected " + std::to_string(rows * cols) + " entries, got " +
                                              std::to_string(entries.size()));
    }
    data_.resize(idx(rows), idx(cols));
    std::copy(entries.begin(), entries.end(), data_.data());
    require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
    data_.resize(idx(nrows), idx(ncols));
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != ncols) {
            fail(ErrorKind::InvalidDimension, "ragged initializer list");
        }
        std::size_t c = 0;
        for (const Complex &z : row) {
            data_(idx(r), idx(c++)) = z;
        }
        ++r;
    }
    require_finite(data_);
}

ComplexMatrix::ComplexMatrix(Storage data) : data_(std::move(data)) {
    require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    return ComplexMatrix(Storage::Identity(idx(n), idx(n)));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    Storage data = Storage::Zero(idx(diag.size()), idx(diag.size()));
    for (std::size_t k = 0; k < diag.size(); ++k) {
        data(idx(k), idx(k)) = diag[k];
    }
    return ComplexMatrix(std::move(data));
}

Complex ComplexMatrix::operator()(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols()) {
        fail(ErrorKind::InvalidDimension, "entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    }
    return data_(idx(r), idx(c));
}

std::vector<Complex> ComplexMatrix::row(std::size_t r) const {
    std::vector<Complex> out(cols());
    for (std::size_t c = 0; c < cols(); ++c) {
        out[c] = (*this)(r, c);
    }
    return out;
}

std::vector<Complex> ComplexMatrix::col(std::size_t c) const {
    std::vector<Complex> out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows() || col0 + ncols > cols()) {
        fail(ErrorKind::InvalidDimension, "block out of range");
    }
    return ComplexMatrix(Storage(data_.block(idx(row0), idx(col0), idx(nrows), idx(ncols))));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    return ComplexMatrix(Storage(data_.adjoint()));
}

ComplexMatrix ComplexMatrix::transpose() const {
    return ComplexMatrix(Storage(data_.transpose()));
}

ComplexMatrix ComplexMatrix::conjugate() const {
    return ComplexMatrix(Storage(data_.conjugate()));
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        fail(ErrorKind::InvalidDimension, "trace of a non-square matrix");
    }
    return data_.trace();
}

double ComplexMatrix::max_abs() const {
    return data_.size() == 0 ? 0.0 : data_.cwiseAbs().maxCoeff();
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols() != rhs.rows()) {
        fail(ErrorKind::InvalidDimension, "product of " + std::to_string(rows()) + "x" + std::to_string(cols()) +
                                              " and " + std::to_string(rhs.rows()) + "x" +
                                              std::to_string(rhs.cols()));
    }
    return ComplexMatrix(Storage(data_ * rhs.data_));
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &rhs) const {
    require_same_shape(*this, rhs, "sum");
    return ComplexMatrix(Storage(data_ + rhs.data_));
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &rhs) const {
    require_same_shape(*this, rhs, "difference");
    return ComplexMatrix(Storage(data_ - rhs.data_));
}

ComplexMatrix ComplexMatrix::operator*(Complex scale) const {
    return ComplexMatrix(Storage(data_ * scale));
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols()) {
        fail(ErrorKind::InvalidDimension, "vector length does not match column count");
    }
    std::vector<Complex> out(rows(), Complex{});
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            out[r] += data_(idx(r), idx(c)) * v[c];
        }
    }
    return out;
}

ComplexMatrix fourier_matrix(std::size_t m) {
    if (m == 0) {
        fail(ErrorKind::InvalidDimension, "Fourier matrix of size 0");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    return ComplexMatrix::from_function(m, m, [&](std::size_t j, std::size_t k) {
        // Reduce jk mod m first so large exponents keep full accuracy.
        const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % m) / static_cast<double>(m);
        return std::polar(scale, angle);
    });
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    return ComplexMatrix(ComplexMatrix::Storage(Eigen::kroneckerProduct(a.eigen(), b.eigen())));
}

ComplexMatrix direct_sum(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix::Storage data = ComplexMatrix::Storage::Zero(idx(a.rows() + b.rows()), idx(a.cols() + b.cols()));
    data.block(0, 0, idx(a.rows()), idx(a.cols())) = a.eigen();
    data.block(idx(a.rows()), idx(a.cols()), idx(b.rows()), idx(b.cols())) = b.eigen();
    return ComplexMatrix(std::move(data));
}

double check_unitary(const ComplexMatrix &a) {
    if (!a.is_square()) {
        fail(ErrorKind::InvalidDimension, "unitarity check on a non-square matrix");
    }
    return (a.adjoint() * a - ComplexMatrix::identity(a.rows())).max_abs();
}

double max_entry_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "distance");
    return (a - b).max_abs();
}

PhaseDistance distance_up_to_global_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "phase distance");
    if (!a.is_square()) {
        fail(ErrorKind::InvalidDimension, "phase distance on non-square matrices");
    }
    const Complex overlap = (b.adjoint() * a).trace();
    // |tr(b^dagger a)| is at most the dimension for unitary b, so this cutoff is
    // relative to a natural scale of 1.
    if (std::abs(overlap) < 1e-12) {
        return {max_entry_distance(a, b), 0.0, false};
    }
    const double phase = std::arg(overlap);
    return {max_entry_distance(a, b * std::polar(1.0, phase)), phase, true};
}

}  // namespace povm
