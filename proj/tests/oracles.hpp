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

// Independent reference computations for the tests. Nothing here calls the
// library's kernels or circuit compiler; everything is written from the
// definitions with plain loops.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "povm/bloch.hpp"
#include "povm/circuit.hpp"
#include "povm/matrix.hpp"

namespace povm::oracle {

using Dense = std::vector<std::vector<Complex>>;

inline Dense zeros(std::size_t n) {
    return Dense(n, std::vector<Complex>(n, Complex{}));
}

inline Dense from_matrix(const ComplexMatrix &m) {
    Dense out(m.rows(), std::vector<Complex>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = m(r, c);
        }
    }
    return out;
}

inline Dense multiply(const Dense &a, const Dense &b) {
    Dense out(a.size(), std::vector<Complex>(b[0].size(), Complex{}));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            for (std::size_t j = 0; j < b[0].size(); ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline double distance(const Dense &a, const ComplexMatrix &b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a[r].size(); ++c) {
            worst = std::max(worst, std::abs(a[r][c] - b(r, c)));
        }
    }
    return worst;
}

/// Bit of qubit q inside basis index i (qubit 0 is the top bit).
inline int bit(std::size_t i, std::size_t q, std::size_t n) {
    return static_cast<int>((i >> (n - 1 - q)) & 1);
}

/// Full 2^n x 2^n matrix of a gate, built entry by entry: <row|G|col> is the
/// local matrix entry when every non-target bit agrees and the controls are
/// satisfied, the identity otherwise.
inline Dense embed(const Gate &gate, std::size_t n) {
    std::vector<std::size_t> targets;
    std::vector<std::pair<std::size_t, int>> controls;
    Dense local;
    if (auto *g = std::get_if<SingleQubitGate>(&gate)) {
        targets = {g->target};
        local = from_matrix(g->matrix);
    } else if (auto *g = std::get_if<ControlledGate>(&gate)) {
        targets = {g->target};
        controls = {{g->control, g->control_value}};
        local = from_matrix(g->matrix);
    } else if (auto *g = std::get_if<CnotGate>(&gate)) {
        targets = {g->target};
        controls = {{g->control, 1}};
        local = {{0.0, 1.0}, {1.0, 0.0}};
    } else if (auto *g = std::get_if<SwapGate>(&gate)) {
        targets = {g->a, g->b};
        local = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    } else {
        const auto &b = std::get<BlockGate>(gate);
        targets = b.targets;
        local = from_matrix(b.matrix);
    }
    const std::size_t dim = std::size_t{1} << n;
    Dense out = zeros(dim);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            bool rest_equal = true;
            for (std::size_t q = 0; q < n; ++q) {
                const bool is_target = std::find(targets.begin(), targets.end(), q) != targets.end();
                if (!is_target && bit(row, q, n) != bit(col, q, n)) {
                    rest_equal = false;
                }
            }
            if (!rest_equal) {
                continue;
            }
            bool active = true;
            for (const auto &[q, v] : controls) {
                if (bit(col, q, n) != v) {
                    active = false;
                }
            }
            if (!active) {
                out[row][col] = row == col ? 1.0 : 0.0;
                continue;
            }
            std::size_t lr = 0;
            std::size_t lc = 0;
            for (std::size_t q : targets) {
                lr = (lr << 1) | static_cast<std::size_t>(bit(row, q, n));
                lc = (lc << 1) | static_cast<std::size_t>(bit(col, q, n));
            }
            out[row][col] = local[lr][lc];
        }
    }
    return out;
}

/// gates[n-1] * ... * gates[0] by dense multiplication.
inline Dense compile(const Circuit &c) {
    const std::size_t dim = std::size_t{1} << c.n_qubits();
    Dense u = zeros(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        u[i][i] = 1.0;
    }
    for (const Gate &g : c.gates()) {
        u = multiply(embed(g, c.n_qubits()), u);
    }
    return u;
}

/// exp(-2 pi i jk/m)/sqrt(m) evaluated directly from the angle.
inline Complex dft_entry(std::size_t j, std::size_t k, std::size_t m) {
    const double angle = -2.0 * M_PI * static_cast<double>(j) * static_cast<double>(k) / static_cast<double>(m);
    return std::polar(1.0 / std::sqrt(static_cast<double>(m)), angle);
}

/// tr(rho |v><v|) from the 2x2 product written out.
inline double trace_rho_projector(const ComplexMatrix &rho, const Spinor &v) {
    Complex a[2][2];
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            a[r][c] = v[r] * std::conj(v[c]);
        }
    }
    Complex t{};
    for (int r = 0; r < 2; ++r) {
        for (int k = 0; k < 2; ++k) {
            t += rho(r, k) * a[k][r];
        }
    }
    return t.real();
}

/// Bloch vector as the Pauli expectations tr(P |v><v|) / <v|v>.
inline std::array<double, 3> bloch_of(const Spinor &v) {
    const Complex one{1.0, 0.0}, zero{0.0, 0.0}, i{0.0, 1.0};
    const Complex paulis[3][2][2] = {
        {{zero, one}, {one, zero}},
        {{zero, -i}, {i, zero}},
        {{one, zero}, {zero, -one}},
    };
    const double n = std::norm(v[0]) + std::norm(v[1]);
    std::array<double, 3> out{};
    for (int p = 0; p < 3; ++p) {
        Complex e{};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                e += std::conj(v[r]) * paulis[p][r][c] * v[c];
            }
        }
        out[p] = e.real() / n;
    }
    return out;
}

inline double dot(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace povm::oracle
