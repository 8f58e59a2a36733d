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

#include "povm/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "povm/error.hpp"
#include "povm/neumark.hpp"

namespace povm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Complex> entries_of(const ComplexMatrix &m) {
    return {m.entries().begin(), m.entries().end()};
}

void require_qubit(std::size_t q, std::size_t n_qubits) {
    if (q >= n_qubits) {
        fail(ErrorKind::InvalidGate,
             fmt::format("qubit {} outside a {}-qubit register", q, n_qubits));
    }
}

void require_unitary(const ComplexMatrix &m, std::size_t dim) {
    if (m.rows() != dim || m.cols() != dim) {
        fail(ErrorKind::InvalidGate, fmt::format("gate matrix must be {}x{}", dim, dim));
    }
    if (check_unitary(m) > kStructuralTol) {
        fail(ErrorKind::InvalidGate, "gate matrix is not unitary");
    }
}

void validate_gate(const Gate &gate, std::size_t n_qubits) {
    std::visit(overloaded{
                   [&](const SingleQubitGate &g) {
                       require_qubit(g.target, n_qubits);
                       require_unitary(g.matrix, 2);
                   },
                   [&](const ControlledGate &g) {
                       require_qubit(g.control, n_qubits);
                       require_qubit(g.target, n_qubits);
                       if (g.control == g.target) {
                           fail(ErrorKind::InvalidGate, "control equals target");
                       }
                       if (g.control_value != 0 && g.control_value != 1) {
                           fail(ErrorKind::InvalidGate, "control value must be 0 or 1");
                       }
                       require_unitary(g.matrix, 2);
                   },
                   [&](const CnotGate &g) {
                       require_qubit(g.control, n_qubits);
                       require_qubit(g.target, n_qubits);
                       if (g.control == g.target) {
                           fail(ErrorKind::InvalidGate, "control equals target");
                       }
                   },
                   [&](const SwapGate &g) {
                       require_qubit(g.a, n_qubits);
                       require_qubit(g.b, n_qubits);
                       if (g.a == g.b) {
                           fail(ErrorKind::InvalidGate, "swap of a qubit with itself");
                       }
                   },
                   [&](const BlockGate &g) {
                       if (g.targets.empty()) {
                           fail(ErrorKind::InvalidGate, "block gate without targets");
                       }
                       std::vector<std::size_t> sorted = g.targets;
                       std::sort(sorted.begin(), sorted.end());
                       if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                           fail(ErrorKind::InvalidGate, "block gate repeats a target");
                       }
                       for (std::size_t q : g.targets) {
                           require_qubit(q, n_qubits);
                       }
                       require_unitary(g.matrix, std::size_t{1} << g.targets.size());
                   },
               },
               gate);
}

ComplexMatrix padded_fourier_dagger(std::size_t m, std::size_t size) {
    return direct_sum(fourier_matrix(m), ComplexMatrix::identity(size - m)).adjoint();
}

/// (F_m (+) I)^dagger on `targets`; decomposed into the QFT circuit when m
/// fills the whole block.
void append_inverse_fourier(Circuit &c, const std::vector<std::size_t> &targets, std::size_t m, bool decompose) {
    const std::size_t size = std::size_t{1} << targets.size();
    if (decompose && m == size) {
        c.append(qft_circuit(targets.size()).inverse(), targets);
        return;
    }
    c.append(BlockGate{targets, padded_fourier_dagger(m, size)});
}

std::vector<std::size_t> qubit_range(std::size_t first, std::size_t last) {
    std::vector<std::size_t> out(last - first);
    std::iota(out.begin(), out.end(), first);
    return out;
}

std::string format_complex(Complex z) {
    // Adding 0.0 turns -0 into 0.
    return fmt::format("({:.17g},{:.17g})", z.real() + 0.0, z.imag() + 0.0);
}

std::string format_matrix(const ComplexMatrix &m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : ",[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) {
                out += ",";
            }
            out += format_complex(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace

kernels::DenseOp lower(const Gate &gate) {
    return std::visit(overloaded{
                          [](const SingleQubitGate &g) {
                              return kernels::DenseOp{{g.target}, entries_of(g.matrix), {}};
                          },
                          [](const ControlledGate &g) {
                              return kernels::DenseOp{
                                  {g.target}, entries_of(g.matrix), {{g.control, g.control_value}}};
                          },
                          [](const CnotGate &g) {
                              return kernels::DenseOp{{g.target}, {0.0, 1.0, 1.0, 0.0}, {{g.control, 1}}};
                          },
                          [](const SwapGate &g) {
                              return kernels::DenseOp{{g.a, g.b},
                                                      {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1},
                                                      {}};
                          },
                          [](const BlockGate &g) {
                              return kernels::DenseOp{g.targets, entries_of(g.matrix), {}};
                          },
                      },
                      gate);
}

Gate adjoint(const Gate &gate) {
    return std::visit(overloaded{
                          [](const SingleQubitGate &g) -> Gate {
                              return SingleQubitGate{g.target, g.matrix.adjoint()};
                          },
                          [](const ControlledGate &g) -> Gate {
                              return ControlledGate{g.control, g.control_value, g.target, g.matrix.adjoint()};
                          },
                          [](const CnotGate &g) -> Gate { return g; },
                          [](const SwapGate &g) -> Gate { return g; },
                          [](const BlockGate &g) -> Gate {
                              return BlockGate{g.targets, g.matrix.adjoint()};
                          },
                      },
                      gate);
}

Circuit::Circuit(std::size_t n_qubits, std::string label) : n_qubits_(n_qubits), label_(std::move(label)) {
    if (n_qubits == 0) {
        fail(ErrorKind::InvalidParameter, "circuit needs at least one qubit");
    }
}

void Circuit::append(Gate gate) {
    validate_gate(gate, n_qubits_);
    gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit &fragment, std::span<const std::size_t> qubit_map) {
    if (qubit_map.size() != fragment.n_qubits()) {
        fail(ErrorKind::InvalidGate, "qubit map does not cover the fragment");
    }
    auto at = [&](std::size_t q) {
        return qubit_map[q];
    };
    for (const Gate &g : fragment.gates()) {
        append(std::visit(overloaded{
                              [&](const SingleQubitGate &x) -> Gate {
                                  return SingleQubitGate{at(x.target), x.matrix};
                              },
                              [&](const ControlledGate &x) -> Gate {
                                  return ControlledGate{at(x.control), x.control_value, at(x.target), x.matrix};
                              },
                              [&](const CnotGate &x) -> Gate { return CnotGate{at(x.control), at(x.target)}; },
                              [&](const SwapGate &x) -> Gate { return SwapGate{at(x.a), at(x.b)}; },
                              [&](const BlockGate &x) -> Gate {
                                  std::vector<std::size_t> targets;
                                  for (std::size_t q : x.targets) {
                                      targets.push_back(at(q));
                                  }
                                  return BlockGate{std::move(targets), x.matrix};
                              },
                          },
                          g));
    }
}

void Circuit::append(const Circuit &other) {
    const std::vector<std::size_t> identity = qubit_range(0, other.n_qubits());
    append(other, identity);
}

Circuit Circuit::inverse() const {
    Circuit out(n_qubits_, label_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(adjoint(*it));
    }
    return out;
}

ComplexMatrix hadamard() {
    const double s = std::sqrt(0.5);
    return ComplexMatrix{{s, s}, {s, -s}};
}

ControlledGate controlled_phase(std::size_t control, std::size_t target, double phi) {
    return ControlledGate{control, 1, target, ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, phi)}}};
}

Circuit qft_circuit(std::size_t l) {
    if (l == 0) {
        fail(ErrorKind::InvalidParameter, "QFT needs at least one qubit");
    }
    Circuit c(l, fmt::format("qft({})", l));
    for (std::size_t j = 0; j < l; ++j) {
        c.append(SingleQubitGate{j, hadamard()});
        for (std::size_t k = 2; j + k - 1 < l; ++k) {
            c.append(controlled_phase(j + k - 1, j, -2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << k)));
        }
    }
    for (std::size_t i = 0; i < l / 2; ++i) {
        c.append(SwapGate{i, l - 1 - i});
    }
    return c;
}

ADaggerFactors a_dagger_factors(FamilyKind kind) {
    const double s5 = std::sqrt(5.0);
    double up, um, vp, vm;
    if (kind == FamilyKind::Dodecahedron) {
        up = std::sqrt(0.5 + std::sqrt((3.0 + s5) / 24.0));
        um = std::sqrt(0.5 - std::sqrt((3.0 + s5) / 24.0));
        vp = -std::sqrt(0.5 + std::sqrt((s5 - 1.0) / (8.0 * s5)));
        vm = std::sqrt(0.5 - std::sqrt((s5 - 1.0) / (8.0 * s5)));
    } else if (kind == FamilyKind::Icosahedron) {
        up = std::sqrt(50.0 + 5.0 * std::sqrt(10.0 * (5.0 + s5))) / 10.0;
        um = std::sqrt(50.0 - 5.0 * std::sqrt(10.0 * (5.0 + s5))) / 10.0;
        vp = -0.5 * std::sqrt(2.0 + std::sqrt(5.0 / 3.0) - std::sqrt(1.0 / 3.0));
        vm = 0.5 * std::sqrt(2.0 - std::sqrt(5.0 / 3.0) + std::sqrt(1.0 / 3.0));
    } else {
        fail(ErrorKind::InvalidParameter, fmt::format("{} has no A^dagger factorization", to_string(kind)));
    }
    return {ComplexMatrix{{um, -up}, {up, um}}, ComplexMatrix{{vm, vp}, {vp, -vm}}, up, um, vp, vm};
}

Circuit decompose_a_dagger(FamilyKind kind) {
    const ADaggerFactors f = a_dagger_factors(kind);
    const double s = std::sqrt(0.5);
    Circuit c(2, fmt::format("A^dagger({})", to_string(kind)));
    c.append(SingleQubitGate{1, f.c});
    // R: two rotations of qubit 0, selected by qubit 1.
    c.append(ControlledGate{1, 1, 0, ComplexMatrix{{s, s}, {-s, s}}});
    c.append(ControlledGate{1, 0, 0, ComplexMatrix{{s, -s}, {s, s}}});
    c.append(SingleQubitGate{1, f.b});
    c.append(ControlledGate{0, 1, 1, ComplexMatrix{{-1.0, 0.0}, {0.0, 1.0}}});
    return c;
}

Circuit synthesize_circuit(const PovmFamily &family, SynthesisOptions options) {
    switch (family.kind()) {
        case FamilyKind::Cyclic: {
            const std::size_t l = register_qubits(family.m());
            Circuit c(l, family.label());
            append_inverse_fourier(c, qubit_range(0, l), family.m(), true);
            return c;
        }
        case FamilyKind::Dihedral: {
            // Surface DegenerateOrbit before emitting gates.
            (void)dihedral_povm(family.m(), family.seed());
            const std::size_t m = family.m();
            const std::size_t l = register_qubits(2 * m);
            const std::size_t last = l - 1;
            const Complex a = family.seed().alpha;
            const Complex b = family.seed().beta;
            const Complex bc = std::conj(b);
            Circuit c(l, family.label());
            if (options.merge) {
                c.append(ControlledGate{last, 1, 0, ComplexMatrix{{bc, a}, {a, -b}}});
            } else {
                c.append(CnotGate{last, 0});
                c.append(ControlledGate{last, 1, 0, ComplexMatrix{{a, bc}, {-b, a}}});
            }
            c.append(ControlledGate{last, 0, 0, ComplexMatrix{{a, b}, {bc, -a}}});
            append_inverse_fourier(c, qubit_range(1, l), m, true);
            return c;
        }
        case FamilyKind::Tetrahedron: {
            Circuit c(2, family.label());
            c.append(CnotGate{1, 0});
            c.append(SingleQubitGate{0, orbit_coupling_matrix(FamilyKind::Tetrahedron)});
            c.append(controlled_phase(0, 1, std::numbers::pi / 2.0));
            c.append(SingleQubitGate{1, hadamard()});
            return c;
        }
        case FamilyKind::Cube: {
            Circuit c(3, family.label());
            c.append(CnotGate{2, 0});
            c.append(SingleQubitGate{0, orbit_coupling_matrix(FamilyKind::Cube)});
            append_inverse_fourier(c, {1, 2}, 4, false);
            return c;
        }
        case FamilyKind::Octahedron: {
            Circuit c(3, family.label());
            c.append(CnotGate{2, 0});
            c.append(SingleQubitGate{0, orbit_coupling_matrix(FamilyKind::Octahedron)});
            append_inverse_fourier(c, {1, 2}, 3, false);
            return c;
        }
        case FamilyKind::Dodecahedron:
        case FamilyKind::Icosahedron: {
            const bool dodeca = family.kind() == FamilyKind::Dodecahedron;
            const std::size_t l = dodeca ? 5 : 4;
            Circuit c(l, family.label());
            c.append(CnotGate{l - 1, 1});
            const std::size_t pair[] = {0, 1};
            c.append(decompose_a_dagger(family.kind()), pair);
            append_inverse_fourier(c, qubit_range(2, l), dodeca ? 5 : 3, false);
            return c;
        }
    }
    fail(ErrorKind::InvalidParameter, "unknown family");
}

ComplexMatrix compile_circuit(const Circuit &circuit, kernels::Backend backend) {
    const std::size_t r = std::size_t{1} << circuit.n_qubits();
    std::vector<Complex> u(r * r, Complex{});
    for (std::size_t k = 0; k < r; ++k) {
        u[k * r + k] = 1.0;
    }
    for (const Gate &g : circuit.gates()) {
        kernels::apply_to_columns(backend, u, circuit.n_qubits(), lower(g));
    }
    return ComplexMatrix(r, r, u);
}

std::string render_text(const Circuit &circuit) {
    std::string out = fmt::format("# {} qubits={}\n", circuit.label(), circuit.n_qubits());
    for (const Gate &gate : circuit.gates()) {
        out += std::visit(overloaded{
                              [](const SingleQubitGate &g) {
                                  return fmt::format("u t={} {}", g.target, format_matrix(g.matrix));
                              },
                              [](const ControlledGate &g) {
                                  return fmt::format("cu c={} v={} t={} {}", g.control, g.control_value, g.target,
                                                     format_matrix(g.matrix));
                              },
                              [](const CnotGate &g) { return fmt::format("cnot c={} t={}", g.control, g.target); },
                              [](const SwapGate &g) { return fmt::format("swap a={} b={}", g.a, g.b); },
                              [](const BlockGate &g) {
                                  return fmt::format("block t={} {}", fmt::join(g.targets, ","),
                                                     format_matrix(g.matrix));
                              },
                          },
                          gate);
        out += "\n";
    }
    return out;
}

std::size_t count_block_gates(const Circuit &circuit) {
    return static_cast<std::size_t>(std::count_if(circuit.gates().begin(), circuit.gates().end(), [](const Gate &g) {
        return std::holds_alternative<BlockGate>(g);
    }));
}

}  // namespace povm
