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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "povm/families.hpp"
#include "povm/kernels.hpp"
#include "povm/matrix.hpp"

namespace povm {

struct SingleQubitGate {
    std::size_t target;
    ComplexMatrix matrix;
};

/// Applies `matrix` to `target` when `control` holds `control_value`.
/// Controlled phases are diag(1, e^{i phi}) instances of this gate.
struct ControlledGate {
    std::size_t control;
    int control_value;
    std::size_t target;
    ComplexMatrix matrix;
};

struct CnotGate {
    std::size_t control;
    std::size_t target;
};

struct SwapGate {
    std::size_t a;
    std::size_t b;
};

/// Dense unitary on an ordered list of qubits; targets[0] is the most
/// significant bit of the block index.
struct BlockGate {
    std::vector<std::size_t> targets;
    ComplexMatrix matrix;
};

using Gate = std::variant<SingleQubitGate, ControlledGate, CnotGate, SwapGate, BlockGate>;

/// Kernel-level form of a gate.
kernels::DenseOp lower(const Gate &gate);

/// Adjoint gate with identical wiring.
Gate adjoint(const Gate &gate);

/// Ordered gate list. List order is temporal order: gates()[0] acts first,
/// so the circuit's unitary is gates[n-1] * ... * gates[0].
class Circuit {
   public:
    explicit Circuit(std::size_t n_qubits, std::string label = {});

    /// Throws InvalidGate for out-of-range qubits, control == target, a
    /// wrongly sized matrix or one that is not unitary within 1e-10.
    void append(Gate gate);
    /// Appends `fragment` with its qubit q mapped to qubit_map[q].
    void append(const Circuit &fragment, std::span<const std::size_t> qubit_map);
    void append(const Circuit &other);

    std::size_t n_qubits() const noexcept {
        return n_qubits_;
    }
    const std::string &label() const noexcept {
        return label_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    std::size_t size() const noexcept {
        return gates_.size();
    }

    /// Reversed list of adjoint gates.
    Circuit inverse() const;

   private:
    std::size_t n_qubits_;
    std::string label_;
    std::vector<Gate> gates_;
};

ComplexMatrix hadamard();
/// diag(1, e^{i phi}) on `target` when `control` is 1.
ControlledGate controlled_phase(std::size_t control, std::size_t target, double phi);

/// Hadamards, controlled phases diag(1, exp(-2 pi i/2^k)) and the final
/// qubit-reversal swaps; compiles to fourier_matrix(2^l) with no phase slack.
/// Throws InvalidParameter for l = 0.
Circuit qft_circuit(std::size_t l);

struct SynthesisOptions {
    /// Fold the dihedral XOR gate into the value-1 controlled gate.
    bool merge = true;
};

/// Gate-level circuit whose compilation is structured_dilation(f).m_tilde^dagger.
Circuit synthesize_circuit(const PovmFamily &family, SynthesisOptions options = {});

/// The 2x2 rotations used to factor A^dagger for the dodecahedron and icosahedron.
struct ADaggerFactors {
    ComplexMatrix b;
    ComplexMatrix c;
    double u_plus, u_minus, v_plus, v_minus;
};

ADaggerFactors a_dagger_factors(FamilyKind kind);

/// Two-qubit circuit for A^dagger = (I (+) -sigma_z)(I (x) B) R (I (x) C), with R
/// realized as two value-controlled rotations on qubit 0. Throws
/// InvalidParameter for other kinds.
Circuit decompose_a_dagger(FamilyKind kind);

/// Product of the gate embeddings in application order.
ComplexMatrix compile_circuit(const Circuit &circuit, kernels::Backend backend = kernels::default_backend());

/// One gate per line, e.g. "cu c=2 v=1 t=0 [[...],[...]]".
std::string render_text(const Circuit &circuit);

std::size_t count_block_gates(const Circuit &circuit);

}  // namespace povm
