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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "povm/bloch.hpp"
#include "povm/circuit.hpp"
#include "povm/error.hpp"
#include "povm/families.hpp"
#include "povm/kernels.hpp"
#include "povm/neumark.hpp"

namespace povm {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Per-outcome probabilities in canonical outcome order.
struct ProbabilityVector {
    std::vector<double> probs;
    /// Entries in (-1e-12, 0) that were clamped to zero.
    std::size_t clamped = 0;
    /// Largest probability seen on a padding basis index (circuit path only).
    double padding_leakage = 0.0;

    std::size_t size() const noexcept {
        return probs.size();
    }
    double sum() const;
};

/// Clamps tiny negatives; throws InvalidState for anything below -1e-12 or
/// non-finite.
ProbabilityVector make_probability_vector(std::vector<double> raw);

/// p_j = <Psi_j| rho |Psi_j>.
ProbabilityVector analytic_probabilities(const Povm &p, const DensityMatrix &rho);
/// p_j = |<Psi_j|psi>|^2 for a normalized copy of psi.
ProbabilityVector analytic_probabilities(const Povm &p, const Spinor &psi);

struct CircuitRunOptions {
    /// Compare compile(c) with m_tilde^dagger before running.
    bool check_circuit = true;
    double circuit_tol = 1e-8;
    double leakage_tol = 1e-9;
    kernels::Backend backend = kernels::default_backend();
};

/// Evolves rho (+) 0 through the circuit, reads the diagonal and folds it
/// through the outcome map. Throws CircuitMismatch or PaddingLeak.
ProbabilityVector circuit_probabilities(const DilatedMeasurement &d, const Circuit &c, const DensityMatrix &rho,
                                        const CircuitRunOptions &options = {});
/// Statevector path for pure inputs.
ProbabilityVector circuit_probabilities(const DilatedMeasurement &d, const Circuit &c, const Spinor &psi,
                                        const CircuitRunOptions &options = {});

/// One dense gate realizing m_tilde^dagger; lets any dilation, including a
/// generic completion, run through the circuit path.
Circuit dense_circuit(const DilatedMeasurement &d);

struct SampleCounts {
    std::vector<std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = kDefaultSeed;
};

/// Shots per independently seeded RNG stream.
inline constexpr std::uint64_t kSampleBlock = 65536;

/// Multinomial draw by inverse CDF. Shots are cut into fixed blocks of
/// kSampleBlock, each with its own generator derived from (seed, block), so
/// the counts do not depend on the backend or thread count.
SampleCounts sample(const ProbabilityVector &pv, std::uint64_t shots, std::uint64_t seed = kDefaultSeed,
                    kernels::Backend backend = kernels::default_backend());

/// Total variation distance to the uniform distribution.
double tv_distance_to_uniform(const SampleCounts &counts);

/// Seeded pure states mixed with I/2 at a seeded weight in [0, 1].
std::vector<DensityMatrix> random_density_matrices(std::size_t count, std::uint64_t seed);

struct VerifyOptions {
    double structural_tol = kStructuralTol;
    double circuit_tol = kCircuitTol;
    double probability_tol = 1e-9;
    double leakage_tol = 1e-12;
    std::size_t states = 100;
    std::uint64_t seed = kDefaultSeed;
    SynthesisOptions synthesis{};
    kernels::Backend backend = kernels::default_backend();
};

struct VerificationReport {
    std::string family;
    double completeness_residual = 0.0;
    double unitarity_residual = 0.0;
    double circuit_phase_distance = 0.0;
    double max_prob_deviation = 0.0;
    double padding_leakage = 0.0;
    std::size_t clamped_probabilities = 0;
    bool completeness_pass = false;
    bool unitarity_pass = false;
    bool circuit_pass = false;
    bool probability_pass = false;
    bool padding_pass = false;
    /// Set when construction or simulation threw.
    std::optional<ErrorKind> failure;
    std::string failure_message;

    bool pass() const noexcept {
        return !failure && completeness_pass && unitarity_pass && circuit_pass && probability_pass && padding_pass;
    }
};

/// Full pipeline check. Never throws PovmError; errors land in `failure`.
VerificationReport verify_family(const PovmFamily &family, const VerifyOptions &options = {});

}  // namespace povm
