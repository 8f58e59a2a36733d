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

#include "povm/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <fmt/format.h>

namespace povm {

namespace {

constexpr double kClampFloor = -1e-12;

std::size_t outcome_count(const OutcomeMap &map) {
    std::size_t n = 0;
    for (const auto &slot : map) {
        if (slot) {
            n = std::max(n, *slot + 1);
        }
    }
    return n;
}

ProbabilityVector fold(const DilatedMeasurement &d, const std::vector<double> &diagonal, double leakage_tol) {
    std::vector<double> raw(outcome_count(d.outcome_map), 0.0);
    double leak = 0.0;
    for (std::size_t k = 0; k < diagonal.size(); ++k) {
        if (d.outcome_map[k]) {
            raw[*d.outcome_map[k]] += diagonal[k];
        } else {
            leak = std::max(leak, std::abs(diagonal[k]));
        }
    }
    if (leak > leakage_tol) {
        fail(ErrorKind::PaddingLeak, fmt::format("padding index carries probability {:.3g}", leak));
    }
    ProbabilityVector out = make_probability_vector(std::move(raw));
    out.padding_leakage = leak;
    return out;
}

void check_pairing(const DilatedMeasurement &d, const Circuit &c, const CircuitRunOptions &options) {
    if (c.n_qubits() != d.n_qubits || d.outcome_map.size() != d.dimension()) {
        fail(ErrorKind::CircuitMismatch, "circuit and dilation act on different registers");
    }
    if (!options.check_circuit) {
        return;
    }
    const PhaseDistance pd = distance_up_to_global_phase(compile_circuit(c, options.backend), d.m_tilde.adjoint());
    if (pd.distance > options.circuit_tol) {
        fail(ErrorKind::CircuitMismatch,
             fmt::format("circuit differs from m_tilde^dagger by {:.3g} up to phase", pd.distance));
    }
}

Spinor normalized(const Spinor &psi) {
    const double n = std::sqrt(std::norm(psi[0]) + std::norm(psi[1]));
    if (!(n > 0.0) || !std::isfinite(n)) {
        fail(ErrorKind::ZeroOperator, "state vector has zero or non-finite norm");
    }
    return {psi[0] / n, psi[1] / n};
}

}  // namespace

double ProbabilityVector::sum() const {
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

ProbabilityVector make_probability_vector(std::vector<double> raw) {
    ProbabilityVector out;
    for (double &p : raw) {
        if (!std::isfinite(p)) {
            fail(ErrorKind::InvalidState, "non-finite probability");
        }
        if (p < kClampFloor) {
            fail(ErrorKind::InvalidState, fmt::format("negative probability {:.3g}", p));
        }
        if (p < 0.0) {
            p = 0.0;
            ++out.clamped;
        }
    }
    out.probs = std::move(raw);
    return out;
}

ProbabilityVector analytic_probabilities(const Povm &p, const DensityMatrix &rho) {
    std::vector<double> raw(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        const Spinor &v = p.vectors()[j];
        Complex acc{};
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                acc += std::conj(v[a]) * rho(a, b) * v[b];
            }
        }
        raw[j] = acc.real();
    }
    return make_probability_vector(std::move(raw));
}

ProbabilityVector analytic_probabilities(const Povm &p, const Spinor &psi) {
    const Spinor s = normalized(psi);
    std::vector<double> raw(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        const Spinor &v = p.vectors()[j];
        raw[j] = std::norm(std::conj(v[0]) * s[0] + std::conj(v[1]) * s[1]);
    }
    return make_probability_vector(std::move(raw));
}

ProbabilityVector circuit_probabilities(const DilatedMeasurement &d, const Circuit &c, const DensityMatrix &rho,
                                        const CircuitRunOptions &options) {
    check_pairing(d, c, options);
    const std::size_t r = d.dimension();
    std::vector<Complex> state(r * r, Complex{});
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            state[a * r + b] = rho(a, b);
        }
    }
    for (const Gate &g : c.gates()) {
        kernels::evolve_density(options.backend, state, c.n_qubits(), lower(g));
    }
    std::vector<double> diagonal(r);
    for (std::size_t k = 0; k < r; ++k) {
        diagonal[k] = state[k * r + k].real();
    }
    return fold(d, diagonal, options.leakage_tol);
}

ProbabilityVector circuit_probabilities(const DilatedMeasurement &d, const Circuit &c, const Spinor &psi,
                                        const CircuitRunOptions &options) {
    check_pairing(d, c, options);
    const Spinor s = normalized(psi);
    std::vector<Complex> state(d.dimension(), Complex{});
    state[0] = s[0];
    state[1] = s[1];
    for (const Gate &g : c.gates()) {
        kernels::apply(options.backend, state, c.n_qubits(), lower(g));
    }
    std::vector<double> diagonal(state.size());
    std::transform(state.begin(), state.end(), diagonal.begin(), [](Complex z) {
        return std::norm(z);
    });
    return fold(d, diagonal, options.leakage_tol);
}

Circuit dense_circuit(const DilatedMeasurement &d) {
    std::vector<std::size_t> targets(d.n_qubits);
    std::iota(targets.begin(), targets.end(), 0);
    Circuit c(d.n_qubits, "dense");
    c.append(BlockGate{std::move(targets), d.m_tilde.adjoint()});
    return c;
}

SampleCounts sample(const ProbabilityVector &pv, std::uint64_t shots, std::uint64_t seed,
                    kernels::Backend backend) {
    SampleCounts out;
    out.shots = shots;
    out.seed = seed;
    const std::size_t n = pv.size();
    out.counts.assign(n, 0);
    if (n == 0 || shots == 0) {
        return out;
    }
    std::vector<double> cdf(n);
    std::partial_sum(pv.probs.begin(), pv.probs.end(), cdf.begin());
    const double total = cdf.back();
    if (!(total > 0.0)) {
        fail(ErrorKind::InvalidState, "probability vector sums to zero");
    }

    const std::uint64_t blocks = (shots + kSampleBlock - 1) / kSampleBlock;
    std::vector<std::vector<std::uint64_t>> partial(blocks, std::vector<std::uint64_t>(n, 0));
    auto run_block = [&](std::uint64_t block) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
        std::mt19937_64 gen(seq);
        const std::uint64_t begin = block * kSampleBlock;
        const std::uint64_t end = std::min(shots, begin + kSampleBlock);
        std::vector<std::uint64_t> &counts = partial[block];
        for (std::uint64_t s = begin; s < end; ++s) {
            const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            std::size_t k = static_cast<std::size_t>(it - cdf.begin());
            if (k >= n) {
                k = n - 1;
            }
            // Zero-probability outcomes share their cdf value with the
            // previous entry, so upper_bound already skips them.
            ++counts[k];
        }
    };
    const auto nblocks = static_cast<std::int64_t>(blocks);
    if (backend == kernels::Backend::OpenMP) {
#pragma omp parallel for schedule(static)
        for (std::int64_t b = 0; b < nblocks; ++b) {
            run_block(static_cast<std::uint64_t>(b));
        }
    } else {
        for (std::int64_t b = 0; b < nblocks; ++b) {
            run_block(static_cast<std::uint64_t>(b));
        }
    }
    for (const auto &counts : partial) {
        for (std::size_t k = 0; k < n; ++k) {
            out.counts[k] += counts[k];
        }
    }
    return out;
}

double tv_distance_to_uniform(const SampleCounts &counts) {
    if (counts.counts.empty() || counts.shots == 0) {
        return 0.0;
    }
    const double uniform = 1.0 / static_cast<double>(counts.counts.size());
    double tv = 0.0;
    for (std::uint64_t c : counts.counts) {
        tv += std::abs(static_cast<double>(c) / static_cast<double>(counts.shots) - uniform);
    }
    return 0.5 * tv;
}

std::vector<DensityMatrix> random_density_matrices(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    std::vector<DensityMatrix> out;
    out.reserve(count);
    const ComplexMatrix half = ComplexMatrix::identity(2) * Complex(0.5);
    while (out.size() < count) {
        const double a = gauss(gen);
        const double b = gauss(gen);
        const double c = gauss(gen);
        const double d = gauss(gen);
        const double w = weight(gen);
        if (a * a + b * b + c * c + d * d < 1e-24) {
            continue;
        }
        const DensityMatrix pure = DensityMatrix::pure({Complex(a, b), Complex(c, d)});
        out.emplace_back(pure.matrix() * Complex(w) + half * Complex(1.0 - w));
    }
    return out;
}

VerificationReport verify_family(const PovmFamily &family, const VerifyOptions &options) {
    VerificationReport report;
    report.family = family.label();
    try {
        const Povm p = build_povm(family);
        const PovmValidation v = validate_povm(p, Tolerance(options.structural_tol));
        report.completeness_residual = v.completeness_residual;
        report.completeness_pass = v.completeness_residual <= options.structural_tol;

        const DilatedMeasurement d = structured_dilation(family);
        // Unitarity plus the rows-0,1 contract.
        const ComplexMatrix top = d.m_tilde.block(0, 0, 2, d.dimension());
        report.unitarity_residual = std::max(check_unitary(d.m_tilde),
                                             max_entry_distance(top, pad_with_zero_operators(p, d.dimension())));
        report.unitarity_pass = report.unitarity_residual <= options.structural_tol;

        const Circuit c = synthesize_circuit(family, options.synthesis);
        report.circuit_phase_distance =
            distance_up_to_global_phase(compile_circuit(c, options.backend), d.m_tilde.adjoint()).distance;
        report.circuit_pass = report.circuit_phase_distance <= options.circuit_tol;

        const std::vector<DensityMatrix> states = random_density_matrices(options.states, options.seed);
        std::vector<double> deviation(states.size(), 0.0);
        std::vector<double> leakage(states.size(), 0.0);
        std::vector<std::size_t> clamped(states.size(), 0);
        std::vector<std::optional<PovmError>> errors(states.size());
        CircuitRunOptions run;
        run.check_circuit = false;
        run.leakage_tol = 1.0;
        run.backend = kernels::Backend::Serial;
        auto evaluate = [&](std::size_t i) {
            try {
                const ProbabilityVector want = analytic_probabilities(p, states[i]);
                const ProbabilityVector got = circuit_probabilities(d, c, states[i], run);
                double worst = 0.0;
                for (std::size_t j = 0; j < want.size(); ++j) {
                    worst = std::max(worst, std::abs(want.probs[j] - got.probs[j]));
                }
                deviation[i] = worst;
                leakage[i] = got.padding_leakage;
                clamped[i] = want.clamped + got.clamped;
            } catch (const PovmError &e) {
                errors[i] = e;
            }
        };
        const auto count = static_cast<std::int64_t>(states.size());
        if (options.backend == kernels::Backend::OpenMP) {
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < count; ++i) {
                evaluate(static_cast<std::size_t>(i));
            }
        } else {
            for (std::int64_t i = 0; i < count; ++i) {
                evaluate(static_cast<std::size_t>(i));
            }
        }
        for (const auto &e : errors) {
            if (e) {
                throw *e;
            }
        }
        for (std::size_t i = 0; i < states.size(); ++i) {
            report.max_prob_deviation = std::max(report.max_prob_deviation, deviation[i]);
            report.padding_leakage = std::max(report.padding_leakage, leakage[i]);
        }
        report.clamped_probabilities = std::accumulate(clamped.begin(), clamped.end(), std::size_t{0});
        report.probability_pass = report.max_prob_deviation <= options.probability_tol;
        report.padding_pass = report.padding_leakage <= options.leakage_tol;
    } catch (const PovmError &e) {
        report.failure = e.kind();
        report.failure_message = e.what();
    }
    return report;
}

}  // namespace povm
