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

#include "povm/serialize.hpp"

#include <fmt/format.h>

#include "povm/error.hpp"

namespace povm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class T>
T field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(ErrorKind::InvalidGate, fmt::format("gate JSON lacks \"{}\"", key));
    }
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception &e) {
        fail(ErrorKind::InvalidGate, fmt::format("gate JSON field \"{}\": {}", key, e.what()));
    }
}

}  // namespace

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(ErrorKind::InvalidDimension, "complex number must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
        fail(ErrorKind::InvalidDimension, "matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (const Json &row : j) {
        if (!row.is_array() || row.size() != cols) {
            fail(ErrorKind::InvalidDimension, "ragged matrix rows");
        }
        for (const Json &z : row) {
            entries.push_back(complex_from_json(z));
        }
    }
    return ComplexMatrix(rows, cols, entries);
}

Json to_json(const PovmFamily &family) {
    Json j{{"kind", std::string(to_string(family.kind()))}};
    if (family.kind() == FamilyKind::Cyclic || family.kind() == FamilyKind::Dihedral) {
        j["m"] = family.m();
    }
    if (family.kind() == FamilyKind::Dihedral) {
        j["alpha"] = family.seed().alpha;
        j["beta"] = complex_to_json(family.seed().beta);
    }
    return j;
}

Json to_json(const Povm &p) {
    Json vectors = Json::array();
    for (const Spinor &v : p.vectors()) {
        vectors.push_back(Json::array({complex_to_json(v[0]), complex_to_json(v[1])}));
    }
    return Json{{"family", p.family() ? to_json(*p.family()) : Json(nullptr)}, {"vectors", std::move(vectors)}};
}

Json to_json(const DilatedMeasurement &d) {
    Json map = Json::array();
    for (const auto &slot : d.outcome_map) {
        map.push_back(slot ? Json(*slot) : Json(nullptr));
    }
    return Json{{"n_qubits", d.n_qubits}, {"outcome_map", std::move(map)}, {"matrix", matrix_to_json(d.m_tilde)}};
}

Json to_json(const Circuit &c) {
    Json gates = Json::array();
    for (const Gate &gate : c.gates()) {
        gates.push_back(std::visit(
            overloaded{
                [](const SingleQubitGate &g) {
                    return Json{{"kind", "u"}, {"target", g.target}, {"matrix", matrix_to_json(g.matrix)}};
                },
                [](const ControlledGate &g) {
                    return Json{{"kind", "cu"},
                                {"control", g.control},
                                {"value", g.control_value},
                                {"target", g.target},
                                {"matrix", matrix_to_json(g.matrix)}};
                },
                [](const CnotGate &g) {
                    return Json{{"kind", "cnot"}, {"control", g.control}, {"target", g.target}};
                },
                [](const SwapGate &g) { return Json{{"kind", "swap"}, {"a", g.a}, {"b", g.b}}; },
                [](const BlockGate &g) {
                    return Json{{"kind", "block"}, {"targets", g.targets}, {"matrix", matrix_to_json(g.matrix)}};
                },
            },
            gate));
    }
    return Json{{"qubits", c.n_qubits()}, {"label", c.label()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json &j) {
    Circuit c(field<std::size_t>(j, "qubits"), j.value("label", std::string{}));
    if (!j.contains("gates") || !j["gates"].is_array()) {
        fail(ErrorKind::InvalidGate, "circuit JSON lacks a gate array");
    }
    for (const Json &g : j["gates"]) {
        const std::string kind = field<std::string>(g, "kind");
        if (kind == "u") {
            c.append(SingleQubitGate{field<std::size_t>(g, "target"), matrix_from_json(g.at("matrix"))});
        } else if (kind == "cu") {
            c.append(ControlledGate{field<std::size_t>(g, "control"), field<int>(g, "value"),
                                    field<std::size_t>(g, "target"), matrix_from_json(g.at("matrix"))});
        } else if (kind == "cnot") {
            c.append(CnotGate{field<std::size_t>(g, "control"), field<std::size_t>(g, "target")});
        } else if (kind == "swap") {
            c.append(SwapGate{field<std::size_t>(g, "a"), field<std::size_t>(g, "b")});
        } else if (kind == "block") {
            c.append(BlockGate{field<std::vector<std::size_t>>(g, "targets"), matrix_from_json(g.at("matrix"))});
        } else {
            fail(ErrorKind::InvalidGate, fmt::format("unknown gate kind \"{}\"", kind));
        }
    }
    return c;
}

Json to_json(const ProbabilityVector &pv) {
    return Json{{"probs", pv.probs}, {"clamped", pv.clamped}, {"padding_leakage", pv.padding_leakage}};
}

Json to_json(const SampleCounts &counts) {
    return Json{{"seed", counts.seed},
                {"seed_hex", fmt::format("{:#x}", counts.seed)},
                {"shots", counts.shots},
                {"counts", counts.counts}};
}

Json to_json(const VerificationReport &r) {
    Json j{
        {"family", r.family},
        {"completeness_residual", r.completeness_residual},
        {"unitarity_residual", r.unitarity_residual},
        {"circuit_phase_distance", r.circuit_phase_distance},
        {"max_prob_deviation", r.max_prob_deviation},
        {"padding_leakage", r.padding_leakage},
        {"clamped_probabilities", r.clamped_probabilities},
        {"pass",
         {{"completeness", r.completeness_pass},
          {"unitarity", r.unitarity_pass},
          {"circuit", r.circuit_pass},
          {"probabilities", r.probability_pass},
          {"padding", r.padding_pass},
          {"all", r.pass()}}},
    };
    if (r.failure) {
        j["failure"] = {{"kind", std::string(to_string(*r.failure))}, {"message", r.failure_message}};
    } else {
        j["failure"] = nullptr;
    }
    return j;
}

std::string format_double(double x) {
    // Print -0 as 0.
    return fmt::format("{:.17g}", x == 0.0 ? 0.0 : x);
}

std::string probability_table_csv(const ProbabilityVector &analytic, const ProbabilityVector &circuit) {
    if (analytic.size() != circuit.size()) {
        fail(ErrorKind::InvalidDimension, "probability vectors differ in length");
    }
    std::string out = "outcome,analytic,circuit,abs_error\n";
    for (std::size_t j = 0; j < analytic.size(); ++j) {
        const double a = analytic.probs[j];
        const double c = circuit.probs[j];
        out += fmt::format("{},{},{},{}\n", j, format_double(a), format_double(c), format_double(std::abs(a - c)));
    }
    return out;
}

std::string bloch_csv(const Povm &p) {
    std::string out = "index,x,y,z\n";
    for (std::size_t j = 0; j < p.size(); ++j) {
        const BlochPoint b = povm_element_to_bloch(p.vectors()[j]);
        out += fmt::format("{},{},{},{}\n", j, format_double(b.x), format_double(b.y), format_double(b.z));
    }
    return out;
}

}  // namespace povm
