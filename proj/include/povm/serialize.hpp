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

#include <string>

#include <json.hpp>

#include "povm/circuit.hpp"
#include "povm/families.hpp"
#include "povm/neumark.hpp"
#include "povm/simulator.hpp"

// JSON and CSV forms. Complex numbers are [re, im] pairs everywhere. JSON
// doubles use the shortest representation that round-trips; CSV uses 17
// significant digits.

namespace povm {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json &j);
Json matrix_to_json(const ComplexMatrix &m);
/// Throws InvalidDimension for ragged or empty input.
ComplexMatrix matrix_from_json(const Json &j);

Json to_json(const PovmFamily &family);
Json to_json(const Povm &p);
Json to_json(const DilatedMeasurement &d);
Json to_json(const Circuit &c);
Json to_json(const ProbabilityVector &pv);
Json to_json(const SampleCounts &counts);
Json to_json(const VerificationReport &report);

/// Inverse of to_json(Circuit); gates are re-validated on the way in.
Circuit circuit_from_json(const Json &j);

/// printf("%.17g").
std::string format_double(double x);

/// Rows `outcome,analytic,circuit,abs_error`.
std::string probability_table_csv(const ProbabilityVector &analytic, const ProbabilityVector &circuit);
/// Rows `index,x,y,z` for the rescaled Bloch points of each element.
std::string bloch_csv(const Povm &p);

}  // namespace povm
