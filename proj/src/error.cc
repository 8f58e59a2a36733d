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

#include "povm/error.hpp"

namespace povm {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidDimension:
            return "InvalidDimension";
        case ErrorKind::NonFinite:
            return "NonFinite";
        case ErrorKind::PhaseUndefined:
            return "PhaseUndefined";
        case ErrorKind::InvalidState:
            return "InvalidState";
        case ErrorKind::OutsideBall:
            return "OutsideBall";
        case ErrorKind::ZeroOperator:
            return "ZeroOperator";
        case ErrorKind::InvalidParameter:
            return "InvalidParameter";
        case ErrorKind::DegenerateOrbit:
            return "DegenerateOrbit";
        case ErrorKind::InvalidRotation:
            return "InvalidRotation";
        case ErrorKind::RegisterTooSmall:
            return "RegisterTooSmall";
        case ErrorKind::NotIsometry:
            return "NotIsometry";
        case ErrorKind::InvalidGate:
            return "InvalidGate";
        case ErrorKind::CircuitMismatch:
            return "CircuitMismatch";
        case ErrorKind::PaddingLeak:
            return "PaddingLeak";
    }
    return "Unknown";
}

PovmError::PovmError(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw PovmError(kind, message);
}

}  // namespace povm
