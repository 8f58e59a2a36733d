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

#include <stdexcept>
#include <string>
#include <string_view>

namespace povm {

enum class ErrorKind {
    InvalidDimension,
    NonFinite,
    PhaseUndefined,
    InvalidState,
    OutsideBall,
    ZeroOperator,
    InvalidParameter,
    DegenerateOrbit,
    InvalidRotation,
    RegisterTooSmall,
    NotIsometry,
    InvalidGate,
    CircuitMismatch,
    PaddingLeak,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable exit code.
class PovmError : public std::runtime_error {
   public:
    PovmError(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace povm
