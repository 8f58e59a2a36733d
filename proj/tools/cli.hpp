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

#include <ostream>
#include <string>
#include <vector>

namespace povm::cli {

/// Exit codes of `run`.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,  // also unknown family names
    kDegenerateSeed = 3,
    kError = 4,
};

/// Runs one command line; args excludes the program name. Results go to
/// `out` (or the --output file), one-line diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace povm::cli
