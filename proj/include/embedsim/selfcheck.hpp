// Copyright 2026 The embedsim Authors
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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace embedsim {

struct SuiteResult {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::size_t cases = 0;
};

struct SelfcheckOptions {
    std::uint64_t seed = 20260101;
    /// Randomized cases per suite.
    std::size_t trials = 200;
    /// Fault injection for testing the checker: flips the sign the Im⟨AK⟩
    /// suite applies to the embedded value.
    bool flip_imaginary_sign = false;
};

/// Randomized oracle-equivalence suites over small dense-checkable systems.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions &options = {});

}  // namespace embedsim
