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

#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/**
 * exp(−iHt)|s0⟩ with ħ = 1, using only matrix-vector products.
 *
 * The interval is cut into m substeps with ‖H‖₁·|t|/m ≤ 1, where ‖H‖₁ is the
 * sum of absolute coefficients. Each substep sums the Taylor series of
 * exp(−iHτ) applied to the vector and stops once the bound on the next term's
 * norm falls below 1e-14. Norm drift above 1e-12 is renormalized; drift
 * above 1e-8 raises InternalError.
 */
StateVector evolve(const PauliSum &h, const StateVector &s0, double t);

}  // namespace embedsim
