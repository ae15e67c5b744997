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
#include <random>

#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

using Rng = std::mt19937_64;

/// Haar-like random state: i.i.d. complex Gaussian amplitudes, normalized.
StateVector random_state(std::size_t n_qubits, Rng &rng);
StateVector random_real_state(std::size_t n_qubits, Rng &rng);
/// Tensor product of independent random single-qubit states.
StateVector random_product_state(std::size_t n_qubits, Rng &rng);
PauliString random_pauli_string(std::size_t n_qubits, Rng &rng);
/// `n_terms` random strings with coefficients uniform in [−1, 1].
PauliSum random_pauli_sum(std::size_t n_qubits, std::size_t n_terms, Rng &rng);

}  // namespace embedsim
