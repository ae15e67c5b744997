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

#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/**
 * An N-qubit system mapped into the (N+1)-qubit embedding simulator. The
 * ancilla is qubit 0, so observable labels read ancilla letter first
 * ("ZYY" is Z on the ancilla, YY on the system).
 */
struct EmbeddedSystem {
    std::size_t n_system;
    PauliSum h_tilde;
    StateVector psi_tilde_0;

    /// Embeds `h` and `psi0` together; sizes must agree.
    static EmbeddedSystem from_system(const PauliSum &h, const StateVector &psi0);
};

/// |ψ̃⟩ = |0⟩ ⊗ Re|ψ⟩ + |1⟩ ⊗ Im|ψ⟩. The result has only real amplitudes.
StateVector embed_state(const StateVector &psi);

/**
 * Inverse of `embed_state`: ψ = (upper block) + i·(lower block), in complex
 * arithmetic. Throws NotAnEmbeddingError when the reconstruction is not a
 * unit vector within 1e-9.
 */
StateVector unembed_state(const StateVector &psi_tilde);

/**
 * H̃ for H = A + iB (A real symmetric, B real antisymmetric), i.e. the block
 * matrix [[iB, iA], [−iA, iB]] with the ancilla as the outer factor.
 *
 * Termwise: a string with an even number of Y factors is a real matrix and
 * belongs to A, so c·P becomes −c·(Y ⊗ P). A string with an odd number of Y
 * factors is imaginary and belongs to iB, so c·P becomes c·(I ⊗ P).
 */
PauliSum embed_hamiltonian(const PauliSum &h);

/// ⟨ψ|A|ψ*⟩, computed directly from the amplitudes.
Complex conjugation_expectation(const PauliString &a, const StateVector &psi);

/// ⟨Z⊗A⟩ − i⟨X⊗A⟩ on the enlarged state. Equals ⟨ψ|A|ψ*⟩ when psi_tilde is
/// the embedding of ψ.
Complex embedded_conjugation_expectation(const PauliString &a, const StateVector &psi_tilde);

}  // namespace embedsim
