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
#include <span>
#include <string_view>
#include <vector>

#include "embedsim/pauli.hpp"

namespace embedsim {

/// Construction rejects states whose norm differs from 1 by more than this.
inline constexpr double kNormTolerance = 1e-9;

/**
 * Normalized pure state of `n_qubits` qubits. Amplitude index bits are read
 * with qubit 0 as the most significant bit, so |0…0⟩ is index 0 and the
 * letters of "011" map to index 3.
 */
class StateVector {
  public:
    /// Takes ownership of `amplitudes`; length must be 2^n with n ≥ 1, all
    /// entries finite and the norm within `kNormTolerance` of 1.
    explicit StateVector(std::vector<Complex> amplitudes);

    /// Rescales a nonzero finite vector to unit norm.
    static StateVector normalized(std::vector<Complex> amplitudes);
    static StateVector basis(std::size_t n_qubits, std::size_t index);
    /// Computational basis state from a bit string, e.g. "011".
    static StateVector basis(std::string_view bits);

    std::size_t n_qubits() const noexcept {
        return n_qubits_;
    }
    std::size_t size() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    double norm() const noexcept;
    /// Entrywise complex conjugate, the action of K.
    StateVector conj() const;
    /// Multiplies every amplitude by e^{i·phi}.
    StateVector with_global_phase(double phi) const;
    /// ⟨this|other⟩.
    Complex inner(const StateVector &other) const;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    std::size_t n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

double squared_norm(std::span<const Complex> v) noexcept;

/// out += coefficient · P · in. `in` and `out` must not alias.
void accumulate_pauli(const PauliString &p, Complex coefficient, std::span<const Complex> in,
                      std::span<Complex> out);

/// out = H · in for a Pauli sum H. `in` and `out` must not alias.
void apply_pauli_sum(const PauliSum &h, std::span<const Complex> in, std::span<Complex> out);

/// P|s⟩ by bit-flip and phase bookkeeping; never builds the 2^n × 2^n matrix.
StateVector apply_pauli_string(const PauliString &p, const StateVector &s);

/// ⟨s|P|s⟩. Real for Hermitian P; an imaginary residue above 1e-10 is an InternalError.
double expectation(const PauliString &p, const StateVector &s);

}  // namespace embedsim
