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
#include <string>
#include <vector>

#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

enum class Parity { Even, Odd };

Parity parity_of(std::size_t n_system) noexcept;
std::string to_string(Parity parity);

/// One measured setting: an (N+1)-qubit observable and its expectation.
struct SettingValue {
    PauliString setting;
    double expectation = 0.0;

    friend bool operator==(const SettingValue &, const SettingValue &) = default;
};

struct MonotoneResult {
    double value = 0.0;
    std::size_t n_system = 0;
    Parity parity = Parity::Even;
    /// 2 entries for even N, 6 for odd N, in `required_settings` order.
    std::vector<SettingValue> components;
    /// Amount by which the raw value exceeded 1 before clamping (0 if it did not).
    double clamp_residual = 0.0;

    /// "concurrence" (N = 2), "three-tangle" (N = 3), else "N-monotone (even|odd)".
    std::string label() const;
};

/**
 * Observables on the enlarged state that determine the monotone.
 *
 *   even N:  Z⊗Y^N, X⊗Y^N
 *   odd N:   Z⊗A1, X⊗A1, Z⊗A2, X⊗A2, Z⊗A3, X⊗A3
 *            with A1 = X Y^(N−1), A2 = Z Y^(N−1), A3 = I Y^(N−1)
 */
std::vector<PauliString> required_settings(std::size_t n_system);

/// The N-qubit operators A whose ⟨AK⟩ enter the monotone: {Y^N} or {A1, A2, A3}.
std::vector<PauliString> conjugation_operators(std::size_t n_system);

/**
 * Combines expectations given in `required_settings` order:
 * |⟨ZA0⟩ − i⟨XA0⟩| for even N, |c1² + c2² − c3²| with ck = ⟨ZAk⟩ − i⟨XAk⟩
 * for odd N. No clamping; shot-noise data can exceed 1.
 */
double combine_settings(std::size_t n_system, std::span<const double> expectations);

/// Reference value from |⟨ψ|A|ψ*⟩|-type expressions evaluated on ψ itself.
MonotoneResult monotone_direct(const StateVector &psi);

/// The efficient route: only the 2 or 6 Hermitian expectations on ψ̃.
MonotoneResult monotone_embedded(const StateVector &psi_tilde);

}  // namespace embedsim
