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

#include "embedsim/monotones.hpp"

#include <cmath>
#include <complex>

#include "embedsim/embedding.hpp"
#include "embedsim/error.hpp"

namespace embedsim {

namespace {

constexpr double kClampSlack = 1e-6;

void check_system_size(std::size_t n_system) {
    if (n_system < 2) {
        throw DomainError("entanglement monotones need at least 2 system qubits, got " +
                          std::to_string(n_system));
    }
}

double combine_complex(Parity parity, std::span<const Complex> c) {
    if (parity == Parity::Even) {
        return std::abs(c[0]);
    }
    return std::abs(c[0] * c[0] + c[1] * c[1] - c[2] * c[2]);
}

void finalize(MonotoneResult &result, double raw) {
    if (raw > 1.0) {
        result.clamp_residual = raw - 1.0;
        if (result.clamp_residual > kClampSlack) {
            throw InternalError("monotone value " + std::to_string(raw) + " exceeds 1");
        }
        raw = 1.0;
    }
    result.value = raw;
}

}  // namespace

Parity parity_of(std::size_t n_system) noexcept {
    return n_system % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::string to_string(Parity parity) {
    return parity == Parity::Even ? "even" : "odd";
}

std::string MonotoneResult::label() const {
    if (n_system == 2) {
        return "concurrence";
    }
    if (n_system == 3) {
        return "three-tangle";
    }
    return std::to_string(n_system) + "-monotone (" + to_string(parity) + ")";
}

std::vector<PauliString> conjugation_operators(std::size_t n_system) {
    check_system_size(n_system);
    if (parity_of(n_system) == Parity::Even) {
        return {PauliString::uniform(Pauli::Y, n_system)};
    }
    const auto tail = PauliString::uniform(Pauli::Y, n_system - 1);
    return {tensor(Pauli::X, tail), tensor(Pauli::Z, tail), tensor(Pauli::I, tail)};
}

std::vector<PauliString> required_settings(std::size_t n_system) {
    std::vector<PauliString> settings;
    for (const auto &a : conjugation_operators(n_system)) {
        settings.push_back(tensor(Pauli::Z, a));
        settings.push_back(tensor(Pauli::X, a));
    }
    return settings;
}

double combine_settings(std::size_t n_system, std::span<const double> expectations) {
    check_system_size(n_system);
    const Parity parity = parity_of(n_system);
    const std::size_t expected = parity == Parity::Even ? 2 : 6;
    if (expectations.size() != expected) {
        throw DimensionError("expected " + std::to_string(expected) + " setting values, got " +
                             std::to_string(expectations.size()));
    }
    std::vector<Complex> c;
    for (std::size_t k = 0; k < expectations.size(); k += 2) {
        c.emplace_back(expectations[k], -expectations[k + 1]);
    }
    return combine_complex(parity, c);
}

MonotoneResult monotone_direct(const StateVector &psi) {
    const std::size_t n = psi.n_qubits();
    check_system_size(n);
    MonotoneResult result;
    result.n_system = n;
    result.parity = parity_of(n);

    std::vector<Complex> c;
    for (const auto &a : conjugation_operators(n)) {
        const Complex value = conjugation_expectation(a, psi);
        c.push_back(value);
        result.components.push_back({tensor(Pauli::Z, a), value.real()});
        result.components.push_back({tensor(Pauli::X, a), -value.imag()});
    }
    finalize(result, combine_complex(result.parity, c));
    return result;
}

MonotoneResult monotone_embedded(const StateVector &psi_tilde) {
    if (psi_tilde.n_qubits() < 3) {
        throw DomainError("embedded state must carry at least 2 system qubits");
    }
    const std::size_t n = psi_tilde.n_qubits() - 1;
    MonotoneResult result;
    result.n_system = n;
    result.parity = parity_of(n);

    std::vector<double> values;
    for (auto &setting : required_settings(n)) {
        const double value = expectation(setting, psi_tilde);
        values.push_back(value);
        result.components.push_back({std::move(setting), value});
    }
    finalize(result, combine_settings(n, values));
    return result;
}

}  // namespace embedsim
