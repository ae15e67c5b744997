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

#include "embedsim/embedding.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "embedsim/error.hpp"

namespace embedsim {

EmbeddedSystem EmbeddedSystem::from_system(const PauliSum &h, const StateVector &psi0) {
    if (h.n_qubits() != psi0.n_qubits()) {
        throw DimensionError("Hamiltonian and initial state sizes differ");
    }
    return EmbeddedSystem{psi0.n_qubits(), embed_hamiltonian(h), embed_state(psi0)};
}

StateVector embed_state(const StateVector &psi) {
    if (psi.n_qubits() + 1 > kMaxQubits) {
        throw CapacityError("embedding would exceed the qubit limit");
    }
    const auto amps = psi.amplitudes();
    const std::size_t dim = amps.size();
    std::vector<Complex> out(2 * dim);
    for (std::size_t b = 0; b < dim; ++b) {
        out[b] = amps[b].real();
        out[dim + b] = amps[b].imag();
    }
    return StateVector(std::move(out));
}

StateVector unembed_state(const StateVector &psi_tilde) {
    if (psi_tilde.n_qubits() < 2) {
        throw DimensionError("an embedded state has at least 2 qubits");
    }
    const auto amps = psi_tilde.amplitudes();
    const std::size_t dim = amps.size() / 2;
    std::vector<Complex> out(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        const Complex lower = amps[dim + b];
        // upper + i·lower
        out[b] = Complex{amps[b].real() - lower.imag(), amps[b].imag() + lower.real()};
    }
    const double norm = std::sqrt(squared_norm(out));
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw NotAnEmbeddingError("reconstructed state has norm " + std::to_string(norm));
    }
    return StateVector(std::move(out));
}

PauliSum embed_hamiltonian(const PauliSum &h) {
    std::vector<PauliTerm> terms;
    terms.reserve(h.terms().size());
    for (const auto &term : h.terms()) {
        if (term.string.count(Pauli::Y) % 2 == 0) {
            terms.push_back({-term.coefficient, tensor(Pauli::Y, term.string)});
        } else {
            terms.push_back({term.coefficient, tensor(Pauli::I, term.string)});
        }
    }
    return PauliSum(h.n_qubits() + 1, std::move(terms));
}

Complex conjugation_expectation(const PauliString &a, const StateVector &psi) {
    if (a.size() != psi.n_qubits()) {
        throw DimensionError("operator " + a.str() + " does not match a " +
                             std::to_string(psi.n_qubits()) + "-qubit state");
    }
    return psi.inner(apply_pauli_string(a, psi.conj()));
}

Complex embedded_conjugation_expectation(const PauliString &a, const StateVector &psi_tilde) {
    if (a.size() + 1 != psi_tilde.n_qubits()) {
        throw DimensionError("operator " + a.str() + " needs a " + std::to_string(a.size() + 1) +
                             "-qubit embedded state");
    }
    const double re = expectation(tensor(Pauli::Z, a), psi_tilde);
    const double im = -expectation(tensor(Pauli::X, a), psi_tilde);
    return {re, im};
}

}  // namespace embedsim
