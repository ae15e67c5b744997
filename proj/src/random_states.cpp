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

#include "embedsim/random_states.hpp"

#include <vector>

namespace embedsim {

namespace {

std::vector<Complex> gaussian_vector(std::size_t dim, bool real_only, Rng &rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(dim);
    for (auto &a : amps) {
        const double re = normal(rng);
        const double im = real_only ? 0.0 : normal(rng);
        a = {re, im};
    }
    return amps;
}

}  // namespace

StateVector random_state(std::size_t n_qubits, Rng &rng) {
    return StateVector::normalized(gaussian_vector(std::size_t{1} << n_qubits, false, rng));
}

StateVector random_real_state(std::size_t n_qubits, Rng &rng) {
    return StateVector::normalized(gaussian_vector(std::size_t{1} << n_qubits, true, rng));
}

StateVector random_product_state(std::size_t n_qubits, Rng &rng) {
    std::vector<Complex> amps{1.0};
    for (std::size_t q = 0; q < n_qubits; ++q) {
        const auto single = random_state(1, rng);
        std::vector<Complex> next;
        next.reserve(amps.size() * 2);
        for (const auto &a : amps) {
            next.push_back(a * single[0]);
            next.push_back(a * single[1]);
        }
        amps = std::move(next);
    }
    return StateVector::normalized(std::move(amps));
}

PauliString random_pauli_string(std::size_t n_qubits, Rng &rng) {
    std::uniform_int_distribution<int> letter(0, 3);
    std::vector<Pauli> factors(n_qubits);
    for (auto &f : factors) {
        f = static_cast<Pauli>(letter(rng));
    }
    return PauliString(std::move(factors));
}

PauliSum random_pauli_sum(std::size_t n_qubits, std::size_t n_terms, Rng &rng) {
    std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
    std::vector<PauliTerm> terms;
    for (std::size_t k = 0; k < n_terms; ++k) {
        terms.push_back({coefficient(rng), random_pauli_string(n_qubits, rng)});
    }
    return PauliSum(n_qubits, std::move(terms));
}

}  // namespace embedsim
