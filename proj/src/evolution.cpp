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

#include "embedsim/evolution.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "embedsim/error.hpp"

namespace embedsim {

namespace {

constexpr double kTruncation = 1e-14;
constexpr int kMaxTaylorTerms = 64;
constexpr double kRenormalizeDrift = 1e-12;
constexpr double kFatalDrift = 1e-8;

}  // namespace

StateVector evolve(const PauliSum &h, const StateVector &s0, double t) {
    if (!std::isfinite(t)) {
        throw DomainError("evolution time must be finite");
    }
    if (h.n_qubits() != s0.n_qubits()) {
        throw DimensionError("Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                             " qubits but the state has " + std::to_string(s0.n_qubits()));
    }
    if (t == 0.0 || h.empty()) {
        return s0;
    }

    const double h_norm = h.one_norm();
    const auto substeps = static_cast<long>(std::max(1.0, std::ceil(h_norm * std::abs(t))));
    const double tau = t / static_cast<double>(substeps);
    const double step_norm = h_norm * std::abs(tau);

    const auto initial = s0.amplitudes();
    std::vector<Complex> state(initial.begin(), initial.end());
    std::vector<Complex> term(state.size());
    std::vector<Complex> next(state.size());

    for (long step = 0; step < substeps; ++step) {
        term = state;
        int k = 1;
        for (; k <= kMaxTaylorTerms; ++k) {
            apply_pauli_sum(h, term, next);
            // term_k = (−iτ/k) · H · term_{k−1}
            const double scale = tau / k;
            double term_sq = 0.0;
            for (std::size_t i = 0; i < next.size(); ++i) {
                const Complex v = next[i];
                const Complex scaled{v.imag() * scale, -v.real() * scale};
                term[i] = scaled;
                state[i] += scaled;
                term_sq += scaled.real() * scaled.real() + scaled.imag() * scaled.imag();
            }
            if (std::sqrt(term_sq) * step_norm / (k + 1) < kTruncation) {
                break;
            }
        }
        if (k > kMaxTaylorTerms) {
            throw InternalError("Taylor series did not converge");
        }
    }

    const double norm = std::sqrt(squared_norm(state));
    const double drift = std::abs(norm - 1.0);
    if (drift > kFatalDrift) {
        throw InternalError("evolution norm drift " + std::to_string(drift));
    }
    if (drift > kRenormalizeDrift) {
        for (auto &a : state) {
            a /= norm;
        }
    }
    return StateVector(std::move(state));
}

}  // namespace embedsim
