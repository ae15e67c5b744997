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

#include "embedsim/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "embedsim/dense.hpp"
#include "embedsim/embedding.hpp"
#include "embedsim/evolution.hpp"
#include "embedsim/monotones.hpp"
#include "embedsim/random_states.hpp"

namespace embedsim {

namespace {

double max_abs_diff(const StateVector &a, const StateVector &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

SuiteResult run_suite(const std::string &name, double tolerance, std::size_t cases,
                      const std::function<double(std::size_t)> &trial) {
    SuiteResult result{name, true, 0.0, tolerance, cases};
    for (std::size_t i = 0; i < cases; ++i) {
        const double err = trial(i);
        result.max_error = std::max(result.max_error, std::isnan(err) ? INFINITY : err);
    }
    result.passed = result.max_error <= tolerance;
    return result;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions &options) {
    Rng rng(options.seed);
    const std::size_t trials = options.trials;
    std::vector<SuiteResult> results;

    results.push_back(run_suite("pauli-apply-vs-dense", 1e-12, trials, [&](std::size_t i) {
        const std::size_t n = 1 + i % 6;
        const auto p = random_pauli_string(n, rng);
        const auto s = random_state(n, rng);
        const DenseVector reference = dense_matrix(p) * to_dense(s);
        const auto fast = apply_pauli_string(p, s);
        return (reference - to_dense(fast)).cwiseAbs().maxCoeff();
    }));

    results.push_back(run_suite("expectation-vs-dense", 1e-10, trials, [&](std::size_t i) {
        const std::size_t n = 1 + i % 6;
        const auto p = random_pauli_string(n, rng);
        const auto s = random_state(n, rng);
        const DenseVector v = to_dense(s);
        const Complex reference = v.dot(dense_matrix(p) * v);
        return std::abs(reference - Complex(expectation(p, s)));
    }));

    // Shared draws so the Re and Im suites see identical (ψ, A) pairs.
    struct ConjugationCase {
        Complex direct;
        Complex embedded;
    };
    std::vector<ConjugationCase> conj_cases;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t n = 2 + i % 4;
        const auto psi = random_state(n, rng);
        const auto a = random_pauli_string(n, rng);
        conj_cases.push_back(
            {conjugation_expectation(a, psi), embedded_conjugation_expectation(a, embed_state(psi))});
    }
    results.push_back(run_suite("Re<AK> = <ZA>", 1e-12, trials, [&](std::size_t i) {
        return std::abs(conj_cases[i].embedded.real() - conj_cases[i].direct.real());
    }));
    const double im_sign = options.flip_imaginary_sign ? -1.0 : 1.0;
    results.push_back(run_suite("Im<AK> = -<XA>", 1e-12, trials, [&](std::size_t i) {
        return std::abs(im_sign * conj_cases[i].embedded.imag() - conj_cases[i].direct.imag());
    }));

    results.push_back(run_suite("embed-hamiltonian-block", 1e-12, trials / 4, [&](std::size_t i) {
        const std::size_t n = 1 + i % 4;
        const auto h = random_pauli_sum(n, 1 + i % 5, rng);
        const DenseMatrix dense = dense_matrix(h);
        const DenseMatrix a = dense.real().cast<Complex>();
        const DenseMatrix b = dense.imag().cast<Complex>();
        const auto dim = dense.rows();
        const Complex j{0.0, 1.0};
        DenseMatrix block(2 * dim, 2 * dim);
        block << j * b, j * a, -j * a, j * b;
        const DenseMatrix embedded = dense_matrix(embed_hamiltonian(h));
        const double hermitian_gap = (embedded - embedded.adjoint()).cwiseAbs().maxCoeff();
        return std::max(hermitian_gap, (embedded - block).cwiseAbs().maxCoeff());
    }));

    results.push_back(run_suite("commutation-diagram", 1e-9, trials / 4, [&](std::size_t i) {
        static constexpr double kTimes[] = {0.1, 0.7, 2.3};
        const std::size_t n = 1 + i % 4;
        const auto h = random_pauli_sum(n, 1 + i % 4, rng);
        const auto psi0 = i % 2 == 0 ? random_real_state(n, rng) : random_state(n, rng);
        const auto h_tilde = embed_hamiltonian(h);
        const auto psi_tilde_0 = embed_state(psi0);
        double worst = 0.0;
        for (double t : kTimes) {
            worst = std::max(worst, max_abs_diff(embed_state(evolve(h, psi0, t)),
                                                 evolve(h_tilde, psi_tilde_0, t)));
        }
        return worst;
    }));

    results.push_back(run_suite("monotone-direct-vs-embedded", 1e-10, trials, [&](std::size_t i) {
        const std::size_t n = 2 + i % 4;
        const auto psi = random_state(n, rng);
        return std::abs(monotone_embedded(embed_state(psi)).value - monotone_direct(psi).value);
    }));

    results.push_back(run_suite("evolve-closed-form", 1e-10, trials / 4, [&](std::size_t i) {
        // Both Hamiltonians square to c·1, so exp(−iHt) = cos(√c t) − i sin(√c t)/√c · H.
        const bool two_qubit = i % 2 == 0;
        const auto h = PauliSum::parse(two_qubit ? "XY + XZ" : "XXX");
        const double c = two_qubit ? 2.0 : 1.0;
        const std::size_t n = h.n_qubits();
        const auto s = random_state(n, rng);
        const double t = std::uniform_real_distribution<double>(-4.0, 4.0)(rng);
        std::vector<Complex> hs(s.size());
        apply_pauli_sum(h, s.amplitudes(), hs);
        const double root = std::sqrt(c);
        const Complex sin_part{0.0, -std::sin(root * t) / root};
        const auto evolved = evolve(h, s, t);
        double worst = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            const Complex expected = std::cos(root * t) * s[k] + sin_part * hs[k];
            worst = std::max(worst, std::abs(evolved[k] - expected));
        }
        return worst;
    }));

    return results;
}

}  // namespace embedsim
