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

#include "embedsim/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "embedsim/error.hpp"

namespace embedsim {

namespace {

// i^k for k mod 4.
Complex i_power(std::size_t k) noexcept {
    switch (k % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

// Explicit product; std::complex operator* carries NaN recovery that blocks
// vectorization in the hot loops.
inline Complex mul(Complex a, Complex b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

std::size_t qubits_for_length(std::size_t length) {
    if (length < 2 || !std::has_single_bit(length)) {
        throw DimensionError("state length " + std::to_string(length) +
                             " is not a power of two >= 2");
    }
    auto n = static_cast<std::size_t>(std::countr_zero(length));
    if (n > kMaxQubits) {
        throw CapacityError("state of " + std::to_string(n) + " qubits exceeds the limit");
    }
    return n;
}

void check_lengths(const PauliString &p, std::size_t n_qubits) {
    if (p.size() != n_qubits) {
        throw DimensionError("Pauli string " + p.str() + " has length " + std::to_string(p.size()) +
                             " but the state has " + std::to_string(n_qubits) + " qubits");
    }
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : n_qubits_(qubits_for_length(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("state has a non-finite amplitude");
        }
    }
    double n = norm();
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw DomainError("state norm " + std::to_string(n) + " is not 1");
    }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
    double n = std::sqrt(squared_norm(amplitudes));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw DomainError("basis state needs 1.." + std::to_string(kMaxQubits) + " qubits");
    }
    std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw DomainError("basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

StateVector StateVector::basis(std::string_view bits) {
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ParseError("basis label '" + std::string(bits) + "' must contain only 0 and 1");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return basis(bits.size(), index);
}

double StateVector::norm() const noexcept {
    return std::sqrt(squared_norm(amplitudes_));
}

StateVector StateVector::conj() const {
    StateVector out = *this;
    for (auto &a : out.amplitudes_) {
        a = std::conj(a);
    }
    return out;
}

StateVector StateVector::with_global_phase(double phi) const {
    StateVector out = *this;
    Complex phase = std::polar(1.0, phi);
    for (auto &a : out.amplitudes_) {
        a = mul(a, phase);
    }
    return out;
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.size() != size()) {
        throw DimensionError("inner product of states with different sizes");
    }
    Complex total = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        total += mul(std::conj(amplitudes_[i]), other.amplitudes_[i]);
    }
    return total;
}

double squared_norm(std::span<const Complex> v) noexcept {
    double total = 0.0;
    for (const auto &a : v) {
        total += a.real() * a.real() + a.imag() * a.imag();
    }
    return total;
}

void accumulate_pauli(const PauliString &p, Complex coefficient, std::span<const Complex> in,
                      std::span<Complex> out) {
    check_lengths(p, qubits_for_length(in.size()));
    if (out.size() != in.size()) {
        throw DimensionError("output buffer size differs from input");
    }
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const Complex factor = mul(coefficient, i_power(p.count(Pauli::Y)));
    const Complex negated = -factor;
    const std::size_t dim = in.size();
    for (std::size_t b = 0; b < dim; ++b) {
        const Complex &f = (std::popcount(b & z) & 1) ? negated : factor;
        Complex &target = out[b ^ x];
        target += mul(f, in[b]);
    }
}

void apply_pauli_sum(const PauliSum &h, std::span<const Complex> in, std::span<Complex> out) {
    if (out.size() != in.size()) {
        throw DimensionError("output buffer size differs from input");
    }
    std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
    for (const auto &term : h.terms()) {
        accumulate_pauli(term.string, term.coefficient, in, out);
    }
}

StateVector apply_pauli_string(const PauliString &p, const StateVector &s) {
    check_lengths(p, s.n_qubits());
    std::vector<Complex> out(s.size());
    accumulate_pauli(p, 1.0, s.amplitudes(), out);
    return StateVector(std::move(out));
}

double expectation(const PauliString &p, const StateVector &s) {
    check_lengths(p, s.n_qubits());
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const auto amps = s.amplitudes();
    Complex total = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        Complex term = mul(std::conj(amps[b ^ x]), amps[b]);
        if (std::popcount(b & z) & 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    total = mul(total, i_power(p.count(Pauli::Y)));
    if (std::abs(total.imag()) > 1e-10) {
        throw InternalError("expectation of " + p.str() + " has imaginary residue " +
                            std::to_string(total.imag()));
    }
    return std::clamp(total.real(), -1.0, 1.0);
}

}  // namespace embedsim
