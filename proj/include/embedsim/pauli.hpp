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

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace embedsim {

using Complex = std::complex<double>;

/// Largest register the matrix-free paths accept. Bit masks are 64-bit, but a
/// 2^30 amplitude vector is already 16 GiB.
inline constexpr std::size_t kMaxQubits = 30;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p) noexcept;
Pauli pauli_from_char(char c);

/// Standard 2x2 matrix of a single-qubit Pauli, row-major.
std::array<std::array<Complex, 2>, 2> pauli_matrix(Pauli p) noexcept;

/**
 * Tensor product of single-qubit Paulis. Factor 0 (the leftmost letter of the
 * text form) acts on qubit 0, which is the most significant bit of a basis
 * index. In embedded systems qubit 0 is the ancilla.
 */
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> factors);

    /// Parses a letter string such as "ZYY". Whitespace is not allowed.
    static PauliString parse(std::string_view text);
    static PauliString identity(std::size_t n_qubits);
    /// Same letter on every qubit, e.g. `uniform(Pauli::Y, 4)` is "YYYY".
    static PauliString uniform(Pauli p, std::size_t n_qubits);

    std::size_t size() const noexcept {
        return factors_.size();
    }
    Pauli operator[](std::size_t qubit) const {
        return factors_[qubit];
    }
    std::span<const Pauli> factors() const noexcept {
        return factors_;
    }

    std::string str() const;
    bool is_identity() const noexcept;
    std::size_t count(Pauli p) const noexcept;

    /// Bits of qubits carrying X or Y (the bit-flip pattern).
    std::uint64_t x_mask() const noexcept;
    /// Bits of qubits carrying Z or Y (the sign pattern).
    std::uint64_t z_mask() const noexcept;

    /// `left ⊗ right`, i.e. the concatenation of the two letter strings.
    friend PauliString tensor(const PauliString &left, const PauliString &right);
    friend PauliString tensor(Pauli left, const PauliString &right);

    friend bool operator==(const PauliString &, const PauliString &) = default;
    friend std::strong_ordering operator<=>(const PauliString &a, const PauliString &b);

  private:
    std::vector<Pauli> factors_;
};

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/**
 * Real linear combination of equal-length Pauli strings, i.e. a Hermitian
 * operator. Terms are kept in normal form: duplicate strings merged, exact
 * zeros dropped, sorted by string (I < X < Y < Z, leftmost letter first).
 *
 * Text form: `1*XY + 1*XZ`, `-1*YXXX`. The parser also accepts bare strings
 * ("XY" means 1*XY), arbitrary decimal or exponent coefficients, and the
 * typographic minus sign U+2212 in place of '-'.
 */
class PauliSum {
  public:
    explicit PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms = {});

    static PauliSum parse(std::string_view text);

    std::size_t n_qubits() const noexcept {
        return n_qubits_;
    }
    const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    bool empty() const noexcept {
        return terms_.empty();
    }

    /// Sum of |coefficient|; an upper bound on the spectral norm.
    double one_norm() const noexcept;

    /// Text form; coefficients use the shortest round-trip decimal. Empty sum prints "0".
    std::string str() const;

    friend bool operator==(const PauliSum &, const PauliSum &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<PauliTerm> terms_;
};

}  // namespace embedsim
