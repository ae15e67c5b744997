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

#include "embedsim/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>

#include "embedsim/error.hpp"

namespace embedsim {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

std::string format_double(double value) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

bool is_pauli_letter(char c) {
    return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}

// Recursive-descent scanner for the PauliSum text form.
class SumParser {
  public:
    explicit SumParser(std::string_view text) : text_(text) {
    }

    std::vector<PauliTerm> parse() {
        std::vector<PauliTerm> terms;
        skip_space();
        if (at_end()) {
            throw ParseError("empty Pauli sum");
        }
        double sign = read_sign().value_or(1.0);
        terms.push_back(read_term(sign));
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            auto s = read_sign();
            if (!s) {
                fail("expected '+' or '-' between terms");
            }
            terms.push_back(read_term(*s));
        }
        return terms;
    }

  private:
    bool at_end() const {
        return pos_ >= text_.size();
    }

    void skip_space() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError("Pauli sum '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                         ": " + what);
    }

    std::optional<double> read_sign() {
        if (at_end()) {
            return std::nullopt;
        }
        if (text_[pos_] == '+') {
            ++pos_;
            return 1.0;
        }
        if (text_[pos_] == '-') {
            ++pos_;
            return -1.0;
        }
        if (text_.substr(pos_).starts_with(kUnicodeMinus)) {
            pos_ += kUnicodeMinus.size();
            return -1.0;
        }
        return std::nullopt;
    }

    PauliTerm read_term(double sign) {
        skip_space();
        double coefficient = 1.0;
        if (!at_end() && !is_pauli_letter(text_[pos_])) {
            const char *first = text_.data() + pos_;
            const char *last = text_.data() + text_.size();
            auto res = std::from_chars(first, last, coefficient);
            if (res.ec != std::errc() || !std::isfinite(coefficient)) {
                fail("expected a coefficient or Pauli letters");
            }
            pos_ += static_cast<std::size_t>(res.ptr - first);
            skip_space();
            if (!at_end() && (text_[pos_] == 'i' || text_[pos_] == 'j')) {
                throw NotHermitianError("Pauli sum '" + std::string(text_) +
                                        "': imaginary coefficients are not allowed");
            }
            if (at_end() || text_[pos_] != '*') {
                fail("expected '*' after coefficient");
            }
            ++pos_;
            skip_space();
        }
        std::size_t start = pos_;
        while (!at_end() && is_pauli_letter(text_[pos_])) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected Pauli letters");
        }
        return PauliTerm{sign * coefficient, PauliString::parse(text_.substr(start, pos_ - start))};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

char to_char(Pauli p) noexcept {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    return kLetters[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw ParseError(std::string("not a Pauli letter: '") + c + "'");
    }
}

std::array<std::array<Complex, 2>, 2> pauli_matrix(Pauli p) noexcept {
    using namespace std::complex_literals;
    switch (p) {
        case Pauli::X:
            return {{{0.0, 1.0}, {1.0, 0.0}}};
        case Pauli::Y:
            return {{{0.0, -1.0i}, {1.0i, 0.0}}};
        case Pauli::Z:
            return {{{1.0, 0.0}, {0.0, -1.0}}};
        case Pauli::I:
        default:
            return {{{1.0, 0.0}, {0.0, 1.0}}};
    }
}

PauliString::PauliString(std::vector<Pauli> factors) : factors_(std::move(factors)) {
    if (factors_.size() > kMaxQubits) {
        throw CapacityError("Pauli string of length " + std::to_string(factors_.size()) +
                            " exceeds the " + std::to_string(kMaxQubits) + "-qubit limit");
    }
}

PauliString PauliString::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty Pauli string");
    }
    std::vector<Pauli> factors;
    factors.reserve(text.size());
    for (char c : text) {
        factors.push_back(pauli_from_char(c));
    }
    return PauliString(std::move(factors));
}

PauliString PauliString::identity(std::size_t n_qubits) {
    return uniform(Pauli::I, n_qubits);
}

PauliString PauliString::uniform(Pauli p, std::size_t n_qubits) {
    return PauliString(std::vector<Pauli>(n_qubits, p));
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(factors_.size());
    for (Pauli p : factors_) {
        out.push_back(to_char(p));
    }
    return out;
}

bool PauliString::is_identity() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(), [](Pauli p) { return p == Pauli::I; });
}

std::size_t PauliString::count(Pauli p) const noexcept {
    return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), p));
}

std::uint64_t PauliString::x_mask() const noexcept {
    std::uint64_t mask = 0;
    const std::size_t n = factors_.size();
    for (std::size_t q = 0; q < n; ++q) {
        if (factors_[q] == Pauli::X || factors_[q] == Pauli::Y) {
            mask |= std::uint64_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

std::uint64_t PauliString::z_mask() const noexcept {
    std::uint64_t mask = 0;
    const std::size_t n = factors_.size();
    for (std::size_t q = 0; q < n; ++q) {
        if (factors_[q] == Pauli::Z || factors_[q] == Pauli::Y) {
            mask |= std::uint64_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

PauliString tensor(const PauliString &left, const PauliString &right) {
    std::vector<Pauli> factors(left.factors_);
    factors.insert(factors.end(), right.factors_.begin(), right.factors_.end());
    return PauliString(std::move(factors));
}

PauliString tensor(Pauli left, const PauliString &right) {
    return tensor(PauliString({left}), right);
}

std::strong_ordering operator<=>(const PauliString &a, const PauliString &b) {
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
}

PauliSum::PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw DomainError("Pauli sum needs at least one qubit");
    }
    std::map<PauliString, double> merged;
    for (auto &term : terms) {
        if (term.string.size() != n_qubits) {
            throw DimensionError("term " + term.string.str() + " has length " +
                                 std::to_string(term.string.size()) + ", expected " +
                                 std::to_string(n_qubits));
        }
        if (!std::isfinite(term.coefficient)) {
            throw DomainError("non-finite coefficient on term " + term.string.str());
        }
        merged[std::move(term.string)] += term.coefficient;
    }
    for (auto &[string, coefficient] : merged) {
        if (coefficient != 0.0) {
            terms_.push_back(PauliTerm{coefficient, string});
        }
    }
}

PauliSum PauliSum::parse(std::string_view text) {
    auto terms = SumParser(text).parse();
    std::size_t n = terms.front().string.size();
    return PauliSum(n, std::move(terms));
}

double PauliSum::one_norm() const noexcept {
    double total = 0.0;
    for (const auto &term : terms_) {
        total += std::abs(term.coefficient);
    }
    return total;
}

std::string PauliSum::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &term : terms_) {
        double c = term.coefficient;
        if (first) {
            out += format_double(c);
        } else {
            out += c < 0 ? " - " : " + ";
            out += format_double(std::abs(c));
        }
        out += '*';
        out += term.string.str();
        first = false;
    }
    return out;
}

}  // namespace embedsim
