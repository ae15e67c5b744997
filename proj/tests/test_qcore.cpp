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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "embedsim/dense.hpp"
#include "embedsim/error.hpp"
#include "embedsim/evolution.hpp"
#include "embedsim/pauli.hpp"
#include "embedsim/random_states.hpp"
#include "embedsim/state.hpp"
#include "oracle.hpp"

using namespace embedsim;
using oracle::C;

namespace {

const C kI{0.0, 1.0};

}  // namespace

TEST(PauliMatrix, standard_definitions) {
    auto id = pauli_matrix(Pauli::I);
    EXPECT_EQ(id[0][0], C(1.0));
    EXPECT_EQ(id[0][1], C(0.0));
    EXPECT_EQ(id[1][1], C(1.0));
    auto y = pauli_matrix(Pauli::Y);
    EXPECT_EQ(y[0][1], -kI);
    EXPECT_EQ(y[1][0], kI);
    EXPECT_EQ(y[0][0], C(0.0));
    auto z = pauli_matrix(Pauli::Z);
    EXPECT_EQ(z[0][0], C(1.0));
    EXPECT_EQ(z[1][1], C(-1.0));
    auto x = pauli_matrix(Pauli::X);
    EXPECT_EQ(x[0][1], C(1.0));
    EXPECT_EQ(x[1][0], C(1.0));
}

TEST(PauliString, text_round_trip) {
    for (const char *text : {"ZYY", "I", "XIYZ", "IIII"}) {
        EXPECT_EQ(PauliString::parse(text).str(), text);
    }
    Rng rng(1);
    for (int k = 0; k < 100; ++k) {
        auto p = random_pauli_string(1 + k % 9, rng);
        EXPECT_EQ(PauliString::parse(p.str()), p);
    }
}

TEST(PauliString, parse_errors) {
    EXPECT_THROW(PauliString::parse(""), ParseError);
    EXPECT_THROW(PauliString::parse("XQ"), ParseError);
    EXPECT_THROW(PauliString::parse("x"), ParseError);
    EXPECT_THROW(PauliString::uniform(Pauli::X, kMaxQubits + 1), CapacityError);
}

TEST(PauliString, masks_follow_msb_convention) {
    auto p = PauliString::parse("ZYY");
    EXPECT_EQ(p.x_mask(), 0b011u);
    EXPECT_EQ(p.z_mask(), 0b111u);
    EXPECT_EQ(PauliString::parse("XII").x_mask(), 0b100u);
}

TEST(PauliString, dense_matrix_is_hermitian_involutory_traceless) {
    Rng rng(2);
    for (int k = 0; k < 60; ++k) {
        auto p = random_pauli_string(1 + k % 5, rng);
        auto m = dense_matrix(p);
        auto dim = m.rows();
        EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_LT((m * m - DenseMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-15);
        if (p.is_identity()) {
            EXPECT_NEAR(m.trace().real(), static_cast<double>(dim), 1e-15);
        } else {
            EXPECT_LT(std::abs(m.trace()), 1e-15);
        }
    }
}

TEST(PauliSum, normalization_merges_and_sorts) {
    auto h = PauliSum::parse("XZ + 0.5*XY - 0.5*XY + 2*XY - XZ + ZZ");
    ASSERT_EQ(h.terms().size(), 2u);
    EXPECT_EQ(h.str(), "2*XY + 1*ZZ");
    EXPECT_TRUE(PauliSum::parse("X - X").empty());
    EXPECT_EQ(PauliSum::parse("X - X").str(), "0");
}

TEST(PauliSum, text_forms) {
    EXPECT_EQ(PauliSum::parse("1.0*XY + 1.0*XZ").str(), "1*XY + 1*XZ");
    EXPECT_EQ(PauliSum::parse("-1.0*YXXX").str(), "-1*YXXX");
    EXPECT_EQ(PauliSum::parse("\xE2\x88\x92" "1.0*YXXX").str(), "-1*YXXX");
    EXPECT_EQ(PauliSum::parse("1*IXY \xE2\x88\x92 1*YXZ").str(), "1*IXY - 1*YXZ");
    EXPECT_EQ(PauliSum::parse("  2.5e-1 * ZZ+XX ").str(), "1*XX + 0.25*ZZ");
    EXPECT_EQ(PauliSum::parse("0.1*X + 0.2*Z").str(), "0.1*X + 0.2*Z");
}

TEST(PauliSum, text_round_trip_property) {
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        auto h = random_pauli_sum(1 + k % 6, 1 + k % 7, rng);
        EXPECT_EQ(PauliSum::parse(h.str()), h) << h.str();
    }
}

TEST(PauliSum, rejects_bad_input) {
    EXPECT_THROW(PauliSum::parse(""), ParseError);
    EXPECT_THROW(PauliSum::parse("XY + XYZ"), DimensionError);
    EXPECT_THROW(PauliSum::parse("XY XZ"), ParseError);
    EXPECT_THROW(PauliSum::parse("2 XY"), ParseError);
    EXPECT_THROW(PauliSum::parse("1i*XY"), NotHermitianError);
    EXPECT_THROW(PauliSum(2, {{std::nan(""), PauliString::parse("XX")}}), DomainError);
}

TEST(DenseMatrix, examples) {
    auto z = dense_matrix(PauliSum::parse("1*Z"));
    EXPECT_EQ(z, oracle::pauli('Z'));

    auto h = dense_matrix(PauliSum::parse("1*XY + 1*XZ"));
    oracle::Mat expected = oracle::kron(oracle::pauli('X'), oracle::pauli('Y')) +
                    oracle::kron(oracle::pauli('X'), oracle::pauli('Z'));
    EXPECT_LT((h - expected).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);

    auto empty = dense_matrix(PauliSum(3));
    EXPECT_EQ(empty.rows(), 8);
    EXPECT_EQ(empty.cwiseAbs().maxCoeff(), 0.0);
}

TEST(DenseMatrix, capacity_limit) {
    EXPECT_THROW(dense_matrix(PauliSum(kDenseLimit + 1)), CapacityError);
    EXPECT_THROW(dense_matrix(PauliString::identity(kDenseLimit + 1)), CapacityError);
}

TEST(StateVector, construction_invariants) {
    EXPECT_THROW(StateVector({1.0, 0.0, 0.0}), DimensionError);
    EXPECT_THROW(StateVector({1.0}), DimensionError);
    EXPECT_THROW(StateVector({1.0, 1.0}), DomainError);
    EXPECT_THROW(StateVector({std::nan(""), 0.0}), DomainError);
    EXPECT_NO_THROW(StateVector({1.0 + 5e-10, 0.0}));
    EXPECT_THROW(StateVector::normalized({0.0, 0.0}), DomainError);
    auto s = StateVector::basis("011");
    EXPECT_EQ(s.n_qubits(), 3u);
    EXPECT_EQ(s[3], C(1.0));
}

TEST(ApplyPauliString, examples) {
    auto yy = apply_pauli_string(PauliString::parse("YY"), StateVector::basis("00"));
    EXPECT_EQ(yy[3], C(-1.0));
    EXPECT_EQ(yy[0], C(0.0));

    auto zyy = apply_pauli_string(PauliString::parse("ZYY"), StateVector::basis("011"));
    oracle::Vec reference = oracle::string_matrix("ZYY") * oracle::vec(StateVector::basis("011"));
    EXPECT_LT(oracle::max_diff(oracle::vec(zyy), reference), 1e-15);
    EXPECT_EQ(zyy[0], C(-1.0));

    Rng rng(4);
    auto psi = random_state(2, rng);
    EXPECT_EQ(apply_pauli_string(PauliString::parse("II"), psi), psi);

    EXPECT_THROW(apply_pauli_string(PauliString::parse("XYZ"), psi), DimensionError);
}

TEST(ApplyPauliString, matches_dense_oracle_and_is_involutory) {
    Rng rng(5);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + k % 6;
        auto p = random_pauli_string(n, rng);
        auto s = random_state(n, rng);
        auto out = apply_pauli_string(p, s);
        oracle::Vec reference = oracle::string_matrix(p.str()) * oracle::vec(s);
        EXPECT_LT(oracle::max_diff(oracle::vec(out), reference), 1e-12);
        EXPECT_NEAR(out.norm(), 1.0, 1e-12);
        auto twice = apply_pauli_string(p, out);
        EXPECT_LT(oracle::max_diff(oracle::vec(twice), oracle::vec(s)), 1e-12);
    }
}

TEST(Expectation, examples) {
    EXPECT_EQ(expectation(PauliString::parse("Z"), StateVector::basis("0")), 1.0);

    // cos(θ)|000⟩ + sin(θ)/√2 (|011⟩ − |110⟩) with θ = √2 t = π/4.
    const double theta = std::numbers::pi / 4;
    const double a = std::cos(theta);
    const double b = std::sin(theta) / std::sqrt(2.0);
    auto v = oracle::vec({a, 0, 0, b, 0, 0, -b, 0});
    auto s = oracle::state(v);
    const C zyy = oracle::sandwich(v, oracle::string_matrix("ZYY"));
    EXPECT_NEAR(zyy.real(), -0.70710678118654752, 1e-15);
    EXPECT_NEAR(expectation(PauliString::parse("ZYY"), s), zyy.real(), 1e-12);
    for (double t : {0.0, 0.3, 1.1}) {
        const double th = std::sqrt(2.0) * t;
        auto st = oracle::vec({std::cos(th), 0, 0, std::sin(th) / std::sqrt(2.0), 0, 0,
                               -std::sin(th) / std::sqrt(2.0), 0});
        EXPECT_NEAR(oracle::sandwich(st, oracle::string_matrix("XYY")).real(), 0.0, 1e-15);
        EXPECT_NEAR(expectation(PauliString::parse("XYY"), oracle::state(st)), 0.0, 1e-15);
    }
    EXPECT_THROW(expectation(PauliString::parse("ZZ"), s), DimensionError);
}

TEST(Expectation, matches_dense_oracle_in_range) {
    Rng rng(6);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + k % 6;
        auto p = random_pauli_string(n, rng);
        auto s = random_state(n, rng);
        const double e = expectation(p, s);
        EXPECT_GE(e, -1.0);
        EXPECT_LE(e, 1.0);
        EXPECT_NEAR(e, oracle::sandwich(oracle::vec(s), oracle::string_matrix(p.str())).real(), 1e-10);
    }
}

TEST(Evolve, zero_time_is_identity) {
    Rng rng(7);
    auto s = random_state(3, rng);
    EXPECT_EQ(evolve(PauliSum::parse("XXX + 0.3*ZIZ"), s, 0.0), s);
    EXPECT_EQ(evolve(PauliSum(3), s, 1.7), s);
}

TEST(Evolve, concurrence_hamiltonian_closed_form) {
    const auto h = PauliSum::parse("XY + XZ");
    const double r = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < 12; ++k) {
        const double t = 0.37 * k;
        const double c = std::cos(std::sqrt(2.0) * t);
        const double s = std::sin(std::sqrt(2.0) * t);
        // cos(√2t)|00⟩ − i sin(√2t)/√2 |10⟩ + sin(√2t)/√2 |11⟩
        auto expected = oracle::vec({c, 0, C(0, -s * r), s * r});
        auto evolved = evolve(h, StateVector::basis("00"), t);
        EXPECT_LT(oracle::max_diff(oracle::vec(evolved), expected), 1e-10) << "t=" << t;
    }
}

TEST(Evolve, ghz_hamiltonian_closed_form) {
    const auto h = PauliSum::parse("XXX");
    for (double t : {0.1, 0.5, 1.3, 3.0, -2.2}) {
        auto expected = oracle::vec({std::cos(t), 0, 0, 0, 0, 0, 0, C(0, -std::sin(t))});
        auto evolved = evolve(h, StateVector::basis("000"), t);
        EXPECT_LT(oracle::max_diff(oracle::vec(evolved), expected), 1e-10);
    }
}

TEST(Evolve, matches_dense_exponential) {
    Rng rng(8);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = 1 + k % 5;
        auto h = random_pauli_sum(n, 1 + k % 6, rng);
        auto s = random_state(n, rng);
        const double t = 0.25 * (k % 9) - 0.6;
        std::vector<std::pair<double, std::string>> terms;
        for (const auto &term : h.terms()) {
            terms.emplace_back(term.coefficient, term.string.str());
        }
        if (terms.empty()) {
            continue;
        }
        auto expected = oracle::evolve(oracle::sum_matrix(terms), oracle::vec(s), t);
        EXPECT_LT(oracle::max_diff(oracle::vec(evolve(h, s, t)), expected), 1e-10);
    }
}

TEST(Evolve, semigroup_and_unitarity) {
    Rng rng(9);
    for (int k = 0; k < 30; ++k) {
        const std::size_t n = 2 + k % 4;
        auto h = random_pauli_sum(n, 4, rng);
        auto s = random_state(n, rng);
        const double t1 = 0.1 + 0.2 * (k % 5);
        const double t2 = 1.3 - 0.1 * (k % 7);
        auto direct = evolve(h, s, t1 + t2);
        auto stepped = evolve(h, evolve(h, s, t1), t2);
        EXPECT_LT(oracle::max_diff(oracle::vec(direct), oracle::vec(stepped)), 1e-9);
        EXPECT_NEAR(direct.norm(), 1.0, 1e-10);
    }
}

TEST(Evolve, errors) {
    auto s = StateVector::basis("00");
    EXPECT_THROW(evolve(PauliSum::parse("XY"), s, INFINITY), DomainError);
    EXPECT_THROW(evolve(PauliSum::parse("XY"), s, std::nan("")), DomainError);
    EXPECT_THROW(evolve(PauliSum::parse("XYZ"), s, 1.0), DimensionError);
}

TEST(Evolve, large_register_matrix_free) {
    // 20 qubits: far past the dense limit; checks the closed form on one amplitude pair.
    const std::size_t n = 20;
    std::vector<Pauli> xs(n, Pauli::X);
    PauliSum h(n, {{1.0, PauliString(xs)}});
    auto out = evolve(h, StateVector::basis(n, 0), 0.4);
    EXPECT_NEAR(out[0].real(), std::cos(0.4), 1e-10);
    EXPECT_NEAR(out[out.size() - 1].imag(), -std::sin(0.4), 1e-10);
}
