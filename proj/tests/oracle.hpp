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

// Brute-force reference arithmetic for the tests. Deliberately shares no code
// with the library: Pauli matrices are spelled out here, Kronecker products
// are naive loops, and exponentials come from Eigen's MatrixFunctions.

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "embedsim/state.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(char letter) {
    const C i{0.0, 1.0};
    Mat m(2, 2);
    switch (letter) {
        case 'X':
            m << 0.0, 1.0, 1.0, 0.0;
            break;
        case 'Y':
            m << 0.0, -i, i, 0.0;
            break;
        case 'Z':
            m << 1.0, 0.0, 0.0, -1.0;
            break;
        default:
            m << 1.0, 0.0, 0.0, 1.0;
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

/// Leftmost letter is the outermost (most significant) factor.
inline Mat string_matrix(const std::string &letters) {
    Mat out = Mat::Identity(1, 1);
    for (char c : letters) {
        out = kron(out, pauli(c));
    }
    return out;
}

inline Mat sum_matrix(const std::vector<std::pair<double, std::string>> &terms) {
    const auto dim = static_cast<Eigen::Index>(1) << terms.front().second.size();
    Mat out = Mat::Zero(dim, dim);
    for (const auto &[c, s] : terms) {
        out += c * string_matrix(s);
    }
    return out;
}

inline Vec vec(const embedsim::StateVector &s) {
    Vec v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k) {
        v[static_cast<Eigen::Index>(k)] = s[k];
    }
    return v;
}

inline Vec vec(std::initializer_list<C> amps) {
    Vec v(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index k = 0;
    for (const auto &a : amps) {
        v[k++] = a;
    }
    return v;
}

/// ⟨v|M|v⟩ by plain matrix arithmetic.
inline C sandwich(const Vec &v, const Mat &m) {
    return v.dot(m * v);
}

/// ⟨ψ|A|ψ*⟩.
inline C conjugation(const Vec &psi, const Mat &a) {
    return psi.dot(a * psi.conjugate());
}

/// exp(−iHt)|v⟩ via the dense matrix exponential.
inline Vec evolve(const Mat &h, const Vec &v, double t) {
    const Mat u = (C{0.0, -t} * h).exp();
    return u * v;
}

inline double max_diff(const Vec &a, const Vec &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline embedsim::StateVector state(const Vec &v) {
    std::vector<C> amps(v.data(), v.data() + v.size());
    return embedsim::StateVector(std::move(amps));
}

}  // namespace oracle
