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

#include "embedsim/dense.hpp"

#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "embedsim/error.hpp"

namespace embedsim {

namespace {

void check_dense_limit(std::size_t n_qubits) {
    if (n_qubits > kDenseLimit) {
        throw CapacityError("dense matrix of " + std::to_string(n_qubits) +
                            " qubits exceeds the dense limit of " + std::to_string(kDenseLimit));
    }
}

Eigen::Matrix2cd factor_matrix(Pauli p) {
    const auto m = pauli_matrix(p);
    Eigen::Matrix2cd out;
    out << m[0][0], m[0][1], m[1][0], m[1][1];
    return out;
}

}  // namespace

DenseMatrix dense_matrix(const PauliString &p) {
    check_dense_limit(p.size());
    DenseMatrix result = DenseMatrix::Identity(1, 1);
    for (Pauli factor : p.factors()) {
        DenseMatrix next = Eigen::kroneckerProduct(result, factor_matrix(factor)).eval();
        result.swap(next);
    }
    return result;
}

DenseMatrix dense_matrix(const PauliSum &h) {
    check_dense_limit(h.n_qubits());
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n_qubits());
    DenseMatrix result = DenseMatrix::Zero(dim, dim);
    for (const auto &term : h.terms()) {
        result += term.coefficient * dense_matrix(term.string);
    }
    return result;
}

DenseVector to_dense(const StateVector &s) {
    const auto amps = s.amplitudes();
    DenseVector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = amps[i];
    }
    return v;
}

}  // namespace embedsim
