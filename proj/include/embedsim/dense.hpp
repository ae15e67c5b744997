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

#include <cstddef>

#include <Eigen/Dense>

#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/// Dense matrices are only built up to this many qubits (4096 × 4096).
inline constexpr std::size_t kDenseLimit = 12;

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Σ c_k · (P_k0 ⊗ P_k1 ⊗ …) assembled from Kronecker products of the 2×2
/// factor matrices. Used as the reference path for the matrix-free kernels.
DenseMatrix dense_matrix(const PauliString &p);
DenseMatrix dense_matrix(const PauliSum &h);

DenseVector to_dense(const StateVector &s);

}  // namespace embedsim
