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
#include <cstdint>
#include <optional>

#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/// Single visibility factor α ∈ [0, 1] applied to every correlation expectation.
class NoiseModel {
  public:
    NoiseModel() = default;
    explicit NoiseModel(double alpha);

    double alpha() const noexcept {
        return alpha_;
    }

  private:
    double alpha_ = 1.0;
};

/// α·value, except for the all-identity string whose expectation is fixed at 1.
double apply_visibility(double value, const PauliString &setting, const NoiseModel &model);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// 2·sqrt(k(shots−k)/shots)/shots, or 2/shots when k is 0 or shots.
double binomial_stderr(std::int64_t k, std::int64_t shots);

/**
 * Finite-shot estimate of a ±1-valued observable with true mean
 * `expectation`: k ~ Binomial(shots, (1 + expectation)/2) drawn from a
 * std::mt19937_64 seeded with `seed`, estimate 2k/shots − 1.
 */
Estimate sample_from_expectation(double expectation, std::int64_t shots, std::uint64_t seed);

/// Samples ⟨s|P|s⟩. Identity strings are rejected (their outcome is fixed).
Estimate sample_expectation(const PauliString &p, const StateVector &s, std::int64_t shots,
                            std::uint64_t seed);

/// (n₊ − n₋)/(n₊ + n₋) from raw ±1 outcome counts.
double counting_expectation(std::uint64_t n_plus, std::uint64_t n_minus);

/// Poisson error on each count propagated through (n₊ − n₋)/(n₊ + n₋):
/// 2·sqrt(n₊·n₋/(n₊+n₋)³), floored at 2/(n₊+n₋) when one count is zero.
double poisson_counting_stderr(std::uint64_t n_plus, std::uint64_t n_minus);

/// Per-record seed derived statelessly from (seed, t_index, setting), so
/// records can be sampled in any order with identical results.
std::uint64_t substream_seed(std::uint64_t seed, std::size_t t_index, const PauliString &setting);

struct MeasurementRecord {
    double t = 0.0;
    PauliString setting;
    double ideal = 0.0;
    double noisy = 0.0;
    std::optional<double> sampled;
    std::optional<double> std_error;
    std::optional<std::int64_t> shots;

    friend bool operator==(const MeasurementRecord &, const MeasurementRecord &) = default;
};

}  // namespace embedsim
