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

#include "embedsim/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "embedsim/error.hpp"

namespace embedsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// FNV-1a; std::hash is not stable across standard libraries.
std::uint64_t fnv1a(const std::string &text) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

void check_shots(std::int64_t shots) {
    if (shots < 1) {
        throw DomainError("shots must be >= 1, got " + std::to_string(shots));
    }
}

}  // namespace

NoiseModel::NoiseModel(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("visibility alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
}

double apply_visibility(double value, const PauliString &setting, const NoiseModel &model) {
    if (setting.is_identity()) {
        return value;
    }
    return model.alpha() * value;
}

double binomial_stderr(std::int64_t k, std::int64_t shots) {
    check_shots(shots);
    if (k <= 0 || k >= shots) {
        return 2.0 / static_cast<double>(shots);
    }
    const auto n = static_cast<double>(shots);
    const auto kk = static_cast<double>(k);
    return 2.0 * std::sqrt(kk * (n - kk) / n) / n;
}

Estimate sample_from_expectation(double expectation, std::int64_t shots, std::uint64_t seed) {
    check_shots(shots);
    if (!(expectation >= -1.0 - 1e-12 && expectation <= 1.0 + 1e-12)) {
        throw DomainError("expectation " + std::to_string(expectation) + " outside [-1, 1]");
    }
    const double p_plus = std::clamp((1.0 + expectation) / 2.0, 0.0, 1.0);
    std::mt19937_64 rng(seed);
    std::binomial_distribution<std::int64_t> draw(shots, p_plus);
    const std::int64_t k = draw(rng);
    return {2.0 * static_cast<double>(k) / static_cast<double>(shots) - 1.0,
            binomial_stderr(k, shots)};
}

Estimate sample_expectation(const PauliString &p, const StateVector &s, std::int64_t shots,
                            std::uint64_t seed) {
    check_shots(shots);
    if (p.is_identity()) {
        throw DomainError("sampling the identity string is meaningless; its expectation is 1");
    }
    return sample_from_expectation(expectation(p, s), shots, seed);
}

double counting_expectation(std::uint64_t n_plus, std::uint64_t n_minus) {
    if (n_plus + n_minus == 0) {
        throw DomainError("all outcome counts are zero");
    }
    const auto plus = static_cast<double>(n_plus);
    const auto minus = static_cast<double>(n_minus);
    return (plus - minus) / (plus + minus);
}

double poisson_counting_stderr(std::uint64_t n_plus, std::uint64_t n_minus) {
    const std::uint64_t total = n_plus + n_minus;
    if (total == 0) {
        throw DomainError("all outcome counts are zero");
    }
    const auto n = static_cast<double>(total);
    if (n_plus == 0 || n_minus == 0) {
        return 2.0 / n;
    }
    return 2.0 * std::sqrt(static_cast<double>(n_plus) * static_cast<double>(n_minus) / (n * n * n));
}

std::uint64_t substream_seed(std::uint64_t seed, std::size_t t_index, const PauliString &setting) {
    return seed ^ splitmix64(splitmix64(static_cast<std::uint64_t>(t_index)) ^ fnv1a(setting.str()));
}

}  // namespace embedsim
