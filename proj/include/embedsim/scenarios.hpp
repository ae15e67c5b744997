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
#include <string>
#include <string_view>
#include <vector>

#include "embedsim/measurement.hpp"
#include "embedsim/monotones.hpp"
#include "embedsim/pauli.hpp"
#include "embedsim/state.hpp"

namespace embedsim {

/// How ψ̃(t) is produced: evolve ψ̃ under H̃, or evolve ψ under H and embed.
enum class EvolutionMode { Embedded, Direct };

std::string to_string(EvolutionMode mode);
EvolutionMode parse_evolution_mode(std::string_view text);

inline constexpr std::size_t kMinScenarioQubits = 2;
inline constexpr std::size_t kMaxScenarioQubits = 20;
inline constexpr std::size_t kDefaultSteps = 12;

struct ScenarioConfig {
    std::string name;
    std::size_t n_system;
    PauliSum hamiltonian;
    StateVector initial_state;
    double dt;
    /// Number of grid points; t_k = k·dt for k = 0 … steps−1.
    std::size_t steps = kDefaultSteps;
    /// Empty means ideal expectations only.
    std::optional<std::int64_t> shots;
    double alpha = 1.0;
    std::uint64_t seed = 0;
    EvolutionMode mode = EvolutionMode::Embedded;

    /// Throws ConfigError naming the first offending field.
    void validate() const;

    friend bool operator==(const ScenarioConfig &, const ScenarioConfig &) = default;
};

/// Two-qubit system, H = X⊗Y + X⊗Z from |00⟩, Δt = π/(12√2).
ScenarioConfig builtin_concurrence_scenario();
/// Three-qubit system, H = X⊗X⊗X from |000⟩, Δt = π/12.
ScenarioConfig builtin_tangle_scenario();

/// Looks up "concurrence" or "tangle" (with or without a "builtin:" prefix).
std::optional<ScenarioConfig> builtin_scenario(std::string_view name);

struct TimePoint {
    std::size_t t_index = 0;
    double t = 0.0;
    /// One record per required setting, in `required_settings` order.
    std::vector<MeasurementRecord> records;
    double monotone_ideal = 0.0;
    double monotone_noisy = 0.0;
    std::optional<double> monotone_sampled;

    friend bool operator==(const TimePoint &, const TimePoint &) = default;
};

struct TimeSeries {
    ScenarioConfig config;
    std::vector<TimePoint> points;

    friend bool operator==(const TimeSeries &, const TimeSeries &) = default;
};

/**
 * Evolves, embeds and measures at every grid point. Grid points are
 * independent: each state is evolved from t = 0 and each sampled record
 * draws from its own substream, so the result does not depend on how the
 * points are scheduled across threads.
 */
TimeSeries run_scenario(const ScenarioConfig &config);

enum class FitModel { EvenLinear, OddQuadratic };

std::string to_string(FitModel model);
FitModel fit_model_for(Parity parity) noexcept;

struct FitResult {
    FitModel model = FitModel::EvenLinear;
    double alpha_hat = 0.0;
    /// RMS of the residuals over all points.
    double residual = 0.0;
    /// "sampled" when every point carries a sampled monotone, else "noisy".
    std::string source;
    std::size_t points = 0;
};

/**
 * Least-squares amplitude through the origin. EvenLinear fits m ≈ α·m_ideal,
 * OddQuadratic fits m ≈ α²·m_ideal (α = sqrt of the regression slope).
 * Throws DomainError with fewer than 3 points of nonzero ideal monotone.
 */
FitResult fit_amplitude(const TimeSeries &series, FitModel model);

}  // namespace embedsim
