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

#include "embedsim/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "embedsim/embedding.hpp"
#include "embedsim/error.hpp"
#include "embedsim/evolution.hpp"

namespace embedsim {

namespace {

constexpr double kNonzeroMonotone = 1e-9;
constexpr double kIdealClampSlack = 1e-6;

double clamp_ideal(double raw) {
    if (raw > 1.0 + kIdealClampSlack) {
        throw InternalError("ideal monotone " + std::to_string(raw) + " exceeds 1");
    }
    return std::min(raw, 1.0);
}

TimePoint evaluate_point(const ScenarioConfig &config, const PauliSum &h_tilde,
                         const StateVector &psi_tilde_0, const std::vector<PauliString> &settings,
                         std::size_t k) {
    TimePoint point;
    point.t_index = k;
    point.t = static_cast<double>(k) * config.dt;

    const StateVector psi_tilde = config.mode == EvolutionMode::Embedded
                                      ? evolve(h_tilde, psi_tilde_0, point.t)
                                      : embed_state(evolve(config.hamiltonian, config.initial_state,
                                                           point.t));
    const NoiseModel noise(config.alpha);

    std::vector<double> ideal;
    std::vector<double> noisy;
    std::vector<double> sampled;
    for (const auto &setting : settings) {
        MeasurementRecord record;
        record.t = point.t;
        record.setting = setting;
        record.ideal = expectation(setting, psi_tilde);
        record.noisy = apply_visibility(record.ideal, setting, noise);
        if (config.shots) {
            const Estimate est = sample_from_expectation(
                record.noisy, *config.shots, substream_seed(config.seed, k, setting));
            record.sampled = est.value;
            record.std_error = est.std_error;
            record.shots = *config.shots;
            sampled.push_back(est.value);
        }
        ideal.push_back(record.ideal);
        noisy.push_back(record.noisy);
        point.records.push_back(std::move(record));
    }
    point.monotone_ideal = clamp_ideal(combine_settings(config.n_system, ideal));
    point.monotone_noisy = combine_settings(config.n_system, noisy);
    if (config.shots) {
        point.monotone_sampled = combine_settings(config.n_system, sampled);
    }
    return point;
}

}  // namespace

std::string to_string(EvolutionMode mode) {
    return mode == EvolutionMode::Embedded ? "embedded" : "direct";
}

EvolutionMode parse_evolution_mode(std::string_view text) {
    if (text == "embedded") {
        return EvolutionMode::Embedded;
    }
    if (text == "direct") {
        return EvolutionMode::Direct;
    }
    throw ParseError("evolution mode must be 'embedded' or 'direct', got '" + std::string(text) +
                     "'");
}

void ScenarioConfig::validate() const {
    if (name.empty()) {
        throw ConfigError("name", "must not be empty");
    }
    if (n_system < kMinScenarioQubits || n_system > kMaxScenarioQubits) {
        throw ConfigError("n_system", "must lie in [" + std::to_string(kMinScenarioQubits) + ", " +
                                          std::to_string(kMaxScenarioQubits) + "], got " +
                                          std::to_string(n_system));
    }
    if (hamiltonian.n_qubits() != n_system) {
        throw ConfigError("hamiltonian", "acts on " + std::to_string(hamiltonian.n_qubits()) +
                                             " qubits, expected " + std::to_string(n_system));
    }
    if (initial_state.n_qubits() != n_system) {
        throw ConfigError("initial_state", "has " + std::to_string(initial_state.n_qubits()) +
                                               " qubits, expected " + std::to_string(n_system));
    }
    if (!std::isfinite(dt) || dt <= 0.0) {
        throw ConfigError("dt", "must be finite and > 0");
    }
    if (steps < 1) {
        throw ConfigError("steps", "must be >= 1");
    }
    if (shots && *shots < 1) {
        throw ConfigError("shots", "must be >= 1 when given");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw ConfigError("alpha", "must lie in [0, 1]");
    }
}

ScenarioConfig builtin_concurrence_scenario() {
    return ScenarioConfig{
        .name = "concurrence",
        .n_system = 2,
        .hamiltonian = PauliSum::parse("1*XY + 1*XZ"),
        .initial_state = StateVector::basis("00"),
        .dt = std::numbers::pi / (12.0 * std::numbers::sqrt2),
        .steps = kDefaultSteps,
        .shots = std::nullopt,
        .alpha = 1.0,
        .seed = 0,
        .mode = EvolutionMode::Embedded,
    };
}

ScenarioConfig builtin_tangle_scenario() {
    return ScenarioConfig{
        .name = "tangle",
        .n_system = 3,
        .hamiltonian = PauliSum::parse("1*XXX"),
        .initial_state = StateVector::basis("000"),
        .dt = std::numbers::pi / 12.0,
        .steps = kDefaultSteps,
        .shots = std::nullopt,
        .alpha = 1.0,
        .seed = 0,
        .mode = EvolutionMode::Embedded,
    };
}

std::optional<ScenarioConfig> builtin_scenario(std::string_view name) {
    if (name.starts_with("builtin:")) {
        name.remove_prefix(8);
    }
    if (name == "concurrence") {
        return builtin_concurrence_scenario();
    }
    if (name == "tangle") {
        return builtin_tangle_scenario();
    }
    return std::nullopt;
}

TimeSeries run_scenario(const ScenarioConfig &config) {
    config.validate();
    const PauliSum h_tilde = embed_hamiltonian(config.hamiltonian);
    const StateVector psi_tilde_0 = embed_state(config.initial_state);
    const auto settings = required_settings(config.n_system);

    TimeSeries series{config, std::vector<TimePoint>(config.steps)};

    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, config.steps);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k = next++; k < config.steps; k = next++) {
            try {
                series.points[k] = evaluate_point(config, h_tilde, psi_tilde_0, settings, k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return series;
}

std::string to_string(FitModel model) {
    return model == FitModel::EvenLinear ? "even_linear" : "odd_quadratic";
}

FitModel fit_model_for(Parity parity) noexcept {
    return parity == Parity::Even ? FitModel::EvenLinear : FitModel::OddQuadratic;
}

FitResult fit_amplitude(const TimeSeries &series, FitModel model) {
    const bool use_sampled =
        !series.points.empty() && std::all_of(series.points.begin(), series.points.end(),
                                              [](const TimePoint &p) { return p.monotone_sampled; });
    std::size_t nonzero = 0;
    double cross = 0.0;
    double reference_sq = 0.0;
    for (const auto &p : series.points) {
        const double measured = use_sampled ? *p.monotone_sampled : p.monotone_noisy;
        cross += measured * p.monotone_ideal;
        reference_sq += p.monotone_ideal * p.monotone_ideal;
        nonzero += p.monotone_ideal > kNonzeroMonotone ? 1 : 0;
    }
    if (nonzero < 3) {
        throw DomainError("unfittable series: need at least 3 points with nonzero ideal monotone, got " +
                          std::to_string(nonzero));
    }

    const double slope = cross / reference_sq;
    FitResult fit;
    fit.model = model;
    fit.source = use_sampled ? "sampled" : "noisy";
    fit.points = series.points.size();
    fit.alpha_hat = model == FitModel::EvenLinear ? slope : std::sqrt(std::max(slope, 0.0));
    const double scale = model == FitModel::EvenLinear ? fit.alpha_hat : fit.alpha_hat * fit.alpha_hat;

    double sq = 0.0;
    for (const auto &p : series.points) {
        const double measured = use_sampled ? *p.monotone_sampled : p.monotone_noisy;
        const double r = measured - scale * p.monotone_ideal;
        sq += r * r;
    }
    fit.residual = std::sqrt(sq / static_cast<double>(series.points.size()));
    return fit;
}

}  // namespace embedsim
