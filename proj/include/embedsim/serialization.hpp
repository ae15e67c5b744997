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

#include <string>
#include <string_view>

#include "json.hpp"

#include "embedsim/monotones.hpp"
#include "embedsim/scenarios.hpp"

namespace embedsim {

using Json = nlohmann::json;

/// "%.17g": enough digits to read the same double back.
std::string format_float(double value);

Json to_json(const ScenarioConfig &config);
/**
 * Reads {name, n_system, hamiltonian, initial_state?, dt, steps, shots?,
 * alpha, seed, evolution_mode}. `n_system`, `hamiltonian` and `dt` are
 * required; the rest default to the built-in values. Any problem raises
 * ConfigError naming the key.
 */
ScenarioConfig config_from_json(const Json &doc);
/// Parses JSON text, mapping syntax errors to ConfigError.
ScenarioConfig config_from_json_text(std::string_view text);

Json to_json(const MonotoneResult &result);
Json to_json(const MeasurementRecord &record);
Json to_json(const TimeSeries &series);
TimeSeries series_from_json(const Json &doc);
Json to_json(const FitResult &fit);

/// Header "scenario,t_index,t,setting,ideal,noisy,sampled,stderr,shots";
/// absent sampled/stderr/shots are empty cells.
std::string records_csv(const TimeSeries &series);
/// Header "scenario,t_index,t,monotone_ideal,monotone_noisy,monotone_sampled".
std::string monotone_csv(const TimeSeries &series);

}  // namespace embedsim
