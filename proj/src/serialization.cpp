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

#include "embedsim/serialization.hpp"

#include <cstdio>
#include <sstream>

#include "embedsim/error.hpp"

namespace embedsim {

namespace {

template <typename T>
T required(const Json &doc, const char *key) {
    if (!doc.contains(key)) {
        throw ConfigError(key, "is required");
    }
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(key, std::string("has the wrong type (") + e.what() + ")");
    }
}

template <typename T>
T optional_or(const Json &doc, const char *key, T fallback) {
    if (!doc.contains(key) || doc.at(key).is_null()) {
        return fallback;
    }
    return required<T>(doc, key);
}

std::int64_t required_integer(const Json &doc, const char *key) {
    if (!doc.contains(key)) {
        throw ConfigError(key, "is required");
    }
    const Json &v = doc.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(key, "must be an integer");
    }
    return v.get<std::int64_t>();
}

Json optional_double(const std::optional<double> &v) {
    return v ? Json(*v) : Json(nullptr);
}

std::optional<double> read_optional_double(const Json &doc, const char *key) {
    if (!doc.contains(key) || doc.at(key).is_null()) {
        return std::nullopt;
    }
    return doc.at(key).get<double>();
}

Json state_to_json(const StateVector &s) {
    Json out = Json::array();
    for (const auto &a : s.amplitudes()) {
        out.push_back({a.real(), a.imag()});
    }
    return out;
}

StateVector state_from_json(const Json &doc) {
    if (!doc.is_array()) {
        throw ConfigError("initial_state", "must be an array of [re, im] pairs");
    }
    std::vector<Complex> amps;
    for (const auto &entry : doc) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ConfigError("initial_state", "every amplitude must be a [re, im] pair");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    try {
        return StateVector(std::move(amps));
    } catch (const Error &e) {
        throw ConfigError("initial_state", e.what());
    }
}

std::string csv_optional(const std::optional<double> &v) {
    return v ? format_float(*v) : std::string();
}

}  // namespace

std::string format_float(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

Json to_json(const ScenarioConfig &config) {
    return Json{
        {"name", config.name},
        {"n_system", config.n_system},
        {"hamiltonian", config.hamiltonian.str()},
        {"initial_state", state_to_json(config.initial_state)},
        {"dt", config.dt},
        {"steps", config.steps},
        {"shots", config.shots ? Json(*config.shots) : Json(nullptr)},
        {"alpha", config.alpha},
        {"seed", config.seed},
        {"evolution_mode", to_string(config.mode)},
    };
}

ScenarioConfig config_from_json(const Json &doc) {
    if (!doc.is_object()) {
        throw ConfigError("<document>", "scenario config must be a JSON object");
    }
    const std::int64_t n_system = required_integer(doc, "n_system");
    if (n_system < static_cast<std::int64_t>(kMinScenarioQubits) ||
        n_system > static_cast<std::int64_t>(kMaxScenarioQubits)) {
        throw ConfigError("n_system", "must lie in [2, 20], got " + std::to_string(n_system));
    }
    const auto n = static_cast<std::size_t>(n_system);

    const auto h_text = required<std::string>(doc, "hamiltonian");
    auto hamiltonian = [&] {
        try {
            return PauliSum::parse(h_text);
        } catch (const Error &e) {
            throw ConfigError("hamiltonian", e.what());
        }
    }();

    StateVector initial = doc.contains("initial_state") && !doc.at("initial_state").is_null()
                              ? state_from_json(doc.at("initial_state"))
                              : StateVector::basis(n, 0);

    std::optional<std::int64_t> shots;
    if (doc.contains("shots") && !doc.at("shots").is_null()) {
        shots = required_integer(doc, "shots");
    }

    std::int64_t steps = doc.contains("steps") ? required_integer(doc, "steps")
                                               : static_cast<std::int64_t>(kDefaultSteps);
    if (steps < 1) {
        throw ConfigError("steps", "must be >= 1");
    }

    std::uint64_t seed = 0;
    if (doc.contains("seed")) {
        const Json &v = doc.at("seed");
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                       v.get<std::int64_t>() < 0)) {
            throw ConfigError("seed", "must be a non-negative integer");
        }
        seed = v.get<std::uint64_t>();
    }

    EvolutionMode mode = EvolutionMode::Embedded;
    if (doc.contains("evolution_mode")) {
        try {
            mode = parse_evolution_mode(required<std::string>(doc, "evolution_mode"));
        } catch (const ParseError &e) {
            throw ConfigError("evolution_mode", e.what());
        }
    }

    ScenarioConfig config{
        .name = optional_or<std::string>(doc, "name", "custom"),
        .n_system = n,
        .hamiltonian = std::move(hamiltonian),
        .initial_state = std::move(initial),
        .dt = required<double>(doc, "dt"),
        .steps = static_cast<std::size_t>(steps),
        .shots = shots,
        .alpha = optional_or<double>(doc, "alpha", 1.0),
        .seed = seed,
        .mode = mode,
    };
    config.validate();
    return config;
}

ScenarioConfig config_from_json_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

Json to_json(const MonotoneResult &result) {
    Json components = Json::array();
    for (const auto &c : result.components) {
        components.push_back({{"setting", c.setting.str()}, {"expectation", c.expectation}});
    }
    return Json{{"value", result.value},
                {"n_system", result.n_system},
                {"parity", to_string(result.parity)},
                {"components", std::move(components)}};
}

Json to_json(const MeasurementRecord &record) {
    return Json{
        {"t", record.t},
        {"setting", record.setting.str()},
        {"ideal", record.ideal},
        {"noisy", record.noisy},
        {"sampled", optional_double(record.sampled)},
        {"stderr", optional_double(record.std_error)},
        {"shots", record.shots ? Json(*record.shots) : Json(nullptr)},
    };
}

Json to_json(const TimeSeries &series) {
    Json points = Json::array();
    for (const auto &p : series.points) {
        Json records = Json::array();
        for (const auto &r : p.records) {
            records.push_back(to_json(r));
        }
        points.push_back({
            {"t_index", p.t_index},
            {"t", p.t},
            {"records", std::move(records)},
            {"monotone_ideal", p.monotone_ideal},
            {"monotone_noisy", p.monotone_noisy},
            {"monotone_sampled", optional_double(p.monotone_sampled)},
        });
    }
    return Json{{"config", to_json(series.config)}, {"points", std::move(points)}};
}

TimeSeries series_from_json(const Json &doc) {
    TimeSeries series{config_from_json(doc.at("config")), {}};
    for (const auto &p : doc.at("points")) {
        TimePoint point;
        point.t_index = p.at("t_index").get<std::size_t>();
        point.t = p.at("t").get<double>();
        point.monotone_ideal = p.at("monotone_ideal").get<double>();
        point.monotone_noisy = p.at("monotone_noisy").get<double>();
        point.monotone_sampled = read_optional_double(p, "monotone_sampled");
        for (const auto &r : p.at("records")) {
            MeasurementRecord record;
            record.t = r.at("t").get<double>();
            record.setting = PauliString::parse(r.at("setting").get<std::string>());
            record.ideal = r.at("ideal").get<double>();
            record.noisy = r.at("noisy").get<double>();
            record.sampled = read_optional_double(r, "sampled");
            record.std_error = read_optional_double(r, "stderr");
            if (r.contains("shots") && !r.at("shots").is_null()) {
                record.shots = r.at("shots").get<std::int64_t>();
            }
            point.records.push_back(std::move(record));
        }
        series.points.push_back(std::move(point));
    }
    return series;
}

Json to_json(const FitResult &fit) {
    return Json{{"model", to_string(fit.model)},
                {"alpha_hat", fit.alpha_hat},
                {"residual", fit.residual},
                {"source", fit.source},
                {"points", fit.points}};
}

std::string records_csv(const TimeSeries &series) {
    std::ostringstream out;
    out << "scenario,t_index,t,setting,ideal,noisy,sampled,stderr,shots\n";
    for (const auto &p : series.points) {
        for (const auto &r : p.records) {
            out << series.config.name << ',' << p.t_index << ',' << format_float(p.t) << ','
                << r.setting.str() << ',' << format_float(r.ideal) << ',' << format_float(r.noisy)
                << ',' << csv_optional(r.sampled) << ',' << csv_optional(r.std_error) << ','
                << (r.shots ? std::to_string(*r.shots) : std::string()) << '\n';
        }
    }
    return out.str();
}

std::string monotone_csv(const TimeSeries &series) {
    std::ostringstream out;
    out << "scenario,t_index,t,monotone_ideal,monotone_noisy,monotone_sampled\n";
    for (const auto &p : series.points) {
        out << series.config.name << ',' << p.t_index << ',' << format_float(p.t) << ','
            << format_float(p.monotone_ideal) << ',' << format_float(p.monotone_noisy) << ','
            << csv_optional(p.monotone_sampled) << '\n';
    }
    return out.str();
}

}  // namespace embedsim
