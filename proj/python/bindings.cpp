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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "embedsim/dense.hpp"
#include "embedsim/embedding.hpp"
#include "embedsim/error.hpp"
#include "embedsim/evolution.hpp"
#include "embedsim/measurement.hpp"
#include "embedsim/monotones.hpp"
#include "embedsim/scenarios.hpp"
#include "embedsim/selfcheck.hpp"
#include "embedsim/serialization.hpp"
#include "embedsim/version.hpp"

namespace py = pybind11;
using namespace embedsim;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

StateVector to_state(const ComplexArray &array) {
    if (array.ndim() != 1) {
        throw DimensionError("state must be a 1-D array");
    }
    const Complex *data = array.data();
    return StateVector(std::vector<Complex>(data, data + array.size()));
}

ComplexArray to_array(const StateVector &s) {
    const auto amps = s.amplitudes();
    ComplexArray out(static_cast<py::ssize_t>(amps.size()));
    std::copy(amps.begin(), amps.end(), out.mutable_data());
    return out;
}

// nlohmann -> Python through the json module keeps the two serializers identical.
py::object to_python(const Json &doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

Json from_python(const py::object &obj) {
    return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::dict monotone_dict(const MonotoneResult &result) {
    py::dict d = to_python(to_json(result));
    d["label"] = result.label();
    d["clamp_residual"] = result.clamp_residual;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Embedding-simulator measurement of entanglement monotones";
    m.attr("__version__") = kToolVersion;

    auto base = py::register_exception<Error>(m, "EmbedsimError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NotHermitianError>(m, "NotHermitianError", base.ptr());
    py::register_exception<NotAnEmbeddingError>(m, "NotAnEmbeddingError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    m.def(
        "pauli_matrix",
        [](const std::string &label) {
            if (label.size() != 1) {
                throw ParseError("expected a single Pauli letter");
            }
            return DenseMatrix(dense_matrix(PauliString::parse(label)));
        },
        py::arg("label"));
    m.def(
        "dense_matrix", [](const std::string &h) { return dense_matrix(PauliSum::parse(h)); },
        py::arg("hamiltonian"), "Dense matrix of a Pauli sum such as '1*XY + 1*XZ'.");
    m.def(
        "normalize_pauli_sum", [](const std::string &h) { return PauliSum::parse(h).str(); },
        py::arg("hamiltonian"));
    m.def(
        "apply_pauli_string",
        [](const std::string &p, const ComplexArray &s) {
            return to_array(apply_pauli_string(PauliString::parse(p), to_state(s)));
        },
        py::arg("pauli"), py::arg("state"));
    m.def(
        "expectation",
        [](const std::string &p, const ComplexArray &s) {
            return expectation(PauliString::parse(p), to_state(s));
        },
        py::arg("pauli"), py::arg("state"));
    m.def(
        "evolve",
        [](const std::string &h, const ComplexArray &s, double t) {
            return to_array(evolve(PauliSum::parse(h), to_state(s), t));
        },
        py::arg("hamiltonian"), py::arg("state"), py::arg("t"), "exp(-iHt)|state>.");

    m.def(
        "embed_state", [](const ComplexArray &s) { return to_array(embed_state(to_state(s))); },
        py::arg("state"));
    m.def(
        "unembed_state", [](const ComplexArray &s) { return to_array(unembed_state(to_state(s))); },
        py::arg("state"));
    m.def(
        "embed_hamiltonian",
        [](const std::string &h) { return embed_hamiltonian(PauliSum::parse(h)).str(); },
        py::arg("hamiltonian"));
    m.def(
        "conjugation_expectation",
        [](const std::string &a, const ComplexArray &s) {
            return conjugation_expectation(PauliString::parse(a), to_state(s));
        },
        py::arg("operator"), py::arg("state"), "<psi|A|psi*>.");
    m.def(
        "embedded_conjugation_expectation",
        [](const std::string &a, const ComplexArray &s) {
            return embedded_conjugation_expectation(PauliString::parse(a), to_state(s));
        },
        py::arg("operator"), py::arg("embedded_state"), "<ZA> - i<XA> on the enlarged state.");

    m.def(
        "required_settings",
        [](std::size_t n) {
            std::vector<std::string> out;
            for (const auto &s : required_settings(n)) {
                out.push_back(s.str());
            }
            return out;
        },
        py::arg("n_system"));
    m.def(
        "monotone_direct", [](const ComplexArray &s) { return monotone_dict(monotone_direct(to_state(s))); },
        py::arg("state"));
    m.def(
        "monotone_embedded",
        [](const ComplexArray &s) { return monotone_dict(monotone_embedded(to_state(s))); },
        py::arg("embedded_state"));

    m.def(
        "apply_visibility",
        [](double value, const std::string &setting, double alpha) {
            return apply_visibility(value, PauliString::parse(setting), NoiseModel(alpha));
        },
        py::arg("value"), py::arg("setting"), py::arg("alpha"));
    m.def(
        "sample_expectation",
        [](const std::string &p, const ComplexArray &s, std::int64_t shots, std::uint64_t seed) {
            const Estimate est = sample_expectation(PauliString::parse(p), to_state(s), shots, seed);
            return py::make_tuple(est.value, est.std_error);
        },
        py::arg("pauli"), py::arg("state"), py::arg("shots"), py::arg("seed"),
        "Returns (estimate, stderr).");
    m.def("poisson_counting_stderr", &poisson_counting_stderr, py::arg("n_plus"), py::arg("n_minus"));

    m.def(
        "scenario_config",
        [](const std::string &scenario) {
            auto builtin = builtin_scenario(scenario);
            return to_python(to_json(builtin ? *builtin : config_from_json_text(scenario)));
        },
        py::arg("scenario"), "Config dict for 'builtin:concurrence', 'builtin:tangle' or JSON text.");
    m.def(
        "run_scenario",
        [](const py::object &scenario, std::optional<std::int64_t> shots, std::optional<double> alpha,
           std::optional<std::uint64_t> seed, std::optional<std::size_t> steps,
           std::optional<double> dt, std::optional<std::string> mode) {
            ScenarioConfig config = [&] {
                if (py::isinstance<py::str>(scenario)) {
                    const auto name = scenario.cast<std::string>();
                    if (auto builtin = builtin_scenario(name)) {
                        return *builtin;
                    }
                    return config_from_json_text(name);
                }
                return config_from_json(from_python(scenario));
            }();
            if (shots) config.shots = *shots;
            if (alpha) config.alpha = *alpha;
            if (seed) config.seed = *seed;
            if (steps) config.steps = *steps;
            if (dt) config.dt = *dt;
            if (mode) config.mode = parse_evolution_mode(*mode);
            std::optional<TimeSeries> series;
            {
                py::gil_scoped_release release;
                series.emplace(run_scenario(config));
            }
            return to_python(to_json(*series));
        },
        py::arg("scenario") = "builtin:concurrence", py::kw_only(), py::arg("shots") = py::none(),
        py::arg("alpha") = py::none(), py::arg("seed") = py::none(), py::arg("steps") = py::none(),
        py::arg("dt") = py::none(), py::arg("mode") = py::none(),
        "Runs a scenario (built-in name, JSON text or config dict) and returns the series as a dict.");
    m.def(
        "fit_amplitude",
        [](const py::object &series_dict, std::optional<std::string> model) {
            const TimeSeries series = series_from_json(from_python(series_dict));
            FitModel fm = fit_model_for(parity_of(series.config.n_system));
            if (model) {
                if (*model == "even_linear") {
                    fm = FitModel::EvenLinear;
                } else if (*model == "odd_quadratic") {
                    fm = FitModel::OddQuadratic;
                } else {
                    throw DomainError("model must be 'even_linear' or 'odd_quadratic'");
                }
            }
            return to_python(to_json(fit_amplitude(series, fm)));
        },
        py::arg("series"), py::arg("model") = py::none());
    m.def(
        "selfcheck",
        [](std::uint64_t seed, std::size_t trials) {
            py::list out;
            for (const auto &suite : run_selfcheck({.seed = seed, .trials = trials})) {
                py::dict d;
                d["name"] = suite.name;
                d["passed"] = suite.passed;
                d["max_error"] = suite.max_error;
                d["tolerance"] = suite.tolerance;
                d["cases"] = suite.cases;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = SelfcheckOptions{}.seed, py::arg("trials") = 50);
}
