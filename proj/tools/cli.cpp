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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "embedsim/error.hpp"
#include "embedsim/monotones.hpp"
#include "embedsim/scenarios.hpp"
#include "embedsim/selfcheck.hpp"
#include "embedsim/serialization.hpp"
#include "embedsim/version.hpp"

namespace embedsim::cli {

namespace fs = std::filesystem;

namespace {

class IoFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    std::string scenario;
    std::string output;
    std::string format = "both";
    std::optional<std::int64_t> shots;
    std::optional<double> alpha;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> steps;
    std::optional<double> dt;
    std::optional<std::string> mode;
};

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Write to a sibling temp file, then rename over the target.
void write_atomically(const fs::path &path, const std::string &contents) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoFailure("cannot write " + tmp.string());
        }
        out << contents;
        out.flush();
        if (!out) {
            throw IoFailure("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw IoFailure("cannot rename " + tmp.string() + ": " + ec.message());
    }
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ScenarioConfig load_config(const std::string &scenario) {
    if (auto builtin = builtin_scenario(scenario)) {
        return *builtin;
    }
    if (scenario.starts_with("builtin:")) {
        throw ConfigError("scenario", "unknown built-in '" + scenario + "'");
    }
    const std::string text = read_file(scenario);
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
    }
    // A run manifest carries the full config under "config".
    if (doc.is_object() && doc.contains("config") && doc.contains("tool_version")) {
        return config_from_json(doc.at("config"));
    }
    return config_from_json(doc);
}

void apply_overrides(ScenarioConfig &config, const RunOptions &opts) {
    if (opts.shots) {
        config.shots = *opts.shots;
    }
    if (opts.alpha) {
        config.alpha = *opts.alpha;
    }
    if (opts.seed) {
        config.seed = *opts.seed;
    }
    if (opts.steps) {
        if (*opts.steps < 1) {
            throw ConfigError("steps", "must be >= 1");
        }
        config.steps = static_cast<std::size_t>(*opts.steps);
    }
    if (opts.dt) {
        config.dt = *opts.dt;
    }
    if (opts.mode) {
        try {
            config.mode = parse_evolution_mode(*opts.mode);
        } catch (const ParseError &e) {
            throw ConfigError("evolution_mode", e.what());
        }
    }
    config.validate();
}

int cmd_run(const RunOptions &opts, std::ostream &out, std::ostream &err) {
    ScenarioConfig config = [&] {
        auto c = load_config(opts.scenario);
        apply_overrides(c, opts);
        return c;
    }();
    const std::string started_at = utc_timestamp();
    const TimeSeries series = run_scenario(config);

    std::optional<FitResult> fit;
    try {
        fit = fit_amplitude(series, fit_model_for(parity_of(config.n_system)));
    } catch (const DomainError &) {
        // Series without enough entangled points has nothing to fit.
    }

    const fs::path dir(opts.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoFailure("cannot create output directory " + dir.string());
    }

    std::vector<std::string> written;
    auto emit = [&](const std::string &name, const std::string &contents) {
        write_atomically(dir / name, contents);
        written.push_back(name);
    };
    if (opts.format == "csv" || opts.format == "both") {
        emit("series.csv", records_csv(series));
        emit("monotone.csv", monotone_csv(series));
    }
    if (opts.format == "json" || opts.format == "both") {
        emit("series.json", to_json(series).dump(2) + "\n");
    }
    if (fit) {
        emit("fit.json", to_json(*fit).dump(2) + "\n");
    }
    written.push_back("manifest.json");
    const Json manifest{{"tool_version", kToolVersion},
                        {"config", to_json(config)},
                        {"started_at", started_at},
                        {"output_paths", written}};
    write_atomically(dir / "manifest.json", manifest.dump(2) + "\n");

    out << "scenario " << config.name << ": " << series.points.size() << " points, "
        << required_settings(config.n_system).size() << " settings each -> " << dir.string() << "\n";
    if (fit) {
        out << "fit (" << to_string(fit->model) << ", " << fit->source
            << "): alpha_hat = " << format_float(fit->alpha_hat)
            << ", rms residual = " << format_float(fit->residual) << "\n";
    }
    (void)err;
    return kSuccess;
}

int cmd_settings(std::int64_t n_system, std::ostream &out, std::ostream &err) {
    if (n_system < 2) {
        err << "error: n_system must be >= 2, got " << n_system << "\n";
        return kUsageError;
    }
    for (const auto &s : required_settings(static_cast<std::size_t>(n_system))) {
        out << s.str() << "\n";
    }
    return kSuccess;
}

int cmd_selfcheck(const SelfcheckOptions &options, std::ostream &out) {
    const auto start = std::chrono::steady_clock::now();
    bool all_passed = true;
    for (const auto &suite : run_selfcheck(options)) {
        all_passed = all_passed && suite.passed;
        out << (suite.passed ? "PASS " : "FAIL ") << suite.name << "  cases=" << suite.cases
            << "  max_error=" << format_float(suite.max_error)
            << "  tolerance=" << format_float(suite.tolerance) << "\n";
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out << (all_passed ? "selfcheck passed" : "selfcheck FAILED") << " in " << elapsed.count()
        << " s\n";
    return all_passed ? kSuccess : kSelfcheckFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Embedding-simulator entanglement monotone toolkit", "embedsim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    RunOptions run_opts;
    auto *run_cmd = app.add_subcommand("run", "Run a scenario and write its time series");
    run_cmd->add_option("--scenario", run_opts.scenario,
                        "builtin:concurrence, builtin:tangle, or a JSON config/manifest path")
        ->required();
    run_cmd->add_option("--output", run_opts.output, "Output directory")->required();
    run_cmd->add_option("--format", run_opts.format, "Series output format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    run_cmd->add_option("--shots", run_opts.shots, "Shots per setting (enables sampling)");
    run_cmd->add_option("--alpha", run_opts.alpha, "Visibility in [0, 1]");
    run_cmd->add_option("--seed", run_opts.seed, "Sampling seed");
    run_cmd->add_option("--steps", run_opts.steps, "Number of grid points");
    run_cmd->add_option("--dt", run_opts.dt, "Grid spacing");
    run_cmd->add_option("--mode", run_opts.mode, "Evolution mode: embedded or direct");

    std::int64_t n_system = 0;
    auto *settings_cmd =
        app.add_subcommand("settings", "Print the measurement settings for N system qubits");
    settings_cmd->add_option("n_system", n_system, "Number of system qubits")->required();

    SelfcheckOptions check_opts;
    std::string fault;
    auto *check_cmd = app.add_subcommand("selfcheck", "Run randomized oracle-equivalence suites");
    check_cmd->add_option("--seed", check_opts.seed, "Seed for the random instances");
    check_cmd->add_option("--trials", check_opts.trials, "Cases per suite");
    check_cmd->add_option("--inject-fault", fault, "Deliberately break a suite (imag-sign)")
        ->check(CLI::IsMember({"imag-sign"}))
        ->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*run_cmd) {
            return cmd_run(run_opts, out, err);
        }
        if (*settings_cmd) {
            return cmd_settings(n_system, out, err);
        }
        check_opts.flip_imaginary_sign = fault == "imag-sign";
        return cmd_selfcheck(check_opts, out);
    } catch (const ConfigError &e) {
        err << "config error in field '" << e.field() << "': " << e.what() << "\n";
        return kUsageError;
    } catch (const IoFailure &e) {
        err << "io error: " << e.what() << "\n";
        return kIoError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace embedsim::cli
