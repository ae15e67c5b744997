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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "cli.hpp"
#include "embedsim/serialization.hpp"

namespace fs = std::filesystem;
using embedsim::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = embedsim::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t line_count(const std::string &text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        root_ = fs::temp_directory_path() /
                ("embedsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(root_);
        fs::create_directories(root_);
    }
    void TearDown() override {
        fs::remove_all(root_);
    }
    fs::path root_;
};

}  // namespace

TEST_F(CliTest, settings_command) {
    auto two = invoke({"settings", "2"});
    EXPECT_EQ(two.code, 0);
    EXPECT_EQ(two.out, "ZYY\nXYY\n");

    auto three = invoke({"settings", "3"});
    EXPECT_EQ(three.out, "ZXYY\nXXYY\nZZYY\nXZYY\nZIYY\nXIYY\n");

    auto five = invoke({"settings", "5"});
    EXPECT_EQ(five.out, "ZXYYYY\nXXYYYY\nZZYYYY\nXZYYYY\nZIYYYY\nXIYYYY\n");

    EXPECT_EQ(invoke({"settings", "1"}).code, 2);
    EXPECT_EQ(invoke({"settings", "-3"}).code, 2);
    EXPECT_EQ(invoke({"settings"}).code, 2);
}

TEST_F(CliTest, run_builtin_concurrence_writes_all_outputs) {
    auto r = invoke({"run", "--scenario", "builtin:concurrence", "--output", (root_ / "out").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto dir = root_ / "out";
    for (const char *name : {"series.csv", "monotone.csv", "series.json", "manifest.json", "fit.json"}) {
        EXPECT_TRUE(fs::exists(dir / name)) << name;
    }
    EXPECT_FALSE(fs::exists(dir / "series.csv.tmp"));
    EXPECT_EQ(line_count(slurp(dir / "series.csv")), 1u + 12 * 2);
    EXPECT_EQ(line_count(slurp(dir / "monotone.csv")), 1u + 12);

    const std::string json_text = slurp(dir / "series.json");
    const Json doc = Json::parse(json_text);
    EXPECT_EQ(Json::parse(doc.dump()), doc);
    EXPECT_EQ(doc.dump(2) + "\n", json_text);
    EXPECT_EQ(embedsim::series_from_json(doc).points.size(), 12u);

    const Json manifest = Json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(manifest.at("tool_version"), "0.1.0");
    EXPECT_EQ(manifest.at("config").at("name"), "concurrence");
    EXPECT_TRUE(manifest.contains("started_at"));
    EXPECT_EQ(manifest.at("output_paths").size(), 5u);

    const Json fit = Json::parse(slurp(dir / "fit.json"));
    EXPECT_NEAR(fit.at("alpha_hat").get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, sampled_run_is_byte_reproducible) {
    const std::vector<std::string> base{"run", "--scenario", "builtin:tangle", "--shots", "10000", "--seed", "7"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--output", (root_ / "a").string()});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--output", (root_ / "b").string()});
    ASSERT_EQ(invoke(args_a).code, 0);
    ASSERT_EQ(invoke(args_b).code, 0);
    EXPECT_EQ(slurp(root_ / "a" / "series.csv"), slurp(root_ / "b" / "series.csv"));
    EXPECT_EQ(slurp(root_ / "a" / "monotone.csv"), slurp(root_ / "b" / "monotone.csv"));
    EXPECT_EQ(slurp(root_ / "a" / "series.json"), slurp(root_ / "b" / "series.json"));

    // Re-running from the manifest reproduces the outputs.
    ASSERT_EQ(invoke({"run", "--scenario", (root_ / "a" / "manifest.json").string(), "--output",
                      (root_ / "c").string()})
                  .code,
              0);
    EXPECT_EQ(slurp(root_ / "a" / "series.csv"), slurp(root_ / "c" / "series.csv"));
}

TEST_F(CliTest, format_selection) {
    ASSERT_EQ(invoke({"run", "--scenario", "builtin:tangle", "--format", "csv", "--output",
                      (root_ / "csv").string()})
                  .code,
              0);
    EXPECT_TRUE(fs::exists(root_ / "csv" / "series.csv"));
    EXPECT_FALSE(fs::exists(root_ / "csv" / "series.json"));
    ASSERT_EQ(invoke({"run", "--scenario", "builtin:tangle", "--format", "json", "--output",
                      (root_ / "json").string()})
                  .code,
              0);
    EXPECT_FALSE(fs::exists(root_ / "json" / "series.csv"));
    EXPECT_TRUE(fs::exists(root_ / "json" / "series.json"));
    EXPECT_EQ(invoke({"run", "--scenario", "builtin:tangle", "--format", "xml", "--output",
                      (root_ / "x").string()})
                  .code,
              2);
}

TEST_F(CliTest, config_file_and_validation) {
    const auto good = root_ / "custom.json";
    std::ofstream(good) << R"({"name": "ghz3", "n_system": 3, "hamiltonian": "XXX", "dt": 0.2, "steps": 4, "alpha": 0.5})";
    auto r = invoke({"run", "--scenario", good.string(), "--output", (root_ / "g").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(line_count(slurp(root_ / "g" / "series.csv")), 1u + 4 * 6);

    const auto bad = root_ / "bad.json";
    std::ofstream(bad) << R"({"name": "ghz3", "n_system": 3, "hamiltonian": "XXX", "dt": 0})";
    auto e = invoke({"run", "--scenario", bad.string(), "--output", (root_ / "b").string()});
    EXPECT_EQ(e.code, 2);
    EXPECT_NE(e.err.find("dt"), std::string::npos);

    auto o = invoke({"run", "--scenario", "builtin:tangle", "--dt", "0", "--output", (root_ / "o").string()});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("'dt'"), std::string::npos);
    EXPECT_EQ(invoke({"run", "--scenario", "builtin:tangle", "--mode", "sideways", "--output",
                      (root_ / "o").string()})
                  .code,
              2);
    EXPECT_EQ(invoke({"run", "--scenario", "builtin:tangle", "--alpha", "1.5", "--output",
                      (root_ / "o").string()})
                  .code,
              2);
    EXPECT_EQ(invoke({"run", "--scenario", "builtin:unknown", "--output", (root_ / "o").string()}).code, 2);
}

TEST_F(CliTest, overrides_take_precedence) {
    ASSERT_EQ(invoke({"run", "--scenario", "builtin:concurrence", "--steps", "5", "--alpha", "0.59",
                      "--mode", "direct", "--output", (root_ / "ov").string()})
                  .code,
              0);
    const Json manifest = Json::parse(slurp(root_ / "ov" / "manifest.json"));
    EXPECT_EQ(manifest.at("config").at("steps"), 5);
    EXPECT_EQ(manifest.at("config").at("alpha"), 0.59);
    EXPECT_EQ(manifest.at("config").at("evolution_mode"), "direct");
    const Json fit = Json::parse(slurp(root_ / "ov" / "fit.json"));
    EXPECT_NEAR(fit.at("alpha_hat").get<double>(), 0.59, 1e-10);
}

TEST_F(CliTest, io_errors_exit_3) {
    EXPECT_EQ(invoke({"run", "--scenario", (root_ / "missing.json").string(), "--output",
                      (root_ / "o").string()})
                  .code,
              3);
    const auto blocker = root_ / "file";
    std::ofstream(blocker) << "x";
    EXPECT_EQ(invoke({"run", "--scenario", "builtin:tangle", "--output", (blocker / "sub").string()}).code, 3);
}

TEST_F(CliTest, selfcheck_and_fault_injection) {
    auto ok = invoke({"selfcheck"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);

    auto broken = invoke({"selfcheck", "--inject-fault", "imag-sign"});
    EXPECT_EQ(broken.code, 1);
    EXPECT_NE(broken.out.find("FAIL Im<AK>"), std::string::npos);
    EXPECT_NE(broken.out.find("PASS Re<AK>"), std::string::npos);
}

TEST_F(CliTest, usage_errors_exit_2) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"run", "--scenario", "builtin:tangle"}).code, 2);
    EXPECT_EQ(invoke({"run", "--output", "x", "--scenario", "builtin:tangle", "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}
