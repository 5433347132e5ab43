// Copyright 2026 The qparadox Authors
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

#include "qparadox/cli.h"

#include "gtest/gtest.h"
#include "json.hpp"

using namespace qparadox;
using namespace qparadox::cli;

namespace {

CliConfig parse(std::vector<std::string> args) {
    return parse_args(args);
}

std::string usage_message(std::vector<std::string> args) {
    try {
        parse_args(args);
    } catch (const UsageError &e) {
        return e.what();
    }
    return "<no error>";
}

/// Required keys, their types and their order.
void expect_schema(const std::string &text) {
    auto doc = nlohmann::ordered_json::parse(text);
    ASSERT_TRUE(doc.is_object());
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        keys.push_back(it.key());
    }
    ASSERT_EQ(keys, (std::vector<std::string>{"version", "seed", "reports"}));
    ASSERT_EQ(doc["version"], 1);
    ASSERT_TRUE(doc["seed"].is_number_unsigned());
    ASSERT_TRUE(doc["reports"].is_array());
    ASSERT_FALSE(doc["reports"].empty());
    for (const auto &r : doc["reports"]) {
        std::vector<std::string> rk;
        for (auto it = r.begin(); it != r.end(); ++it) {
            rk.push_back(it.key());
        }
        ASSERT_EQ(rk, (std::vector<std::string>{"name", "passed", "residual", "details"}));
        ASSERT_TRUE(r["name"].is_string());
        ASSERT_TRUE(r["passed"].is_boolean());
        ASSERT_TRUE(r["residual"].is_number());
        ASSERT_GE(r["residual"].get<double>(), 0.0);
        ASSERT_TRUE(r["details"].is_object());
        for (const auto &[k, v] : r["details"].items()) {
            ASSERT_TRUE(v.is_string()) << k;
        }
    }
}

}  // namespace

TEST(parse_args, defaults) {
    CliConfig c = parse({"paradox"});
    ASSERT_EQ(c.command, Command::Paradox);
    ASSERT_EQ(c.format, Format::Table);
    ASSERT_EQ(c.seed, 42u);
    ASSERT_EQ(c.copies, 10u);
    ASSERT_EQ(c.trials, 100000u);
    ASSERT_EQ(c.shots, 10000u);
    ASSERT_EQ(c.samples, 10000u);
}

TEST(parse_args, flags) {
    CliConfig c = parse({"modechange", "--copies", "5", "--seed", "7"});
    ASSERT_EQ(c.command, Command::ModeChange);
    ASSERT_EQ(c.copies, 5u);
    ASSERT_EQ(c.seed, 7u);
    CliConfig j = parse({"--format", "json", "all", "--seed", "18446744073709551615"});
    ASSERT_EQ(j.format, Format::Json);
    ASSERT_EQ(j.command, Command::All);
    ASSERT_EQ(j.seed, 18446744073709551615ULL);
}

TEST(parse_args, usage_errors_name_the_offender) {
    ASSERT_NE(usage_message({"modechange", "--copies", "0"}).find("--copies"), std::string::npos);
    ASSERT_NE(usage_message({"paradox", "--bogus", "1"}).find("--bogus"), std::string::npos);
    ASSERT_NE(usage_message({"teleport"}).find("teleport"), std::string::npos);
    ASSERT_NE(usage_message({"nosignal", "--samples", "ten"}).find("ten"), std::string::npos);
    ASSERT_NE(usage_message({"bell", "--format", "xml"}).find("--format"), std::string::npos);
    ASSERT_NE(usage_message({}), "<no error>");
    ASSERT_NE(usage_message({"bell", "--shots", "-3"}), "<no error>");
}

TEST(main_with_args, exit_codes) {
    ASSERT_EQ(main_with_args(std::vector<std::string>{"modechange", "--copies", "0"}).exit_code, kExitUsage);
    ASSERT_EQ(main_with_args(std::vector<std::string>{"paradox"}).exit_code, kExitOk);
    RunResult help = main_with_args(std::vector<std::string>{"--help"});
    ASSERT_EQ(help.exit_code, kExitOk);
    ASSERT_NE(help.output.find("--copies"), std::string::npos);
}

TEST(run, paradox_passes) {
    CliConfig c = parse({"paradox", "--format", "json"});
    RunResult r = run(c);
    ASSERT_EQ(r.exit_code, 0);
    auto doc = nlohmann::json::parse(r.output);
    ASSERT_EQ(doc["reports"].size(), 3u);
    for (const auto &rep : doc["reports"]) {
        ASSERT_TRUE(rep["passed"].get<bool>());
    }
}

TEST(run, bell_prints_amplitudes_and_purities) {
    RunResult r = run(parse({"bell"}));
    ASSERT_EQ(r.exit_code, 0);
    ASSERT_NE(r.output.find("(0.7071067812+0.0000000000i, 0.0000000000+0.0000000000i, "
                            "0.0000000000+0.0000000000i, 0.7071067812+0.0000000000i)"),
              std::string::npos);
    ASSERT_NE(r.output.find("reduced_state_A"), std::string::npos);
    ASSERT_NE(r.output.find("reduced_state_B"), std::string::npos);
    ASSERT_NE(r.output.find("purity=0.5000000000"), std::string::npos);
}

TEST(run, modechange_prints_analytic_rate) {
    RunResult r = run(parse({"modechange", "--format", "json"}));
    ASSERT_EQ(r.exit_code, 0);
    auto doc = nlohmann::json::parse(r.output);
    bool found = false;
    for (const auto &rep : doc["reports"]) {
        if (rep["name"] == "distinguisher_false_pure") {
            found = true;
            ASSERT_EQ(rep["details"]["analytic_false_pure_rate"].get<std::string>().rfind("0.0009765625", 0), 0u);
            ASSERT_EQ(rep["details"]["empirical_false_pure_rate"].get<std::string>().rfind("0.00091", 0), 0u);
        }
    }
    ASSERT_TRUE(found);
}

TEST(run, every_command_matches_schema) {
    for (const char *cmd : {"bell", "paradox", "naive", "decompose", "modechange", "nosignal", "all"}) {
        RunResult r = run(parse({cmd, "--format", "json", "--trials", "2000", "--samples", "200"}));
        ASSERT_EQ(r.exit_code, 0) << cmd;
        expect_schema(r.output);
    }
}

TEST(run, json_is_stable) {
    CliConfig c = parse({"all", "--format", "json", "--samples", "300", "--trials", "3000"});
    ASSERT_EQ(run(c).output, run(c).output);
}

TEST(render, json_instance) {
    std::vector<CheckReport> reports{make_report("demo", 0.0, 1e-12, {{"k", "v"}})};
    ASSERT_EQ(render(reports, Format::Json, 42),
              "{\"version\":1,\"seed\":42,\"reports\":[{\"name\":\"demo\",\"passed\":true,\"residual\":0.0,"
              "\"details\":{\"k\":\"v\"}}]}\n");
}

TEST(render, json_residual_round_trips) {
    double x = 0.1 + 0.2;
    std::vector<CheckReport> reports{make_report("r", x, 1.0)};
    auto doc = nlohmann::json::parse(render(reports, Format::Json, 1));
    ASSERT_EQ(doc["reports"][0]["residual"].get<double>(), x);
}

TEST(render, table_zero_residual_cell) {
    std::vector<CheckReport> reports{make_report("demo", 0.0, 1e-12, {{"k", "v"}})};
    std::string table = render(reports, Format::Table, 42);
    ASSERT_NE(table.find("demo | true   | 0.000000000      | k=v"), std::string::npos) << table;
    ASSERT_NE(table.find("name | passed | residual"), std::string::npos);
}

TEST(exit_code_for, injected_failure_flips_to_one) {
    std::vector<CheckReport> reports{make_report("a", 0.0, 1.0), make_report("b", 0.0, 1.0)};
    ASSERT_EQ(exit_code_for(reports), 0);
    reports.push_back(make_report("c", 2.0, 1.0));
    ASSERT_EQ(exit_code_for(reports), 1);
}
