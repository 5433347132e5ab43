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

#ifndef QPARADOX_CLI_H
#define QPARADOX_CLI_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qparadox/report.h"

namespace qparadox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Bell, Paradox, Naive, Decompose, ModeChange, NoSignal, All };
enum class Format { Table, Json };

struct CliConfig {
    Command command = Command::All;
    Format format = Format::Table;
    std::uint64_t seed = 42;
    std::size_t copies = 10;
    std::size_t trials = 100000;
    std::size_t shots = 10000;
    std::size_t samples = 10000;
};

/// Thrown by parse_args for -h/--help; what() is the help text.
struct HelpRequested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunResult {
    int exit_code;
    std::string output;
};

/// Arguments exclude the program name. Throws UsageError naming the
/// offending command, flag or value.
CliConfig parse_args(std::span<const std::string> args);

/// Reports the command produces, in output order.
std::vector<CheckReport> collect_reports(const CliConfig &config);

/// Table: name | passed | residual | details. Json:
/// {"version":1,"seed":N,"reports":[{"name","passed","residual","details"}]}.
std::string render(std::span<const CheckReport> reports, Format format, std::uint64_t seed);

/// 0 when every report passed, 1 otherwise.
int exit_code_for(std::span<const CheckReport> reports);

RunResult run(const CliConfig &config);

/// parse_args + run, mapping usage errors to exit code 2.
RunResult main_with_args(std::span<const std::string> args);

}  // namespace qparadox::cli

#endif
