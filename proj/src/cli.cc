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

#include <algorithm>
#include <array>
#include <memory>
#include <sstream>
#include <string_view>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "qparadox/experiments.h"
#include "qparadox/modechannel.h"

namespace qparadox::cli {

namespace {

constexpr std::array<std::pair<std::string_view, Command>, 7> kCommands{{
    {"bell", Command::Bell},
    {"paradox", Command::Paradox},
    {"naive", Command::Naive},
    {"decompose", Command::Decompose},
    {"modechange", Command::ModeChange},
    {"nosignal", Command::NoSignal},
    {"all", Command::All},
}};

Command command_from_name(const std::string &name) {
    for (const auto &[text, cmd] : kCommands) {
        if (text == name) {
            return cmd;
        }
    }
    throw UsageError("unknown command '" + name + "' (expected bell, paradox, naive, decompose, modechange, nosignal or all)");
}

std::unique_ptr<CLI::App> make_app(std::string &command, std::string &format, CliConfig &config) {
    auto app = std::make_unique<CLI::App>("Entangled-pair paradox experiments", "qparadox");
    app->add_option("command", command, "bell | paradox | naive | decompose | modechange | nosignal | all")
        ->required();
    app->add_option("--format", format, "table | json")->capture_default_str();
    app->add_option("--seed", config.seed, "PRNG seed")->capture_default_str();
    app->add_option("--copies", config.copies, "Copies per distinguisher trial")->capture_default_str();
    app->add_option("--trials", config.trials, "Distinguisher trials per source")->capture_default_str();
    app->add_option("--shots", config.shots, "Detector shots per source")->capture_default_str();
    app->add_option("--samples", config.samples, "Random unitaries for the no-signaling check")->capture_default_str();
    return app;
}

void require_positive(std::size_t value, std::string_view flag) {
    if (value < 1) {
        throw UsageError(std::string(flag) + " must be at least 1");
    }
}

std::vector<CheckReport> mode_change_reports(const CliConfig &config) {
    std::vector<CheckReport> out = detector_statistics_checks(config.shots, RngState{config.seed});
    for (auto &r : distinguisher_checks(config.copies, config.trials, RngState{config.seed})) {
        out.push_back(std::move(r));
    }
    return out;
}

std::string details_text(const CheckReport &r) {
    std::string out;
    for (const auto &[key, value] : r.details) {
        if (!out.empty()) {
            out += "; ";
        }
        out += key + "=" + value;
    }
    return out;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

}  // namespace

CliConfig parse_args(std::span<const std::string> args) {
    CliConfig config;
    std::string command;
    std::string format = "table";
    auto app = make_app(command, format, config);

    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app->parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested(app->help());
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    config.command = command_from_name(command);
    if (format == "table") {
        config.format = Format::Table;
    } else if (format == "json") {
        config.format = Format::Json;
    } else {
        throw UsageError("--format must be table or json, got '" + format + "'");
    }
    require_positive(config.copies, "--copies");
    require_positive(config.trials, "--trials");
    require_positive(config.shots, "--shots");
    require_positive(config.samples, "--samples");
    return config;
}

std::vector<CheckReport> collect_reports(const CliConfig &config) {
    std::vector<CheckReport> out;
    switch (config.command) {
        case Command::Bell:
            out.push_back(check_bell_state());
            out.push_back(check_reduced_state(Subsystem::A));
            out.push_back(check_reduced_state(Subsystem::B));
            break;
        case Command::Paradox:
            out.push_back(check_local_equality());
            out.push_back(check_reversal());
            out.push_back(check_transpose_identity(hadamard().matrix()));
            break;
        case Command::Naive:
            out.push_back(naive_local_prediction());
            break;
        case Command::Decompose:
            out.push_back(check_decompositions());
            break;
        case Command::ModeChange:
            out = mode_change_reports(config);
            break;
        case Command::NoSignal:
            out.push_back(no_signaling_check(config.samples, RngState{config.seed}));
            break;
        case Command::All: {
            ExperimentConfig ec;
            ec.no_signaling_samples = config.samples;
            ec.seed = RngState{config.seed};
            out = run_all_experiments(ec);
            for (auto &r : mode_change_reports(config)) {
                out.push_back(std::move(r));
            }
            break;
        }
    }
    return out;
}

std::string render(std::span<const CheckReport> reports, Format format, std::uint64_t seed) {
    if (format == Format::Json) {
        nlohmann::ordered_json doc;
        doc["version"] = 1;
        doc["seed"] = seed;
        doc["reports"] = nlohmann::ordered_json::array();
        for (const auto &r : reports) {
            nlohmann::ordered_json item;
            item["name"] = r.name;
            item["passed"] = r.passed;
            item["residual"] = r.residual;
            nlohmann::ordered_json details = nlohmann::ordered_json::object();
            for (const auto &[key, value] : r.details) {
                details[key] = value;
            }
            item["details"] = std::move(details);
            doc["reports"].push_back(std::move(item));
        }
        return doc.dump() + "\n";
    }

    std::size_t name_width = 4;
    for (const auto &r : reports) {
        name_width = std::max(name_width, r.name.size());
    }
    constexpr std::size_t kPassedWidth = 6;
    constexpr std::size_t kResidualWidth = 16;

    std::ostringstream out;
    out << "seed " << seed << "\n";
    out << pad("name", name_width) << " | " << pad("passed", kPassedWidth) << " | " << pad("residual", kResidualWidth)
        << " | details\n";
    out << std::string(name_width, '-') << "-+-" << std::string(kPassedWidth, '-') << "-+-"
        << std::string(kResidualWidth, '-') << "-+-" << std::string(7, '-') << "\n";
    for (const auto &r : reports) {
        out << pad(r.name, name_width) << " | " << pad(r.passed ? "true" : "false", kPassedWidth) << " | "
            << pad(format_real(r.residual), kResidualWidth) << " | " << details_text(r) << "\n";
    }
    return out.str();
}

int exit_code_for(std::span<const CheckReport> reports) {
    return all_passed(reports) ? kExitOk : kExitCheckFailed;
}

RunResult run(const CliConfig &config) {
    try {
        std::vector<CheckReport> reports = collect_reports(config);
        return {exit_code_for(reports), render(reports, config.format, config.seed)};
    } catch (const UsageError &e) {
        return {kExitUsage, std::string("usage error: ") + e.what() + "\n"};
    } catch (const std::exception &e) {
        return {kExitCheckFailed, std::string("internal error: ") + e.what() + "\n"};
    }
}

RunResult main_with_args(std::span<const std::string> args) {
    CliConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested &h) {
        return {kExitOk, h.what()};
    } catch (const UsageError &e) {
        return {kExitUsage, std::string("usage error: ") + e.what() + "\n"};
    }
    return run(config);
}

}  // namespace qparadox::cli
