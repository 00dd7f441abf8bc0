// Copyright 2026 The icofridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICOFRIDGE_CLI_COMMANDS_HPP
#define ICOFRIDGE_CLI_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icofridge/cli/report.hpp"
#include "icofridge/scenario_config.hpp"

namespace icofridge::cli {

/// Names accepted by run_command, in help order.
const std::vector<std::string>& command_names();

struct RunOptions {
  /// Circuit file checked by `verify` against the four-swap SWITCH.
  std::optional<std::filesystem::path> circuit;
};

// Each command reads its keys from `cfg`; see README for the key list.
Report cmd_sweep(const ScenarioConfig& cfg);
Report cmd_trajectory(const ScenarioConfig& cfg);
Report cmd_histogram(const ScenarioConfig& cfg);
Report cmd_noise_compare(const ScenarioConfig& cfg);
Report cmd_cycle_mc(const ScenarioConfig& cfg);
Report cmd_verify(const ScenarioConfig& cfg, const RunOptions& opts);

/**
 * Runs a command by name and fills in the resolved configuration.
 *
 * Throws ConfigError for an unknown command, an invalid value, or a key in
 * `cfg` that the command never read.
 */
Report run_command(std::string_view name, const ScenarioConfig& cfg, const RunOptions& opts = {});

/**
 * Full command line entry point: `icofridge <command> [--config PATH]
 * [--seed N] [--out PATH] [--format csv|json] [--circuit PATH]`.
 *
 * Returns 0 on success, 1 when a verify check fails and 2 on usage or
 * configuration errors.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace icofridge::cli

#endif  // ICOFRIDGE_CLI_COMMANDS_HPP
