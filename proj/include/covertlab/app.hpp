// Copyright 2026 The covertlab Authors
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

// Command execution shared by the command-line tool and its tests: config
// resolution and rendering of every subcommand's output.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "covertlab/run_config.hpp"

namespace covertlab::app {

enum class Command { kSweepNbar, kSweepEta, kSweepFso, kPlan, kVerify, kSampleSecret };

std::string_view command_name(Command command);
/// Throws ParseError for an unknown name.
Command parse_command(std::string_view name);

/// Layers preset < config file < flags. The preset comes from the flags or,
/// failing that, the config file; it must belong to `command`.
config::RunConfig resolve(Command command, const config::RunConfig& flags,
                          const std::optional<std::string>& config_path);

/// Writes the subcommand's output and returns the process exit status:
/// 0 on success, 1 when a verification report fails.
int execute(Command command, const config::RunConfig& config, std::ostream& out);

}  // namespace covertlab::app
