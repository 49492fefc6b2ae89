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

// Resolved run configuration for the command-line tool. Values are layered:
// preset, then config file, then flags; later layers win.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covertlab/sweep.hpp"

namespace covertlab::config {

struct RunConfig {
  std::optional<std::string> command;  // sweep-nbar, sweep-eta or sweep-fso for presets
  std::optional<std::string> preset;
  std::optional<double> eta;
  std::optional<double> nbar_b;
  std::optional<double> n;
  std::optional<double> delta;
  std::optional<double> vartheta;
  std::optional<double> q;
  std::optional<std::string> grid;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> table;
  std::optional<double> duration;
  std::optional<double> bandwidth;
  std::optional<std::string> suite;
  std::optional<double> tolerance_scale;

  /// Fields set in `over` replace ours.
  void merge(const RunConfig& over);
};

inline constexpr double kDefaultDelta = 0.05;
inline constexpr double kDefaultVartheta = 0.01;
inline constexpr double kDefaultN = 1e8;
inline constexpr std::uint64_t kDefaultSeed = 20240607;
inline constexpr std::string_view kDefaultNbarGrid = "log:1e-6:1e3:91";
inline constexpr std::string_view kDefaultEtaGrid = "lin:0.01:0.99:99";

const std::vector<std::string>& preset_names();
/// Throws ParseError for an unknown name.
RunConfig preset(std::string_view name);

/// UTF-8 key=value lines; '#' starts a comment line. Keys match the long
/// flag names (eta, nbar-b, n, delta, vartheta, q, grid, seed, preset, table,
/// duration, bandwidth, suite, tolerance-scale).
RunConfig parse_config_text(std::string_view text);
RunConfig load_config_file(const std::string& path);

/// Config lines echoed as '# key=value' ahead of any output. Output and
/// config paths are left out so the echo depends only on resolved values.
sweep::EchoLines echo(const RunConfig& config);

}  // namespace covertlab::config
