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

// covertlab command-line tool: rate sweeps, FSO link-table sweeps, ebit
// plans, the verification suite and secret sampling.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "covertlab/app.hpp"
#include "covertlab/errors.hpp"

namespace {

using covertlab::app::Command;
using covertlab::config::RunConfig;

struct Flags {
  double eta = 0, nbar_b = 0, n = 0, delta = 0, vartheta = 0, q = 0;
  double duration = 0, bandwidth = 0, tolerance_scale = 1;
  std::uint64_t seed = 0;
  std::string grid, preset, out, config, table, suite;
};

struct Registered {
  CLI::App* app;
  Command command;
  std::vector<std::pair<CLI::Option*, std::string>> options;
};

Registered add_command(CLI::App& root, Command command, const std::string& help, Flags& f) {
  Registered r{root.add_subcommand(std::string(covertlab::app::command_name(command)), help),
               command, {}};
  auto* app = r.app;
  auto opt = [&](CLI::Option* o, const char* key) { r.options.emplace_back(o, key); };
  opt(app->add_option("--eta", f.eta, "transmittance in [0,1]"), "eta");
  opt(app->add_option("--nbar-b", f.nbar_b, "mean thermal photon number"), "nbar-b");
  opt(app->add_option("--n", f.n, "channel uses"), "n");
  opt(app->add_option("--delta", f.delta, "covertness budget (nats)"), "delta");
  opt(app->add_option("--vartheta", f.vartheta, "window parameter"), "vartheta");
  opt(app->add_option("--grid", f.grid, "log:a:b:N | lin:a:b:N | list:v1,v2,..."), "grid");
  opt(app->add_option("--preset", f.preset, "named figure preset"), "preset");
  opt(app->add_option("--seed", f.seed, "RNG seed"), "seed");
  opt(app->add_option("--out", f.out, "output file (default stdout)"), "out");
  opt(app->add_option("--config", f.config, "key=value config file"), "config");
  switch (command) {
    case Command::kSweepFso:
      opt(app->add_option("--table", f.table, "CSV wavelength_nm,eta,nbar_b"), "table");
      opt(app->add_option("--duration", f.duration, "T in seconds"), "duration");
      opt(app->add_option("--bandwidth", f.bandwidth, "W in Hz"), "bandwidth");
      break;
    case Command::kVerify:
      opt(app->add_option("--suite", f.suite, "all|fock|twirl|willie|chi2|combined|sparse"),
          "suite");
      opt(app->add_option("--tolerance-scale", f.tolerance_scale, "multiplies every tolerance"),
          "tolerance-scale");
      break;
    case Command::kSampleSecret:
      opt(app->add_option("--q", f.q, "per-use transmit probability (default: q_max)"), "q");
      break;
    default:
      break;
  }
  return r;
}

RunConfig flags_to_config(const Registered& r, const Flags& f) {
  RunConfig c;
  for (const auto& [option, key] : r.options) {
    if (option->count() == 0) continue;
    if (key == "eta") c.eta = f.eta;
    if (key == "nbar-b") c.nbar_b = f.nbar_b;
    if (key == "n") c.n = f.n;
    if (key == "delta") c.delta = f.delta;
    if (key == "vartheta") c.vartheta = f.vartheta;
    if (key == "q") c.q = f.q;
    if (key == "grid") c.grid = f.grid;
    if (key == "preset") c.preset = f.preset;
    if (key == "seed") c.seed = f.seed;
    if (key == "table") c.table = f.table;
    if (key == "duration") c.duration = f.duration;
    if (key == "bandwidth") c.bandwidth = f.bandwidth;
    if (key == "suite") c.suite = f.suite;
    if (key == "tolerance-scale") c.tolerance_scale = f.tolerance_scale;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App root{"covert entanglement generation over lossy thermal-noise bosonic channels"};
  root.require_subcommand(1);
  Flags flags;
  std::vector<Registered> commands;
  commands.push_back(add_command(root, Command::kSweepNbar, "totals vs nbar_b at fixed eta", flags));
  commands.push_back(add_command(root, Command::kSweepEta, "totals vs eta at fixed nbar_b", flags));
  commands.push_back(add_command(root, Command::kSweepFso, "totals per link-table wavelength", flags));
  commands.push_back(add_command(root, Command::kPlan, "covert ebit plan at one point", flags));
  commands.push_back(add_command(root, Command::kVerify, "run the verification suite", flags));
  commands.push_back(
      add_command(root, Command::kSampleSecret, "sample the sparse-signaling secret", flags));
  CLI11_PARSE(root, argc, argv);

  try {
    for (const auto& r : commands) {
      if (!r.app->parsed()) continue;
      const RunConfig given = flags_to_config(r, flags);
      std::optional<std::string> config_path;
      if (!flags.config.empty()) config_path = flags.config;
      const RunConfig resolved = covertlab::app::resolve(r.command, given, config_path);
      if (flags.out.empty()) return covertlab::app::execute(r.command, resolved, std::cout);
      std::ofstream out(flags.out, std::ios::binary);
      if (!out) throw covertlab::ParseError("cannot write '" + flags.out + "'");
      const int status = covertlab::app::execute(r.command, resolved, out);
      out.flush();
      if (!out) throw covertlab::ParseError("failed writing '" + flags.out + "'");
      return status;
    }
  } catch (const covertlab::Error& e) {
    std::cerr << "covertlab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
