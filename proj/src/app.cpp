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

#include "covertlab/app.hpp"

#include <cmath>
#include <ostream>

#include "covertlab/errors.hpp"
#include "covertlab/formulas.hpp"
#include "covertlab/link_table.hpp"
#include "covertlab/oracles.hpp"
#include "covertlab/sparse.hpp"
#include "covertlab/sweep.hpp"

namespace covertlab::app {

namespace {

constexpr Command kCommands[] = {Command::kSweepNbar, Command::kSweepEta, Command::kSweepFso,
                                 Command::kPlan,      Command::kVerify,   Command::kSampleSecret};

template <typename T>
T require(const std::optional<T>& value, const char* flag, Command command) {
  if (!value) {
    throw ParseError(std::string(command_name(command)) + " needs --" + flag);
  }
  return *value;
}

void fill_budget_defaults(config::RunConfig& c) {
  if (!c.delta) c.delta = config::kDefaultDelta;
  if (!c.vartheta) c.vartheta = config::kDefaultVartheta;
}

sweep::SweepSettings settings_of(const config::RunConfig& c) {
  return {c.n.value_or(config::kDefaultN), *c.delta, *c.vartheta};
}

void emit_cell(std::ostream& out, const char* key, const std::optional<double>& v) {
  out << key << ',' << sweep::format_cell(v) << '\n';
}

}  // namespace

std::string_view command_name(Command command) {
  switch (command) {
    case Command::kSweepNbar: return "sweep-nbar";
    case Command::kSweepEta: return "sweep-eta";
    case Command::kSweepFso: return "sweep-fso";
    case Command::kPlan: return "plan";
    case Command::kVerify: return "verify";
    case Command::kSampleSecret: return "sample-secret";
  }
  return "";
}

Command parse_command(std::string_view name) {
  for (Command c : kCommands) {
    if (command_name(c) == name) return c;
  }
  throw ParseError("unknown command '" + std::string(name) + "'");
}

config::RunConfig resolve(Command command, const config::RunConfig& flags,
                          const std::optional<std::string>& config_path) {
  config::RunConfig file;
  if (config_path) file = config::load_config_file(*config_path);
  const std::optional<std::string> preset_name = flags.preset ? flags.preset : file.preset;
  config::RunConfig resolved;
  if (preset_name) {
    resolved = config::preset(*preset_name);
    if (resolved.command && *resolved.command != command_name(command)) {
      throw ParseError("preset '" + *preset_name + "' belongs to " + *resolved.command + ", not " +
                       std::string(command_name(command)));
    }
  }
  resolved.merge(file);
  resolved.merge(flags);
  resolved.command = std::string(command_name(command));
  return resolved;
}

int execute(Command command, const config::RunConfig& input, std::ostream& out) {
  config::RunConfig c = input;
  switch (command) {
    case Command::kSweepNbar: {
      const double eta = require(c.eta, "eta", command);
      fill_budget_defaults(c);
      if (!c.n) c.n = config::kDefaultN;
      if (!c.grid) c.grid = std::string(config::kDefaultNbarGrid);
      const auto grid = sweep::parse_grid(*c.grid);
      const auto rows = sweep::sweep_vs_nbar(eta, grid, settings_of(c));
      auto echo = config::echo(c);
      if (eta < 1.0) {
        echo.emplace_back("asymptote_ebits",
                          sweep::format_number(sweep::asymptote_ebits(eta, settings_of(c))));
      }
      sweep::write_csv(out, echo, rows);
      return 0;
    }
    case Command::kSweepEta: {
      const double nbar = require(c.nbar_b, "nbar-b", command);
      fill_budget_defaults(c);
      if (!c.n) c.n = config::kDefaultN;
      if (!c.grid) c.grid = std::string(config::kDefaultEtaGrid);
      const auto grid = sweep::parse_grid(*c.grid);
      sweep::write_csv(out, config::echo(c), sweep::sweep_vs_eta(nbar, grid, settings_of(c)));
      return 0;
    }
    case Command::kSweepFso: {
      const std::string path = require(c.table, "table", command);
      fill_budget_defaults(c);
      if (!c.duration) c.duration = 60.0;
      if (!c.bandwidth) c.bandwidth = 1e9;
      const auto table = link::load_link_table(path);
      const auto rows = link::sweep_fso(table, *c.duration, *c.bandwidth, *c.delta, *c.vartheta);
      c.n = *c.duration * *c.bandwidth;
      sweep::write_csv(out, config::echo(c), rows);
      return 0;
    }
    case Command::kPlan: {
      const ChannelParams params{require(c.eta, "eta", command),
                                 require(c.nbar_b, "nbar-b", command)};
      fill_budget_defaults(c);
      if (!c.n) c.n = config::kDefaultN;
      const sparse::EbitPlan plan =
          sparse::covert_ebit_plan(params, {*c.delta, *c.n}, *c.vartheta);
      for (const auto& [key, value] : config::echo(c)) out << "# " << key << '=' << value << '\n';
      out << "field,value\n";
      emit_cell(out, "q", plan.q);
      emit_cell(out, "expected_nonzero_uses", plan.expected_nonzero_uses);
      emit_cell(out, "r_sr", plan.r_sr);
      emit_cell(out, "r_dr", plan.r_dr);
      emit_cell(out, "optimal_ebits", plan.total_optimal);
      emit_cell(out, "single_rail_ebits", plan.total_single_rail);
      emit_cell(out, "dual_rail_ebits", plan.total_dual_rail);
      emit_cell(out, "log_k1_bits", plan.keys ? std::optional(plan.keys->log_k1) : std::nullopt);
      emit_cell(out, "log_k2_bits", plan.keys ? std::optional(plan.keys->log_k2) : std::nullopt);
      out << "reason," << plan.reason << '\n';
      return 0;
    }
    case Command::kVerify: {
      if (!c.suite) c.suite = "all";
      if (!c.seed) c.seed = config::kDefaultSeed;
      if (!c.tolerance_scale) c.tolerance_scale = 1.0;
      const auto reports =
          oracles::run_suite(oracles::parse_suite(*c.suite), *c.seed, *c.tolerance_scale);
      for (const auto& [key, value] : config::echo(c)) out << "# " << key << '=' << value << '\n';
      out << oracles::kReportHeader << '\n';
      std::size_t passed = 0;
      for (const auto& r : reports) {
        out << oracles::format_report_line(r) << '\n';
        passed += r.passed;
      }
      out << "# passed " << passed << '/' << reports.size() << '\n';
      return passed == reports.size() ? 0 : 1;
    }
    case Command::kSampleSecret: {
      const double n = require(c.n, "n", command);
      if (!c.vartheta) c.vartheta = config::kDefaultVartheta;
      if (!c.seed) c.seed = config::kDefaultSeed;
      if (!c.q) {
        const ChannelParams params{require(c.eta, "eta", command),
                                   require(c.nbar_b, "nbar-b", command)};
        if (!c.delta) c.delta = config::kDefaultDelta;
        const auto q = sparse::q_from_budget(params, {*c.delta, n});
        if (!q) throw DomainError("q is unbounded at eta = 1; pass --q");
        c.q = *q;
      }
      if (n != std::floor(n) || n < 1 || n > 1e9) {
        throw DomainError("sample-secret needs an integer n in [1, 1e9]");
      }
      const sparse::SecretPair secret =
          sparse::sample_secret({static_cast<std::int64_t>(n), *c.q, *c.vartheta}, *c.seed);
      for (const auto& [key, value] : config::echo(c)) out << "# " << key << '=' << value << '\n';
      out << sparse::serialize(secret);
      return 0;
    }
  }
  return 0;
}

}  // namespace covertlab::app
