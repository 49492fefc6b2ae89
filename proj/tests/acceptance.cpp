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


// Acceptance runner: one PASS/FAIL line per primary criterion. Tolerances
// and wall-clock limits are pinned here, not read from flags.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "covertlab/app.hpp"
#include "covertlab/errors.hpp"
#include "covertlab/formulas.hpp"
#include "covertlab/oracles.hpp"
#include "covertlab/philox.hpp"
#include "covertlab/sweep.hpp"

namespace {

using covertlab::ChannelParams;
namespace formulas = covertlab::formulas;
namespace oracles = covertlab::oracles;
namespace sweep = covertlab::sweep;

constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Folds a batch of oracle reports into one outcome and keeps the worst error.
Outcome from_reports(const std::vector<oracles::OracleReport>& reports) {
  Outcome o;
  double worst = 0.0;
  for (const auto& r : reports) {
    if (!r.passed) {
      o.passed = false;
      o.detail += "failed " + r.name + "; ";
    }
    worst = std::max(worst, r.comparison == oracles::Comparison::kRelative ? r.rel_error
                                                                            : r.abs_error);
  }
  o.detail += std::to_string(reports.size()) + " reports, worst error " + fmt(worst);
  return o;
}

Outcome ac1_chi2() {
  std::vector<oracles::OracleReport> reports;
  for (ChannelParams p : {ChannelParams{0.6, 0.2}, {0.95, 1e-2}, {0.8, 1.0}}) {
    oracles::OracleReport r = oracles::verify_chi2(p);
    if (r.tolerance != 1e-7 || r.comparison != oracles::Comparison::kRelative) r.passed = false;
    reports.push_back(std::move(r));
  }
  return from_reports(reports);
}

Outcome ac2_willie() {
  // Three reference inputs plus a 3x3 (eta, nbar_b) grid with five random
  // single-rail inputs each.
  const auto reports = oracles::run_suite(oracles::Suite::kWillie, kSeed);
  Outcome o = from_reports(reports);
  if (reports.size() < 48) {
    o.passed = false;
    o.detail += "; expected 3 + 45 reports";
  }
  for (const auto& r : reports) {
    if (r.tolerance > 1e-8) o.passed = false;
  }
  return o;
}

Outcome ac3_twirl() {
  std::vector<oracles::OracleReport> reports;
  for (ChannelParams p : {ChannelParams{0.95, 1e-3}, {0.8, 1e-1}, {0.65, 1.0}}) {
    reports.push_back(oracles::verify_twirl(p));
    const auto q = formulas::twirl_vector_unnormalized(p);
    reports.push_back(oracles::make_report("twirl_sum", {4.0}, {q[0] + q[1] + q[2] + q[3]}, 0,
                                           1e-9, oracles::Comparison::kAbsolute));
  }
  return from_reports(reports);
}

Outcome ac4_projection() {
  std::vector<oracles::OracleReport> reports;
  covertlab::philox::Stream rng(kSeed, 4);
  for (int k = 0; k < 10; ++k) {
    const ChannelParams p{0.05 + 0.9 * rng.uniform(), std::pow(10.0, -3.0 + 3.0 * rng.uniform())};
    reports.push_back(oracles::verify_projection_success(p));
  }
  reports.push_back(oracles::verify_projection_success({1.0, 0.7}));
  reports.push_back(oracles::verify_projection_success({0.4, 0.0}));
  Outcome o = from_reports(reports);
  for (ChannelParams p : {ChannelParams{1.0, 0.7}, {1.0, 5.0}, {0.4, 0.0}, {0.9, 0.0}}) {
    if (formulas::projection_success(p) != 1.0) {
      o.passed = false;
      o.detail += "; closed form not exactly 1 at eta=" + fmt(p.eta) + " nbar=" + fmt(p.nbar_b);
    }
  }
  return o;
}

Outcome ac5_combined() {
  std::vector<oracles::OracleReport> reports;
  for (ChannelParams p : {ChannelParams{0.95, 1e-3}, {0.8, 1e-1}, {0.65, 1e-1}}) {
    reports.push_back(oracles::verify_combined_channel(p));
  }
  return from_reports(reports);
}

Outcome ac6_budget() {
  covertlab::philox::Stream rng(kSeed, 6);
  Outcome o;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const ChannelParams p{0.05 + 0.94 * rng.uniform(), std::pow(10.0, -4.0 + 5.0 * rng.uniform())};
    const formulas::CovertBudget b{std::pow(10.0, -3.0 + 2.0 * rng.uniform()),
                                   std::pow(10.0, 6.0 + 6.0 * rng.uniform())};
    const double q = *formulas::q_max(p, b);
    const double rel = std::abs(q * q * b.n * *formulas::chi2_closed(p) / b.delta_c - 1.0);
    worst = std::max(worst, rel);
  }
  o.passed = worst <= 1e-12;
  o.detail = "100 tuples, worst relative error " + fmt(worst);
  return o;
}

Outcome ac7_asymptote() {
  Outcome o;
  double worst = 0.0;
  for (double eta : {0.3, 0.5, 0.65, 0.8, 0.95}) {
    const double cap = *formulas::rate_constants({eta, 1e6}).capacity();
    worst = std::max(worst, std::abs(cap / formulas::capacity_asymptote(eta) - 1.0));
  }
  o.passed = worst <= 1e-3;
  o.detail = "worst relative gap " + fmt(worst);
  return o;
}

Outcome ac8_square_root_law() {
  covertlab::philox::Stream rng(kSeed, 8);
  Outcome o;
  double worst = 0.0;
  int zeros = 0;
  for (int k = 0; k < 10; ++k) {
    const ChannelParams p{0.3 + 0.69 * rng.uniform(), std::pow(10.0, -5.0 + 4.0 * rng.uniform())};
    const double n = std::pow(10.0, 6.0 + 5.0 * rng.uniform());
    const double delta = 0.01 + 0.09 * rng.uniform();
    const double vartheta = 0.001 + 0.1 * rng.uniform();
    const formulas::CovertBudget one{delta, n}, two{delta, 2.0 * n};
    const std::pair<double, double> totals[] = {
        {*formulas::total_ebits_optimal(p, one), *formulas::total_ebits_optimal(p, two)},
        {*formulas::total_ebits_single_rail(p, one, vartheta),
         *formulas::total_ebits_single_rail(p, two, vartheta)},
        {*formulas::total_ebits_dual_rail(p, one, vartheta),
         *formulas::total_ebits_dual_rail(p, two, vartheta)}};
    for (const auto& [t1, t2] : totals) {
      if (t1 == 0.0) {
        ++zeros;
        if (t2 != 0.0) o.passed = false;
        continue;
      }
      worst = std::max(worst, std::abs(t2 / (std::numbers::sqrt2 * t1) - 1.0));
    }
  }
  // A few ulps: sqrt(2n) and sqrt(2)*sqrt(n) round independently.
  const double limit = 4.0 * std::numeric_limits<double>::epsilon();
  if (worst > limit) o.passed = false;
  o.detail = "10 configs x 3 totals, worst deviation " + fmt(worst) + " (limit " + fmt(limit) +
             "), " + std::to_string(zeros) + " exact zeros";
  return o;
}

std::string run_preset(const char* command_name, const char* preset) {
  const auto command = covertlab::app::parse_command(command_name);
  covertlab::config::RunConfig flags;
  flags.preset = preset;
  std::ostringstream out;
  covertlab::app::execute(command, covertlab::app::resolve(command, flags, std::nullopt), out);
  return out.str();
}

std::string read_golden(const char* preset) {
  std::ifstream in(std::string(COVERTLAB_SOURCE_DIR) + "/tests/golden/" + preset + ".csv",
                   std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Index of the first row after which the column stays exactly zero to the
// end; rows.size() when the tail is nonzero.
std::size_t zero_tail_start(const std::vector<sweep::SweepRow>& rows,
                            std::optional<double> sweep::SweepRow::*column) {
  std::size_t start = rows.size();
  while (start > 0 && (rows[start - 1].*column).value_or(-1.0) == 0.0) --start;
  return start;
}

Outcome ac9_figures() {
  Outcome o;
  std::string notes;

  const auto grid = sweep::parse_grid(covertlab::config::kDefaultNbarGrid);
  const auto rows = sweep::sweep_vs_nbar(0.95, grid, {1e8, 0.05, 0.01});
  for (const auto& r : rows) {
    if (r.r_sr > 0.0 && !(*r.optimal_ebits > *r.single_rail_ebits)) o.passed = false;
    if (r.r_dr > 0.0 && !(*r.single_rail_ebits > *r.dual_rail_ebits)) o.passed = false;
  }
  const std::size_t sr_zero = zero_tail_start(rows, &sweep::SweepRow::single_rail_ebits);
  const std::size_t dr_zero = zero_tail_start(rows, &sweep::SweepRow::dual_rail_ebits);
  if (sr_zero == 0 || sr_zero >= rows.size() || dr_zero == 0 || dr_zero >= rows.size()) {
    o.passed = false;
  } else {
    for (std::size_t i = std::min(sr_zero, dr_zero); i < rows.size(); ++i) {
      if (!(*rows[i].optimal_ebits > 0.0)) o.passed = false;
    }
    notes += "fig4a zero from nbar " + fmt(grid[sr_zero]) + " (single) / " + fmt(grid[dr_zero]) +
             " (dual); ";
  }

  const auto eta_grid = sweep::parse_grid(covertlab::config::kDefaultEtaGrid);
  for (const auto& [name, nbar] : {std::pair{"fig5a", 1e-6}, {"fig5b", 1e-3}, {"fig5c", 1e-1}}) {
    const auto r5 = sweep::sweep_vs_eta(nbar, eta_grid, {6e10, 0.05, 0.01});
    std::size_t first_nonzero = r5.size();
    for (std::size_t i = 0; i < r5.size(); ++i) {
      if (*r5[i].single_rail_ebits > 0.0 || *r5[i].dual_rail_ebits > 0.0) {
        first_nonzero = i;
        break;
      }
    }
    if (first_nonzero == 0 || first_nonzero == r5.size()) {
      o.passed = false;
      notes += std::string(name) + " has no finite threshold; ";
    } else {
      notes += std::string(name) + " zero below eta " + fmt(eta_grid[first_nonzero]) + "; ";
    }
  }

  int identical = 0;
  const std::pair<const char*, const char*> presets[] = {
      {"sweep-nbar", "fig4a"}, {"sweep-nbar", "fig4b"}, {"sweep-nbar", "fig4c"},
      {"sweep-eta", "fig5a"},  {"sweep-eta", "fig5b"},  {"sweep-eta", "fig5c"},
      {"sweep-fso", "fig6"}};
  for (const auto& [command, preset] : presets) {
    const std::string golden = read_golden(preset);
    if (!golden.empty() && run_preset(command, preset) == golden) {
      ++identical;
    } else {
      o.passed = false;
      notes += std::string(preset) + " differs from golden; ";
    }
  }
  o.detail = notes + std::to_string(identical) + "/7 golden CSVs byte-identical";
  return o;
}

Outcome ac10_sparse() { return from_reports(oracles::run_suite(oracles::Suite::kSparse, kSeed)); }

Outcome ac11_toolkit() {
  return from_reports({oracles::verify_pinsker(kSeed, 1000),
                       oracles::verify_qre_additivity(kSeed, 1000),
                       oracles::verify_kl_below_chi2(kSeed, 1000)});
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "chi-square closed form vs truncated Fock", 5.0, ac1_chi2},
      {"AC2", "Willie output state vs Kraus simulation", 30.0, ac2_willie},
      {"AC3", "twirl parameters vs Choi/Bell overlaps", 10.0, ac3_twirl},
      {"AC4", "projection success convention", 10.0, ac4_projection},
      {"AC5", "combined practical channel process matrix", 30.0, ac5_combined},
      {"AC6", "covertness budget identity", 1.0, ac6_budget},
      {"AC7", "large-noise asymptote", 1.0, ac7_asymptote},
      {"AC8", "square-root law scaling", 1.0, ac8_square_root_law},
      {"AC9", "figure reproduction and golden CSVs", 10.0, ac9_figures},
      {"AC10", "sparse covertness at desk scale", 120.0, ac10_sparse},
      {"AC11", "divergence toolkit inequalities", 60.0, ac11_toolkit},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool passed = o.passed && in_time;
    failures += !passed;
    std::printf("%-4s %s  %s: %s [%.2fs / %.0fs%s]\n", c.id, passed ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), secs, c.time_limit_s, in_time ? "" : " EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
