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

// Rate sweeps over nbar_b, eta or a wavelength link table, rendered as CSV
// with one row per grid point. Cells are empty where a boundary signal
// replaces a value.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covertlab/channels.hpp"

namespace covertlab::sweep {

inline constexpr std::string_view kCsvHeader =
    "abscissa,optimal_ebits,single_rail_ebits,dual_rail_ebits,c_cov,c_rel,r_sr,r_dr,q_max";

struct SweepSettings {
  double n = 1e8;
  double delta = 0.05;
  double vartheta = 0.01;

  void validate() const;
};

struct SweepRow {
  double abscissa = 0.0;
  std::optional<double> optimal_ebits;
  std::optional<double> single_rail_ebits;
  std::optional<double> dual_rail_ebits;
  std::optional<double> c_cov;
  std::optional<double> c_rel;
  double r_sr = 0.0;
  double r_dr = 0.0;
  std::optional<double> q_max;  // empty outside the square-root-law regime

  bool operator==(const SweepRow&) const = default;
};

enum class Backend { kSerial, kParallel };

/// Closed forms only; no Fock simulation.
SweepRow evaluate_row(double abscissa, const ChannelParams& params, const SweepSettings& settings);

/// One row per point, in input order.
std::vector<SweepRow> evaluate_rows(std::span<const double> abscissa,
                                    std::span<const ChannelParams> points,
                                    const SweepSettings& settings,
                                    Backend backend = Backend::kParallel);

std::vector<SweepRow> sweep_vs_nbar(double eta, std::span<const double> nbar_grid,
                                    const SweepSettings& settings,
                                    Backend backend = Backend::kParallel);
std::vector<SweepRow> sweep_vs_eta(double nbar_b, std::span<const double> eta_grid,
                                   const SweepSettings& settings,
                                   Backend backend = Backend::kParallel);

/// sqrt(n delta) times the large-nbar_b limit of c_cov c_rel.
double asymptote_ebits(double eta, const SweepSettings& settings);

/// log:a:b:N (N log-spaced points), lin:a:b:N, or list:v1,v2,...
std::vector<double> parse_grid(std::string_view spec);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);
std::string format_cell(const std::optional<double>& value);
std::string format_row(const SweepRow& row);

using EchoLines = std::vector<std::pair<std::string, std::string>>;

/// '# key=value' lines, the header, then the rows.
void write_csv(std::ostream& out, const EchoLines& echo, std::span<const SweepRow> rows);

}  // namespace covertlab::sweep
