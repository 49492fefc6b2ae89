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

#include "covertlab/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "covertlab/errors.hpp"
#include "covertlab/formulas.hpp"
#include "covertlab/kernels.hpp"

namespace covertlab::sweep {

void SweepSettings::validate() const {
  formulas::CovertBudget{delta, n}.validate();
  if (!(vartheta > 0.0 && vartheta < 1.0)) throw DomainError("vartheta must lie in (0, 1)");
}

SweepRow evaluate_row(double abscissa, const ChannelParams& params, const SweepSettings& settings) {
  const formulas::CovertBudget budget{settings.delta, settings.n};
  const formulas::RateConstants rc = formulas::rate_constants(params);
  SweepRow row;
  row.abscissa = abscissa;
  row.optimal_ebits = formulas::total_ebits_optimal(params, budget);
  row.single_rail_ebits = formulas::total_ebits_single_rail(params, budget, settings.vartheta);
  row.dual_rail_ebits = formulas::total_ebits_dual_rail(params, budget, settings.vartheta);
  row.c_cov = rc.c_cov;
  row.c_rel = rc.c_rel;
  row.r_sr = formulas::single_rail_rate(params);
  row.r_dr = formulas::dual_rail_rate(params);
  try {
    row.q_max = formulas::q_max(params, budget);
  } catch (const NonCovertRegime&) {
    row.q_max = std::nullopt;
  }
  return row;
}

std::vector<SweepRow> evaluate_rows(std::span<const double> abscissa,
                                    std::span<const ChannelParams> points,
                                    const SweepSettings& settings, Backend backend) {
  if (abscissa.size() != points.size()) throw DimensionError("abscissa and points differ in size");
  settings.validate();
  for (const auto& p : points) p.validate();
  return backend == Backend::kSerial ? kernels::sweep_serial(abscissa, points, settings)
                                     : kernels::sweep_parallel(abscissa, points, settings);
}

std::vector<SweepRow> sweep_vs_nbar(double eta, std::span<const double> nbar_grid,
                                    const SweepSettings& settings, Backend backend) {
  std::vector<ChannelParams> points;
  points.reserve(nbar_grid.size());
  for (double nbar : nbar_grid) points.push_back({eta, nbar});
  return evaluate_rows(nbar_grid, points, settings, backend);
}

std::vector<SweepRow> sweep_vs_eta(double nbar_b, std::span<const double> eta_grid,
                                   const SweepSettings& settings, Backend backend) {
  std::vector<ChannelParams> points;
  points.reserve(eta_grid.size());
  for (double eta : eta_grid) points.push_back({eta, nbar_b});
  return evaluate_rows(eta_grid, points, settings, backend);
}

double asymptote_ebits(double eta, const SweepSettings& settings) {
  return std::sqrt(settings.n * settings.delta) * formulas::capacity_asymptote(eta);
}

namespace {

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + s + "' in " + std::string(what));
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw ParseError("bad number '" + s + "' in " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find(sep, pos);
    parts.push_back(text.substr(pos, end == std::string_view::npos ? end : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("grid '" + std::string(spec) + "' needs a log:, lin: or list: prefix");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (kind == "list") {
    std::vector<double> grid;
    for (auto part : split(body, ',')) grid.push_back(parse_double(part, "grid list"));
    return grid;
  }
  if (kind != "log" && kind != "lin") {
    throw ParseError("unknown grid kind '" + std::string(kind) + "'");
  }
  const auto parts = split(body, ':');
  if (parts.size() != 3) throw ParseError("grid '" + std::string(spec) + "' needs a:b:N");
  const double a = parse_double(parts[0], "grid start");
  const double b = parse_double(parts[1], "grid stop");
  const double count_d = parse_double(parts[2], "grid count");
  if (count_d < 1 || count_d != std::floor(count_d)) {
    throw ParseError("grid count must be a positive integer");
  }
  const auto count = static_cast<std::size_t>(count_d);
  std::vector<double> grid(count);
  if (kind == "log") {
    if (!(a > 0.0 && b > 0.0)) throw ParseError("log grid endpoints must be positive");
    const double la = std::log10(a);
    const double lb = std::log10(b);
    for (std::size_t i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      grid[i] = std::pow(10.0, la + (lb - la) * t);
    }
    grid.front() = a;
    grid.back() = count == 1 ? a : b;
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      grid[i] = a + (b - a) * t;
    }
    grid.back() = count == 1 ? a : b;
  }
  return grid;
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_cell(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string();
}

std::string format_row(const SweepRow& row) {
  std::string line = format_number(row.abscissa);
  for (const auto* cell : {&row.optimal_ebits, &row.single_rail_ebits, &row.dual_rail_ebits,
                           &row.c_cov, &row.c_rel}) {
    line += ',' + format_cell(*cell);
  }
  line += ',' + format_number(row.r_sr);
  line += ',' + format_number(row.r_dr);
  line += ',' + format_cell(row.q_max);
  return line;
}

void write_csv(std::ostream& out, const EchoLines& echo, std::span<const SweepRow> rows) {
  for (const auto& [key, value] : echo) out << "# " << key << '=' << value << '\n';
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << format_row(row) << '\n';
}

}  // namespace covertlab::sweep
