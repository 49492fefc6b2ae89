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

#include <cmath>
#include <string>

#include "covertlab/errors.hpp"
#include "covertlab/kernels.hpp"

namespace covertlab::kernels {

namespace detail {

std::vector<double> window_weights(const sparse::SparseConfig& config) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.n);
  std::vector<double> mass(n + 1, 0.0);
  const double log_q = std::log(config.q);
  const double log_p = std::log1p(-config.q);
  for (std::size_t w = 0; w <= n; ++w) {
    if (!sparse::in_window(static_cast<std::int64_t>(w), config)) continue;
    mass[w] = std::exp(static_cast<double>(w) * log_q + static_cast<double>(n - w) * log_p);
  }
  return mass;
}

double mixture_value(std::size_t outcome, std::span<const double> r0, std::span<const double> r1,
                     const sparse::SparseConfig& config, std::span<const double> weight_mass,
                     std::vector<double>& scratch) {
  const auto n = static_cast<std::size_t>(config.n);
  const std::size_t dim = r0.size();
  scratch.assign(n + 1, 0.0);
  scratch[0] = 1.0;
  // Digits from the least significant end, i.e. mode n-1 first; the weight
  // polynomial is symmetric in the mode order.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t digit = outcome % dim;
    outcome /= dim;
    const double a = r0[digit];
    const double b = r1[digit];
    for (std::size_t w = i + 1; w > 0; --w) scratch[w] = scratch[w] * a + scratch[w - 1] * b;
    scratch[0] *= a;
  }
  double value = 0.0;
  for (std::size_t w = 0; w <= n; ++w) value += weight_mass[w] * scratch[w];
  return value;
}

double window_mass(std::span<const double> weight_mass, std::int64_t n) {
  double total = 0.0;
  double binom = 1.0;
  for (std::int64_t w = 0; w <= n; ++w) {
    total += binom * weight_mass[static_cast<std::size_t>(w)];
    binom = binom * static_cast<double>(n - w) / static_cast<double>(w + 1);
  }
  return total;
}

std::size_t checked_outcomes(std::size_t dim, std::int64_t n) {
  if (dim == 0) throw DimensionError("empty per-mode spectrum");
  std::size_t total = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (total > kMaxMixtureOutcomes / dim) {
      throw DimensionError("composite dimension " + std::to_string(dim) + "^" +
                           std::to_string(n) + " exceeds the kernel envelope");
    }
    total *= dim;
  }
  return total;
}

}  // namespace detail

std::vector<sweep::SweepRow> sweep_serial(std::span<const double> abscissa,
                                          std::span<const ChannelParams> points,
                                          const sweep::SweepSettings& settings) {
  std::vector<sweep::SweepRow> rows(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    rows[i] = sweep::evaluate_row(abscissa[i], points[i], settings);
  }
  return rows;
}

RejectionCount count_rejections_serial(const sparse::SparseConfig& config, std::uint64_t seed,
                                       std::uint64_t samples) {
  config.validate();
  const std::uint64_t threshold = sparse::bernoulli_threshold(config.q);
  RejectionCount count{samples, 0};
  for (std::uint64_t i = 0; i < samples; ++i) {
    count.rejected += !sparse::in_window(sparse::bernoulli_weight(seed, i, config.n, threshold),
                                         config);
  }
  return count;
}

MixtureSpectrum mixture_spectrum_serial(std::span<const double> r0, std::span<const double> r1,
                                        const sparse::SparseConfig& config) {
  if (r0.size() != r1.size()) throw DimensionError("per-mode spectra differ in size");
  const std::size_t outcomes = detail::checked_outcomes(r0.size(), config.n);
  const std::vector<double> weight_mass = detail::window_weights(config);
  MixtureSpectrum out;
  out.window_mass = detail::window_mass(weight_mass, config.n);
  if (!(out.window_mass > 0.0)) throw DomainError("weight window has zero probability");
  out.values.resize(outcomes);
  std::vector<double> scratch;
  for (std::size_t o = 0; o < outcomes; ++o) {
    out.values[o] = detail::mixture_value(o, r0, r1, config, weight_mass, scratch) /
                    out.window_mass;
  }
  return out;
}

}  // namespace covertlab::kernels
