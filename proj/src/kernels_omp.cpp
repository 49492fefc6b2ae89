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

#include <omp.h>

#include <cstdint>
#include <string>

#include "covertlab/errors.hpp"
#include "covertlab/kernels.hpp"

namespace covertlab::kernels {

std::vector<sweep::SweepRow> sweep_parallel(std::span<const double> abscissa,
                                            std::span<const ChannelParams> points,
                                            const sweep::SweepSettings& settings) {
  std::vector<sweep::SweepRow> rows(points.size());
  const auto count = static_cast<std::int64_t>(points.size());
  // Rows land in their grid slot regardless of which thread finishes first.
  // Exceptions cannot leave an OpenMP region, so the first one is carried out.
  std::string error;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      rows[i] = sweep::evaluate_row(abscissa[i], points[i], settings);
    } catch (const std::exception& e) {
#pragma omp critical(covertlab_sweep_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw Error(error);
  return rows;
}

RejectionCount count_rejections_parallel(const sparse::SparseConfig& config, std::uint64_t seed,
                                         std::uint64_t samples) {
  config.validate();
  const std::uint64_t threshold = sparse::bernoulli_threshold(config.q);
  const auto total = static_cast<std::int64_t>(samples);
  std::uint64_t rejected = 0;
#pragma omp parallel for schedule(static) reduction(+ : rejected)
  for (std::int64_t i = 0; i < total; ++i) {
    rejected += !sparse::in_window(
        sparse::bernoulli_weight(seed, static_cast<std::uint64_t>(i), config.n, threshold), config);
  }
  return RejectionCount{samples, rejected};
}

MixtureSpectrum mixture_spectrum_parallel(std::span<const double> r0, std::span<const double> r1,
                                          const sparse::SparseConfig& config) {
  if (r0.size() != r1.size()) throw DimensionError("per-mode spectra differ in size");
  const std::size_t outcomes = detail::checked_outcomes(r0.size(), config.n);
  const std::vector<double> weight_mass = detail::window_weights(config);
  MixtureSpectrum out;
  out.window_mass = detail::window_mass(weight_mass, config.n);
  if (!(out.window_mass > 0.0)) throw DomainError("weight window has zero probability");
  out.values.resize(outcomes);
  const auto count = static_cast<std::int64_t>(outcomes);
#pragma omp parallel
  {
    std::vector<double> scratch;
#pragma omp for schedule(static)
    for (std::int64_t o = 0; o < count; ++o) {
      out.values[static_cast<std::size_t>(o)] =
          detail::mixture_value(static_cast<std::size_t>(o), r0, r1, config, weight_mass,
                                scratch) /
          out.window_mass;
    }
  }
  return out;
}

}  // namespace covertlab::kernels
