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

// Data-parallel kernels, each with a serial reference. The two versions of a
// kernel return bitwise-identical results: every output element is computed
// by the same arithmetic in the same order, whichever thread owns it.

#include <cstdint>
#include <span>
#include <vector>

#include "covertlab/sparse.hpp"
#include "covertlab/sweep.hpp"

namespace covertlab::kernels {

std::vector<sweep::SweepRow> sweep_serial(std::span<const double> abscissa,
                                          std::span<const ChannelParams> points,
                                          const sweep::SweepSettings& settings);
std::vector<sweep::SweepRow> sweep_parallel(std::span<const double> abscissa,
                                            std::span<const ChannelParams> points,
                                            const sweep::SweepSettings& settings);

struct RejectionCount {
  std::uint64_t samples = 0;
  std::uint64_t rejected = 0;

  double frequency() const {
    return samples == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(samples);
  }
  bool operator==(const RejectionCount&) const = default;
};

/// Draws `samples` Bernoulli(q)^n sequences (sample i from stream i) and
/// counts those whose weight leaves the window.
RejectionCount count_rejections_serial(const sparse::SparseConfig& config, std::uint64_t seed,
                                       std::uint64_t samples);
RejectionCount count_rejections_parallel(const sparse::SparseConfig& config, std::uint64_t seed,
                                         std::uint64_t samples);

/// Spectrum of the window-conditioned mixture
///   sum_{x in window} p(x) (x)_i r^{x_i} / P(window)
/// for commuting per-mode spectra r0 (x_i = 0) and r1 (x_i = 1). Outcome
/// index has mode 0 as the most significant digit.
struct MixtureSpectrum {
  std::vector<double> values;
  double window_mass = 0.0;  // P(window) under Bernoulli(q)^n
};

MixtureSpectrum mixture_spectrum_serial(std::span<const double> r0, std::span<const double> r1,
                                        const sparse::SparseConfig& config);
MixtureSpectrum mixture_spectrum_parallel(std::span<const double> r0, std::span<const double> r1,
                                          const sparse::SparseConfig& config);

/// Largest composite size the mixture kernel accepts.
inline constexpr std::size_t kMaxMixtureOutcomes = std::size_t{1} << 24;

namespace detail {

/// Per-sequence probability q^w (1-q)^(n-w) for each weight w, zero outside
/// the window.
std::vector<double> window_weights(const sparse::SparseConfig& config);

/// Mixture value at one outcome; shared by both kernel versions.
double mixture_value(std::size_t outcome, std::span<const double> r0, std::span<const double> r1,
                     const sparse::SparseConfig& config, std::span<const double> weight_mass,
                     std::vector<double>& scratch);

/// sum_w C(n,w) weight_mass[w].
double window_mass(std::span<const double> weight_mass, std::int64_t n);

std::size_t checked_outcomes(std::size_t dim, std::int64_t n);

}  // namespace detail

}  // namespace covertlab::kernels
