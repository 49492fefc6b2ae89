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

// Sparse signaling: the weight window on the secret x, rejection sampling of
// (x, y), the Chernoff bound on leaving the window, and the ebit plan that
// ties the covertness budget to the practical rates.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covertlab/formulas.hpp"
#include "covertlab/philox.hpp"

namespace covertlab::sparse {

inline constexpr double kWindowSlack = 1e-12;
inline constexpr std::uint64_t kMaxRejectionAttempts = 1'000'000;
// Stream index reserved for the Pauli symbols of a secret.
inline constexpr std::uint64_t kSymbolStream = std::uint64_t{1} << 63;

/// n channel uses, per-use transmit probability q, window half-width
/// vartheta. The window {x : |q - w(x)/n| <= vartheta} must meet [0, n].
struct SparseConfig {
  std::int64_t n = 1;
  double q = 0.5;
  double vartheta = 0.01;

  void validate() const;
};

bool in_window(std::int64_t weight, const SparseConfig& config);

/// Inclusive integer weight range of the window; first > second when no
/// integer weight qualifies.
std::pair<std::int64_t, std::int64_t> window_bounds(const SparseConfig& config);

/// 2 exp(-q n vartheta^2 / 3).
double chernoff_bound(const SparseConfig& config);

/// Exact Binomial(n, q) mass inside the window.
double window_probability(const SparseConfig& config);

/// Bernoulli threshold on a 32-bit word: P(word < threshold) = q up to 2^-32.
inline std::uint64_t bernoulli_threshold(double q) {
  return static_cast<std::uint64_t>(q * 4294967296.0);
}

/// Hamming weight of the n Bernoulli draws of stream `stream`.
inline std::int64_t bernoulli_weight(std::uint64_t seed, std::uint64_t stream, std::int64_t n,
                                     std::uint64_t threshold) {
  std::int64_t weight = 0;
  std::int64_t i = 0;
  for (std::uint64_t block = 0; i < n; ++block) {
    const philox::Counter words = philox::block_at(seed, stream, block);
    for (int lane = 0; lane < 4 && i < n; ++lane, ++i) weight += words[lane] < threshold;
  }
  return weight;
}

/// x as '0'/'1' characters; y as 'I','X','Y','Z' with |y| = w(x).
struct SecretPair {
  std::string x;
  std::string y;

  std::int64_t weight() const;
};

/// Bernoulli(q)^n conditioned on the window by rejection, then uniform Pauli
/// symbols for every nonzero position. Attempt a draws x from stream a.
/// Throws SamplingError after kMaxRejectionAttempts.
SecretPair sample_secret(const SparseConfig& config, std::uint64_t seed);

/// Two lines: bitstring, symbol string.
std::string serialize(const SecretPair& secret);
/// Inverse of serialize. Lines starting with '#' are skipped.
SecretPair parse_secret(std::string_view text);

/// formulas::q_max under the sparse-signaling name.
std::optional<double> q_from_budget(const ChannelParams& params,
                                    const formulas::CovertBudget& budget);

struct EbitPlan {
  std::optional<double> q;
  std::optional<double> expected_nonzero_uses;
  double r_sr = 0.0;
  double r_dr = 0.0;
  std::optional<double> total_optimal;
  std::optional<double> total_single_rail;
  std::optional<double> total_dual_rail;
  std::optional<formulas::KeySizes> keys;
  std::string reason;  // empty unless a practical total is zero or unbounded
};

/// Throws NonCovertRegime when q_max >= 1.
EbitPlan covert_ebit_plan(const ChannelParams& params, const formulas::CovertBudget& budget,
                          double vartheta);

}  // namespace covertlab::sparse
