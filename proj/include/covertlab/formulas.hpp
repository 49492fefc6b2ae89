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

// Closed-form capacity constants, practical single-/dual-rail rates,
// covertness budgets and ebit totals. Rates are base 2; divergences and the
// covertness budget are in nats.

#include <array>
#include <optional>

#include "covertlab/channels.hpp"

namespace covertlab::formulas {

/// Covertness constraint delta_c > 0 (nats) over n >= 1 channel uses.
struct CovertBudget {
  double delta_c = 0.05;
  double n = 1e8;

  void validate() const;
};

/// Capacity constants. An empty optional marks a divergent or unbounded
/// value at the parameter boundary.
struct RateConstants {
  std::optional<double> c_cov;
  std::optional<double> c_rel;
  std::optional<double> c_key;

  /// c_cov * c_rel; zero whenever c_cov is zero.
  std::optional<double> capacity() const;
};

struct PracticalRates {
  double p_success;
  PauliVector q_twirl;
  PauliVector p_combined;
  double r_sr;
  double r_dr;
};

struct KeySizes {
  double log_k1;  // bits
  double log_k2;  // bits
};

RateConstants rate_constants(const ChannelParams& params);

/// Large-nbar_b limit of c_cov * c_rel, sqrt(2) eta^2 / ((1-eta)^2 ln 2).
double capacity_asymptote(double eta);

/// Probability that the single-rail output lands in span{|0>,|1>}.
double projection_success(const ChannelParams& params);

/// Twirl parameters as the closed forms read before normalization; the four
/// entries sum to 4.
std::array<double, 4> twirl_vector_unnormalized(const ChannelParams& params);
/// twirl_vector_unnormalized / 4.
PauliVector twirl_vector(const ChannelParams& params);

/// Projection failure replaced by the maximally mixed state, then the twirl:
/// (1-f) q + f/4 with f = 1 - projection_success.
PauliVector combined_pauli(const ChannelParams& params);

/// -sum p log2 p.
double shannon_entropy_bits(const PauliVector& p);

/// Hashing-bound rate [1 - H(p)]^+ for a Pauli vector.
double hashing_rate(const PauliVector& p);

/// Depolarizing parameter of the dual-rail channel, 1 - eta / G^4.
double dual_rail_depolarizing(const ChannelParams& params);

double single_rail_rate(const ChannelParams& params);
double dual_rail_rate(const ChannelParams& params);
PracticalRates practical_rates(const ChannelParams& params);

std::optional<double> total_ebits_optimal(const ChannelParams& params, const CovertBudget& budget);
std::optional<double> total_ebits_single_rail(const ChannelParams& params,
                                              const CovertBudget& budget, double vartheta);
std::optional<double> total_ebits_dual_rail(const ChannelParams& params,
                                            const CovertBudget& budget, double vartheta);

/// (1-eta)^2 / (4 eta nbar_b (1 + eta nbar_b)); empty when eta * nbar_b = 0.
std::optional<double> chi2_closed(const ChannelParams& params);

/// sqrt(2) c_cov sqrt(delta_c / n); empty when c_cov is unbounded. Throws
/// NonCovertRegime when the value reaches 1.
std::optional<double> q_max(const ChannelParams& params, const CovertBudget& budget);

/// Leading-order key sizes [c_key - c_rel]^+ nbar_s n and c_rel nbar_s n with
/// nbar_s = c_cov sqrt(delta_c / n). Empty when a constant diverges.
std::optional<KeySizes> key_sizes(const ChannelParams& params, const CovertBudget& budget);

}  // namespace covertlab::formulas
