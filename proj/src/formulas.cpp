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

#include "covertlab/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "covertlab/errors.hpp"

namespace covertlab::formulas {

namespace {

double log2_one_plus_inverse(double x) { return std::log1p(1.0 / x) / std::numbers::ln2; }

void check_vartheta(double vartheta) {
  if (!(vartheta > 0.0 && vartheta < 1.0)) {
    throw DomainError("vartheta must lie in (0, 1), got " + std::to_string(vartheta));
  }
}

}  // namespace

void CovertBudget::validate() const {
  if (!(delta_c > 0.0) || !std::isfinite(delta_c)) {
    throw DomainError("delta_c must be finite and > 0");
  }
  if (!(n >= 1.0) || !std::isfinite(n)) throw DomainError("n must be finite and >= 1");
}

std::optional<double> RateConstants::capacity() const {
  if (c_cov && *c_cov == 0.0) return 0.0;
  if (!c_cov || !c_rel) return std::nullopt;
  return *c_cov * *c_rel;
}

RateConstants rate_constants(const ChannelParams& params) {
  params.validate();
  const double eta = params.eta;
  const double nbar = params.nbar_b;
  RateConstants rc;
  if (eta < 1.0) {
    rc.c_cov = std::sqrt(2.0 * eta * nbar * (1.0 + eta * nbar)) / (1.0 - eta);
  }
  const double loss_noise = (1.0 - eta) * nbar;
  if (eta == 0.0) {
    rc.c_rel = 0.0;
  } else if (loss_noise > 0.0) {
    rc.c_rel = eta * log2_one_plus_inverse(loss_noise);
  }
  const double leak_noise = eta * nbar;
  if (eta == 1.0) {
    rc.c_key = 0.0;
  } else if (leak_noise > 0.0) {
    rc.c_key = (1.0 - eta) * log2_one_plus_inverse(leak_noise);
  }
  return rc;
}

double capacity_asymptote(double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) throw DomainError("capacity_asymptote needs eta in [0, 1)");
  const double r = eta / (1.0 - eta);
  return std::numbers::sqrt2 * r * r / std::numbers::ln2;
}

double projection_success(const ChannelParams& params) {
  params.validate();
  const double eta = params.eta;
  const double nbar = params.nbar_b;
  const double g = params.gain();
  const double num = 1.0 + (1.0 - eta) * nbar * (3.0 + 2.0 * nbar - 2.0 * eta * (nbar + 0.5));
  return std::clamp(num / (g * g * g), 0.0, 1.0);
}

std::array<double, 4> twirl_vector_unnormalized(const ChannelParams& params) {
  params.validate();
  const double g = params.gain();
  const double tau = params.loss_transmissivity();
  const double g2 = g * g;
  const double two_n = (g * (2.0 - tau) + tau - 1.0) / g2;
  const double base = g * (2.0 - tau) - 1.0;
  const double cross = 2.0 * std::sqrt(g * tau);
  const double qx = base / g2 / two_n;
  return {(base + 2.0 * tau + cross) / g2 / two_n, qx, qx,
          (base + 2.0 * tau - cross) / g2 / two_n};
}

PauliVector twirl_vector(const ChannelParams& params) {
  auto q = twirl_vector_unnormalized(params);
  for (double& v : q) v = std::max(0.0, v / 4.0);
  return PauliVector(q);
}

PauliVector combined_pauli(const ChannelParams& params) {
  const double failure = 1.0 - projection_success(params);
  return channels::compose(channels::depolarizing_vector(failure), twirl_vector(params));
}

double shannon_entropy_bits(const PauliVector& p) {
  double h = 0.0;
  for (double v : p.values()) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double hashing_rate(const PauliVector& p) { return std::max(0.0, 1.0 - shannon_entropy_bits(p)); }

double dual_rail_depolarizing(const ChannelParams& params) {
  params.validate();
  const double g = params.gain();
  return std::clamp(1.0 - params.eta / (g * g * g * g), 0.0, 1.0);
}

double single_rail_rate(const ChannelParams& params) { return hashing_rate(combined_pauli(params)); }

double dual_rail_rate(const ChannelParams& params) {
  return hashing_rate(channels::depolarizing_vector(dual_rail_depolarizing(params)));
}

PracticalRates practical_rates(const ChannelParams& params) {
  const PauliVector combined = combined_pauli(params);
  return PracticalRates{projection_success(params), twirl_vector(params), combined,
                        hashing_rate(combined), dual_rail_rate(params)};
}

std::optional<double> total_ebits_optimal(const ChannelParams& params,
                                          const CovertBudget& budget) {
  budget.validate();
  const auto cap = rate_constants(params).capacity();
  if (!cap) return std::nullopt;
  return std::sqrt(budget.n * budget.delta_c) * *cap;
}

std::optional<double> total_ebits_single_rail(const ChannelParams& params,
                                              const CovertBudget& budget, double vartheta) {
  budget.validate();
  check_vartheta(vartheta);
  const auto c_cov = rate_constants(params).c_cov;
  if (!c_cov) return std::nullopt;
  return (1.0 - vartheta) * std::sqrt(budget.n) * std::numbers::sqrt2 * *c_cov *
         single_rail_rate(params) * std::sqrt(budget.delta_c);
}

std::optional<double> total_ebits_dual_rail(const ChannelParams& params,
                                            const CovertBudget& budget, double vartheta) {
  budget.validate();
  check_vartheta(vartheta);
  const auto c_cov = rate_constants(params).c_cov;
  if (!c_cov) return std::nullopt;
  return (1.0 - vartheta) * std::sqrt(budget.n) * (*c_cov / std::numbers::sqrt2) *
         dual_rail_rate(params) * std::sqrt(budget.delta_c);
}

std::optional<double> chi2_closed(const ChannelParams& params) {
  params.validate();
  const double leak = params.eta * params.nbar_b;
  if (leak == 0.0) return std::nullopt;
  const double loss = 1.0 - params.eta;
  return loss * loss / (4.0 * leak * (1.0 + leak));
}

std::optional<double> q_max(const ChannelParams& params, const CovertBudget& budget) {
  budget.validate();
  const auto c_cov = rate_constants(params).c_cov;
  if (!c_cov) return std::nullopt;
  const double q = std::numbers::sqrt2 * *c_cov * std::sqrt(budget.delta_c / budget.n);
  if (q >= 1.0) {
    throw NonCovertRegime("q_max = " + std::to_string(q) +
                          " >= 1: the square-root-law regime does not apply");
  }
  return q;
}

std::optional<KeySizes> key_sizes(const ChannelParams& params, const CovertBudget& budget) {
  budget.validate();
  const RateConstants rc = rate_constants(params);
  if (!rc.c_cov || !rc.c_rel || !rc.c_key) return std::nullopt;
  const double nbar_s = *rc.c_cov * std::sqrt(budget.delta_c / budget.n);
  const double scale = nbar_s * budget.n;
  return KeySizes{std::max(0.0, *rc.c_key - *rc.c_rel) * scale, *rc.c_rel * scale};
}

}  // namespace covertlab::formulas
