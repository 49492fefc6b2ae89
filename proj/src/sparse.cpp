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

#include "covertlab/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "covertlab/errors.hpp"

namespace covertlab::sparse {

void SparseConfig::validate() const {
  if (n < 1) throw DomainError("n must be >= 1");
  if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0, 1), got " + std::to_string(q));
  if (!(vartheta >= 0.0) || !std::isfinite(vartheta)) {
    throw DomainError("vartheta must be finite and >= 0");
  }
  if (q + vartheta < -kWindowSlack || q - vartheta > 1.0 + kWindowSlack) {
    throw DomainError("weight window does not meet [0, n]");
  }
}

bool in_window(std::int64_t weight, const SparseConfig& config) {
  const double frac = static_cast<double>(weight) / static_cast<double>(config.n);
  return std::abs(config.q - frac) <= config.vartheta + kWindowSlack;
}

std::pair<std::int64_t, std::int64_t> window_bounds(const SparseConfig& config) {
  config.validate();
  const double n = static_cast<double>(config.n);
  auto lo = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(std::ceil(n * (config.q - config.vartheta))) - 1, 0, config.n);
  auto hi = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(std::floor(n * (config.q + config.vartheta))) + 1, 0, config.n);
  while (lo <= hi && !in_window(lo, config)) ++lo;
  while (hi >= lo && !in_window(hi, config)) --hi;
  return {lo, hi};
}

double chernoff_bound(const SparseConfig& config) {
  config.validate();
  return 2.0 * std::exp(-config.q * static_cast<double>(config.n) * config.vartheta *
                        config.vartheta / 3.0);
}

double window_probability(const SparseConfig& config) {
  const auto [lo, hi] = window_bounds(config);
  const double n = static_cast<double>(config.n);
  const double log_q = std::log(config.q);
  const double log_p = std::log1p(-config.q);
  double total = 0.0;
  for (std::int64_t w = lo; w <= hi; ++w) {
    const double k = static_cast<double>(w);
    total += std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                      k * log_q + (n - k) * log_p);
  }
  return std::min(total, 1.0);
}

std::int64_t SecretPair::weight() const {
  return static_cast<std::int64_t>(std::count(x.begin(), x.end(), '1'));
}

SecretPair sample_secret(const SparseConfig& config, std::uint64_t seed) {
  const auto [lo, hi] = window_bounds(config);
  if (lo > hi) throw DomainError("weight window contains no integer weight");
  const std::uint64_t threshold = bernoulli_threshold(config.q);
  for (std::uint64_t attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
    if (!in_window(bernoulli_weight(seed, attempt, config.n, threshold), config)) continue;
    SecretPair secret;
    secret.x.resize(static_cast<std::size_t>(config.n));
    std::int64_t i = 0;
    for (std::uint64_t block = 0; i < config.n; ++block) {
      const philox::Counter words = philox::block_at(seed, attempt, block);
      for (int lane = 0; lane < 4 && i < config.n; ++lane, ++i) {
        secret.x[static_cast<std::size_t>(i)] = words[lane] < threshold ? '1' : '0';
      }
    }
    static constexpr char kSymbols[4] = {'I', 'X', 'Y', 'Z'};
    const std::int64_t w = secret.weight();
    secret.y.resize(static_cast<std::size_t>(w));
    std::int64_t j = 0;
    for (std::uint64_t block = 0; j < w; ++block) {
      const philox::Counter words = philox::block_at(seed, kSymbolStream, block);
      for (int lane = 0; lane < 4 && j < w; ++lane) {
        for (int shift = 30; shift >= 0 && j < w; shift -= 2, ++j) {
          secret.y[static_cast<std::size_t>(j)] = kSymbols[(words[lane] >> shift) & 3u];
        }
      }
    }
    return secret;
  }
  std::ostringstream msg;
  msg << "no window hit in " << kMaxRejectionAttempts << " attempts; Chernoff-estimated "
      << "acceptance probability >= " << std::max(0.0, 1.0 - chernoff_bound(config));
  throw SamplingError(msg.str());
}

std::string serialize(const SecretPair& secret) { return secret.x + "\n" + secret.y + "\n"; }

SecretPair parse_secret(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() != '#') lines.push_back(std::move(line));
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty() && lines.size() > 2) lines.pop_back();
  if (lines.size() == 1) lines.emplace_back();
  if (lines.size() != 2) throw ParseError("secret file needs exactly two payload lines");
  SecretPair secret{lines[0], lines[1]};
  if (secret.x.empty()) throw ParseError("secret bitstring is empty");
  if (secret.x.find_first_not_of("01") != std::string::npos) {
    throw ParseError("secret bitstring has characters other than 0/1");
  }
  if (secret.y.find_first_not_of("IXYZ") != std::string::npos) {
    throw ParseError("secret symbol line has characters outside {I,X,Y,Z}");
  }
  if (static_cast<std::int64_t>(secret.y.size()) != secret.weight()) {
    throw ParseError("symbol count " + std::to_string(secret.y.size()) +
                     " does not match bitstring weight " + std::to_string(secret.weight()));
  }
  return secret;
}

std::optional<double> q_from_budget(const ChannelParams& params,
                                    const formulas::CovertBudget& budget) {
  return formulas::q_max(params, budget);
}

EbitPlan covert_ebit_plan(const ChannelParams& params, const formulas::CovertBudget& budget,
                          double vartheta) {
  EbitPlan plan;
  plan.q = q_from_budget(params, budget);
  if (plan.q) plan.expected_nonzero_uses = *plan.q * budget.n;
  const formulas::PracticalRates rates = formulas::practical_rates(params);
  plan.r_sr = rates.r_sr;
  plan.r_dr = rates.r_dr;
  plan.total_optimal = formulas::total_ebits_optimal(params, budget);
  plan.total_single_rail = formulas::total_ebits_single_rail(params, budget, vartheta);
  plan.total_dual_rail = formulas::total_ebits_dual_rail(params, budget, vartheta);
  plan.keys = formulas::key_sizes(params, budget);
  std::vector<std::string> reasons;
  if (!plan.q) reasons.emplace_back("c_cov unbounded at eta=1");
  if (plan.r_sr == 0.0) reasons.emplace_back("single-rail hashing rate is zero");
  if (plan.r_dr == 0.0) reasons.emplace_back("dual-rail hashing rate is zero");
  for (std::size_t i = 0; i < reasons.size(); ++i) {
    plan.reason += (i ? "; " : "") + reasons[i];
  }
  return plan;
}

}  // namespace covertlab::sparse
