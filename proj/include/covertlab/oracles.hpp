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

// Independent numeric checks of the closed forms. Every check simulates the
// physical map on truncated Fock space with the channels/fock primitives and
// compares against the corresponding closed form; failures are reported, not
// thrown.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covertlab/channels.hpp"
#include "covertlab/fock.hpp"
#include "covertlab/sweep.hpp"

namespace covertlab::oracles {

enum class Comparison {
  kAbsolute,    // max |analytic - numeric| <= tolerance
  kRelative,    // max |analytic - numeric| / |analytic| <= tolerance
  kUpperBound,  // numeric[i] <= analytic[i] + tolerance for every i
};

struct OracleReport {
  std::string name;
  std::vector<double> analytic;
  std::vector<double> numeric;
  double abs_error = 0.0;
  double rel_error = 0.0;
  int truncation_dim = 0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::kAbsolute;
  bool passed = false;
  std::string detail;
};

/// Fills errors and the verdict from analytic/numeric under `comparison`.
OracleReport make_report(std::string name, std::vector<double> analytic,
                         std::vector<double> numeric, int truncation_dim, double tolerance,
                         Comparison comparison, std::string detail = {});

/// Re-judges a report against tolerance * scale.
void rescale_tolerance(OracleReport& report, double scale);

// Named tolerances.
inline constexpr double kWillieTolerance = 1e-8;
inline constexpr double kChi2Tolerance = 1e-7;
inline constexpr double kTwirlTolerance = 1e-8;
inline constexpr double kCombinedTolerance = 1e-7;
inline constexpr double kProjectionTolerance = 1e-9;
inline constexpr double kDualRailTolerance = 1e-9;
inline constexpr double kAdditivityTolerance = 1e-9;
inline constexpr double kOffDiagonalTolerance = 1e-12;

/// Output dimensions chosen by the truncation rule for each port.
int bob_dim(const ChannelParams& params);
int willie_dim(const ChannelParams& params);

/// Single-rail input [[1-beta_sq, gamma], [conj(gamma), beta_sq]].
fock::CMatrix single_rail_input(double beta_sq, fock::Complex gamma);

/// Closed-form Willie output for a single-rail input, built term by term:
/// thermal(eta nbar_b) diagonal, the beta_sq (1-eta) correction, and the
/// -gamma / -conj(gamma) bands on |m><m+1| and |m+1><m|. Throws TruncationError
/// if more than 1e-10 of the trace falls beyond dim-1.
fock::DensityMatrix willie_state_analytic(double beta_sq, fock::Complex gamma,
                                          const ChannelParams& params, int dim);

OracleReport verify_willie_state(double beta_sq, fock::Complex gamma, const ChannelParams& params,
                                 int dim = 0);
OracleReport verify_chi2(const ChannelParams& params, int dim = 0);
OracleReport verify_twirl(const ChannelParams& params);
/// The four twirl closed forms before normalization sum to 4.
OracleReport verify_twirl_normalization(const ChannelParams& params);
OracleReport verify_combined_channel(const ChannelParams& params);
OracleReport verify_projection_success(const ChannelParams& params);
OracleReport verify_dual_rail(const ChannelParams& params);

/// Exact small-n sparse-signaling quantities at one (n, q, vartheta).
struct SparseQrePoint {
  int n = 0;
  double d_mixture = 0.0;   // D(rho_W^n || rho0^(x)n), window-conditioned mixture
  double d_product = 0.0;   // n D(rho_bar || rho0)
  double difference = 0.0;  // |d_mixture - d_product|
  double d_single = 0.0;    // D(rho_bar || rho0)
  double window_mass = 0.0;
  double leakage = 0.0;     // per-mode trace lost to truncation before renormalizing
};

/// Per-mode Willie states for x=0 (vacuum) and x=1 (twirled single-rail
/// input), renormalized after truncation to `dim`. Both are Fock-diagonal;
/// anything else throws InvalidState.
struct ModeSpectra {
  std::vector<double> r0;
  std::vector<double> r1;
  double leakage = 0.0;
};
ModeSpectra sparse_mode_spectra(const ChannelParams& params, int dim);

SparseQrePoint sparse_qre_point(int n, double q, double vartheta, const ChannelParams& params,
                                int dim, sweep::Backend backend = sweep::Backend::kParallel);

/// For n over `ns` (increasing): the QRE difference strictly shrinks,
/// D(rho_bar || rho0) <= q^2 chi2_closed, and P(x outside window) <= the
/// Chernoff bound. Composite dimension dim^n is capped at 4096.
OracleReport verify_sparse_qre(std::span<const int> ns, double q, double vartheta,
                               const ChannelParams& params, int dim,
                               sweep::Backend backend = sweep::Backend::kParallel);

/// Monte Carlo rejection frequency against the Chernoff bound plus 3 sigma.
OracleReport verify_rejection_rate(std::int64_t n, double q, double vartheta, std::uint64_t seed,
                                   std::uint64_t samples,
                                   sweep::Backend backend = sweep::Backend::kParallel);

// Divergence toolkit properties on `count` random instances each.
OracleReport verify_pinsker(std::uint64_t seed, int count);
OracleReport verify_qre_additivity(std::uint64_t seed, int count);
OracleReport verify_kl_below_chi2(std::uint64_t seed, int count);
OracleReport verify_thermal_entropy(double nbar);
/// Pinsker chain on Willie-port outputs against the innocent state.
OracleReport verify_pinsker_on_channel_states(const ChannelParams& params);

/// Random Hermitian PSD unit-trace matrix of full rank.
fock::CMatrix random_state(int dim, std::uint64_t seed, std::uint64_t stream);

enum class Suite { kAll, kFock, kTwirl, kWillie, kChi2, kCombined, kSparse };

/// Throws ParseError for an unknown name.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

std::vector<OracleReport> run_suite(Suite suite, std::uint64_t seed, double tolerance_scale = 1.0);

/// name,analytic,numeric,rel_error,dim,PASS|FAIL with ';'-joined vectors.
std::string format_report_line(const OracleReport& report);
inline constexpr std::string_view kReportHeader = "name,analytic,numeric,rel_error,dim,status";

}  // namespace covertlab::oracles
