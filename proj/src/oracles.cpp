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

#include "covertlab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "covertlab/errors.hpp"
#include "covertlab/formulas.hpp"
#include "covertlab/kernels.hpp"
#include "covertlab/philox.hpp"
#include "covertlab/sparse.hpp"

namespace covertlab::oracles {

using fock::CMatrix;
using fock::Complex;
using fock::DensityMatrix;

namespace {

std::string num(double v) { return sweep::format_number(v); }

std::string tag(const ChannelParams& p) {
  return "eta=" + num(p.eta) + " nbar_b=" + num(p.nbar_b);
}

void judge(OracleReport& r) {
  const double metric = r.comparison == Comparison::kRelative ? r.rel_error : r.abs_error;
  r.passed = std::isfinite(metric) && metric <= r.tolerance;
}

// Willie output of a single-rail input through the Kraus route.
CMatrix willie_numeric(const ChannelParams& params, const CMatrix& input, int dim,
                       channels::ReflectionPhase phase) {
  return channels::apply(channels::willie_port(params, 2, dim, phase), input);
}

DensityMatrix as_state(CMatrix m) {
  const double lost = std::max(0.0, 1.0 - m.trace().real());
  return DensityMatrix(std::move(m), lost + fock::kDefaultTailBudget);
}

}  // namespace

OracleReport make_report(std::string name, std::vector<double> analytic,
                         std::vector<double> numeric, int truncation_dim, double tolerance,
                         Comparison comparison, std::string detail) {
  if (analytic.size() != numeric.size()) {
    throw DimensionError("report '" + name + "' compares vectors of different length");
  }
  OracleReport r;
  r.name = std::move(name);
  r.truncation_dim = truncation_dim;
  r.tolerance = tolerance;
  r.comparison = comparison;
  r.detail = std::move(detail);
  bool finite = true;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    const double a = analytic[i];
    const double n = numeric[i];
    if (!std::isfinite(a) || !std::isfinite(n)) finite = false;
    const double err =
        comparison == Comparison::kUpperBound ? std::max(0.0, n - a) : std::abs(a - n);
    double rel = 0.0;
    if (err > 0.0) {
      rel = std::abs(a) > 0.0 ? err / std::abs(a) : std::numeric_limits<double>::infinity();
    }
    r.abs_error = std::max(r.abs_error, err);
    r.rel_error = std::max(r.rel_error, rel);
  }
  r.analytic = std::move(analytic);
  r.numeric = std::move(numeric);
  if (!finite) {
    r.abs_error = std::numeric_limits<double>::quiet_NaN();
    r.rel_error = std::numeric_limits<double>::quiet_NaN();
  }
  judge(r);
  return r;
}

void rescale_tolerance(OracleReport& report, double scale) {
  report.tolerance *= scale;
  judge(report);
}

int bob_dim(const ChannelParams& params) {
  params.validate();
  return fock::truncation_dim(params.gain() - 1.0);
}

int willie_dim(const ChannelParams& params) {
  params.validate();
  return fock::truncation_dim(params.eta * params.nbar_b);
}

CMatrix single_rail_input(double beta_sq, Complex gamma) {
  if (!(beta_sq >= 0.0 && beta_sq <= 1.0)) throw DomainError("beta_sq must lie in [0, 1]");
  if (std::norm(gamma) > beta_sq * (1.0 - beta_sq) + 1e-12) {
    throw DomainError("|gamma|^2 exceeds beta_sq (1 - beta_sq)");
  }
  CMatrix rho(2, 2);
  rho << 1.0 - beta_sq, gamma, std::conj(gamma), beta_sq;
  return rho;
}

DensityMatrix willie_state_analytic(double beta_sq, Complex gamma, const ChannelParams& params,
                                    int dim) {
  params.validate();
  single_rail_input(beta_sq, gamma);
  if (dim < 2) throw DimensionError("Willie state needs dim >= 2");
  const double nw = params.eta * params.nbar_b;
  const double loss = 1.0 - params.eta;
  const double base = 1.0 + nw;
  CMatrix m = CMatrix::Zero(dim, dim);
  double diag_sum = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double thermal = std::pow(nw, k) / std::pow(base, k + 1);
    const double correction =
        k == 0 ? -1.0 / (base * base) : std::pow(nw, k - 1) * (k - nw) / std::pow(base, k + 2);
    const double d = thermal + beta_sq * loss * correction;
    m(k, k) = d;
    diag_sum += d;
    if (k + 1 < dim) {
      const Complex band = -gamma * std::sqrt(loss * (k + 1)) * std::pow(nw, k) /
                           std::pow(base, k + 2);
      m(k, k + 1) = band;
      m(k + 1, k) = std::conj(band);
    }
  }
  const double tail = 1.0 - diag_sum;
  if (tail > fock::kDefaultTailBudget) {
    throw TruncationError("Willie state leaks " + num(tail) + " beyond dim " +
                          std::to_string(dim));
  }
  return DensityMatrix(std::move(m), std::max(tail, 0.0) + 1e-12);
}

OracleReport verify_willie_state(double beta_sq, Complex gamma, const ChannelParams& params,
                                 int dim) {
  if (dim <= 0) dim = willie_dim(params);
  const std::string name = "willie_state[" + tag(params) + " beta_sq=" + num(beta_sq) +
                           " gamma=" + num(gamma.real()) + (gamma.imag() < 0 ? "" : "+") +
                           num(gamma.imag()) + "i]";
  const CMatrix input = single_rail_input(beta_sq, gamma);
  const DensityMatrix analytic = willie_state_analytic(beta_sq, gamma, params, dim);
  const CMatrix numeric =
      willie_numeric(params, input, dim, channels::ReflectionPhase::kBeamsplitter);
  const CMatrix unreflected = willie_numeric(params, input, dim, channels::ReflectionPhase::kNone);

  OracleReport r;
  r.name = name;
  r.truncation_dim = dim;
  r.tolerance = kWillieTolerance;
  r.comparison = Comparison::kAbsolute;
  r.analytic = {analytic.mean_photon_number(), analytic(0, 1).real(), analytic(0, 1).imag()};
  r.numeric = {as_state(numeric).mean_photon_number(), numeric(0, 1).real(),
               numeric(0, 1).imag()};
  r.abs_error = fock::max_abs_diff(analytic.matrix(), numeric);
  const double scale = analytic.matrix().cwiseAbs().maxCoeff();
  r.rel_error = scale > 0.0 ? r.abs_error / scale : r.abs_error;
  r.detail = "max entry error without the reflection phase: " +
             num(fock::max_abs_diff(analytic.matrix(), unreflected));
  judge(r);
  return r;
}

OracleReport verify_chi2(const ChannelParams& params, int dim) {
  if (dim <= 0) dim = willie_dim(params);
  const auto closed = formulas::chi2_closed(params);
  if (!closed) throw DomainError("chi^2 closed form diverges at eta * nbar_b = 0");
  const DensityMatrix rho_w = as_state(willie_numeric(
      params, single_rail_input(0.5, 0.0), dim, channels::ReflectionPhase::kBeamsplitter));
  const DensityMatrix innocent = fock::thermal_state(params.eta * params.nbar_b, dim);
  const fock::EntropicValue chi2 = fock::chi2_divergence(rho_w, innocent);
  return make_report("chi2[" + tag(params) + "]", {*closed}, {chi2.value}, dim, kChi2Tolerance,
                     Comparison::kRelative, "clamped mass " + num(chi2.clamped_mass));
}

OracleReport verify_twirl(const ChannelParams& params) {
  const int dim = bob_dim(params);
  const auto choi = channels::choi_state(channels::bob_port(params, 2, dim));
  const PauliVector numeric = channels::twirl_from_choi(choi.state);
  const PauliVector analytic = formulas::twirl_vector(params);
  return make_report("twirl[" + tag(params) + "]",
                     {analytic.values().begin(), analytic.values().end()},
                     {numeric.values().begin(), numeric.values().end()}, dim, kTwirlTolerance,
                     Comparison::kAbsolute, "Choi projection success " + num(choi.success));
}

OracleReport verify_twirl_normalization(const ChannelParams& params) {
  const auto q = formulas::twirl_vector_unnormalized(params);
  return make_report("twirl_unnormalized_sum[" + tag(params) + "]", {4.0},
                     {q[0] + q[1] + q[2] + q[3]}, 0, 1e-9, Comparison::kAbsolute,
                     "closed forms as printed sum to 4; normalized by 1/4");
}

OracleReport verify_combined_channel(const ChannelParams& params) {
  const int dim = bob_dim(params);
  const channels::KrausChannel bob = channels::bob_port(params, 2, dim);
  const auto& paulis = channels::pauli_matrices();
  const CMatrix half_identity = 0.5 * CMatrix::Identity(2, 2);

  // Project, replace failures by I/2, then average over the four Pauli
  // conjugations. Linear in the input, so basis images define it.
  auto physical = [&](const CMatrix& e) {
    CMatrix out = CMatrix::Zero(2, 2);
    for (const auto& p : paulis) {
      const CMatrix in = p * e * p;
      const CMatrix kept = channels::qubit_block(channels::apply(bob, in));
      const Complex lost = in.trace() - kept.trace();
      out += p * (kept + lost * half_identity) * p;
    }
    return CMatrix(0.25 * out);
  };

  const PauliVector model = formulas::combined_pauli(params);
  double worst = 0.0;
  CMatrix choi = CMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CMatrix e = CMatrix::Zero(2, 2);
      e(i, j) = 1.0;
      const CMatrix image = physical(e);
      worst = std::max(worst, fock::max_abs_diff(image, channels::pauli_apply(model, e)));
      choi += 0.5 * fock::kron(e, image);
    }
  }
  const auto overlaps = channels::bell_overlaps(choi);
  OracleReport r;
  r.name = "combined_channel[" + tag(params) + "]";
  r.analytic = {model.values().begin(), model.values().end()};
  r.numeric = {overlaps.begin(), overlaps.end()};
  r.abs_error = worst;
  r.rel_error = worst;
  r.truncation_dim = dim;
  r.tolerance = kCombinedTolerance;
  r.comparison = Comparison::kAbsolute;
  r.detail = "process images of |i><j| vs Pauli channel of the combined vector";
  judge(r);
  return r;
}

OracleReport verify_projection_success(const ChannelParams& params) {
  const int dim = bob_dim(params);
  const CMatrix out = channels::apply(channels::bob_port(params, 2, dim),
                                      CMatrix(0.5 * CMatrix::Identity(2, 2)));
  const double numeric = channels::qubit_block(out).trace().real();
  return make_report("projection_success[" + tag(params) + "]",
                     {formulas::projection_success(params)}, {numeric}, dim,
                     kProjectionTolerance, Comparison::kAbsolute,
                     "the closed form is the success probability; failure = 1 - value");
}

OracleReport verify_dual_rail(const ChannelParams& params) {
  const int dim = bob_dim(params);
  const channels::KrausChannel mode = channels::bob_port(params, 2, dim);
  // Logical |0> = |10>, |1> = |01>. Only the single-photon output block of
  // each product Kraus operator survives the projection.
  CMatrix rho = CMatrix::Zero(4, 4);
  const double s = 1.0 / std::sqrt(2.0);
  for (const auto& ka : mode.operators()) {
    const CMatrix& a = ka.matrix();
    for (const auto& kb : mode.operators()) {
      const CMatrix& b = kb.matrix();
      Eigen::Matrix2cd block;
      block(0, 0) = a(1, 1) * b(0, 0);
      block(0, 1) = a(1, 0) * b(0, 1);
      block(1, 0) = a(0, 1) * b(1, 0);
      block(1, 1) = a(0, 0) * b(1, 1);
      fock::CVector v(4);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) v(r * 2 + c) = block(c, r) * s;
      }
      rho.noalias() += v * v.adjoint();
    }
  }
  const double success = rho.trace().real();
  rho += (1.0 - success) * 0.25 * CMatrix::Identity(4, 4);
  const auto overlaps = channels::bell_overlaps(rho);
  const PauliVector analytic =
      channels::depolarizing_vector(formulas::dual_rail_depolarizing(params));
  return make_report("dual_rail[" + tag(params) + "]",
                     {analytic.values().begin(), analytic.values().end()},
                     {overlaps.begin(), overlaps.end()}, dim, kDualRailTolerance,
                     Comparison::kAbsolute,
                     "two-mode projection success " + num(success) +
                         "; failures replaced by the maximally mixed state");
}

ModeSpectra sparse_mode_spectra(const ChannelParams& params, int dim) {
  // Per-mode truncation is deliberate here; the lost trace is renormalized
  // away and recorded in the spectra.
  const channels::KrausChannel port =
      channels::willie_port(params, 2, dim, channels::ReflectionPhase::kBeamsplitter, 1.0);
  ModeSpectra spectra;
  auto spectrum = [&](const CMatrix& input) {
    CMatrix out = channels::apply(port, input);
    const double off = (out - CMatrix(out.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
    if (off > kOffDiagonalTolerance) {
      throw InvalidState("per-mode Willie state is not Fock-diagonal (" + num(off) + ")");
    }
    std::vector<double> d(static_cast<std::size_t>(dim));
    double total = 0.0;
    for (int k = 0; k < dim; ++k) total += (d[k] = out(k, k).real());
    for (double& v : d) v /= total;
    spectra.leakage = std::max(spectra.leakage, 1.0 - total);
    return d;
  };
  spectra.r0 = spectrum(single_rail_input(0.0, 0.0));
  spectra.r1 = spectrum(single_rail_input(0.5, 0.0));
  return spectra;
}

SparseQrePoint sparse_qre_point(int n, double q, double vartheta, const ChannelParams& params,
                                int dim, sweep::Backend backend) {
  if (n < 1) throw DomainError("n must be >= 1");
  std::size_t outcomes = 1;
  for (int i = 0; i < n; ++i) {
    outcomes *= static_cast<std::size_t>(dim);
    if (outcomes > static_cast<std::size_t>(fock::kMaxCompositeDim)) {
      throw DimensionError("composite dimension " + std::to_string(dim) + "^" +
                           std::to_string(n) + " exceeds " +
                           std::to_string(fock::kMaxCompositeDim));
    }
  }
  const ModeSpectra spectra = sparse_mode_spectra(params, dim);
  const sparse::SparseConfig config{n, q, vartheta};
  const kernels::MixtureSpectrum mix =
      backend == sweep::Backend::kSerial
          ? kernels::mixture_spectrum_serial(spectra.r0, spectra.r1, config)
          : kernels::mixture_spectrum_parallel(spectra.r0, spectra.r1, config);

  std::vector<double> innocent(outcomes);
  for (std::size_t o = 0; o < outcomes; ++o) {
    double v = 1.0;
    std::size_t rest = o;
    for (int i = 0; i < n; ++i) {
      v *= spectra.r0[rest % static_cast<std::size_t>(dim)];
      rest /= static_cast<std::size_t>(dim);
    }
    innocent[o] = v;
  }
  std::vector<double> average(spectra.r0.size());
  for (std::size_t k = 0; k < average.size(); ++k) {
    average[k] = (1.0 - q) * spectra.r0[k] + q * spectra.r1[k];
  }
  SparseQrePoint point;
  point.n = n;
  point.d_mixture = fock::relative_entropy_diagonal(mix.values, innocent);
  point.d_single = fock::relative_entropy_diagonal(average, spectra.r0);
  point.d_product = n * point.d_single;
  point.difference = std::abs(point.d_mixture - point.d_product);
  point.window_mass = mix.window_mass;
  point.leakage = spectra.leakage;
  return point;
}

OracleReport verify_sparse_qre(std::span<const int> ns, double q, double vartheta,
                               const ChannelParams& params, int dim, sweep::Backend backend) {
  if (ns.empty()) throw DomainError("verify_sparse_qre needs at least one n");
  const auto chi2 = formulas::chi2_closed(params);
  if (!chi2) throw DomainError("chi^2 closed form diverges at eta * nbar_b = 0");
  std::vector<double> analytic;
  std::vector<double> numeric;
  std::string detail = "difference by n:";
  std::vector<SparseQrePoint> points;
  for (int n : ns) {
    points.push_back(sparse_qre_point(n, q, vartheta, params, dim, backend));
    detail += " " + std::to_string(n) + "->" + num(points.back().difference);
  }
  detail += "; per-mode truncation leakage " + num(points.front().leakage) + " renormalized";
  // Strict decrease along n.
  for (std::size_t i = 1; i < points.size(); ++i) {
    analytic.push_back(std::nextafter(points[i - 1].difference, 0.0));
    numeric.push_back(points[i].difference);
  }
  // D(rho_bar || rho0) <= q^2 chi^2.
  analytic.push_back(q * q * *chi2);
  numeric.push_back(points.front().d_single);
  // Exact window-exit probability against the Chernoff bound.
  for (const auto& p : points) {
    analytic.push_back(sparse::chernoff_bound({p.n, q, vartheta}));
    numeric.push_back(1.0 - p.window_mass);
  }
  std::string name = "sparse_qre[" + tag(params) + " q=" + num(q) + " vartheta=" + num(vartheta) +
                     " n=";
  for (std::size_t i = 0; i < ns.size(); ++i) name += (i ? "/" : "") + std::to_string(ns[i]);
  name += "]";
  return make_report(name, std::move(analytic), std::move(numeric), dim, 0.0,
                     Comparison::kUpperBound, detail);
}

OracleReport verify_rejection_rate(std::int64_t n, double q, double vartheta, std::uint64_t seed,
                                   std::uint64_t samples, sweep::Backend backend) {
  const sparse::SparseConfig config{n, q, vartheta};
  const kernels::RejectionCount count =
      backend == sweep::Backend::kSerial
          ? kernels::count_rejections_serial(config, seed, samples)
          : kernels::count_rejections_parallel(config, seed, samples);
  const double bound = sparse::chernoff_bound(config);
  const double b = std::min(bound, 1.0);
  const double sigma = std::sqrt(b * (1.0 - b) / static_cast<double>(samples));
  return make_report("rejection_rate[n=" + std::to_string(n) + " q=" + num(q) +
                         " vartheta=" + num(vartheta) + " samples=" + std::to_string(samples) + "]",
                     {bound + 3.0 * sigma}, {count.frequency()}, 0, 0.0, Comparison::kUpperBound,
                     "Chernoff bound " + num(bound) + " plus 3 sigma; rejected " +
                         std::to_string(count.rejected));
}

CMatrix random_state(int dim, std::uint64_t seed, std::uint64_t stream) {
  philox::Stream rng(seed, stream);
  CMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = rng.normal();
      g(r, c) = Complex(re, rng.normal());
    }
  }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // A small admixture of I/dim keeps every draw full rank.
  rho = 0.99 * rho + (0.01 / dim) * CMatrix::Identity(dim, dim);
  return CMatrix(0.5 * (rho + rho.adjoint()));
}

namespace {
// Stream offsets so the property checks draw disjoint randomness.
constexpr std::uint64_t kPinskerStream = 1ull << 40;
constexpr std::uint64_t kAdditivityStream = 2ull << 40;
constexpr std::uint64_t kDiagonalStream = 3ull << 40;
constexpr std::uint64_t kWillieStream = 4ull << 40;
}  // namespace

OracleReport verify_pinsker(std::uint64_t seed, int count) {
  double worst_gap = -std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  for (int i = 0; i < count; ++i) {
    const int dim = 2 + i % 7;
    const auto k = static_cast<std::uint64_t>(i);
    const DensityMatrix rho(random_state(dim, seed, kPinskerStream + 2 * k));
    const DensityMatrix sigma(random_state(dim, seed, kPinskerStream + 2 * k + 1));
    const double lhs = 0.5 * fock::trace_distance(rho, sigma);
    const double rhs = std::sqrt(std::max(0.0, fock::relative_entropy(rho, sigma).value) / 8.0);
    if (lhs - rhs > worst_gap) {
      worst_gap = lhs - rhs;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }
  return make_report("pinsker_chain[count=" + std::to_string(count) + "]", {worst_rhs},
                     {worst_lhs}, 8, 1e-12, Comparison::kUpperBound,
                     "tightest pair: 1/4 ||rho - sigma||_1 vs sqrt(D/8)");
}

OracleReport verify_qre_additivity(std::uint64_t seed, int count) {
  double worst = -1.0;
  double worst_sum = 0.0;
  double worst_joint = 0.0;
  for (int i = 0; i < count; ++i) {
    const int da = 2 + i % 3;
    const int db = 2 + (i / 3) % 3;
    const std::uint64_t base = kAdditivityStream + 4 * static_cast<std::uint64_t>(i);
    const DensityMatrix r1(random_state(da, seed, base));
    const DensityMatrix s1(random_state(da, seed, base + 1));
    const DensityMatrix r2(random_state(db, seed, base + 2));
    const DensityMatrix s2(random_state(db, seed, base + 3));
    const double sum = fock::relative_entropy(r1, s1).value + fock::relative_entropy(r2, s2).value;
    const double joint =
        fock::relative_entropy(fock::tensor(r1, r2), fock::tensor(s1, s2)).value;
    if (std::abs(sum - joint) > worst) {
      worst = std::abs(sum - joint);
      worst_sum = sum;
      worst_joint = joint;
    }
  }
  return make_report("qre_additivity[count=" + std::to_string(count) + "]", {worst_sum},
                     {worst_joint}, 16, kAdditivityTolerance, Comparison::kAbsolute,
                     "worst product pair");
}

OracleReport verify_kl_below_chi2(std::uint64_t seed, int count) {
  double worst_gap = -std::numeric_limits<double>::infinity();
  double worst_kl = 0.0;
  double worst_chi2 = 0.0;
  for (int i = 0; i < count; ++i) {
    const int dim = 2 + i % 7;
    philox::Stream rng(seed, kDiagonalStream + static_cast<std::uint64_t>(i));
    auto draw = [&] {
      std::vector<double> v(static_cast<std::size_t>(dim));
      double total = 0.0;
      for (double& x : v) {
        double u = rng.uniform();
        while (u == 0.0) u = rng.uniform();
        total += (x = -std::log(u));
      }
      for (double& x : v) x /= total;
      return v;
    };
    const auto p = draw();
    const auto s = draw();
    const double kl = fock::relative_entropy_diagonal(p, s);
    const double chi2 = fock::chi2_divergence_diagonal(p, s);
    if (kl - chi2 > worst_gap) {
      worst_gap = kl - chi2;
      worst_kl = kl;
      worst_chi2 = chi2;
    }
  }
  return make_report("kl_below_chi2[count=" + std::to_string(count) + "]", {worst_chi2},
                     {worst_kl}, 8, 1e-12, Comparison::kUpperBound, "tightest diagonal pair");
}

OracleReport verify_thermal_entropy(double nbar) {
  const int dim = fock::truncation_dim(nbar);
  const double closed = nbar == 0.0 ? 0.0
                                    : (1.0 + nbar) * std::log1p(nbar) - nbar * std::log(nbar);
  const double numeric = fock::von_neumann_entropy(fock::thermal_state(nbar, dim)).value;
  return make_report("thermal_entropy[nbar=" + num(nbar) + "]", {closed}, {numeric}, dim, 1e-9,
                     Comparison::kAbsolute, "nats");
}

OracleReport verify_pinsker_on_channel_states(const ChannelParams& params) {
  const int dim = willie_dim(params);
  const DensityMatrix innocent = fock::thermal_state(params.eta * params.nbar_b, dim);
  std::vector<double> rhs;
  std::vector<double> lhs;
  for (double beta_sq : {0.25, 0.5, 1.0}) {
    const DensityMatrix rho = as_state(willie_numeric(params, single_rail_input(beta_sq, 0.0), dim,
                                                      channels::ReflectionPhase::kBeamsplitter));
    lhs.push_back(0.5 * fock::trace_distance(rho, innocent));
    rhs.push_back(std::sqrt(std::max(0.0, fock::relative_entropy(rho, innocent).value) / 8.0));
  }
  return make_report("pinsker_channel_states[" + tag(params) + "]", std::move(rhs), std::move(lhs),
                     dim, 1e-12, Comparison::kUpperBound, "beta_sq = 0.25, 0.5, 1");
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::kAll, Suite::kFock, Suite::kTwirl, Suite::kWillie, Suite::kChi2,
                  Suite::kCombined, Suite::kSparse}) {
    if (suite_name(s) == name) return s;
  }
  throw ParseError("unknown verify suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kAll: return "all";
    case Suite::kFock: return "fock";
    case Suite::kTwirl: return "twirl";
    case Suite::kWillie: return "willie";
    case Suite::kChi2: return "chi2";
    case Suite::kCombined: return "combined";
    case Suite::kSparse: return "sparse";
  }
  return "all";
}

namespace {

void run_fock(std::uint64_t seed, std::vector<OracleReport>& out) {
  out.push_back(verify_pinsker(seed, 1000));
  out.push_back(verify_qre_additivity(seed, 1000));
  out.push_back(verify_kl_below_chi2(seed, 1000));
  for (double nbar : {0.0, 0.1, 1.0}) out.push_back(verify_thermal_entropy(nbar));
  out.push_back(verify_pinsker_on_channel_states({0.6, 0.2}));
  out.push_back(verify_pinsker_on_channel_states({0.8, 1.0}));
}

void run_twirl(std::vector<OracleReport>& out) {
  for (ChannelParams p : {ChannelParams{0.95, 1e-3}, {0.8, 1e-1}, {0.65, 1.0}}) {
    out.push_back(verify_twirl(p));
    out.push_back(verify_twirl_normalization(p));
  }
}

void run_willie(std::uint64_t seed, std::vector<OracleReport>& out) {
  out.push_back(verify_willie_state(0.5, 0.0, {0.6, 0.2}, 40));
  out.push_back(verify_willie_state(1.0, 0.0, {0.9, 0.1}));
  out.push_back(verify_willie_state(0.0, 0.0, {0.5, 1.0}));
  philox::Stream rng(seed, kWillieStream);
  for (double eta : {0.6, 0.8, 0.95}) {
    for (double nbar : {1e-3, 0.2, 1.0}) {
      for (int k = 0; k < 5; ++k) {
        const double beta_sq = rng.uniform();
        const double radius = std::sqrt(beta_sq * (1.0 - beta_sq)) * rng.uniform();
        const double phase = 2.0 * std::numbers::pi * rng.uniform();
        out.push_back(verify_willie_state(beta_sq, std::polar(radius, phase), {eta, nbar}));
      }
    }
  }
}

void run_chi2(std::vector<OracleReport>& out) {
  for (ChannelParams p : {ChannelParams{0.6, 0.2}, {0.95, 1e-2}, {0.8, 1.0}}) {
    out.push_back(verify_chi2(p));
  }
}

void run_combined(std::vector<OracleReport>& out) {
  for (ChannelParams p : {ChannelParams{1.0, 0.1}, {0.95, 1e-3}, {0.8, 1e-1}, {0.65, 1e-1}}) {
    out.push_back(verify_combined_channel(p));
  }
  for (ChannelParams p : {ChannelParams{0.9, 0.1}, {1.0, 0.5}, {0.5, 1.0}, {0.7, 0.0}}) {
    out.push_back(verify_projection_success(p));
  }
  for (ChannelParams p : {ChannelParams{0.9, 0.1}, {0.95, 1e-3}, {0.65, 1.0}}) {
    out.push_back(verify_dual_rail(p));
  }
}

void run_sparse(std::uint64_t seed, std::vector<OracleReport>& out) {
  static constexpr int kNs[] = {2, 4, 6};
  const ChannelParams params{0.6, 0.2};
  out.push_back(verify_sparse_qre(kNs, 0.5, 0.2, params, 4));
  out.push_back(verify_sparse_qre(kNs, 0.3, 0.2, params, 4));
  struct Mc {
    std::int64_t n;
    double q;
    double vartheta;
  };
  for (const Mc& c : {Mc{6, 0.3, 0.2}, Mc{6, 0.5, 0.2}, Mc{100, 0.3, 0.1}, Mc{1000, 0.3, 0.1}}) {
    out.push_back(verify_rejection_rate(c.n, c.q, c.vartheta, seed, 100000));
  }
}

}  // namespace

std::vector<OracleReport> run_suite(Suite suite, std::uint64_t seed, double tolerance_scale) {
  std::vector<OracleReport> out;
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kFock) run_fock(seed, out);
  if (all || suite == Suite::kTwirl) run_twirl(out);
  if (all || suite == Suite::kWillie) run_willie(seed, out);
  if (all || suite == Suite::kChi2) run_chi2(out);
  if (all || suite == Suite::kCombined) run_combined(out);
  if (all || suite == Suite::kSparse) run_sparse(seed, out);
  if (tolerance_scale != 1.0) {
    for (auto& r : out) rescale_tolerance(r, tolerance_scale);
  }
  return out;
}

std::string format_report_line(const OracleReport& report) {
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + num(v[i]);
    return s;
  };
  return report.name + "," + join(report.analytic) + "," + join(report.numeric) + "," +
         num(report.rel_error) + "," + std::to_string(report.truncation_dim) + "," +
         (report.passed ? "PASS" : "FAIL");
}

}  // namespace covertlab::oracles
