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

#include "covertlab/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "covertlab/errors.hpp"

namespace covertlab {

void ChannelParams::validate() const {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw DomainError("eta must lie in [0, 1], got " + std::to_string(eta));
  }
  if (!(nbar_b >= 0.0) || !std::isfinite(nbar_b)) {
    throw DomainError("nbar_b must be finite and >= 0, got " + std::to_string(nbar_b));
  }
}

namespace {
constexpr double kPauliSumTolerance = 1e-10;
constexpr double kPauliEntryTolerance = 1e-12;
}  // namespace

PauliVector::PauliVector(double p_i, double p_x, double p_y, double p_z)
    : p_{p_i, p_x, p_y, p_z} {
  double sum = 0.0;
  for (double& v : p_) {
    if (!std::isfinite(v) || v < -kPauliEntryTolerance || v > 1.0 + kPauliEntryTolerance) {
      throw DomainError("Pauli probability out of [0, 1]: " + std::to_string(v));
    }
    v = std::clamp(v, 0.0, 1.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > kPauliSumTolerance) {
    throw DomainError("Pauli probabilities sum to " + std::to_string(sum));
  }
}

}  // namespace covertlab

namespace covertlab::channels {

using fock::CMatrix;
using fock::Complex;
using fock::DensityMatrix;
using fock::FockOperator;

KrausChannel::KrausChannel(std::vector<FockOperator> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw DimensionError("Kraus family is empty");
  out_dim_ = ops_.front().rows();
  in_dim_ = ops_.front().cols();
  if (in_dim_ < 1 || out_dim_ < 1) throw DimensionError("Kraus operator with empty shape");
  for (const auto& k : ops_) {
    if (k.rows() != out_dim_ || k.cols() != in_dim_) {
      throw DimensionError("Kraus operators disagree in shape");
    }
  }
}

double KrausChannel::completeness_defect(int max_photons) const {
  const int m = std::clamp(max_photons + 1, 1, in_dim_);
  CMatrix sum = CMatrix::Zero(m, m);
  for (const auto& k : ops_) {
    const auto block = k.matrix().leftCols(m);
    sum.noalias() += block.adjoint() * block;
  }
  return fock::max_abs_diff(sum, CMatrix::Identity(m, m));
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Loss amplitudes <j-l|A_l|j> = sqrt(C(j,l) (1-tau)^l tau^(j-l)).
double loss_amplitude(double tau, int j, int l) {
  return std::sqrt(binomial(j, l) * std::pow(1.0 - tau, l) * std::pow(tau, j - l));
}

// Amplifier amplitudes <m+k|B_k|m> = sqrt(C(m+k,k) (1/G) ((G-1)/G)^k G^-m).
double amplifier_amplitude(double gain, int m, int k) {
  return std::sqrt(binomial(m + k, k) / gain * std::pow((gain - 1.0) / gain, k) *
                   std::pow(gain, -m));
}

KrausChannel build_loss_amplifier(double tau, double gain, int in_dim, int out_dim,
                                  int photon_cutoff, bool reflect,
                                  double max_defect = kCompletenessThreshold) {
  std::vector<FockOperator> ops;
  const int k_max = gain == 1.0 ? 0 : photon_cutoff;
  for (int k = 0; k <= k_max; ++k) {
    for (int l = 0; l < in_dim; ++l) {
      if (l > 0 && tau == 1.0) break;
      CMatrix m = CMatrix::Zero(out_dim, in_dim);
      bool nonzero = false;
      for (int j = l; j < in_dim; ++j) {
        const int mid = j - l;
        const int out = mid + k;
        if (out >= out_dim) break;
        const double v = amplifier_amplitude(gain, mid, k) * loss_amplitude(tau, j, l);
        if (v == 0.0) continue;
        m(out, j) = (reflect && (out % 2 == 1)) ? -v : v;
        nonzero = true;
      }
      if (nonzero) ops.emplace_back(std::move(m));
    }
  }
  if (ops.empty()) throw CompletenessError("Kraus family truncated to nothing");
  KrausChannel channel(std::move(ops));
  const double defect = channel.completeness_defect(1);
  if (defect > max_defect) {
    throw CompletenessError("completeness defect " + std::to_string(defect) +
                            " on the <=1-photon subspace; raise the output dimension or cutoff");
  }
  return channel;
}

}  // namespace

KrausChannel lossy_thermal_kraus(const ChannelParams& params, int in_dim, int out_dim,
                                 int photon_cutoff) {
  params.validate();
  if (in_dim < 1 || out_dim < 1) throw DimensionError("Kraus dimensions must be >= 1");
  if (photon_cutoff < 0) throw DomainError("photon_cutoff must be >= 0");
  const double gain = params.gain();
  return build_loss_amplifier(params.eta / gain, gain, in_dim, out_dim, photon_cutoff, false);
}

KrausChannel lossy_thermal_kraus(const ChannelParams& params, int dim, int photon_cutoff) {
  return lossy_thermal_kraus(params, dim, dim, photon_cutoff);
}

KrausChannel bob_port(const ChannelParams& params, int in_dim, int out_dim) {
  return lossy_thermal_kraus(params, in_dim, out_dim, out_dim - 1);
}

KrausChannel willie_port(const ChannelParams& params, int in_dim, int out_dim,
                         ReflectionPhase phase, double max_defect) {
  params.validate();
  if (in_dim < 1 || out_dim < 1) throw DimensionError("Kraus dimensions must be >= 1");
  const double gain = 1.0 + params.eta * params.nbar_b;
  const double tau = (1.0 - params.eta) / gain;
  return build_loss_amplifier(tau, gain, in_dim, out_dim, out_dim - 1,
                              phase == ReflectionPhase::kBeamsplitter, max_defect);
}

KrausChannel identity_channel(int dim) {
  if (dim < 1) throw DimensionError("identity channel needs dim >= 1");
  return KrausChannel({FockOperator(CMatrix::Identity(dim, dim))});
}

CMatrix apply(const KrausChannel& channel, const CMatrix& rho) {
  if (rho.rows() != channel.in_dim() || rho.cols() != channel.in_dim()) {
    throw DimensionError("state of dim " + std::to_string(rho.rows()) +
                         " does not match channel input dim " + std::to_string(channel.in_dim()));
  }
  CMatrix out = CMatrix::Zero(channel.out_dim(), channel.out_dim());
  for (const auto& k : channel.operators()) {
    out.noalias() += k.matrix() * rho * k.matrix().adjoint();
  }
  return out;
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  CMatrix out = apply(channel, rho.matrix());
  const double lost = std::max(0.0, 1.0 - out.trace().real());
  return DensityMatrix(std::move(out), lost + fock::kDefaultTailBudget);
}

CMatrix qubit_block(const CMatrix& rho) {
  if (rho.rows() < 2 || rho.cols() != rho.rows()) {
    throw DimensionError("qubit projection needs a square input of dim >= 2");
  }
  return rho.topLeftCorner(2, 2);
}

Projection qubit_project(const DensityMatrix& rho) {
  CMatrix block = qubit_block(rho.matrix());
  const double success = block.trace().real();
  if (!(success >= kDegenerateProjection)) {
    throw DegenerateProjection("projection success probability " + std::to_string(success));
  }
  block /= success;
  return Projection{std::min(success, 1.0), DensityMatrix(std::move(block))};
}

const std::array<CMatrix, 4>& pauli_matrices() {
  static const std::array<CMatrix, 4> kPaulis = [] {
    std::array<CMatrix, 4> p;
    const Complex i1(0.0, 1.0);
    p[0] = CMatrix::Identity(2, 2);
    p[1] = CMatrix::Zero(2, 2);
    p[1](0, 1) = 1.0;
    p[1](1, 0) = 1.0;
    p[2] = CMatrix::Zero(2, 2);
    p[2](0, 1) = -i1;
    p[2](1, 0) = i1;
    p[3] = CMatrix::Zero(2, 2);
    p[3](0, 0) = 1.0;
    p[3](1, 1) = -1.0;
    return p;
  }();
  return kPaulis;
}

PauliVector depolarizing_vector(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("depolarizing parameter must lie in [0, 1]");
  }
  return PauliVector(1.0 - 0.75 * lambda, 0.25 * lambda, 0.25 * lambda, 0.25 * lambda);
}

PauliVector compose(const PauliVector& a, const PauliVector& b) {
  // Index bits (x, z): I=00, X=10, Y=11, Z=01. Products up to phase XOR them.
  static constexpr int kBits[4] = {0b00, 0b10, 0b11, 0b01};
  static constexpr int kFromBits[4] = {0, 3, 1, 2};
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[kFromBits[kBits[i] ^ kBits[j]]] += a[i] * b[j];
  }
  return PauliVector(out);
}

CMatrix pauli_apply(const PauliVector& p, const CMatrix& rho) {
  const auto& paulis = pauli_matrices();
  CMatrix out;
  if (rho.rows() == 2 && rho.cols() == 2) {
    out = CMatrix::Zero(2, 2);
    for (int k = 0; k < 4; ++k) out += p[k] * (paulis[k] * rho * paulis[k]);
  } else if (rho.rows() == 4 && rho.cols() == 4) {
    out = CMatrix::Zero(4, 4);
    const CMatrix id = CMatrix::Identity(2, 2);
    for (int k = 0; k < 4; ++k) {
      const CMatrix op = fock::kron(id, paulis[k]);
      out += p[k] * (op * rho * op);
    }
  } else {
    throw DimensionError("Pauli channel acts on 2x2 or 4x4 operators only");
  }
  return out;
}

DensityMatrix pauli_apply(const PauliVector& p, const DensityMatrix& rho) {
  return DensityMatrix(pauli_apply(p, rho.matrix()));
}

ChoiState choi_state(const KrausChannel& channel, ChoiProjection projection) {
  if (channel.in_dim() < 2) throw DimensionError("Choi state needs channel input dim >= 2");
  if (projection == ChoiProjection::kNone && channel.out_dim() != 2) {
    throw DimensionError("unprojected Choi state needs a qubit output");
  }
  const int out_keep = 2;
  CMatrix rho = CMatrix::Zero(4, 4);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& k : channel.operators()) {
    fock::CVector v(4);
    for (int r = 0; r < 2; ++r) {
      for (int b = 0; b < out_keep; ++b) v(r * out_keep + b) = k.matrix()(b, r) * inv_sqrt2;
    }
    rho.noalias() += v * v.adjoint();
  }
  const double success = rho.trace().real();
  if (!(success >= kDegenerateProjection)) {
    throw DegenerateProjection("Choi projection success probability " + std::to_string(success));
  }
  rho /= success;
  return ChoiState{DensityMatrix(std::move(rho)), std::min(success, 1.0)};
}

std::array<double, 4> bell_overlaps(const CMatrix& two_qubit) {
  if (two_qubit.rows() != 4 || two_qubit.cols() != 4) {
    throw DimensionError("Bell overlaps need a 4x4 operator");
  }
  const double s = 1.0 / std::sqrt(2.0);
  const double bell[4][4] = {
      {s, 0.0, 0.0, s},   // Phi+
      {0.0, s, s, 0.0},   // Psi+
      {0.0, s, -s, 0.0},  // Psi-
      {s, 0.0, 0.0, -s},  // Phi-
  };
  std::array<double, 4> out{};
  for (int b = 0; b < 4; ++b) {
    Complex acc = 0.0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) acc += bell[b][r] * two_qubit(r, c) * bell[b][c];
    }
    out[b] = acc.real();
  }
  return out;
}

PauliVector twirl_from_choi(const DensityMatrix& choi) {
  auto overlaps = bell_overlaps(choi.matrix());
  double sum = 0.0;
  for (double& v : overlaps) {
    if (v < -1e-10) throw DomainError("negative Bell overlap " + std::to_string(v));
    v = std::max(v, 0.0);
    sum += v;
  }
  for (double& v : overlaps) v /= sum;
  return PauliVector(overlaps);
}

}  // namespace covertlab::channels
