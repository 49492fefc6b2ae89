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

// Quantum channels on truncated Fock space: the lossy thermal-noise bosonic
// channel as pure loss followed by a quantum-limited amplifier, qubit
// projection, Pauli channels and Choi-state twirl extraction.

#include <array>
#include <vector>

#include "covertlab/fock.hpp"

namespace covertlab {

/// Lossy thermal-noise bosonic channel: transmittance eta in [0,1] and mean
/// thermal photon number nbar_b >= 0.
struct ChannelParams {
  double eta = 1.0;
  double nbar_b = 0.0;

  /// Throws DomainError outside the parameter domain.
  void validate() const;
  /// Amplifier gain of the loss+amplifier decomposition, 1 + (1-eta) nbar_b.
  double gain() const { return 1.0 + (1.0 - eta) * nbar_b; }
  /// Pure-loss transmissivity of the decomposition, eta / gain.
  double loss_transmissivity() const { return eta / gain(); }
};

/// Probabilities of I, X, Y, Z. Each in [0,1], summing to 1 within 1e-10.
class PauliVector {
 public:
  PauliVector(double p_i, double p_x, double p_y, double p_z);
  explicit PauliVector(const std::array<double, 4>& p) : PauliVector(p[0], p[1], p[2], p[3]) {}

  double i() const { return p_[0]; }
  double x() const { return p_[1]; }
  double y() const { return p_[2]; }
  double z() const { return p_[3]; }
  double operator[](std::size_t k) const { return p_[k]; }
  const std::array<double, 4>& values() const { return p_; }

 private:
  std::array<double, 4> p_;
};

}  // namespace covertlab

namespace covertlab::channels {

inline constexpr double kCompletenessThreshold = 1e-8;
inline constexpr double kDegenerateProjection = 1e-12;

/// Ordered Kraus family mapping in_dim levels to out_dim levels.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<fock::FockOperator> operators);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<fock::FockOperator>& operators() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  /// Max entrywise |sum_k K_k^dag K_k - I| on input levels 0..max_photons.
  double completeness_defect(int max_photons) const;

 private:
  std::vector<fock::FockOperator> ops_;
  int in_dim_ = 0;
  int out_dim_ = 0;
};

/// Sign convention on the port that reflects the input. The beamsplitter
/// unitary sends the input to that port with amplitude -sqrt(1-eta), i.e. a
/// (-1)^n phase relative to the transmitted port.
enum class ReflectionPhase { kNone, kBeamsplitter };

/// Loss (tau = eta/G) then amplifier (G = 1 + (1-eta) nbar_b), composed as
/// {B_k A_l}. `photon_cutoff` is the largest amplifier index k kept. Zero
/// operators are dropped. Throws CompletenessError if the defect on the
/// <=1-photon input subspace exceeds kCompletenessThreshold.
KrausChannel lossy_thermal_kraus(const ChannelParams& params, int in_dim, int out_dim,
                                 int photon_cutoff);
KrausChannel lossy_thermal_kraus(const ChannelParams& params, int dim, int photon_cutoff);

/// Alice -> Bob output: lossy_thermal_kraus with cutoff out_dim - 1.
KrausChannel bob_port(const ChannelParams& params, int in_dim, int out_dim);

/// Alice -> Willie output: transmissivity 1-eta with the environment seen
/// through eta, so vacuum maps to thermal(eta * nbar_b). `max_defect` is the
/// completeness defect tolerated before CompletenessError; callers that
/// truncate on purpose raise it and account for the lost trace themselves.
KrausChannel willie_port(const ChannelParams& params, int in_dim, int out_dim,
                         ReflectionPhase phase = ReflectionPhase::kBeamsplitter,
                         double max_defect = kCompletenessThreshold);

KrausChannel identity_channel(int dim);

/// sum_k K rho K^dag on an arbitrary operator (the map is linear).
fock::CMatrix apply(const KrausChannel& channel, const fock::CMatrix& rho);
/// Output keeps the lost trace as declared tail mass.
fock::DensityMatrix apply(const KrausChannel& channel, const fock::DensityMatrix& rho);

struct Projection {
  double success_prob;
  fock::DensityMatrix projected;
};

/// Projects onto span{|0>,|1>} and renormalizes. Throws DegenerateProjection
/// when the success probability is below 1e-12.
Projection qubit_project(const fock::DensityMatrix& rho);

/// The projector block Pi rho Pi as a 2x2 matrix (no renormalization).
fock::CMatrix qubit_block(const fock::CMatrix& rho);

/// I, X, Y, Z.
const std::array<fock::CMatrix, 4>& pauli_matrices();

PauliVector depolarizing_vector(double lambda);

/// Pauli channel composition: the vector of P_b after P_a (Klein-four
/// convolution; commutative).
PauliVector compose(const PauliVector& a, const PauliVector& b);

/// Pauli channel on a qubit (2x2) or on the second qubit of a pair (4x4).
fock::CMatrix pauli_apply(const PauliVector& p, const fock::CMatrix& rho);
fock::DensityMatrix pauli_apply(const PauliVector& p, const fock::DensityMatrix& rho);

enum class ChoiProjection { kNone, kQubit };

struct ChoiState {
  fock::DensityMatrix state;  // 4x4, basis |00>,|01>,|10>,|11> (reference first)
  double success;             // trace before renormalization
};

/// (I (x) channel)|Phi+><Phi+| with |Phi+> = (|00>+|11>)/sqrt(2) on the <=1
/// photon input, optionally projected onto the output qubit span.
ChoiState choi_state(const KrausChannel& channel, ChoiProjection projection = ChoiProjection::kQubit);

/// <Phi+|rho|Phi+>, <Psi+|rho|Psi+>, <Psi-|rho|Psi->, <Phi-|rho|Phi->.
std::array<double, 4> bell_overlaps(const fock::CMatrix& two_qubit);

/// Bell overlaps renormalized to a PauliVector. Throws DomainError if an
/// overlap is below -1e-10.
PauliVector twirl_from_choi(const fock::DensityMatrix& choi);

}  // namespace covertlab::channels
