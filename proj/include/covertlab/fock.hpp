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

// Truncated Fock-space linear algebra: states, operators, composite systems
// and the entropy/divergence toolkit. All divergences are in nats.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace covertlab::fock {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kDefaultTailBudget = 1e-10;

// Eigenvalues below the floor are clamped before taking logarithms or
// inverses.
inline constexpr double kEigenvalueFloor = 1e-12;
// Largest weight rho may put on the clamped subspace of sigma before a
// relative entropy or chi^2 is rejected as a support violation.
inline constexpr double kSupportTolerance = 1e-9;

// Truncation rule: thermal tail beyond dim-1 below kTruncationTail, and
// never fewer than kMinTruncationDim levels.
inline constexpr double kTruncationTail = 1e-12;
inline constexpr int kMinTruncationDim = 20;
inline constexpr int kMaxSingleModeDim = 64;
inline constexpr int kMaxCompositeDim = 4096;

/// Hermitian, positive semidefinite operator with trace in
/// [1 - tail_budget, 1]. Construction validates; the object is immutable.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix data, double tail_budget = kDefaultTailBudget);

  int dim() const { return static_cast<int>(data_.rows()); }
  const CMatrix& matrix() const { return data_; }
  Complex operator()(int row, int col) const { return data_(row, col); }

  double trace() const { return data_.trace().real(); }
  /// Probability mass lost to truncation, 1 - tr(rho).
  double tail_mass() const { return 1.0 - trace(); }
  double purity() const;
  double mean_photon_number() const;

 private:
  CMatrix data_;
};

/// Operator on (or between) truncated Fock spaces. Rectangular shapes are
/// allowed so Kraus operators can change the truncation dimension.
class FockOperator {
 public:
  explicit FockOperator(CMatrix data) : data_(std::move(data)) {}

  int rows() const { return static_cast<int>(data_.rows()); }
  int cols() const { return static_cast<int>(data_.cols()); }
  const CMatrix& matrix() const { return data_; }

 private:
  CMatrix data_;
};

struct LadderOps {
  FockOperator annihilation;
  FockOperator creation;
  FockOperator number;
};

/// Value of a log-based quantity and the probability mass that met the
/// eigenvalue floor while computing it.
struct EntropicValue {
  double value = 0.0;
  double clamped_mass = 0.0;
};

/// Smallest dim >= kMinTruncationDim whose thermal tail at mean photon number
/// `nbar_max` is below kTruncationTail. Throws TruncationError past
/// kMaxSingleModeDim.
int truncation_dim(double nbar_max);

/// Geometric tail sum_{k >= dim} nbar^k / (1+nbar)^(k+1).
double thermal_tail(double nbar, int dim);

DensityMatrix thermal_state(double nbar, int dim);
DensityMatrix coherent_state(Complex amplitude, int dim,
                             double tail_budget = kDefaultTailBudget);
LadderOps ladder_ops(int dim);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
FockOperator tensor(const FockOperator& a, const FockOperator& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Reduces `rho` on subsystems with dimensions `dims` (subsystem 0 is the most
/// significant index) to the subsystems listed in `keep`, in increasing
/// order.
CMatrix partial_trace(const CMatrix& rho, std::span<const int> keep,
                      std::span<const int> dims);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep,
                            std::span<const int> dims);

double trace_norm(const CMatrix& a);
/// 1/2 ||rho - sigma||_1.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
/// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

EntropicValue von_neumann_entropy(const DensityMatrix& rho);
/// tr(rho log rho - rho log sigma). Throws SupportError if rho leaves the
/// support of sigma.
EntropicValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);
/// tr(rho^2 sigma^-1) - 2 tr(rho) + tr(sigma), which is tr(rho^2 sigma^-1) - 1
/// for unit-trace states and stays exact for truncated ones.
EntropicValue chi2_divergence(const DensityMatrix& rho, const DensityMatrix& sigma);

// Commuting states given by their common-basis spectra. The spectra are taken
// as exact: support means s > 0, with no eigenvalue floor.
double relative_entropy_diagonal(std::span<const double> p, std::span<const double> s);
double chi2_divergence_diagonal(std::span<const double> p, std::span<const double> s);
double entropy_diagonal(std::span<const double> p);

/// Max entrywise |a - b|.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace covertlab::fock
