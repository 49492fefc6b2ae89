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

#include "covertlab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "covertlab/errors.hpp"

namespace covertlab::fock {
namespace {

Eigen::SelfAdjointEigenSolver<CMatrix> eigen_of(const CMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<CMatrix>(m);
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch " +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

// Weight of rho on each eigenvector of sigma: w_j = <v_j|rho|v_j>.
RVector weights_in_basis(const CMatrix& rho, const CMatrix& basis) {
  return (basis.adjoint() * rho * basis).diagonal().real();
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix data, double tail_budget) {
  if (data.rows() == 0 || data.rows() != data.cols()) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  const double herm = (data - data.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance) {
    throw InvalidState("density matrix not Hermitian (defect " + std::to_string(herm) + ")");
  }
  data_ = (data + data.adjoint()) * 0.5;
  const double min_eig = eigen_of(data_).eigenvalues().minCoeff();
  if (min_eig < -kPsdTolerance) {
    throw InvalidState("density matrix not positive semidefinite (min eigenvalue " +
                       std::to_string(min_eig) + ")");
  }
  const double tr = data_.trace().real();
  if (tr > 1.0 + kHermitianTolerance || tr < 1.0 - tail_budget - 1e-12) {
    throw InvalidState("density matrix trace " + std::to_string(tr) +
                       " outside [1 - tail_budget, 1]");
  }
}

double DensityMatrix::purity() const { return (data_ * data_).trace().real(); }

double DensityMatrix::mean_photon_number() const {
  double mean = 0.0;
  for (int k = 0; k < dim(); ++k) mean += k * data_(k, k).real();
  return mean;
}

double thermal_tail(double nbar, int dim) {
  if (nbar == 0.0) return 0.0;
  return std::pow(nbar / (1.0 + nbar), dim);
}

int truncation_dim(double nbar_max) {
  if (nbar_max < 0.0) throw DomainError("mean photon number must be >= 0");
  int dim = kMinTruncationDim;
  while (thermal_tail(nbar_max, dim) >= kTruncationTail) {
    if (++dim > kMaxSingleModeDim) {
      throw TruncationError("mean photon number " + std::to_string(nbar_max) +
                            " needs more than " + std::to_string(kMaxSingleModeDim) +
                            " Fock levels");
    }
  }
  return dim;
}

DensityMatrix thermal_state(double nbar, int dim) {
  if (nbar < 0.0) throw DomainError("thermal_state: negative mean photon number");
  if (dim < 1) throw DimensionError("thermal_state: dim must be >= 1");
  CMatrix rho = CMatrix::Zero(dim, dim);
  const double ratio = nbar / (1.0 + nbar);
  double weight = 1.0 / (1.0 + nbar);
  for (int k = 0; k < dim; ++k) {
    rho(k, k) = weight;
    weight *= ratio;
  }
  return DensityMatrix(std::move(rho), thermal_tail(nbar, dim) + 1e-14);
}

DensityMatrix coherent_state(Complex amplitude, int dim, double tail_budget) {
  if (dim < 1) throw DimensionError("coherent_state: dim must be >= 1");
  CVector psi(dim);
  const double mean = std::norm(amplitude);
  Complex coeff = std::exp(-mean / 2.0);
  for (int k = 0; k < dim; ++k) {
    psi(k) = coeff;
    coeff *= amplitude / std::sqrt(static_cast<double>(k + 1));
  }
  const double tail = 1.0 - psi.squaredNorm();
  if (tail > tail_budget) {
    throw TruncationError("coherent_state: Poisson tail " + std::to_string(tail) +
                          " beyond dim " + std::to_string(dim) + " exceeds budget");
  }
  return DensityMatrix(psi * psi.adjoint(), tail_budget);
}

LadderOps ladder_ops(int dim) {
  if (dim < 2) throw DimensionError("ladder_ops: dim must be >= 2");
  CMatrix a = CMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  CMatrix adag = a.adjoint();
  CMatrix n = adag * a;
  return {FockOperator(std::move(a)), FockOperator(std::move(adag)), FockOperator(std::move(n))};
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  if (static_cast<long>(a.dim()) * b.dim() > kMaxCompositeDim) {
    throw DimensionError("tensor: composite dimension exceeds supported envelope");
  }
  const double budget = std::max(a.tail_mass(), 0.0) + std::max(b.tail_mass(), 0.0) + 1e-12;
  return DensityMatrix(kron(a.matrix(), b.matrix()), budget);
}

FockOperator tensor(const FockOperator& a, const FockOperator& b) {
  return FockOperator(kron(a.matrix(), b.matrix()));
}

CMatrix partial_trace(const CMatrix& rho, std::span<const int> keep, std::span<const int> dims) {
  const long total = std::accumulate(dims.begin(), dims.end(), 1L, std::multiplies<>());
  if (rho.rows() != total || rho.cols() != total) {
    throw DimensionError("partial_trace: product of dims " + std::to_string(total) +
                         " != matrix dimension " + std::to_string(rho.rows()));
  }
  const int nsys = static_cast<int>(dims.size());
  std::vector<bool> kept(nsys, false);
  for (int k : keep) {
    if (k < 0 || k >= nsys) throw DimensionError("partial_trace: subsystem index out of range");
    kept[k] = true;
  }
  std::vector<long> stride(nsys, 1);
  for (int s = nsys - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  long keep_dim = 1;
  long trace_dim = 1;
  for (int s = 0; s < nsys; ++s) (kept[s] ? keep_dim : trace_dim) *= dims[s];

  // Full-space offset of each kept / traced multi-index.
  auto offsets = [&](bool want_kept, long count) {
    std::vector<long> out(count, 0);
    for (long idx = 0; idx < count; ++idx) {
      long rem = idx;
      long off = 0;
      for (int s = nsys - 1; s >= 0; --s) {
        if (kept[s] != want_kept) continue;
        off += (rem % dims[s]) * stride[s];
        rem /= dims[s];
      }
      out[idx] = off;
    }
    return out;
  };
  const auto keep_off = offsets(true, keep_dim);
  const auto trace_off = offsets(false, trace_dim);

  CMatrix out = CMatrix::Zero(keep_dim, keep_dim);
  for (long r = 0; r < keep_dim; ++r) {
    for (long c = 0; c < keep_dim; ++c) {
      Complex acc = 0.0;
      for (long t : trace_off) acc += rho(keep_off[r] + t, keep_off[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep,
                            std::span<const int> dims) {
  return DensityMatrix(partial_trace(rho.matrix(), keep, dims),
                       std::max(rho.tail_mass(), 0.0) + 1e-12);
}

double trace_norm(const CMatrix& a) {
  const CMatrix herm = (a + a.adjoint()) * 0.5;
  if ((a - herm).cwiseAbs().maxCoeff() <= kHermitianTolerance) {
    return eigen_of(herm).eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_distance");
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "fidelity");
  const auto es = eigen_of(rho.matrix());
  const RVector root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMatrix sqrt_rho = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
  const CMatrix inner = sqrt_rho * sigma.matrix() * sqrt_rho;
  const RVector lam = eigen_of((inner + inner.adjoint()) * 0.5).eigenvalues();
  const double root_fid = lam.cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(root_fid * root_fid, 0.0, 1.0);
}

EntropicValue von_neumann_entropy(const DensityMatrix& rho) {
  EntropicValue out;
  const RVector lam = eigen_of(rho.matrix()).eigenvalues();
  for (double l : lam) {
    if (l < kEigenvalueFloor) {
      out.clamped_mass += std::max(l, 0.0);
      continue;
    }
    out.value -= l * std::log(l);
  }
  return out;
}

EntropicValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "relative_entropy");
  const auto er = eigen_of(rho.matrix());
  const auto es = eigen_of(sigma.matrix());
  const RVector mu = es.eigenvalues();
  const RVector w = weights_in_basis(rho.matrix(), es.eigenvectors());

  EntropicValue out;
  double outside = 0.0;
  double cross = 0.0;
  for (Eigen::Index j = 0; j < mu.size(); ++j) {
    const double wj = std::max(w(j), 0.0);
    if (mu(j) < kEigenvalueFloor) outside += wj;
    cross += wj * std::log(std::max(mu(j), kEigenvalueFloor));
  }
  if (outside > kSupportTolerance) {
    throw SupportError("relative_entropy: rho has weight " + std::to_string(outside) +
                       " outside the support of sigma");
  }
  // Clamp the self term exactly like the cross term so D(rho || rho) = 0.
  double self = 0.0;
  for (double l : er.eigenvalues()) {
    if (l <= 0.0) continue;
    if (l < kEigenvalueFloor) out.clamped_mass += l;
    self += l * std::log(std::max(l, kEigenvalueFloor));
  }
  out.clamped_mass += outside;
  out.value = self - cross;
  if (out.value < 0.0 && out.value > -1e-12) out.value = 0.0;
  return out;
}

EntropicValue chi2_divergence(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "chi2_divergence");
  const auto es = eigen_of(sigma.matrix());
  const RVector mu = es.eigenvalues();
  const CMatrix& v = es.eigenvectors();
  const RVector w = weights_in_basis(rho.matrix(), v);
  const RVector w2 = weights_in_basis(rho.matrix() * rho.matrix(), v);

  EntropicValue out;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < mu.size(); ++j) {
    if (mu(j) < kEigenvalueFloor) out.clamped_mass += std::max(w(j), 0.0);
    acc += w2(j) / std::max(mu(j), kEigenvalueFloor);
  }
  if (out.clamped_mass > kSupportTolerance) {
    throw SupportError("chi2_divergence: rho has weight " + std::to_string(out.clamped_mass) +
                       " outside the support of sigma");
  }
  out.value = acc - 2.0 * rho.trace() + sigma.trace();
  if (out.value < 0.0 && out.value > -1e-12) out.value = 0.0;
  return out;
}

double relative_entropy_diagonal(std::span<const double> p, std::span<const double> s) {
  if (p.size() != s.size()) throw DimensionError("relative_entropy_diagonal: size mismatch");
  // Spectra here are exact, not eigenvalue estimates, so support is tested
  // against zero rather than the eigenvalue floor.
  double outside = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (s[i] <= 0.0) {
      outside += p[i];
      continue;
    }
    acc += p[i] * (std::log(p[i]) - std::log(s[i]));
  }
  if (outside > kSupportTolerance) {
    throw SupportError("relative_entropy_diagonal: p leaves the support of s");
  }
  return acc;
}

double chi2_divergence_diagonal(std::span<const double> p, std::span<const double> s) {
  if (p.size() != s.size()) throw DimensionError("chi2_divergence_diagonal: size mismatch");
  double outside = 0.0;
  double acc = 0.0;
  double tp = 0.0;
  double ts = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    tp += p[i];
    ts += s[i];
    if (p[i] == 0.0) continue;
    if (s[i] <= 0.0) {
      outside += std::abs(p[i]);
      continue;
    }
    acc += p[i] * p[i] / s[i];
  }
  if (outside > kSupportTolerance) {
    throw SupportError("chi2_divergence_diagonal: p leaves the support of s");
  }
  return acc - 2.0 * tp + ts;
}

double entropy_diagonal(std::span<const double> p) {
  double acc = 0.0;
  for (double x : p) {
    if (x >= kEigenvalueFloor) acc -= x * std::log(x);
  }
  return acc;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace covertlab::fock
