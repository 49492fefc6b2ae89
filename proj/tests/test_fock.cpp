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


#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "covertlab/errors.hpp"
#include "covertlab/fock.hpp"
#include "covertlab/philox.hpp"

namespace covertlab::fock {
namespace {

CMatrix bell_phi_plus() {
  CVector psi = CVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

TEST(ThermalState, VacuumAtZeroMean) {
  const DensityMatrix rho = thermal_state(0.0, 4);
  EXPECT_EQ(rho(0, 0), Complex(1.0));
  for (int k = 1; k < 4; ++k) EXPECT_EQ(rho(k, k), Complex(0.0));
}

TEST(ThermalState, GeometricWeightsAtUnitMean) {
  const DensityMatrix rho = thermal_state(1.0, 50);
  double expected = 0.5;
  for (int k = 0; k < 10; ++k, expected /= 2.0) {
    EXPECT_DOUBLE_EQ(rho(k, k).real(), expected);
  }
  EXPECT_NEAR(rho.mean_photon_number(), 1.0, 1e-12);
}

TEST(ThermalState, TailAtTenthPhoton) {
  // Sum of 0.1^k / 1.1^(k+1) over k >= 30 is (1/11)^30.
  const double tail = thermal_tail(0.1, 30);
  EXPECT_LT(tail, 1e-25);
  EXPECT_NEAR(tail / std::pow(1.0 / 11.0, 30), 1.0, 1e-12);
  EXPECT_NEAR(thermal_state(0.1, 30).tail_mass(), 0.0, 1e-15);
}

TEST(ThermalState, RejectsNegativeMean) {
  EXPECT_THROW(thermal_state(-0.1, 10), DomainError);
  EXPECT_THROW(thermal_state(0.1, 0), DimensionError);
}

TEST(ThermalState, ReportsTruncationLeakage) {
  const DensityMatrix rho = thermal_state(2.0, 10);
  EXPECT_NEAR(rho.tail_mass(), thermal_tail(2.0, 10), 1e-14);
}

TEST(TruncationDim, FloorAndGrowth) {
  EXPECT_EQ(truncation_dim(0.0), kMinTruncationDim);
  EXPECT_EQ(truncation_dim(1e-3), kMinTruncationDim);
  const int d = truncation_dim(1.0);
  EXPECT_LT(thermal_tail(1.0, d), kTruncationTail);
  EXPECT_GE(thermal_tail(1.0, d - 1), kTruncationTail);
  EXPECT_THROW(truncation_dim(100.0), TruncationError);
  EXPECT_THROW(truncation_dim(-1.0), DomainError);
}

TEST(CoherentState, VacuumAtZeroAmplitude) {
  const DensityMatrix rho = coherent_state(0.0, 5);
  EXPECT_LT(max_abs_diff(rho.matrix(), thermal_state(0.0, 5).matrix()), 1e-15);
}

TEST(CoherentState, MeanPhotonNumberAndPurity) {
  const DensityMatrix rho = coherent_state(std::sqrt(0.5), 30);
  EXPECT_NEAR(rho.mean_photon_number(), 0.5, 1e-12);
  philox::Stream rng(7, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex alpha = std::polar(1.5 * rng.uniform(), 6.0 * rng.uniform());
    EXPECT_NEAR(coherent_state(alpha, 40).purity(), 1.0, 1e-10);
  }
}

TEST(CoherentState, RejectsTruncationLeakage) {
  EXPECT_THROW(coherent_state(2.0, 4), TruncationError);
}

TEST(LadderOps, TwoLevelAnnihilation) {
  const LadderOps ops = ladder_ops(2);
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(0, 1) = 1.0;
  EXPECT_EQ(ops.annihilation.matrix(), expected);
  EXPECT_EQ(ops.creation.matrix(), expected.adjoint());
}

TEST(LadderOps, CommutatorAwayFromBoundary) {
  const int dim = 8;
  const LadderOps ops = ladder_ops(dim);
  const CMatrix& a = ops.annihilation.matrix();
  const CMatrix& ad = ops.creation.matrix();
  const CMatrix comm = a * ad - ad * a;
  EXPECT_LT(max_abs_diff(comm.topLeftCorner(dim - 1, dim - 1), CMatrix::Identity(dim - 1, dim - 1)),
            1e-14);
  for (int k = 0; k < dim; ++k) EXPECT_NEAR(ops.number.matrix()(k, k).real(), k, 1e-14);
  EXPECT_THROW(ladder_ops(1), DimensionError);
}

TEST(DensityMatrix, RejectsInvalidInput) {
  CMatrix not_square = CMatrix::Zero(2, 3);
  EXPECT_THROW(DensityMatrix{not_square}, DimensionError);
  CMatrix skew = CMatrix::Identity(2, 2) * 0.5;
  skew(0, 1) = 0.3;
  EXPECT_THROW(DensityMatrix{skew}, InvalidState);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{negative}, InvalidState);
  EXPECT_THROW(DensityMatrix{CMatrix::Identity(2, 2)}, InvalidState);
}

TEST(Composite, VacuumProductTracesBackToVacuum) {
  const DensityMatrix vac = thermal_state(0.0, 3);
  const DensityMatrix both = tensor(vac, vac);
  const std::array<int, 2> dims{3, 3};
  for (int keep : {0, 1}) {
    const std::array<int, 1> k{keep};
    EXPECT_LT(max_abs_diff(partial_trace(both, k, dims).matrix(), vac.matrix()), 1e-15);
  }
}

TEST(Composite, BellPairMarginalIsMaximallyMixed) {
  const DensityMatrix bell(bell_phi_plus());
  const std::array<int, 2> dims{2, 2};
  const std::array<int, 1> keep{0};
  const DensityMatrix a = partial_trace(bell, keep, dims);
  EXPECT_LT(max_abs_diff(a.matrix(), 0.5 * CMatrix::Identity(2, 2)), 1e-15);
}

TEST(Composite, PartialTraceOfProductRecoversFactors) {
  const DensityMatrix a = thermal_state(0.3, 3);
  const DensityMatrix b = coherent_state(Complex(0.2, 0.1), 4, 1e-3);
  const DensityMatrix ab = tensor(a, b);
  const std::array<int, 2> dims{3, 4};
  const std::array<int, 1> keep_a{0};
  const std::array<int, 1> keep_b{1};
  EXPECT_LT(max_abs_diff(partial_trace(ab.matrix(), keep_a, dims), a.matrix() * b.trace()), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(ab.matrix(), keep_b, dims), b.matrix() * a.trace()), 1e-14);
}

TEST(Composite, DimensionMismatch) {
  const DensityMatrix bell(bell_phi_plus());
  const std::array<int, 2> wrong{2, 3};
  const std::array<int, 1> keep{0};
  EXPECT_THROW(partial_trace(bell, keep, wrong), DimensionError);
  const std::array<int, 2> dims{2, 2};
  const std::array<int, 1> bad_index{2};
  EXPECT_THROW(partial_trace(bell, bad_index, dims), DimensionError);
}

TEST(Divergences, IdenticalStatesGiveZero) {
  const DensityMatrix rho = thermal_state(0.4, 25);
  EXPECT_NEAR(trace_distance(rho, rho), 0.0, 1e-14);
  EXPECT_NEAR(relative_entropy(rho, rho).value, 0.0, 1e-12);
  EXPECT_NEAR(chi2_divergence(rho, rho).value, 0.0, 1e-12);
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-10);
}

TEST(Divergences, SupportViolationIsAnError) {
  const DensityMatrix vac = thermal_state(0.0, 3);
  const DensityMatrix warm = thermal_state(0.5, 3);
  EXPECT_NO_THROW(relative_entropy(vac, warm));
  EXPECT_THROW(relative_entropy(warm, vac), SupportError);
  EXPECT_THROW(chi2_divergence(warm, vac), SupportError);
  const std::vector<double> p{0.5, 0.5};
  const std::vector<double> s{1.0, 0.0};
  EXPECT_THROW(relative_entropy_diagonal(p, s), SupportError);
  EXPECT_THROW(chi2_divergence_diagonal(p, s), SupportError);
}

TEST(Divergences, ThermalPairMatchesClosedForms) {
  // Diagonal pair: both divergences reduce to classical sums.
  const int dim = 40;
  const DensityMatrix rho = thermal_state(0.3, dim);
  const DensityMatrix sigma = thermal_state(0.5, dim);
  double kl = 0.0;
  double chi2 = -1.0;
  for (int k = 0; k < dim; ++k) {
    const double p = rho(k, k).real();
    const double s = sigma(k, k).real();
    kl += p * std::log(p / s);
    chi2 += p * p / s;
  }
  EXPECT_NEAR(relative_entropy(rho, sigma).value, kl, 1e-10);
  EXPECT_NEAR(chi2_divergence(rho, sigma).value, chi2, 1e-10);
}

TEST(Divergences, TraceDistanceIsSymmetric) {
  const DensityMatrix a = coherent_state(Complex(0.3, -0.2), 20);
  const DensityMatrix b = thermal_state(0.2, 20);
  EXPECT_DOUBLE_EQ(trace_distance(a, b), trace_distance(b, a));
  EXPECT_GT(trace_distance(a, b), 0.0);
  EXPECT_LE(trace_distance(a, b), 1.0);
}

TEST(Entropy, ThermalClosedForm) {
  for (double nbar : {0.05, 0.3, 1.0, 1.5}) {
    const int dim = truncation_dim(nbar);
    const double closed = (1.0 + nbar) * std::log1p(nbar) - nbar * std::log(nbar);
    EXPECT_NEAR(von_neumann_entropy(thermal_state(nbar, dim)).value, closed, 1e-9) << nbar;
  }
  EXPECT_NEAR(von_neumann_entropy(coherent_state(0.7, 30)).value, 0.0, 1e-9);
}

TEST(Diagonal, MatchesDenseOnCommutingPairs) {
  philox::Stream rng(11, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> p(5), s(5);
    double sp = 0.0, ss = 0.0;
    for (int k = 0; k < 5; ++k) {
      p[k] = rng.uniform() + 1e-3;
      s[k] = rng.uniform() + 1e-3;
      sp += p[k];
      ss += s[k];
    }
    CMatrix rp = CMatrix::Zero(5, 5), rs = CMatrix::Zero(5, 5);
    for (int k = 0; k < 5; ++k) {
      p[k] /= sp;
      s[k] /= ss;
      rp(k, k) = p[k];
      rs(k, k) = s[k];
    }
    const DensityMatrix a(rp), b(rs);
    EXPECT_NEAR(relative_entropy_diagonal(p, s), relative_entropy(a, b).value, 1e-12);
    EXPECT_NEAR(chi2_divergence_diagonal(p, s), chi2_divergence(a, b).value, 1e-11);
    EXPECT_NEAR(entropy_diagonal(p), von_neumann_entropy(a).value, 1e-12);
    EXPECT_LE(relative_entropy_diagonal(p, s), chi2_divergence_diagonal(p, s));
  }
}

}  // namespace
}  // namespace covertlab::fock
