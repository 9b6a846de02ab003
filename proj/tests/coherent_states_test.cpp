// Copyright 2026 The ecs Authors
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

#include "ecs/coherent_states.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "ecs/error.hpp"
#include "test_util.hpp"

namespace ecs {
namespace {

using testing::kRandomCases;
using testing::RandomComplex;
using testing::RandomState;

TEST(OverlapTest, IdenticalStatesHaveUnitOverlap) {
  EXPECT_NEAR(std::abs(Overlap(0.7, 0.7) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(Overlap({0.3, -1.2}, {0.3, -1.2}) - 1.0), 0.0, 1e-15);
}

TEST(OverlapTest, OppositeRealAmplitudes) {
  const Complex v = Overlap(1.0, -1.0);
  EXPECT_NEAR(v.real(), 0.1353352832366127, 1e-15);
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(OverlapTest, ComplexValueMatchesHandComputation) {
  // exp(-|b|^2/2 - |g|^2/2 + conj(b) g) for b = 1+i, g = 0.5.
  const Complex want = std::exp(Complex(-1.0 - 0.125 + 0.5, -0.5));
  EXPECT_NEAR(std::abs(Overlap({1.0, 1.0}, 0.5) - want), 0.0, 1e-15);
}

TEST(OverlapTest, HermitianSymmetryAndModulus) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < kRandomCases; ++i) {
    const Complex b = RandomComplex(rng, 3.0);
    const Complex g = RandomComplex(rng, 3.0);
    EXPECT_NEAR(std::abs(Overlap(b, g) - std::conj(Overlap(g, b))), 0.0, 1e-14);
    EXPECT_NEAR(std::norm(Overlap(b, g)), std::exp(-std::norm(b - g)), 1e-14);
    EXPECT_NEAR(std::abs(std::exp(LogOverlap(b, g)) - Overlap(b, g)), 0.0,
                1e-14);
  }
}

TEST(GramTest, RandomGramMatricesArePositive) {
  std::mt19937_64 rng(12);
  for (int c = 0; c < kRandomCases; ++c) {
    const int n = 2 + c % 6;
    std::vector<Complex> amps(n);
    for (auto& a : amps) a = RandomComplex(rng, 2.5);
    Eigen::MatrixXcd gram(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) gram(i, j) = Overlap(amps[i], amps[j]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram,
                                                       Eigen::EigenvaluesOnly);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);
  }
}

TEST(InnerTest, CancellingTermsGiveZeroVector) {
  const CoherentSuperposition s(1, {{1.0, {0.8}}, {-1.0, {0.8}}});
  EXPECT_EQ(std::abs(Inner(s, s)), 0.0);
  EXPECT_EQ(Consolidate(s).size(), 0u);
}

TEST(InnerTest, MatchesTruncatedFockInnerProduct) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto a = RandomState(rng, 2);
    const auto b = RandomState(rng, 2);
    const int cut = std::max(AutoCutoff(a), AutoCutoff(b));
    const Complex fock = testing::FockInner(ToFock(a, cut), ToFock(b, cut));
    EXPECT_NEAR(std::abs(fock - Inner(a, b)), 0.0, 1e-10);
  }
}

TEST(ConsolidateTest, MergesDuplicateAmplitudes) {
  const CoherentSuperposition s(1, {{1.0, {0.5}}, {1.0, {0.5}}});
  const CoherentSuperposition c = Consolidate(s);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.terms()[0].coeff, Complex(2.0));
}

TEST(ConsolidateTest, ArithmeticOperatorsConsolidate) {
  const auto a = CoherentSuperposition::Coherent(1.0);
  const auto b = CoherentSuperposition::Coherent(-1.0);
  EXPECT_EQ((a + a).size(), 1u);
  EXPECT_EQ((a - a).size(), 0u);
  EXPECT_EQ((a + b).size(), 2u);
  EXPECT_NEAR((Complex(2.0) * a).NormSquared(), 4.0, 1e-15);
}

TEST(TensorTest, ConcatenatesModes) {
  const auto t = Tensor(CoherentSuperposition::Coherent(0.9),
                        CoherentSuperposition::Coherent(-0.9));
  ASSERT_EQ(t.modes(), 2);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.terms()[0].amps[0], Complex(0.9));
  EXPECT_EQ(t.terms()[0].amps[1], Complex(-0.9));
}

TEST(BeamSplitTest, EqualAmplitudesExitOnePort) {
  const auto out = BeamSplit(CoherentSuperposition::Product({0.8, 0.8}), 0, 1);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(std::abs(out.terms()[0].amps[0] - std::sqrt(2.0) * 0.8), 0.0,
              1e-15);
  EXPECT_EQ(out.terms()[0].amps[1], Complex(0.0));
}

TEST(BeamSplitTest, VacuumIsFixed) {
  const auto out = BeamSplit(CoherentSuperposition::Product({0.0, 0.0}), 0, 1);
  EXPECT_EQ(out.terms()[0].amps[0], Complex(0.0));
  EXPECT_EQ(out.terms()[0].amps[1], Complex(0.0));
}

TEST(BeamSplitTest, AppliedTwiceIsIdentity) {
  const auto in = CoherentSuperposition::Product({{0.3, 0.1}, {-0.7, 0.4}});
  const auto out = BeamSplit(BeamSplit(in, 0, 1), 0, 1);
  EXPECT_NEAR(std::abs(out.terms()[0].amps[0] - Complex(0.3, 0.1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out.terms()[0].amps[1] - Complex(-0.7, 0.4)), 0.0,
              1e-15);
}

TEST(BeamSplitTest, PreservesNormOfRandomStates) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < kRandomCases; ++i) {
    const auto s = RandomState(rng, 3);
    EXPECT_NEAR(BeamSplit(s, 0, 2).NormSquared(), s.NormSquared(), 1e-12);
  }
}

TEST(BeamSplitTest, AgreesWithFockOracleOnPhotonNumber) {
  // Total photon number is conserved by a lossless splitter.
  std::mt19937_64 rng(15);
  for (int i = 0; i < 50; ++i) {
    const auto s = RandomState(rng, 2, 1.0);
    const auto out = BeamSplit(s, 0, 1);
    const int cut = std::max(AutoCutoff(s), AutoCutoff(out));
    const PhotonTable before = PhotonDistribution(s, cut);
    const PhotonTable after = PhotonDistribution(out, cut);
    std::vector<double> total_before(2 * cut, 0.0);
    std::vector<double> total_after(2 * cut, 0.0);
    for (int a = 0; a < cut; ++a) {
      for (int b = 0; b < cut; ++b) {
        total_before[a + b] += before.At(a, b);
        total_after[a + b] += after.At(a, b);
      }
    }
    for (int n = 0; n < cut; ++n) {
      EXPECT_NEAR(total_before[n], total_after[n], 1e-10);
    }
  }
}

TEST(BeamSplitTest, RejectsBadModes) {
  const auto s = CoherentSuperposition::Product({0.1, 0.2});
  EXPECT_THROW(BeamSplit(s, 0, 0), Error);
  EXPECT_THROW(BeamSplit(s, 0, 2), Error);
}

TEST(PhaseShiftTest, PiFlipsAmplitude) {
  const auto out = PhaseShift(CoherentSuperposition::Coherent(1.1), 0,
                              std::numbers::pi);
  EXPECT_NEAR(std::abs(out.terms()[0].amps[0] - Complex(-1.1)), 0.0, 1e-15);
}

TEST(PhaseShiftTest, ZeroAndInverse) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < kRandomCases; ++i) {
    const auto s = RandomState(rng, 2);
    const double phi = RandomComplex(rng, 4.0).real();
    EXPECT_NEAR(std::abs(Inner(PhaseShift(s, 1, 0.0), s) - 1.0), 0.0, 1e-12);
    const auto back = PhaseShift(PhaseShift(s, 1, phi), 1, -phi);
    EXPECT_NEAR(std::abs(Inner(back, s) - 1.0), 0.0, 1e-12);
  }
}

TEST(PartialProjectTest, ProductStateFactorizes) {
  const auto s = CoherentSuperposition::Product({0.5, {0.2, 0.1}, -0.4});
  const int modes[] = {1};
  const auto rest = PartialProject(s, modes, CoherentSuperposition::Coherent(0.3));
  ASSERT_EQ(rest.modes(), 2);
  const Complex w = Overlap(0.3, {0.2, 0.1});
  EXPECT_NEAR(std::abs(rest.terms()[0].coeff - w), 0.0, 1e-15);
  EXPECT_EQ(rest.terms()[0].amps[0], Complex(0.5));
  EXPECT_EQ(rest.terms()[0].amps[1], Complex(-0.4));
}

TEST(PartialProjectTest, RejectsMismatchedProjector) {
  const auto s = CoherentSuperposition::Product({0.5, 0.2});
  const int modes[] = {0, 1};
  EXPECT_THROW(PartialProject(s, modes, CoherentSuperposition::Coherent(0.1)),
               Error);
}

TEST(ToFockTest, VacuumIsBasisVector) {
  const FockVector v = ToFock(CoherentSuperposition::Coherent(0.0), 5);
  EXPECT_EQ(v.amps[0], Complex(1.0));
  for (int n = 1; n < 5; ++n) EXPECT_EQ(v.amps[n], Complex(0.0));
}

TEST(ToFockTest, EvenCatHasNoOddComponents) {
  const double a = std::sqrt(2.0) * 0.9;
  const CoherentSuperposition even(1, {{1.0, {a}}, {1.0, {-a}}});
  const FockVector v = ToFock(even, AutoCutoff(even));
  for (std::size_t n = 1; n < v.amps.size(); n += 2) {
    EXPECT_LT(std::abs(v.amps[n]), 1e-15);
  }
}

TEST(ToFockTest, NormMatchesAnalyticWithinTail) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < kRandomCases; ++i) {
    const auto s = RandomState(rng, 1, 2.0);
    const FockVector v = ToFock(s, AutoCutoff(s));
    EXPECT_NEAR(v.NormSquared(), s.NormSquared(), 1e-12 + v.tail_bound);
  }
}

TEST(ToFockTest, ThrowsWhenCutoffTooSmall) {
  try {
    ToFock(CoherentSuperposition::Coherent(3.0), 4);
    FAIL() << "expected a cutoff error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCutoffInsufficient);
  }
}

TEST(PoissonTailTest, SmallCases) {
  EXPECT_DOUBLE_EQ(PoissonTail(1.0, 0), 1.0);
  EXPECT_NEAR(PoissonTail(1.0, 1), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(PoissonTail(2.0, 3), 1.0 - 5.0 * std::exp(-2.0), 1e-15);
}

TEST(PhotonDistributionTest, VacuumAndCoherentPoisson) {
  const PhotonTable vac =
      PhotonDistribution(CoherentSuperposition::Product({0.0, 0.0}), 4);
  EXPECT_DOUBLE_EQ(vac.At(0, 0), 1.0);
  const auto s = CoherentSuperposition::Coherent(1.3);
  const PhotonTable p = PhotonDistribution(s, AutoCutoff(s));
  double fact = 1.0;
  for (int n = 0; n < 10; ++n) {
    if (n > 0) fact *= n;
    const int counts[] = {n};
    EXPECT_NEAR(p.At(counts),
                std::exp(-1.69) * std::pow(1.69, n) / fact, 1e-14);
  }
}

TEST(PhotonDistributionTest, OddCatHasOnlyOddCounts) {
  const double a = 1.2;
  const CoherentSuperposition odd(1, {{1.0, {a}}, {-1.0, {-a}}});
  const PhotonTable p = PhotonDistribution(odd, AutoCutoff(odd));
  for (int n = 0; n < p.cutoff; n += 2) {
    const int counts[] = {n};
    EXPECT_LT(p.At(counts), 1e-28);
  }
  EXPECT_NEAR(p.Total(), 1.0, 1e-12);
}

TEST(OperatorTest, DyadTraceAndHermiticity) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < kRandomCases; ++i) {
    const auto s = RandomState(rng, 2);
    const CoherentOperator rho = DyadFromPure(s);
    EXPECT_NEAR(std::abs(OperatorTrace(rho) - 1.0), 0.0, 1e-12);
    EXPECT_TRUE(IsHermitian(rho));
  }
}

}  // namespace
}  // namespace ecs
