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

#include "ecs/entanglement_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ecs/decoherence.hpp"
#include "ecs/error.hpp"
#include "ecs/numeric.hpp"

namespace ecs {
namespace {

double Clamp(double lambda) {
  return std::abs(lambda) < kEigenClamp ? 0.0 : lambda;
}

}  // namespace

double MinPartialTransposeEigenvalue(const TwoQubitDensity& rho) {
  return HermitianEigenvalues(PartialTransposeSecond(rho.matrix()))(0);
}

double NegativityE(const TwoQubitDensity& rho) {
  const Eigen::Vector4d ev =
      HermitianEigenvalues(PartialTransposeSecond(rho.matrix()));
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += std::min(0.0, Clamp(ev(i)));
  return std::clamp(-2.0 * sum, 0.0, 1.0);
}

double ClosedFormE(double alpha, double r) {
  LogicalBasis::Make(alpha, DecayClock::FromR(r).t());
  const ChannelCoefficients k = ComputeChannelCoefficients(alpha, r);
  const double cd = k.c_coef - k.d_coef;
  return (std::sqrt(16.0 * k.b_coef * k.b_coef + cd * cd) -
          (2.0 * k.a_coef + k.c_coef + k.d_coef)) /
         (4.0 * k.n_theta);
}

double MaxRotationTrace(const Eigen::Matrix3d& m) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m);
  const Eigen::Vector3d sv = svd.singularValues();
  return m.determinant() >= 0.0 ? sv(0) + sv(1) + sv(2)
                                : sv(0) + sv(1) - sv(2);
}

double MaxRotationTraceSignedPermutations(const Eigen::Matrix3d& m) {
  std::array<int, 3> perm = {0, 1, 2};
  double best = -std::numeric_limits<double>::infinity();
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Eigen::Matrix3d o = Eigen::Matrix3d::Zero();
      for (int i = 0; i < 3; ++i) {
        o(i, perm[i]) = (signs >> i) & 1 ? -1.0 : 1.0;
      }
      if (o.determinant() < 0.0) continue;
      best = std::max(best, (m * o).trace());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double RotatedSchemeFidelity(const Eigen::Matrix3d& t_matrix,
                             const Eigen::Matrix3d& rotation) {
  return 0.5 * (1.0 - (t_matrix * rotation).trace() / 3.0);
}

double SingletFraction(const TwoQubitDensity& rho) {
  const PauliDecomposition d = PauliDecompose(rho);
  const double f = (1.0 + MaxRotationTrace(-d.t_matrix)) / 4.0;
  return std::clamp(f, 0.0, 1.0);
}

double FidelityFromSingletFraction(double singlet_fraction, int dim) {
  if (dim < 2) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 2");
  }
  return (singlet_fraction * dim + 1.0) / (dim + 1.0);
}

double OptimalFidelity(const TwoQubitDensity& rho) {
  return FidelityFromSingletFraction(SingletFraction(rho), 2);
}

double ClosedFormF(double alpha, double r) {
  const DecayClock clock = DecayClock::FromR(r);
  LogicalBasis::Make(alpha, clock.t());
  // Both branches divided through by e^{4 alpha^2}.
  const double x = 4.0 * alpha * alpha;
  const double n = -std::expm1(-x);
  const double r2 = r * r;
  const double t2 = clock.t() * clock.t();
  const double first = 1.0 + (-std::expm1(-x * r2)) / n;
  const double second =
      (std::exp(-x * r2) - std::exp(-x * t2) + 2.0 * n) / n;
  return std::max(first, second) / 3.0;
}

double LinearEntropy(const TwoQubitDensity& rho) {
  return 1.0 - (rho.matrix() * rho.matrix()).trace().real();
}

double ClosedFormS(double alpha, double r) {
  const DecayClock clock = DecayClock::FromR(r);
  LogicalBasis::Make(alpha, clock.t());
  const double x = 4.0 * alpha * alpha;
  const double den = std::expm1(x);
  return std::expm1(2.0 * x * r * r) *
         std::expm1(2.0 * x * clock.t() * clock.t()) / (2.0 * den * den);
}

double VonNeumannEntropy(const TwoQubitDensity& rho) {
  const Eigen::Vector4d ev = HermitianEigenvalues(rho.matrix());
  double h = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double l = Clamp(ev(i));
    if (l > 0.0) h -= l * std::log2(l);
  }
  return h;
}

MetricReport Evaluate(const TwoQubitDensity& rho) {
  MetricReport m;
  m.e_measure = NegativityE(rho);
  m.singlet_fraction = SingletFraction(rho);
  m.optimal_fidelity = FidelityFromSingletFraction(m.singlet_fraction, 2);
  m.linear_entropy = LinearEntropy(rho);
  m.vn_entropy = VonNeumannEntropy(rho);
  return m;
}

double CharacteristicTime(double alpha) {
  LogicalBasis::Make(alpha, 1.0);
  return Bisect(
      [alpha](double r) { return ClosedFormF(alpha, r) - kClassicalFidelity; },
      0.0, 0.99, 1e-13);
}

double MixednessPeak(double alpha) {
  LogicalBasis::Make(alpha, 1.0);
  const double x = 4.0 * alpha * alpha;
  // log S up to constants; the e^{2x} factors are dropped so the peak is not
  // swamped by rounding when alpha is large.
  auto log_s = [x](double r) {
    const double r2 = r * r;
    return std::log1p(-std::exp(-2.0 * x * r2)) +
           std::log1p(-std::exp(-2.0 * x * (1.0 - r2)));
  };
  return GoldenSectionMaximize(log_s, 1e-6, 1.0 - 1e-6, 1e-12).x;
}

double VonNeumannPeak(double alpha) {
  LogicalBasis::Make(alpha, 1.0);
  // The maximum is too flat for a comparison search when the entropy is
  // small, so bisect on the sign of a central difference instead.
  constexpr double h = 1e-4;
  auto slope = [alpha](double r) {
    return VonNeumannEntropy(ChannelRho4(alpha, r + h)) -
           VonNeumannEntropy(ChannelRho4(alpha, r - h));
  };
  return Bisect(slope, 0.05, 0.99, 1e-12);
}

}  // namespace ecs
