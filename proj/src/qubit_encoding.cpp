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

#include "ecs/qubit_encoding.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ecs/error.hpp"

namespace ecs {

LogicalBasis LogicalBasis::Make(double alpha, double t) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  if (!(t > 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "t must lie in (0, 1]");
  }
  const double a = alpha * t;
  const double n = -std::expm1(-4.0 * a * a);
  if (!(n >= kDegeneracyFloor)) {
    throw Error(ErrorCode::kDegenerateBasis,
                "logical basis degenerate at t*alpha = " + std::to_string(a));
  }
  LogicalBasis b;
  b.alpha_ = alpha;
  b.t_ = t;
  b.sin_2theta_ = std::exp(-2.0 * a * a);
  b.n_theta_ = n;
  b.cos_2theta_ = std::sqrt(n);
  b.theta_ = 0.5 * std::atan2(b.sin_2theta_, b.cos_2theta_);
  // Half-angle forms stay accurate as T -> pi/4.
  b.cos_theta_ = std::sqrt(0.5 * (1.0 + b.cos_2theta_));
  b.sin_theta_ = std::sqrt(0.5 * (1.0 - b.cos_2theta_));
  return b;
}

CoherentSuperposition LogicalBasis::PsiPlus() const {
  const double k = 1.0 / cos_2theta_;
  return CoherentSuperposition(
      1, {{cos_theta_ * k, {amplitude()}}, {-sin_theta_ * k, {-amplitude()}}});
}

CoherentSuperposition LogicalBasis::PsiMinus() const {
  const double k = 1.0 / cos_2theta_;
  return CoherentSuperposition(
      1, {{-sin_theta_ * k, {amplitude()}}, {cos_theta_ * k, {-amplitude()}}});
}

Eigen::Vector2d LogicalBasis::KetCoordinates(int sign) const {
  if (sign == 1) return {cos_theta_, sin_theta_};
  if (sign == -1) return {sin_theta_, cos_theta_};
  throw Error(ErrorCode::kInvalidArgument, "sign must be +1 or -1");
}

int LogicalBasis::SpanSign(ComplexAmp beta) const {
  const double a = amplitude();
  if (std::abs(beta - a) <= kSpanTolerance) return 1;
  if (std::abs(beta + a) <= kSpanTolerance) return -1;
  return 0;
}

QubitVector QubitVector::Normalized() const {
  const double n = std::sqrt(NormSquared());
  if (!(n > 0.0)) {
    throw Error(ErrorCode::kNumericGuard, "cannot normalize a zero qubit");
  }
  return {plus / n, minus / n};
}

double StateOverlap(const QubitVector& a, const QubitVector& b) {
  return std::norm(std::conj(a.plus) * b.plus + std::conj(a.minus) * b.minus);
}

TwoQubitDensity TwoQubitDensity::FromMatrix(const Matrix4c& m, double tol) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::kNumericGuard, "density has non-finite entries");
  }
  if (HermiticityError(m) > tol) {
    throw Error(ErrorCode::kNumericGuard, "density is not Hermitian");
  }
  const Matrix4c h = 0.5 * (m + m.adjoint());
  if (std::abs(h.trace() - 1.0) > tol) {
    throw Error(ErrorCode::kNumericGuard, "density trace is not 1");
  }
  if (HermitianEigenvalues(h)(0) < -tol) {
    throw Error(ErrorCode::kNumericGuard, "density is not positive");
  }
  return TwoQubitDensity(h);
}

TwoQubitDensity TwoQubitDensity::FromPure(const Vector4c& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) {
    throw Error(ErrorCode::kNumericGuard, "zero pure state");
  }
  return FromMatrix(psi * psi.adjoint() / n2);
}

TwoQubitDensity TwoQubitDensity::MaximallyMixed() {
  return TwoQubitDensity(Matrix4c::Identity() / 4.0);
}

Matrix4c PauliDecomposition::Reconstruct() const {
  Matrix4c m = Kron(Pauli(0), Pauli(0));
  for (int i = 0; i < 3; ++i) {
    m += v(i) * Kron(Pauli(i + 1), Pauli(0));
    m += s(i) * Kron(Pauli(0), Pauli(i + 1));
    for (int j = 0; j < 3; ++j) {
      m += t_matrix(i, j) * Kron(Pauli(i + 1), Pauli(j + 1));
    }
  }
  return m / 4.0;
}

Vector4c BellVector(int k) {
  const double h = 1.0 / std::numbers::sqrt2;
  Vector4c b = Vector4c::Zero();
  switch (k) {
    case 1: b << h, 0, 0, h; break;
    case 2: b << h, 0, 0, -h; break;
    case 3: b << 0, h, h, 0; break;
    case 4: b << 0, h, -h, 0; break;
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "Bell index must be 1..4, got " + std::to_string(k));
  }
  return b;
}

CoherentSuperposition FromLogical(const Vector4c& psi,
                                  const LogicalBasis& first,
                                  const LogicalBasis& second) {
  const CoherentSuperposition f[2] = {first.PsiPlus(), first.PsiMinus()};
  const CoherentSuperposition g[2] = {second.PsiPlus(), second.PsiMinus()};
  CoherentSuperposition out(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Complex c = psi(2 * i + j);
      if (c == 0.0) continue;
      out = out + c * Tensor(f[i], g[j]);
    }
  }
  return out;
}

CoherentSuperposition BellState(int k, const LogicalBasis& basis) {
  return FromLogical(BellVector(k), basis, basis);
}

CoherentSuperposition ToCoherent(const QubitVector& q,
                                 const LogicalBasis& basis) {
  return q.plus * basis.PsiPlus() + q.minus * basis.PsiMinus();
}

QubitVector FromAmplitudes(Complex a, Complex b, const LogicalBasis& basis) {
  if (a == 0.0 && b == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "amplitudes are both zero");
  }
  const double c = basis.cos_theta();
  const double s = basis.sin_theta();
  // The inversion prefactor sqrt(N)/cos 2T is identically 1.
  return QubitVector{a * c + b * s, a * s + b * c}.Normalized();
}

QubitVector LogicalCoordinates(const CoherentSuperposition& s,
                               const LogicalBasis& basis) {
  if (s.modes() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "expected a single-mode state");
  }
  Vector2c acc = Vector2c::Zero();
  for (const auto& t : s.terms()) {
    const int sign = basis.SpanSign(t.amps[0]);
    if (sign == 0) {
      throw Error(ErrorCode::kOutsideSpan,
                  "amplitude outside the logical span");
    }
    acc += t.coeff * basis.KetCoordinates(sign).cast<Complex>();
  }
  return {acc(0), acc(1)};
}

Vector4c LogicalCoordinates(const CoherentSuperposition& s,
                            const LogicalBasis& first,
                            const LogicalBasis& second) {
  if (s.modes() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "expected a two-mode state");
  }
  Vector4c acc = Vector4c::Zero();
  for (const auto& t : s.terms()) {
    const int s0 = first.SpanSign(t.amps[0]);
    const int s1 = second.SpanSign(t.amps[1]);
    if (s0 == 0 || s1 == 0) {
      throw Error(ErrorCode::kOutsideSpan,
                  "amplitude outside the logical span");
    }
    acc += t.coeff * Kron(Vector2c(first.KetCoordinates(s0).cast<Complex>()),
                          Vector2c(second.KetCoordinates(s1).cast<Complex>()));
  }
  return acc;
}

Matrix4c ProjectToLogical(const CoherentOperator& rho,
                          const LogicalBasis& first,
                          const LogicalBasis& second) {
  if (rho.modes() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "expected a two-mode operator");
  }
  auto coords = [&](const std::vector<ComplexAmp>& amps) {
    const int s0 = first.SpanSign(amps[0]);
    const int s1 = second.SpanSign(amps[1]);
    if (s0 == 0 || s1 == 0) {
      throw Error(ErrorCode::kOutsideSpan,
                  "dyad amplitude outside the logical span");
    }
    return Kron(Vector2c(first.KetCoordinates(s0).cast<Complex>()),
                Vector2c(second.KetCoordinates(s1).cast<Complex>()));
  };
  Matrix4c m = Matrix4c::Zero();
  for (const auto& t : rho.terms()) {
    m += t.coeff * coords(t.ket_amps) * coords(t.bra_amps).adjoint();
  }
  return m;
}

TwoQubitDensity ProjectToDensity(const CoherentOperator& rho,
                                 const LogicalBasis& first,
                                 const LogicalBasis& second) {
  return TwoQubitDensity::FromMatrix(ProjectToLogical(rho, first, second));
}

PauliDecomposition PauliDecompose(const Matrix4c& rho) {
  PauliDecomposition d;
  for (int i = 0; i < 3; ++i) {
    d.v(i) = (rho * Kron(Pauli(i + 1), Pauli(0))).trace().real();
    d.s(i) = (rho * Kron(Pauli(0), Pauli(i + 1))).trace().real();
    for (int j = 0; j < 3; ++j) {
      d.t_matrix(i, j) =
          (rho * Kron(Pauli(i + 1), Pauli(j + 1))).trace().real();
    }
  }
  return d;
}

PauliDecomposition PauliDecompose(const TwoQubitDensity& rho) {
  return PauliDecompose(rho.matrix());
}

Matrix2c Reduced(const TwoQubitDensity& rho, int which) {
  const Matrix4c& m = rho.matrix();
  Matrix2c r = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        if (which == 0) {
          r(i, j) += m(2 * i + k, 2 * j + k);
        } else if (which == 1) {
          r(i, j) += m(2 * k + i, 2 * k + j);
        } else {
          throw Error(ErrorCode::kInvalidArgument, "which must be 0 or 1");
        }
      }
    }
  }
  return r;
}

}  // namespace ecs
