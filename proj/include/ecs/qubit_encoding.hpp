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

// Logical qubit encoding of coherent states.
//
// For a real amplitude a = t * alpha the pair |a>, |-a> is orthogonalized
// symmetrically:
//
//   Psi+ = ( cos T |a> - sin T |-a>) / sqrt(N)
//   Psi- = (-sin T |a> + cos T |-a>) / sqrt(N)
//
// with sin 2T = <a|-a> = exp(-2 a^2) and N = cos^2 2T. Inverting,
// |a> = cos T Psi+ + sin T Psi-, |-a> = sin T Psi+ + cos T Psi-.
// All 4x4 matrices use the product ordering {++, +-, -+, --}.

#ifndef ECS_QUBIT_ENCODING_HPP_
#define ECS_QUBIT_ENCODING_HPP_

#include <Eigen/Dense>

#include "ecs/coherent_states.hpp"
#include "ecs/linalg.hpp"

namespace ecs {

// Smallest admissible 1 - exp(-4 t^2 alpha^2).
inline constexpr double kDegeneracyFloor = 1e-12;
// Largest distance from +-a still treated as lying in the logical span.
inline constexpr double kSpanTolerance = 1e-9;

class LogicalBasis {
 public:
  // Throws kInvalidArgument unless alpha > 0 and 0 < t <= 1, and
  // kDegenerateBasis when 1 - exp(-4 t^2 alpha^2) < kDegeneracyFloor.
  static LogicalBasis Make(double alpha, double t = 1.0);

  double alpha() const noexcept { return alpha_; }
  double t() const noexcept { return t_; }
  // Decayed amplitude t * alpha.
  double amplitude() const noexcept { return alpha_ * t_; }
  double theta() const noexcept { return theta_; }
  double sin_2theta() const noexcept { return sin_2theta_; }
  double cos_2theta() const noexcept { return cos_2theta_; }
  // N = cos^2 2T.
  double n_theta() const noexcept { return n_theta_; }
  double cos_theta() const noexcept { return cos_theta_; }
  double sin_theta() const noexcept { return sin_theta_; }

  CoherentSuperposition PsiPlus() const;
  CoherentSuperposition PsiMinus() const;

  // Logical coordinates of |sign * a>; sign must be +1 or -1.
  Eigen::Vector2d KetCoordinates(int sign) const;

  // +1 or -1 when beta lies within kSpanTolerance of +-a, otherwise 0.
  int SpanSign(ComplexAmp beta) const;

 private:
  LogicalBasis() = default;

  double alpha_ = 0.0;
  double t_ = 1.0;
  double theta_ = 0.0;
  double sin_2theta_ = 0.0;
  double cos_2theta_ = 0.0;
  double n_theta_ = 0.0;
  double cos_theta_ = 0.0;
  double sin_theta_ = 0.0;
};

inline LogicalBasis MakeBasis(double alpha, double t = 1.0) {
  return LogicalBasis::Make(alpha, t);
}

struct QubitVector {
  Complex plus;
  Complex minus;

  double NormSquared() const { return std::norm(plus) + std::norm(minus); }
  QubitVector Normalized() const;
  Vector2c AsVector() const { return Vector2c(plus, minus); }
};

// |<a|b>|^2 for unit vectors, i.e. equality up to global phase.
double StateOverlap(const QubitVector& a, const QubitVector& b);

class TwoQubitDensity {
 public:
  // Validates Hermiticity, unit trace and positivity to within `tol`;
  // throws kNumericGuard otherwise.
  static TwoQubitDensity FromMatrix(const Matrix4c& m, double tol = 1e-10);
  static TwoQubitDensity FromPure(const Vector4c& psi);
  static TwoQubitDensity MaximallyMixed();

  const Matrix4c& matrix() const noexcept { return m_; }
  std::complex<double> operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit TwoQubitDensity(const Matrix4c& m) : m_(m) {}
  Matrix4c m_;
};

struct PauliDecomposition {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t_matrix = Eigen::Matrix3d::Zero();

  // 1/4 (1(x)1 + v.sigma(x)1 + 1(x)s.sigma + sum t_nm sigma_n(x)sigma_m).
  Matrix4c Reconstruct() const;
};

// Ideal logical Bell vectors, k = 1..4:
// B1,2 = (++ +/- --)/sqrt2, B3,4 = (+- +/- -+)/sqrt2.
Vector4c BellVector(int k);

// Two-mode coherent form of Bell state k in the given basis.
CoherentSuperposition BellState(int k, const LogicalBasis& basis);

// Expands a logical two-qubit vector into coherent states.
CoherentSuperposition FromLogical(const Vector4c& psi,
                                  const LogicalBasis& first,
                                  const LogicalBasis& second);

// Single-mode coherent state for a logical qubit.
CoherentSuperposition ToCoherent(const QubitVector& q,
                                 const LogicalBasis& basis);

// A|a> + B|-a>  ->  (A cos T + B sin T) Psi+ + (A sin T + B cos T) Psi-,
// renormalized. Throws kInvalidArgument when A = B = 0.
QubitVector FromAmplitudes(Complex a, Complex b, const LogicalBasis& basis);

// Unnormalized logical coordinates of a single-mode state in span{|a>,|-a>}.
// Throws kOutsideSpan for any other amplitude.
QubitVector LogicalCoordinates(const CoherentSuperposition& s,
                               const LogicalBasis& basis);

// Same for a two-mode state; modes are (first, second).
Vector4c LogicalCoordinates(const CoherentSuperposition& s,
                            const LogicalBasis& first,
                            const LogicalBasis& second);

// Raw 4x4 matrix of a two-mode coherent operator in the logical basis.
Matrix4c ProjectToLogical(const CoherentOperator& rho,
                          const LogicalBasis& first,
                          const LogicalBasis& second);

// ProjectToLogical followed by density validation.
TwoQubitDensity ProjectToDensity(const CoherentOperator& rho,
                                 const LogicalBasis& first,
                                 const LogicalBasis& second);

PauliDecomposition PauliDecompose(const TwoQubitDensity& rho);
PauliDecomposition PauliDecompose(const Matrix4c& rho);

// Partial trace; which = 0 keeps the first qubit, 1 the second.
Matrix2c Reduced(const TwoQubitDensity& rho, int which);

}  // namespace ecs

#endif  // ECS_QUBIT_ENCODING_HPP_
