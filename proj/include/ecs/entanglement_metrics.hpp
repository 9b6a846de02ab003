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

// Entanglement, teleportation and mixedness functionals on two-qubit
// densities, each paired with the closed form it has for the decohered
// channel.

#ifndef ECS_ENTANGLEMENT_METRICS_HPP_
#define ECS_ENTANGLEMENT_METRICS_HPP_

#include <Eigen/Dense>

#include "ecs/qubit_encoding.hpp"

namespace ecs {

// Eigenvalues closer than this to zero are treated as zero.
inline constexpr double kEigenClamp = 1e-12;
inline constexpr double kClassicalFidelity = 2.0 / 3.0;

struct MetricReport {
  double e_measure = 0.0;
  double singlet_fraction = 0.0;
  double optimal_fidelity = 0.0;
  double linear_entropy = 0.0;
  double vn_entropy = 0.0;
};

// -2 * (sum of negative eigenvalues of the partial transpose).
double NegativityE(const TwoQubitDensity& rho);
double MinPartialTransposeEigenvalue(const TwoQubitDensity& rho);

double ClosedFormE(double alpha, double r);

// max over O in SO(3) of Tr(M O): s1 + s2 + s3 if det M >= 0, otherwise
// s1 + s2 - s3 (singular values descending).
double MaxRotationTrace(const Eigen::Matrix3d& m);
// Same maximum restricted to the 24 signed permutation matrices with
// determinant +1.
double MaxRotationTraceSignedPermutations(const Eigen::Matrix3d& m);

// 1/2 (1 - Tr(T O) / 3).
double RotatedSchemeFidelity(const Eigen::Matrix3d& t_matrix,
                             const Eigen::Matrix3d& rotation);

// F = (1 + max_O Tr(-T O)) / 4.
double SingletFraction(const TwoQubitDensity& rho);

// (F N + 1) / (N + 1) for a channel on C^N (x) C^N.
double FidelityFromSingletFraction(double singlet_fraction, int dim = 2);

double OptimalFidelity(const TwoQubitDensity& rho);
double ClosedFormF(double alpha, double r);

// 1 - Tr rho^2.
double LinearEntropy(const TwoQubitDensity& rho);
double ClosedFormS(double alpha, double r);
// -sum lambda log2 lambda.
double VonNeumannEntropy(const TwoQubitDensity& rho);

MetricReport Evaluate(const TwoQubitDensity& rho);

// Root of ClosedFormF(alpha, r) = 2/3 on (0, 1), by bisection.
double CharacteristicTime(double alpha);

// argmax over r of ClosedFormS(alpha, r).
double MixednessPeak(double alpha);

// argmax over r of VonNeumannEntropy(ChannelRho4(alpha, r)), numerically.
double VonNeumannPeak(double alpha);

}  // namespace ecs

#endif  // ECS_ENTANGLEMENT_METRICS_HPP_
