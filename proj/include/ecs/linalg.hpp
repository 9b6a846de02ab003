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

// Small dense helpers shared by the two-qubit modules. Basis ordering for
// every 4x4 matrix is {++, +-, -+, --} (first factor most significant).

#ifndef ECS_LINALG_HPP_
#define ECS_LINALG_HPP_

#include <Eigen/Dense>
#include <complex>

namespace ecs {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Vector4cd;

// sigma_0 = identity, sigma_1..3 = x, y, z.
const Matrix2c& Pauli(int i);

Matrix4c Kron(const Matrix2c& a, const Matrix2c& b);
Vector4c Kron(const Vector2c& a, const Vector2c& b);

// Transpose on the second tensor factor.
Matrix4c PartialTransposeSecond(const Matrix4c& m);

// Ascending eigenvalues of a Hermitian matrix (lower triangle is read).
Eigen::Vector4d HermitianEigenvalues(const Matrix4c& m);

double HermiticityError(const Matrix4c& m);

}  // namespace ecs

#endif  // ECS_LINALG_HPP_
