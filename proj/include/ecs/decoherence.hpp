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

// Vacuum (amplitude-damping) evolution of coherent dyads and the decohered
// entangled coherent channel.
//
// Under d rho/d tau = gamma a rho a^+ - gamma/2 {a^+ a, rho} a single-mode
// dyad evolves in closed form,
//
//   |b><g|  ->  <g|b>^{1 - t^2} |t b><t g|,   t = exp(-gamma tau / 2),
//
// and each mode of a multimode operator decays independently. Everything is
// parameterized by r = sqrt(1 - t^2).

#ifndef ECS_DECOHERENCE_HPP_
#define ECS_DECOHERENCE_HPP_

#include "ecs/coherent_states.hpp"
#include "ecs/qubit_encoding.hpp"

namespace ecs {

class DecayClock {
 public:
  // r in [0, 1).
  static DecayClock FromR(double r);
  // t in (0, 1].
  static DecayClock FromT(double t);
  // gamma * tau >= 0.
  static DecayClock FromGammaTau(double gamma_tau);

  double t() const noexcept { return t_; }
  double r() const noexcept { return r_; }
  double gamma_tau() const;

 private:
  DecayClock(double t, double r) : t_(t), r_(r) {}
  double t_;
  double r_;
};

struct ChannelCoefficients {
  double a_coef = 0.0;
  double b_coef = 0.0;
  double c_coef = 0.0;
  double d_coef = 0.0;
  double gamma_coef = 1.0;
  // Time-independent normalization 1 - exp(-4 alpha^2).
  double n_theta = 0.0;
};

// A, B, C, D and Gamma of the mixed channel at (alpha, r).
ChannelCoefficients ComputeChannelCoefficients(double alpha, double r);

// Single-mode dyad |beta><gamma| after the decay.
DyadTerm DecohereDyad(ComplexAmp beta, ComplexAmp gamma,
                      const DecayClock& clock);

// Applies the decay to every mode of every dyad.
CoherentOperator Decohere(const CoherentOperator& rho,
                          const DecayClock& clock);

// |B4><B4| prepared at amplitude alpha, both modes decayed to r, expressed
// in the decayed logical basis. r = 1 is excluded (the basis degenerates).
TwoQubitDensity ChannelRho4(double alpha, double r);

// v, s, T of ChannelRho4 from the closed forms.
PauliDecomposition ClosedFormVst(double alpha, double r);

}  // namespace ecs

#endif  // ECS_DECOHERENCE_HPP_
