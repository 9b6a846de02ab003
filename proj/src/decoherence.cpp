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

#include "ecs/decoherence.hpp"

#include <cmath>
#include <string>

#include "ecs/error.hpp"

namespace ecs {
namespace {

void CheckR(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "r must lie in [0, 1), got " + std::to_string(r));
  }
}

}  // namespace

DecayClock DecayClock::FromR(double r) {
  CheckR(r);
  return DecayClock(std::sqrt((1.0 - r) * (1.0 + r)), r);
}

DecayClock DecayClock::FromT(double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "t must lie in (0, 1]");
  }
  return DecayClock(t, std::sqrt((1.0 - t) * (1.0 + t)));
}

DecayClock DecayClock::FromGammaTau(double gamma_tau) {
  if (!(gamma_tau >= 0.0) || !std::isfinite(gamma_tau)) {
    throw Error(ErrorCode::kInvalidArgument, "gamma*tau must be >= 0");
  }
  const double t = std::exp(-0.5 * gamma_tau);
  return DecayClock(t, std::sqrt(-std::expm1(-gamma_tau)));
}

double DecayClock::gamma_tau() const { return -2.0 * std::log(t_); }

ChannelCoefficients ComputeChannelCoefficients(double alpha, double r) {
  CheckR(r);
  const DecayClock clock = DecayClock::FromR(r);
  const LogicalBasis initial = LogicalBasis::Make(alpha, 1.0);
  const double a2 = alpha * alpha;
  const double t2 = clock.t() * clock.t();
  const double e4 = std::exp(-4.0 * t2 * a2);
  const double e2 = std::exp(-2.0 * t2 * a2);

  ChannelCoefficients k;
  k.gamma_coef = std::exp(-4.0 * r * r * a2);
  k.a_coef = (1.0 - k.gamma_coef) * e4;
  k.b_coef = (1.0 - k.gamma_coef) * e2;
  k.c_coef = 2.0 - (1.0 + k.gamma_coef) * e4;
  k.d_coef = -2.0 * k.gamma_coef + (1.0 + k.gamma_coef) * e4;
  k.n_theta = initial.n_theta();
  return k;
}

DyadTerm DecohereDyad(ComplexAmp beta, ComplexAmp gamma,
                      const DecayClock& clock) {
  const double t = clock.t();
  // <gamma|beta>^{1-t^2}, taken through the overlap exponent.
  const Complex coeff = std::exp((1.0 - t * t) * LogOverlap(gamma, beta));
  return DyadTerm{coeff, {beta * t}, {gamma * t}};
}

CoherentOperator Decohere(const CoherentOperator& rho,
                          const DecayClock& clock) {
  std::vector<DyadTerm> terms;
  terms.reserve(rho.terms().size());
  for (const auto& d : rho.terms()) {
    DyadTerm out{d.coeff, {}, {}};
    for (int m = 0; m < rho.modes(); ++m) {
      const DyadTerm one = DecohereDyad(d.ket_amps[m], d.bra_amps[m], clock);
      out.coeff *= one.coeff;
      out.ket_amps.push_back(one.ket_amps[0]);
      out.bra_amps.push_back(one.bra_amps[0]);
    }
    terms.push_back(std::move(out));
  }
  return CoherentOperator(rho.modes(), std::move(terms));
}

TwoQubitDensity ChannelRho4(double alpha, double r) {
  const DecayClock clock = DecayClock::FromR(r);
  const LogicalBasis initial = LogicalBasis::Make(alpha, 1.0);
  const LogicalBasis decayed = LogicalBasis::Make(alpha, clock.t());
  const CoherentOperator rho =
      Decohere(DyadFromPure(BellState(4, initial)), clock);
  return ProjectToDensity(rho, decayed, decayed);
}

PauliDecomposition ClosedFormVst(double alpha, double r) {
  // Guards the decayed basis as well as the initial one.
  LogicalBasis::Make(alpha, DecayClock::FromR(r).t());
  const ChannelCoefficients k = ComputeChannelCoefficients(alpha, r);
  PauliDecomposition d;
  d.v << k.b_coef / k.n_theta, 0.0, 0.0;
  d.s = d.v;
  d.t_matrix.diagonal() << k.a_coef + k.d_coef, -k.a_coef + k.d_coef,
      k.a_coef - k.c_coef;
  d.t_matrix /= 2.0 * k.n_theta;
  return d;
}

}  // namespace ecs
