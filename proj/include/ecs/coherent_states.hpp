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

// Exact algebra of multimode superpositions of coherent states.
//
// States are finite weighted sums of product coherent kets. Nothing here is
// truncated: inner products go through the closed-form overlap
// <b|g> = exp(-|b|^2/2 - |g|^2/2 + conj(b) g). The Fock-space conversion at
// the bottom of the file is an oracle for photon counting and carries an
// explicit truncation bound.

#ifndef ECS_COHERENT_STATES_HPP_
#define ECS_COHERENT_STATES_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ecs {

using Complex = std::complex<double>;

// Field amplitude of a single-mode coherent state.
using ComplexAmp = Complex;

inline constexpr double kMergeDistance = 1e-12;
inline constexpr double kRelativeDropThreshold = 1e-15;

struct CoherentTerm {
  Complex coeff;
  std::vector<ComplexAmp> amps;  // one per mode
};

class CoherentSuperposition {
 public:
  // The zero vector on `modes` modes.
  explicit CoherentSuperposition(int modes);
  CoherentSuperposition(int modes, std::vector<CoherentTerm> terms);

  // |beta> on a single mode.
  static CoherentSuperposition Coherent(ComplexAmp beta);
  // coeff * |amps[0]>|amps[1]>...
  static CoherentSuperposition Product(std::vector<ComplexAmp> amps,
                                       Complex coeff = 1.0);

  int modes() const noexcept { return modes_; }
  const std::vector<CoherentTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  // <s|s>, evaluated through the Gram matrix.
  double NormSquared() const;
  // Throws kNumericGuard on a zero-norm state.
  CoherentSuperposition Normalized() const;

  friend CoherentSuperposition operator+(const CoherentSuperposition& a,
                                         const CoherentSuperposition& b);
  friend CoherentSuperposition operator-(const CoherentSuperposition& a,
                                         const CoherentSuperposition& b);
  friend CoherentSuperposition operator*(Complex c,
                                         const CoherentSuperposition& s);

 private:
  int modes_;
  std::vector<CoherentTerm> terms_;
};

// <beta|gamma>.
Complex Overlap(ComplexAmp beta, ComplexAmp gamma);
// log <beta|gamma> taken as the exponent of the closed form (no branch cut).
Complex LogOverlap(ComplexAmp beta, ComplexAmp gamma);

// <a|b>, antilinear in a. Throws kInvalidArgument on a mode-count mismatch.
Complex Inner(const CoherentSuperposition& a, const CoherentSuperposition& b);

// 50:50 beam splitter on modes (i, j):
// (b_i, b_j) -> ((b_i + b_j)/sqrt2, (b_i - b_j)/sqrt2).
CoherentSuperposition BeamSplit(const CoherentSuperposition& s, int i, int j);

// R(phi) on mode i: b_i -> b_i e^{i phi}.
CoherentSuperposition PhaseShift(const CoherentSuperposition& s, int i,
                                 double phi);

// Merges terms whose amplitudes agree on every mode to within
// kMergeDistance and drops terms below kRelativeDropThreshold of the largest
// coefficient. Term order follows first occurrence.
CoherentSuperposition Consolidate(const CoherentSuperposition& s);

// Mode concatenation a (x) b.
CoherentSuperposition Tensor(const CoherentSuperposition& a,
                             const CoherentSuperposition& b);

// (<bra|_{modes} (x) 1) |s>. The result lives on the remaining modes, in their
// original order. `bra` must have modes.size() modes.
CoherentSuperposition PartialProject(const CoherentSuperposition& s,
                                     std::span<const int> modes,
                                     const CoherentSuperposition& bra);

struct DyadTerm {
  Complex coeff;
  std::vector<ComplexAmp> ket_amps;
  std::vector<ComplexAmp> bra_amps;
};

// Weighted sum of multimode dyads |k><b|.
class CoherentOperator {
 public:
  explicit CoherentOperator(int modes);
  CoherentOperator(int modes, std::vector<DyadTerm> terms);

  int modes() const noexcept { return modes_; }
  const std::vector<DyadTerm>& terms() const noexcept { return terms_; }

 private:
  int modes_;
  std::vector<DyadTerm> terms_;
};

// |s><s|.
CoherentOperator DyadFromPure(const CoherentSuperposition& s);

// Tr rho = sum_k c_k <bra_k|ket_k>.
Complex OperatorTrace(const CoherentOperator& rho);

// True when every term (c, k, b) has its conjugate partner (c*, b, k) in the
// operator, term coefficients summed over duplicates.
bool IsHermitian(const CoherentOperator& rho, double tol = 1e-12);

// Fock-space oracle ----------------------------------------------------------

// Tensor of Fock amplitudes, mode 0 most significant. Each mode keeps photon
// numbers 0 .. cutoff-1. `tail_bound` bounds the squared norm lost to
// truncation, relative to <s|s>.
struct FockVector {
  int cutoff = 0;
  int modes = 0;
  std::vector<Complex> amps;
  double tail_bound = 0.0;

  double NormSquared() const;
};

// P(N >= n) for N ~ Poisson(mean).
double PoissonTail(double mean, int n);

// ceil(2m + 10 sqrt(m) + 20) with m the largest per-mode |beta|^2 in s.
int AutoCutoff(const CoherentSuperposition& s);

// Default truncation tolerance applied by ToFock/PhotonDistribution.
inline constexpr double kDefaultTailTolerance = 1e-9;

// <n|beta> = e^{-|beta|^2/2} beta^n / sqrt(n!) for n < cutoff.
std::vector<Complex> FockAmplitudes(ComplexAmp beta, int cutoff);

// Throws kCutoffInsufficient when the tail bound exceeds `tail_tolerance`.
FockVector ToFock(const CoherentSuperposition& s, int cutoff,
                  double tail_tolerance = kDefaultTailTolerance);

// Joint photon-number probabilities of the normalized state.
struct PhotonTable {
  int cutoff = 0;
  int modes = 0;
  std::vector<double> probs;  // same layout as FockVector::amps
  double tail_bound = 0.0;

  double At(std::span<const int> counts) const;
  double At(int n0, int n1) const;
  double Total() const;
};

PhotonTable PhotonDistribution(const CoherentSuperposition& s, int cutoff,
                               double tail_tolerance = kDefaultTailTolerance);

}  // namespace ecs

#endif  // ECS_COHERENT_STATES_HPP_
