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

// Protocols built on the coherent encoding: beam-splitter Bell
// discrimination, qubit teleportation over pure and mixed channels,
// entanglement concentration by swapping, and the continuous-variable
// teleportation fidelity.

#ifndef ECS_PROTOCOLS_HPP_
#define ECS_PROTOCOLS_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "ecs/coherent_states.hpp"
#include "ecs/linalg.hpp"
#include "ecs/numeric.hpp"
#include "ecs/qubit_encoding.hpp"

namespace ecs {

// Bell discrimination ---------------------------------------------------------

enum class BellLabel { kB1 = 0, kB2 = 1, kB3 = 2, kB4 = 3, kAmbiguous = 4 };

std::string_view ToString(BellLabel label);
// Bell index 1..4 -> label.
BellLabel LabelForBell(int k);

struct BellOutcome {
  BellLabel label;
  int n_f;
  int n_g;
};

// Detector rule after the beam splitter, checked in this order:
// odd n_f -> B2, odd n_g -> B4, even n_f > 0 -> B1, even n_g > 0 -> B3,
// no click -> Ambiguous.
BellLabel ClassifyCounts(int n_f, int n_g);

struct BellOutcomeProbability {
  BellOutcome outcome;
  double probability;
};

struct BellMeasurement {
  std::vector<BellOutcomeProbability> outcomes;  // nonzero entries only
  double tail_bound = 0.0;
  int cutoff = 0;

  double Mass(BellLabel label) const;
  double Total() const;
};

// Beam splitter on modes (0, 1) = (f, g), then photon counting. cutoff <= 0
// selects AutoCutoff of the beam-split state.
BellMeasurement BellMeasureDistribution(const CoherentSuperposition& state,
                                        int cutoff = 0);

struct MisidResult {
  // Wrong-label rate averaged over the four equiprobable Bell inputs,
  // conditioned on a non-vacuum click.
  double probability = 0.0;
  // Unconditional mass of B1 inputs labelled B3, and the reverse.
  double b1_as_b3 = 0.0;
  double b3_as_b1 = 0.0;
  double tail_bound = 0.0;
  int cutoff = 0;
};

MisidResult MisidProbability(double alpha, int cutoff = 0);

// 1 / (2 (1 + e^{4 alpha^2})).
double MisidClosedForm(double alpha);
// 1 / (1 + e^{2 alpha^2})^2: unconditional B1 -> B3 mass.
double ConfusionMassClosedForm(double alpha);

// Teleportation ---------------------------------------------------------------

// Bob's correction for each outcome: B1 -> i sigma_y, B2 -> sigma_x,
// B3 -> -sigma_z, B4 -> 1. A nonzero frame j additionally applies sigma_j.
Matrix2c CorrectionUnitary(BellLabel label, int frame = 0);

// Bob's conditional states are linear in the input projector, so the
// channel is reduced once to outcome-by-matrix-unit blocks.
class TeleportKernel {
 public:
  explicit TeleportKernel(const TwoQubitDensity& channel, int frame = 0);

  struct Branch {
    double probability;
    Matrix2c bob;  // corrected, normalized
  };
  std::array<Branch, 4> Branches(const QubitVector& input) const;

  // Average over Haar inputs, (2 F_e + 1) / 3 with F_e the entanglement
  // fidelity of the induced qubit channel.
  double AverageFidelity() const;

  int frame() const noexcept { return frame_; }

 private:
  // blocks_[k][2 i + j] = corrected Bob operator for outcome k when the
  // input is |i><j|.
  std::array<std::array<Matrix2c, 4>, 4> blocks_;
  int frame_;
};

struct TeleportRecord {
  QubitVector input;
  BellLabel outcome;
  Matrix2c output;
  double fidelity;
};

// Samples one outcome with a generator seeded from `seed`.
TeleportRecord Teleport(const QubitVector& input,
                        const TwoQubitDensity& channel, std::uint64_t seed,
                        int frame = 0);

double StandardSchemeFidelity(const TwoQubitDensity& channel, int frame = 0);

struct FrameChoice {
  int frame;
  double fidelity;
};
// The correction frame with the largest average fidelity.
FrameChoice BestCorrectionFrame(const TwoQubitDensity& channel);
double AverageFidelity(const TwoQubitDensity& channel);

std::uint64_t SplitMix64(std::uint64_t& state);
// Uniform on [0, 1) from the top 53 bits.
double UniformDouble(std::mt19937_64& rng);
// Uniform on the Bloch sphere.
QubitVector HaarQubit(std::mt19937_64& rng);

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

// Samples are drawn in fixed blocks, each with its own generator derived
// from (seed, block index), and reduced in block order. The result does not
// depend on `threads`.
MonteCarloResult TeleportMonteCarlo(const TwoQubitDensity& channel,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int frame = 0, int threads = 0);

// Finite-alpha correction operators acting on A|alpha> + B|-alpha>,
// renormalized. Throws kOutsideSpan for other states and kInvalidArgument
// for the Ambiguous label.
CoherentSuperposition CorrectionMapCoherent(BellLabel label,
                                            const CoherentSuperposition& state,
                                            double alpha);

// Concentration ---------------------------------------------------------------

struct ConcentrationResult {
  std::array<double, 4> outcome_probs{};
  std::array<Vector4c, 4> resulting_states{};  // normalized, on (b', c)
  double p1 = 0.0;
  double p2 = 0.0;

  double Total() const;
};

// cos(eta)|+-> - sin(eta)|-+>.
Vector4c IdealPartialState(double eta);

// Unnormalized (b', c) state after projecting (b'', b) of
// first(b', b'') (x) second(b, c) onto `bell`.
Vector4c SwapProject(const Vector4c& first, const Vector4c& second,
                     const Vector4c& bell);

// Both pairs in IdealPartialState(eta); 0 < eta < pi/2.
ConcentrationResult ConcentrateIdeal(double eta);

// (cos eta |a,-a> - sin eta |-a,a>), normalized.
CoherentSuperposition PartiallyEntangledState(double alpha, double eta);

struct ExactConcentration {
  double probability = 0.0;
  CoherentSuperposition state{2};  // normalized, modes (b', c)
  double fidelity_to_b2 = 0.0;
};

// Swap of two PartiallyEntangledState pairs in coherent algebra with the B2
// projection on (b'', b).
ExactConcentration ConcentrateExact(double alpha, double eta);

// cos^2 eta sin^2 eta.
double IdealConcentrationProbability(double eta);
// cos^4 2T sin^2 2eta / (4 (1 - sin^2 2T sin 2eta)), as published.
double PublishedConcentrationProbability(double alpha, double eta);
// cos^4 2T sin^2 2eta / (4 (1 - sin^2 2T sin 2eta)^2).
double ConcentrationProbability(double alpha, double eta);

// Continuous-variable teleportation -----------------------------------------

// (1 + e^{-2 x^2}) / (2 (1 + e^{-4 x^2})).
double CvFidelity(double alpha_r);
// Golden-section maximum on [0, 5].
Extremum CvMax();

}  // namespace ecs

#endif  // ECS_PROTOCOLS_HPP_
