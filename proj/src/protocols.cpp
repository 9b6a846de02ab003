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

#include "ecs/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "ecs/error.hpp"

namespace ecs {
namespace {

constexpr std::uint64_t kBlockSize = 4096;

void CheckEta(double eta) {
  if (!(eta > 0.0 && eta < std::numbers::pi / 2.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eta must lie in (0, pi/2)");
  }
}

void CheckFrame(int frame) {
  if (frame < 0 || frame > 3) {
    throw Error(ErrorCode::kInvalidArgument, "frame must be 0..3");
  }
}

struct BlockStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

// Chan et al. pairwise combination of running moments.
void Merge(BlockStats& into, const BlockStats& b) {
  if (b.n == 0) return;
  const double n = static_cast<double>(into.n + b.n);
  const double delta = b.mean - into.mean;
  into.mean += delta * static_cast<double>(b.n) / n;
  into.m2 += b.m2 + delta * delta * static_cast<double>(into.n) *
                        static_cast<double>(b.n) / n;
  into.n += b.n;
}

int SampleOutcome(const std::array<TeleportKernel::Branch, 4>& branches,
                  double u) {
  double acc = 0.0;
  int last = -1;
  for (int k = 0; k < 4; ++k) {
    if (branches[k].probability <= 0.0) continue;
    last = k;
    acc += branches[k].probability;
    if (u < acc) return k;
  }
  if (last < 0) {
    throw Error(ErrorCode::kNumericGuard, "all teleportation branches vanish");
  }
  return last;
}

double BranchFidelity(const QubitVector& input, const Matrix2c& bob) {
  const Vector2c v = input.AsVector();
  return (v.adjoint() * bob * v)(0, 0).real();
}

}  // namespace

std::string_view ToString(BellLabel label) {
  switch (label) {
    case BellLabel::kB1: return "B1";
    case BellLabel::kB2: return "B2";
    case BellLabel::kB3: return "B3";
    case BellLabel::kB4: return "B4";
    case BellLabel::kAmbiguous: return "Ambiguous";
  }
  return "?";
}

BellLabel LabelForBell(int k) {
  if (k < 1 || k > 4) {
    throw Error(ErrorCode::kInvalidArgument, "Bell index must be 1..4");
  }
  return static_cast<BellLabel>(k - 1);
}

BellLabel ClassifyCounts(int n_f, int n_g) {
  if (n_f % 2 == 1) return BellLabel::kB2;
  if (n_g % 2 == 1) return BellLabel::kB4;
  if (n_f > 0) return BellLabel::kB1;
  if (n_g > 0) return BellLabel::kB3;
  return BellLabel::kAmbiguous;
}

double BellMeasurement::Mass(BellLabel label) const {
  double sum = 0.0;
  for (const auto& o : outcomes) {
    if (o.outcome.label == label) sum += o.probability;
  }
  return sum;
}

double BellMeasurement::Total() const {
  double sum = 0.0;
  for (const auto& o : outcomes) sum += o.probability;
  return sum;
}

BellMeasurement BellMeasureDistribution(const CoherentSuperposition& state,
                                        int cutoff) {
  if (state.modes() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "Bell measurement needs a two-mode state");
  }
  const CoherentSuperposition split = BeamSplit(state, 0, 1);
  const int n_cut = cutoff > 0 ? cutoff : AutoCutoff(split);
  const PhotonTable table = PhotonDistribution(split, n_cut);

  BellMeasurement out;
  out.cutoff = n_cut;
  out.tail_bound = table.tail_bound;
  for (int nf = 0; nf < n_cut; ++nf) {
    for (int ng = 0; ng < n_cut; ++ng) {
      const double p = table.At(nf, ng);
      if (p == 0.0) continue;
      out.outcomes.push_back({{ClassifyCounts(nf, ng), nf, ng}, p});
    }
  }
  return out;
}

MisidResult MisidProbability(double alpha, int cutoff) {
  const LogicalBasis basis = LogicalBasis::Make(alpha, 1.0);
  MisidResult r;
  double wrong_sum = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const BellMeasurement m = BellMeasureDistribution(BellState(k, basis), cutoff);
    double decisive = 0.0;
    for (int j = 1; j <= 4; ++j) decisive += m.Mass(LabelForBell(j));
    if (!(decisive > 0.0)) {
      throw Error(ErrorCode::kNumericGuard, "no decisive detection mass");
    }
    wrong_sum += (decisive - m.Mass(LabelForBell(k))) / decisive;
    r.tail_bound = std::max(r.tail_bound, m.tail_bound);
    r.cutoff = std::max(r.cutoff, m.cutoff);
    if (k == 1) r.b1_as_b3 = m.Mass(BellLabel::kB3);
    if (k == 3) r.b3_as_b1 = m.Mass(BellLabel::kB1);
  }
  r.probability = wrong_sum / 4.0;
  return r;
}

double MisidClosedForm(double alpha) {
  // e^{-4a^2} / (2 (1 + e^{-4a^2})) avoids overflow for large alpha.
  const double e = std::exp(-4.0 * alpha * alpha);
  return e / (2.0 * (1.0 + e));
}

double ConfusionMassClosedForm(double alpha) {
  const double e = std::exp(-2.0 * alpha * alpha);
  return e * e / ((1.0 + e) * (1.0 + e));
}

Matrix2c CorrectionUnitary(BellLabel label, int frame) {
  CheckFrame(frame);
  const std::complex<double> j(0.0, 1.0);
  Matrix2c u;
  switch (label) {
    case BellLabel::kB1: u = j * Pauli(2); break;
    case BellLabel::kB2: u = Pauli(1); break;
    case BellLabel::kB3: u = -Pauli(3); break;
    case BellLabel::kB4: u = Pauli(0); break;
    case BellLabel::kAmbiguous:
      throw Error(ErrorCode::kInvalidArgument,
                  "no correction for an ambiguous outcome");
  }
  return Pauli(frame) * u;
}

TeleportKernel::TeleportKernel(const TwoQubitDensity& channel, int frame)
    : frame_(frame) {
  CheckFrame(frame);
  const Matrix4c& rho = channel.matrix();
  for (int k = 0; k < 4; ++k) {
    const Vector4c bell = BellVector(k + 1);
    const Matrix2c u = CorrectionUnitary(static_cast<BellLabel>(k), frame);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        // Bob(c, c') = sum_{b, b'} conj(B(i, b)) B(j, b') rho[(b c), (b' c')].
        Matrix2c bob = Matrix2c::Zero();
        for (int c = 0; c < 2; ++c) {
          for (int cp = 0; cp < 2; ++cp) {
            for (int b = 0; b < 2; ++b) {
              for (int bp = 0; bp < 2; ++bp) {
                bob(c, cp) += std::conj(bell(2 * i + b)) * bell(2 * j + bp) *
                              rho(2 * b + c, 2 * bp + cp);
              }
            }
          }
        }
        blocks_[k][2 * i + j] = u * bob * u.adjoint();
      }
    }
  }
}

std::array<TeleportKernel::Branch, 4> TeleportKernel::Branches(
    const QubitVector& input) const {
  const Vector2c psi = input.AsVector();
  std::array<Branch, 4> out;
  for (int k = 0; k < 4; ++k) {
    Matrix2c bob = Matrix2c::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        bob += psi(i) * std::conj(psi(j)) * blocks_[k][2 * i + j];
      }
    }
    const double p = bob.trace().real();
    out[k].probability = std::max(0.0, p);
    out[k].bob = p > 0.0 ? Matrix2c(bob / p) : Matrix2c(Matrix2c::Zero());
  }
  return out;
}

double TeleportKernel::AverageFidelity() const {
  std::complex<double> fe = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 4; ++k) fe += blocks_[k][2 * i + j](i, j);
    }
  }
  return (2.0 * fe.real() / 4.0 + 1.0) / 3.0;
}

TeleportRecord Teleport(const QubitVector& input,
                        const TwoQubitDensity& channel, std::uint64_t seed,
                        int frame) {
  const QubitVector psi = input.Normalized();
  const TeleportKernel kernel(channel, frame);
  const auto branches = kernel.Branches(psi);
  std::mt19937_64 rng(seed);
  const int k = SampleOutcome(branches, UniformDouble(rng));
  return {psi, static_cast<BellLabel>(k), branches[k].bob,
          BranchFidelity(psi, branches[k].bob)};
}

double StandardSchemeFidelity(const TwoQubitDensity& channel, int frame) {
  return TeleportKernel(channel, frame).AverageFidelity();
}

FrameChoice BestCorrectionFrame(const TwoQubitDensity& channel) {
  FrameChoice best{0, StandardSchemeFidelity(channel, 0)};
  for (int frame = 1; frame < 4; ++frame) {
    const double f = StandardSchemeFidelity(channel, frame);
    if (f > best.fidelity) best = {frame, f};
  }
  return best;
}

double AverageFidelity(const TwoQubitDensity& channel) {
  return BestCorrectionFrame(channel).fidelity;
}

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double UniformDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

QubitVector HaarQubit(std::mt19937_64& rng) {
  const double z = 2.0 * UniformDouble(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * UniformDouble(rng);
  return {std::sqrt(0.5 * (1.0 + z)),
          std::polar(std::sqrt(0.5 * (1.0 - z)), phi)};
}

MonteCarloResult TeleportMonteCarlo(const TwoQubitDensity& channel,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int frame, int threads) {
  if (samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  }
  const TeleportKernel kernel(channel, frame);
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockStats> stats(blocks);

  auto run_block = [&](std::uint64_t b) {
    std::uint64_t sm = seed ^ (0xd1b54a32d192ed03ULL * (b + 1));
    std::mt19937_64 rng(SplitMix64(sm));
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(samples, begin + kBlockSize);
    BlockStats s;
    for (std::uint64_t i = begin; i < end; ++i) {
      const QubitVector psi = HaarQubit(rng);
      const auto branches = kernel.Branches(psi);
      const int k = SampleOutcome(branches, UniformDouble(rng));
      const double f = BranchFidelity(psi, branches[k].bob);
      ++s.n;
      const double delta = f - s.mean;
      s.mean += delta / static_cast<double>(s.n);
      s.m2 += delta * (f - s.mean);
    }
    stats[b] = s;
  };

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, blocks));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  BlockStats total;
  for (const auto& s : stats) Merge(total, s);
  MonteCarloResult r;
  r.samples = total.n;
  r.mean = total.mean;
  r.std_error =
      total.n > 1 ? std::sqrt(total.m2 / static_cast<double>(total.n - 1) /
                              static_cast<double>(total.n))
                  : 0.0;
  return r;
}

CoherentSuperposition CorrectionMapCoherent(BellLabel label,
                                            const CoherentSuperposition& state,
                                            double alpha) {
  const LogicalBasis basis = LogicalBasis::Make(alpha, 1.0);
  if (state.modes() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "expected a single-mode state");
  }
  Complex a = 0.0;
  Complex b = 0.0;
  for (const auto& t : state.terms()) {
    const int sign = basis.SpanSign(t.amps[0]);
    if (sign == 0) {
      throw Error(ErrorCode::kOutsideSpan,
                  "state is outside span{|alpha>, |-alpha>}");
    }
    (sign > 0 ? a : b) += t.coeff;
  }
  const double s = basis.sin_2theta();
  const double n = basis.n_theta();
  Complex na;
  Complex nb;
  switch (label) {
    case BellLabel::kB1:
      // |a> -> (s|a> - |-a>)/N, |-a> -> (|a> - s|-a>)/N
      na = (a * s + b) / n;
      nb = (-a - b * s) / n;
      break;
    case BellLabel::kB2:
      return PhaseShift(state, 0, std::numbers::pi).Normalized();
    case BellLabel::kB3:
      // |a> -> (|a> - s|-a>)/N, |-a> -> (s|a> - |-a>)/N
      na = (a + b * s) / n;
      nb = (-a * s - b) / n;
      break;
    case BellLabel::kB4:
      return state.Normalized();
    case BellLabel::kAmbiguous:
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "no correction for an ambiguous outcome");
  }
  return CoherentSuperposition(
             1, {{na, {Complex(alpha)}}, {nb, {Complex(-alpha)}}})
      .Normalized();
}

double ConcentrationResult::Total() const {
  double sum = 0.0;
  for (double p : outcome_probs) sum += p;
  return sum;
}

Vector4c IdealPartialState(double eta) {
  CheckEta(eta);
  Vector4c v;
  v << 0.0, std::cos(eta), -std::sin(eta), 0.0;
  return v;
}

Vector4c SwapProject(const Vector4c& first, const Vector4c& second,
                     const Vector4c& bell) {
  // Qubit order (b', b'', b, c), b' most significant.
  Eigen::Matrix<Complex, 16, 1> full;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) full(4 * i + j) = first(i) * second(j);
  }
  // (1 (x) <bell| (x) 1) as a 4 x 16 matrix.
  Eigen::Matrix<Complex, 4, 16> proj = Eigen::Matrix<Complex, 4, 16>::Zero();
  for (int bp = 0; bp < 2; ++bp) {
    for (int c = 0; c < 2; ++c) {
      for (int bpp = 0; bpp < 2; ++bpp) {
        for (int b = 0; b < 2; ++b) {
          proj(2 * bp + c, 8 * bp + 4 * bpp + 2 * b + c) =
              std::conj(bell(2 * bpp + b));
        }
      }
    }
  }
  return proj * full;
}

ConcentrationResult ConcentrateIdeal(double eta) {
  const Vector4c pair = IdealPartialState(eta);
  ConcentrationResult r;
  for (int k = 0; k < 4; ++k) {
    const Vector4c out = SwapProject(pair, pair, BellVector(k + 1));
    const double p = out.squaredNorm();
    r.outcome_probs[k] = p;
    r.resulting_states[k] = p > 0.0 ? Vector4c(out / std::sqrt(p))
                                    : Vector4c(Vector4c::Zero());
  }
  r.p1 = r.outcome_probs[0];
  r.p2 = r.outcome_probs[1];
  return r;
}

CoherentSuperposition PartiallyEntangledState(double alpha, double eta) {
  CheckEta(eta);
  LogicalBasis::Make(alpha, 1.0);
  const Complex a(alpha);
  return CoherentSuperposition(2, {{std::cos(eta), {a, -a}},
                                   {-std::sin(eta), {-a, a}}})
      .Normalized();
}

ExactConcentration ConcentrateExact(double alpha, double eta) {
  const LogicalBasis basis = LogicalBasis::Make(alpha, 1.0);
  const CoherentSuperposition pair = PartiallyEntangledState(alpha, eta);
  // Modes (b', b'', b, c).
  const CoherentSuperposition joint = Tensor(pair, pair);
  const CoherentSuperposition b2 = BellState(2, basis);
  const int measured[] = {1, 2};
  const CoherentSuperposition rest = PartialProject(joint, measured, b2);

  ExactConcentration r;
  r.probability = rest.NormSquared() / joint.NormSquared();
  r.state = rest.Normalized();
  r.fidelity_to_b2 = std::norm(Inner(b2, r.state));
  return r;
}

double IdealConcentrationProbability(double eta) {
  CheckEta(eta);
  const double cs = std::cos(eta) * std::sin(eta);
  return cs * cs;
}

double PublishedConcentrationProbability(double alpha, double eta) {
  CheckEta(eta);
  const LogicalBasis basis = LogicalBasis::Make(alpha, 1.0);
  const double s2 = basis.sin_2theta() * basis.sin_2theta();
  const double se = std::sin(2.0 * eta);
  return basis.n_theta() * basis.n_theta() * se * se / (4.0 * (1.0 - s2 * se));
}

double ConcentrationProbability(double alpha, double eta) {
  CheckEta(eta);
  const LogicalBasis basis = LogicalBasis::Make(alpha, 1.0);
  const double s2 = basis.sin_2theta() * basis.sin_2theta();
  const double se = std::sin(2.0 * eta);
  const double n_eta = 1.0 - s2 * se;
  return basis.n_theta() * basis.n_theta() * se * se / (4.0 * n_eta * n_eta);
}

double CvFidelity(double alpha_r) {
  const double x2 = alpha_r * alpha_r;
  return (1.0 + std::exp(-2.0 * x2)) / (2.0 * (1.0 + std::exp(-4.0 * x2)));
}

Extremum CvMax() {
  return GoldenSectionMaximize(CvFidelity, 0.0, 5.0, 1e-10);
}

}  // namespace ecs
