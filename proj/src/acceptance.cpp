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

#include "ecs/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>

#include "ecs/decoherence.hpp"
#include "ecs/entanglement_metrics.hpp"
#include "ecs/error.hpp"
#include "ecs/protocols.hpp"
#include "ecs/runner.hpp"

namespace ecs {
namespace {

constexpr double kPi = std::numbers::pi;
const double kRc = 1.0 / std::sqrt(2.0);
constexpr double kFigureAlphas[] = {0.1, 1.0, 2.0};
constexpr int kPropertyCases = 1000;

class Detail {
 public:
  Detail() { os_.precision(3); }
  template <typename T>
  Detail& operator<<(const T& v) {
    os_ << v;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

CriterionResult Start(int id, std::string title) {
  CriterionResult c;
  c.id = id;
  c.title = std::move(title);
  return c;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

CriterionResult EntanglementAtZero() {
  CriterionResult c = Start(1, "E(tau=0) = 1 for every alpha");
  double worst = 0.0;
  for (double alpha : kFigureAlphas) {
    worst = std::max(worst, std::abs(NegativityE(ChannelRho4(alpha, 0.0)) - 1));
    worst = std::max(worst, std::abs(ClosedFormE(alpha, 0.0) - 1.0));
  }
  c.passed = worst <= 1e-10;
  c.detail = (Detail() << "max |E-1| = " << worst).str();
  return c;
}

CriterionResult OracleGrid() {
  CriterionResult c = Start(2, "numeric negativity and Pauli form match closed forms");
  const auto start = std::chrono::steady_clock::now();
  double e_err = 0.0;
  double vst_err = 0.0;
  for (double alpha : SweepPoints(0.1, 2.0, 20)) {
    for (double r : SweepPoints(0.0, 0.95, 20)) {
      const TwoQubitDensity rho = ChannelRho4(alpha, r);
      e_err = std::max(e_err, std::abs(NegativityE(rho) - ClosedFormE(alpha, r)));
      const PauliDecomposition num = PauliDecompose(rho);
      const PauliDecomposition ref = ClosedFormVst(alpha, r);
      vst_err = std::max({vst_err, (num.v - ref.v).cwiseAbs().maxCoeff(),
                          (num.s - ref.s).cwiseAbs().maxCoeff(),
                          (num.t_matrix - ref.t_matrix).cwiseAbs().maxCoeff()});
    }
  }
  const double elapsed = Seconds(start);
  c.passed = e_err <= 1e-9 && vst_err <= 1e-10 && elapsed < 10.0;
  c.detail = (Detail() << "E err " << e_err << ", v/s/T err " << vst_err
                       << ", " << elapsed << " s")
                 .str();
  return c;
}

CriterionResult CharacteristicTimeCheck() {
  CriterionResult c = Start(3, "f = 2/3 crossing at r = 1/sqrt2, E > 0 beyond");
  double worst = 0.0;
  bool tail_ok = true;
  for (double alpha : kFigureAlphas) {
    worst = std::max(worst, std::abs(CharacteristicTime(alpha) - kRc));
    for (double r : SweepPoints(0.72, 0.99, 28)) {
      const TwoQubitDensity rho = ChannelRho4(alpha, r);
      tail_ok = tail_ok && OptimalFidelity(rho) < kClassicalFidelity &&
                ClosedFormF(alpha, r) < kClassicalFidelity &&
                NegativityE(rho) > 0.0 && ClosedFormE(alpha, r) > 0.0;
    }
  }
  c.passed = worst <= 1e-9 && tail_ok;
  c.detail = (Detail() << "max |r_c - 1/sqrt2| = " << worst
                       << (tail_ok ? ", f < 2/3 with E > 0 past r_c"
                                   : ", beyond-r_c check failed"))
                 .str();
  return c;
}

CriterionResult MixednessPeakCheck() {
  CriterionResult c = Start(4, "linear and von Neumann entropy peak at r = 1/sqrt2");
  double lin = 0.0;
  double agree = 0.0;
  for (double alpha : kFigureAlphas) {
    const double peak = MixednessPeak(alpha);
    const double vn = VonNeumannPeak(alpha);
    lin = std::max(lin, std::abs(peak - kRc));
    agree = std::max(agree, std::abs(vn - peak));
  }
  c.passed = lin <= 1e-6 && agree <= 1e-6;
  c.detail = (Detail() << "linear peak err " << lin << ", vN vs linear "
                       << agree)
                 .str();
  return c;
}

CriterionResult OrderingCheck() {
  CriterionResult c = Start(5, "E(2) < E(1) < E(0.1) at r = 0.5");
  const double e2 = NegativityE(ChannelRho4(2.0, 0.5));
  const double e1 = NegativityE(ChannelRho4(1.0, 0.5));
  const double e01 = NegativityE(ChannelRho4(0.1, 0.5));
  c.passed = e2 < e1 && e1 < e01;
  c.detail = (Detail() << "E = " << e2 << ", " << e1 << ", " << e01).str();
  return c;
}

CriterionResult BellDiscrimination() {
  CriterionResult c = Start(6, "Fock misidentification rate matches the closed form");
  bool ok = true;
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const MisidResult m = MisidProbability(alpha);
    const double err = std::abs(m.probability - MisidClosedForm(alpha));
    worst = std::max(worst, err);
    ok = ok && err <= std::max(1e-6, m.tail_bound);
  }
  double cross = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const LogicalBasis basis = LogicalBasis::Make(alpha, 1.0);
    for (int k : {2, 4}) {
      const BellMeasurement m = BellMeasureDistribution(BellState(k, basis));
      double other = 0.0;
      for (const auto& o : m.outcomes) {
        if (o.outcome.label != LabelForBell(k)) other += o.probability;
      }
      cross = std::max(cross, other);
    }
  }
  c.passed = ok && cross <= 1e-12;
  c.detail = (Detail() << "max rate err " << worst << ", B2/B4 cross mass "
                       << cross)
                 .str();
  return c;
}

CriterionResult TeleportMc() {
  CriterionResult c = Start(7, "Monte Carlo teleportation fidelity within 3 sigma");
  constexpr std::uint64_t kSamples = 100000;
  bool ok = ClosedFormF(1.0, 0.0) == 1.0;
  Detail d;
  std::uint64_t seed = 20260101;
  for (double r : {0.0, 0.3, kRc}) {
    const TwoQubitDensity rho = ChannelRho4(1.0, r);
    const FrameChoice best = BestCorrectionFrame(rho);
    const double analytic = ClosedFormF(1.0, r);
    const MonteCarloResult mc =
        TeleportMonteCarlo(rho, kSamples, seed++, best.frame);
    const double z = std::abs(mc.mean - analytic);
    ok = ok && z <= 3.0 * mc.std_error + 1e-12 &&
         std::abs(best.fidelity - analytic) <= 1e-9;
    d << (r == 0.0 ? "" : "; ") << "r=" << r << ": |dev| " << z << " (se "
      << mc.std_error << ")";
  }
  c.passed = ok;
  c.detail = d.str();
  return c;
}

CriterionResult ConcentrationCheck() {
  CriterionResult c = Start(8, "swap concentration probabilities");
  double ideal = 0.0;
  for (double eta : {kPi / 8, kPi / 6, kPi / 3}) {
    const ConcentrationResult res = ConcentrateIdeal(eta);
    const double want = IdealConcentrationProbability(eta);
    ideal = std::max({ideal, std::abs(res.p1 - want), std::abs(res.p2 - want)});
  }
  double published = 0.0;
  double corrected = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double eta : {kPi / 8, kPi / 4, kPi / 3}) {
      const double p = ConcentrateExact(alpha, eta).probability;
      published = std::max(
          published, std::abs(p - PublishedConcentrationProbability(alpha, eta)));
      corrected =
          std::max(corrected, std::abs(p - ConcentrationProbability(alpha, eta)));
    }
  }
  double large = 0.0;
  for (double eta : {kPi / 8, kPi / 4, kPi / 3}) {
    large = std::max(large, std::abs(ConcentrateExact(3.0, eta).probability -
                                     IdealConcentrationProbability(eta)));
  }
  double small = 0.0;
  for (double eta : {kPi / 8, kPi / 3}) {
    small = std::max(small, ConcentrateExact(0.05, eta).probability);
  }
  c.passed = ideal <= 1e-10 && published <= 1e-9 && large <= 1e-6 &&
             small < 1e-3;
  c.detail = (Detail() << "ideal err " << ideal << ", vs published P2 "
                       << published << ", vs corrected P2 " << corrected
                       << ", alpha=3 err " << large << ", alpha=0.05 max "
                       << small)
                 .str();
  return c;
}

CriterionResult CvCheck() {
  CriterionResult c = Start(9, "CV fidelity f(0) = 1/2, f > 1/2, peak near 0.6");
  bool above = true;
  for (int k = 1; k <= 1000; ++k) {
    const double x = 4.0 * k / 1000.0;
    above = above && CvFidelity(x) > 0.5 && CvFidelity(-x) > 0.5;
  }
  const Extremum best = CvMax();
  c.passed = CvFidelity(0.0) == 0.5 && above && best.value >= 0.59 &&
             best.value <= 0.61 && best.x >= 0.6 && best.x <= 0.8;
  c.detail = [&] {
    std::ostringstream os;
    os.precision(6);
    os << "f* = " << best.value << " at alpha_r* = " << best.x
       << (above ? "" : ", f <= 1/2 somewhere");
    return os.str();
  }();
  return c;
}

// Property suites -------------------------------------------------------------

Complex RandomComplex(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng)};
}

CoherentSuperposition RandomSuperposition(std::mt19937_64& rng, int modes) {
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<CoherentTerm> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    CoherentTerm term{RandomComplex(rng, 1.0), {}};
    for (int m = 0; m < modes; ++m) term.amps.push_back(RandomComplex(rng, 1.5));
    terms.push_back(std::move(term));
  }
  CoherentSuperposition s(modes, std::move(terms));
  return s.NormSquared() > 1e-8 ? s.Normalized() : RandomSuperposition(rng, modes);
}

Complex ProbeExpectation(const CoherentOperator& rho,
                         const std::vector<ComplexAmp>& probe) {
  Complex sum = 0.0;
  for (const auto& term : rho.terms()) {
    Complex left = 1.0;
    Complex right = 1.0;
    for (std::size_t m = 0; m < probe.size(); ++m) {
      left *= Overlap(probe[m], term.ket_amps[m]);
      right *= Overlap(term.bra_amps[m], probe[m]);
    }
    sum += term.coeff * left * right;
  }
  return sum;
}

bool GramPositivity(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(2, 6);
  const int n = size(rng);
  std::vector<ComplexAmp> amps(n);
  for (auto& a : amps) a = RandomComplex(rng, 2.0);
  Eigen::MatrixXcd gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gram(i, j) = Overlap(amps[i], amps[j]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram,
                                                          Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -1e-12 &&
         RandomSuperposition(rng, 1).NormSquared() > 0.0;
}

bool TracePreservation(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> modes(1, 2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const CoherentOperator rho = DyadFromPure(RandomSuperposition(rng, modes(rng)));
  const CoherentOperator out = Decohere(rho, DecayClock::FromR(0.999 * u(rng)));
  return std::abs(OperatorTrace(out) - OperatorTrace(rho)) <= 1e-10 &&
         IsHermitian(out, 1e-10);
}

bool DensityValidity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(0.1, 2.5);
  std::uniform_real_distribution<double> r(0.0, 0.99);
  const Matrix4c m = ChannelRho4(a(rng), r(rng)).matrix();
  Matrix4c g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = RandomComplex(rng, 1.0);
  }
  Matrix4c mixed = g * g.adjoint();
  mixed /= mixed.trace();
  const Matrix4c pt = PartialTransposeSecond(TwoQubitDensity::FromMatrix(mixed).matrix());
  return HermiticityError(m) <= 1e-12 &&
         HermitianEigenvalues(m).minCoeff() >= -1e-12 &&
         std::abs(m.trace() - 1.0) <= 1e-12 && HermiticityError(pt) <= 1e-12;
}

bool PauliRoundTrip(std::mt19937_64& rng) {
  Matrix4c g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = RandomComplex(rng, 1.0);
  }
  Matrix4c m = g * g.adjoint();
  m /= m.trace();
  const TwoQubitDensity rho = TwoQubitDensity::FromMatrix(m);
  return (PauliDecompose(rho).Reconstruct() - rho.matrix()).cwiseAbs().maxCoeff() <=
         1e-12;
}

bool Semigroup(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> modes(1, 2);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  const int n = modes(rng);
  const CoherentOperator rho = DyadFromPure(RandomSuperposition(rng, n));
  const double t1 = u(rng);
  const double t2 = u(rng);
  const CoherentOperator twice =
      Decohere(Decohere(rho, DecayClock::FromT(t1)), DecayClock::FromT(t2));
  const CoherentOperator once = Decohere(rho, DecayClock::FromT(t1 * t2));
  for (int p = 0; p < 3; ++p) {
    std::vector<ComplexAmp> probe(n);
    for (auto& a : probe) a = RandomComplex(rng, 1.5);
    const Complex x = ProbeExpectation(twice, probe);
    const Complex y = ProbeExpectation(once, probe);
    if (std::abs(x - y) > 1e-10 * (1.0 + std::abs(y))) return false;
  }
  return true;
}

bool RunDeterminism(std::mt19937_64& rng) {
  constexpr Command kCommandsUnderTest[] = {
      Command::kFig2a,    Command::kFig2b,       Command::kFig3,
      Command::kBellMeas, Command::kTeleportMc,  Command::kConcentrate,
      Command::kCv};
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<int> steps(2, 4);
  std::uniform_int_distribution<int> samples(10, 200);
  std::uniform_real_distribution<double> alpha(0.3, 2.0);
  RunConfig config;
  config.command = kCommandsUnderTest[pick(rng)];
  config.alphas = {alpha(rng)};
  config.r_steps = steps(rng);
  config.samples = static_cast<std::uint64_t>(samples(rng));
  config.seed = rng();
  config.etas = {kPi / 8.0, kPi / 3.0};
  config.format = (rng() & 1) ? OutputFormat::kJson : OutputFormat::kCsv;
  return Run(config) == Run(config);
}

CriterionResult PropertySuites() {
  CriterionResult c = Start(10, "randomized property suites");
  const auto start = std::chrono::steady_clock::now();
  struct Suite {
    const char* name;
    bool (*check)(std::mt19937_64&);
  };
  constexpr Suite kSuites[] = {
      {"gram", GramPositivity},      {"trace", TracePreservation},
      {"density", DensityValidity},  {"pauli", PauliRoundTrip},
      {"semigroup", Semigroup},      {"determinism", RunDeterminism},
  };
  bool ok = true;
  Detail d;
  std::uint64_t seed = 1234;
  for (const Suite& suite : kSuites) {
    std::mt19937_64 rng(seed++);
    int failures = 0;
    for (int i = 0; i < kPropertyCases; ++i) failures += suite.check(rng) ? 0 : 1;
    ok = ok && failures == 0;
    d << suite.name << " " << (kPropertyCases - failures) << "/"
      << kPropertyCases << "; ";
  }
  const double elapsed = Seconds(start);
  c.passed = ok && elapsed < 60.0;
  d << elapsed << " s";
  c.detail = d.str();
  return c;
}

}  // namespace

CriterionResult RunCriterion(int id) {
  using Check = CriterionResult (*)();
  static constexpr Check kChecks[kCriterionCount] = {
      EntanglementAtZero,      OracleGrid,         CharacteristicTimeCheck,
      MixednessPeakCheck, OrderingCheck,     BellDiscrimination,
      TeleportMc,        ConcentrationCheck, CvCheck,
      PropertySuites};
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorCode::kInvalidArgument, "criterion id out of range");
  }
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = kChecks[id - 1]();
  } catch (const std::exception& e) {
    result.id = id;
    result.title = "criterion " + std::to_string(id);
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = Seconds(start);
  return result;
}

std::vector<CriterionResult> RunAcceptanceSuite() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(RunCriterion(id));
  return out;
}

}  // namespace ecs
