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

#include "ecs/coherent_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "ecs/error.hpp"

namespace ecs {
namespace {

constexpr std::size_t kMaxFockEntries = std::size_t{1} << 26;

void CheckAmps(const std::vector<ComplexAmp>& amps, int modes) {
  if (static_cast<int>(amps.size()) != modes) {
    throw Error(ErrorCode::kInvalidArgument,
                "term has " + std::to_string(amps.size()) +
                    " amplitudes, state has " + std::to_string(modes) +
                    " modes");
  }
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite amplitude");
    }
  }
}

void CheckMode(const CoherentSuperposition& s, int i) {
  if (i < 0 || i >= s.modes()) {
    throw Error(ErrorCode::kInvalidArgument,
                "mode index " + std::to_string(i) + " out of range");
  }
}

bool SameAmps(const std::vector<ComplexAmp>& a,
              const std::vector<ComplexAmp>& b) {
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (std::abs(a[m] - b[m]) >= kMergeDistance) return false;
  }
  return true;
}

// Product of single-mode overlaps <a_m|b_m>.
Complex ProductOverlap(const std::vector<ComplexAmp>& a,
                       const std::vector<ComplexAmp>& b) {
  Complex exponent = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) exponent += LogOverlap(a[m], b[m]);
  return std::exp(exponent);
}

std::size_t FockSize(int cutoff, int modes) {
  std::size_t n = 1;
  for (int m = 0; m < modes; ++m) {
    n *= static_cast<std::size_t>(cutoff);
    if (n > kMaxFockEntries) {
      throw Error(ErrorCode::kInvalidArgument,
                  "Fock tensor too large: cutoff " + std::to_string(cutoff) +
                      " on " + std::to_string(modes) + " modes");
    }
  }
  return n;
}

}  // namespace

CoherentSuperposition::CoherentSuperposition(int modes) : modes_(modes) {
  if (modes <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "mode count must be positive");
  }
}

CoherentSuperposition::CoherentSuperposition(int modes,
                                             std::vector<CoherentTerm> terms)
    : CoherentSuperposition(modes) {
  for (const auto& t : terms) CheckAmps(t.amps, modes);
  terms_ = std::move(terms);
}

CoherentSuperposition CoherentSuperposition::Coherent(ComplexAmp beta) {
  return Product({beta});
}

CoherentSuperposition CoherentSuperposition::Product(
    std::vector<ComplexAmp> amps, Complex coeff) {
  const int modes = static_cast<int>(amps.size());
  return CoherentSuperposition(modes, {CoherentTerm{coeff, std::move(amps)}});
}

double CoherentSuperposition::NormSquared() const {
  return Inner(*this, *this).real();
}

CoherentSuperposition CoherentSuperposition::Normalized() const {
  const double n2 = NormSquared();
  if (!(n2 > 0.0)) {
    throw Error(ErrorCode::kNumericGuard, "cannot normalize a zero state");
  }
  return Complex(1.0 / std::sqrt(n2)) * *this;
}

CoherentSuperposition operator+(const CoherentSuperposition& a,
                                const CoherentSuperposition& b) {
  if (a.modes() != b.modes()) {
    throw Error(ErrorCode::kInvalidArgument, "mode-count mismatch in sum");
  }
  std::vector<CoherentTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Consolidate(CoherentSuperposition(a.modes(), std::move(terms)));
}

CoherentSuperposition operator-(const CoherentSuperposition& a,
                                const CoherentSuperposition& b) {
  return a + Complex(-1.0) * b;
}

CoherentSuperposition operator*(Complex c, const CoherentSuperposition& s) {
  std::vector<CoherentTerm> terms = s.terms();
  for (auto& t : terms) t.coeff *= c;
  return CoherentSuperposition(s.modes(), std::move(terms));
}

Complex LogOverlap(ComplexAmp beta, ComplexAmp gamma) {
  return -0.5 * std::norm(beta) - 0.5 * std::norm(gamma) +
         std::conj(beta) * gamma;
}

Complex Overlap(ComplexAmp beta, ComplexAmp gamma) {
  return std::exp(LogOverlap(beta, gamma));
}

Complex Inner(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  if (a.modes() != b.modes()) {
    throw Error(ErrorCode::kInvalidArgument, "mode-count mismatch in inner");
  }
  Complex sum = 0.0;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      sum += std::conj(ta.coeff) * tb.coeff * ProductOverlap(ta.amps, tb.amps);
    }
  }
  return sum;
}

CoherentSuperposition BeamSplit(const CoherentSuperposition& s, int i, int j) {
  CheckMode(s, i);
  CheckMode(s, j);
  if (i == j) {
    throw Error(ErrorCode::kInvalidArgument,
                "beam splitter needs two distinct modes");
  }
  const double h = 1.0 / std::numbers::sqrt2;
  std::vector<CoherentTerm> terms = s.terms();
  for (auto& t : terms) {
    const ComplexAmp bi = t.amps[i];
    const ComplexAmp bj = t.amps[j];
    t.amps[i] = (bi + bj) * h;
    t.amps[j] = (bi - bj) * h;
  }
  return CoherentSuperposition(s.modes(), std::move(terms));
}

CoherentSuperposition PhaseShift(const CoherentSuperposition& s, int i,
                                 double phi) {
  CheckMode(s, i);
  const Complex rot = std::polar(1.0, phi);
  std::vector<CoherentTerm> terms = s.terms();
  for (auto& t : terms) t.amps[i] *= rot;
  return CoherentSuperposition(s.modes(), std::move(terms));
}

CoherentSuperposition Consolidate(const CoherentSuperposition& s) {
  std::vector<CoherentTerm> merged;
  merged.reserve(s.size());
  for (const auto& t : s.terms()) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) {
      return SameAmps(m.amps, t.amps);
    });
    if (it == merged.end()) {
      merged.push_back(t);
    } else {
      it->coeff += t.coeff;
    }
  }
  double largest = 0.0;
  for (const auto& t : merged) largest = std::max(largest, std::abs(t.coeff));
  std::erase_if(merged, [&](const auto& t) {
    return !(std::abs(t.coeff) > kRelativeDropThreshold * largest);
  });
  return CoherentSuperposition(s.modes(), std::move(merged));
}

CoherentSuperposition Tensor(const CoherentSuperposition& a,
                             const CoherentSuperposition& b) {
  std::vector<CoherentTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      CoherentTerm t{ta.coeff * tb.coeff, ta.amps};
      t.amps.insert(t.amps.end(), tb.amps.begin(), tb.amps.end());
      terms.push_back(std::move(t));
    }
  }
  return CoherentSuperposition(a.modes() + b.modes(), std::move(terms));
}

CoherentSuperposition PartialProject(const CoherentSuperposition& s,
                                     std::span<const int> modes,
                                     const CoherentSuperposition& bra) {
  if (static_cast<int>(modes.size()) != bra.modes()) {
    throw Error(ErrorCode::kInvalidArgument,
                "projector mode count does not match the mode list");
  }
  std::vector<bool> projected(s.modes(), false);
  for (int m : modes) {
    CheckMode(s, m);
    if (projected[m]) {
      throw Error(ErrorCode::kInvalidArgument, "repeated mode in projection");
    }
    projected[m] = true;
  }
  const int remaining = s.modes() - static_cast<int>(modes.size());
  if (remaining <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "projection must leave at least one mode");
  }

  std::vector<CoherentTerm> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) {
    std::vector<ComplexAmp> picked;
    std::vector<ComplexAmp> rest;
    for (int m : modes) picked.push_back(t.amps[m]);
    for (int m = 0; m < s.modes(); ++m) {
      if (!projected[m]) rest.push_back(t.amps[m]);
    }
    Complex weight = 0.0;
    for (const auto& b : bra.terms()) {
      weight += std::conj(b.coeff) * ProductOverlap(b.amps, picked);
    }
    terms.push_back({weight * t.coeff, std::move(rest)});
  }
  return Consolidate(CoherentSuperposition(remaining, std::move(terms)));
}

CoherentOperator::CoherentOperator(int modes) : modes_(modes) {
  if (modes <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "mode count must be positive");
  }
}

CoherentOperator::CoherentOperator(int modes, std::vector<DyadTerm> terms)
    : CoherentOperator(modes) {
  for (const auto& t : terms) {
    CheckAmps(t.ket_amps, modes);
    CheckAmps(t.bra_amps, modes);
  }
  terms_ = std::move(terms);
}

CoherentOperator DyadFromPure(const CoherentSuperposition& s) {
  std::vector<DyadTerm> terms;
  terms.reserve(s.size() * s.size());
  for (const auto& k : s.terms()) {
    for (const auto& b : s.terms()) {
      terms.push_back({k.coeff * std::conj(b.coeff), k.amps, b.amps});
    }
  }
  return CoherentOperator(s.modes(), std::move(terms));
}

Complex OperatorTrace(const CoherentOperator& rho) {
  Complex sum = 0.0;
  for (const auto& t : rho.terms()) {
    sum += t.coeff * ProductOverlap(t.bra_amps, t.ket_amps);
  }
  return sum;
}

bool IsHermitian(const CoherentOperator& rho, double tol) {
  // Group identical (ket, bra) pairs first so split duplicates still match.
  struct Entry {
    const DyadTerm* rep;
    Complex coeff;
  };
  std::vector<Entry> grouped;
  for (const auto& t : rho.terms()) {
    auto it = std::find_if(grouped.begin(), grouped.end(), [&](const Entry& e) {
      return SameAmps(e.rep->ket_amps, t.ket_amps) &&
             SameAmps(e.rep->bra_amps, t.bra_amps);
    });
    if (it == grouped.end()) {
      grouped.push_back({&t, t.coeff});
    } else {
      it->coeff += t.coeff;
    }
  }
  for (const auto& e : grouped) {
    Complex partner = 0.0;
    for (const auto& f : grouped) {
      if (SameAmps(f.rep->ket_amps, e.rep->bra_amps) &&
          SameAmps(f.rep->bra_amps, e.rep->ket_amps)) {
        partner += f.coeff;
      }
    }
    if (std::abs(partner - std::conj(e.coeff)) > tol) return false;
  }
  return true;
}

double FockVector::NormSquared() const {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return sum;
}

double PoissonTail(double mean, int n) {
  if (n <= 0) return 1.0;
  if (mean <= 0.0) return 0.0;
  // Sum the tail directly; 1 - cdf loses everything below 1e-16.
  double log_term = -mean + n * std::log(mean) - std::lgamma(n + 1.0);
  double term = std::exp(log_term);
  double sum = 0.0;
  for (int k = n; k < n + 100000; ++k) {
    sum += term;
    term *= mean / (k + 1);
    if (k + 1 > mean && term <= sum * 1e-17) break;
  }
  return std::min(1.0, sum);
}

int AutoCutoff(const CoherentSuperposition& s) {
  double m = 0.0;
  for (const auto& t : s.terms()) {
    for (const auto& a : t.amps) m = std::max(m, std::norm(a));
  }
  return static_cast<int>(std::ceil(2.0 * m + 10.0 * std::sqrt(m) + 20.0));
}

std::vector<Complex> FockAmplitudes(ComplexAmp beta, int cutoff) {
  std::vector<Complex> out(static_cast<std::size_t>(std::max(cutoff, 0)));
  if (out.empty()) return out;
  out[0] = std::exp(-0.5 * std::norm(beta));
  for (int n = 1; n < cutoff; ++n) {
    out[n] = out[n - 1] * beta / std::sqrt(static_cast<double>(n));
  }
  return out;
}

FockVector ToFock(const CoherentSuperposition& s, int cutoff,
                  double tail_tolerance) {
  if (cutoff < 1) {
    throw Error(ErrorCode::kInvalidArgument, "cutoff must be at least 1");
  }
  const int modes = s.modes();
  FockVector out;
  out.cutoff = cutoff;
  out.modes = modes;
  out.amps.assign(FockSize(cutoff, modes), Complex(0.0));

  // ||(1 - P) s|| <= sum_k |c_k| ||(1 - P)|beta_k>||, and for a product state
  // the lost probability is at most the summed per-mode Poisson tails.
  double amp_bound = 0.0;
  std::vector<std::vector<Complex>> per_mode(modes);
  std::vector<Complex> partial;
  for (const auto& t : s.terms()) {
    double tail = 0.0;
    for (int m = 0; m < modes; ++m) {
      per_mode[m] = FockAmplitudes(t.amps[m], cutoff);
      tail += PoissonTail(std::norm(t.amps[m]), cutoff);
    }
    amp_bound += std::abs(t.coeff) * std::sqrt(std::min(1.0, tail));

    // Outer product, mode 0 most significant.
    partial.assign(1, t.coeff);
    for (int m = 0; m < modes; ++m) {
      std::vector<Complex> next;
      next.reserve(partial.size() * cutoff);
      for (const auto& p : partial) {
        for (const auto& f : per_mode[m]) next.push_back(p * f);
      }
      partial = std::move(next);
    }
    for (std::size_t k = 0; k < partial.size(); ++k) out.amps[k] += partial[k];
  }

  const double norm2 = s.NormSquared();
  out.tail_bound = amp_bound * amp_bound / (norm2 > 0.0 ? norm2 : 1.0);
  if (out.tail_bound > tail_tolerance) {
    throw Error(ErrorCode::kCutoffInsufficient,
                "cutoff " + std::to_string(cutoff) + " leaves tail bound " +
                    std::to_string(out.tail_bound) + " above tolerance " +
                    std::to_string(tail_tolerance));
  }
  return out;
}

double PhotonTable::At(std::span<const int> counts) const {
  if (static_cast<int>(counts.size()) != modes) {
    throw Error(ErrorCode::kInvalidArgument, "photon count arity mismatch");
  }
  std::size_t idx = 0;
  for (int n : counts) {
    if (n < 0 || n >= cutoff) return 0.0;
    idx = idx * cutoff + n;
  }
  return probs[idx];
}

double PhotonTable::At(int n0, int n1) const {
  const int counts[] = {n0, n1};
  return At(counts);
}

double PhotonTable::Total() const {
  double sum = 0.0;
  for (double p : probs) sum += p;
  return sum;
}

PhotonTable PhotonDistribution(const CoherentSuperposition& s, int cutoff,
                               double tail_tolerance) {
  const double norm2 = s.NormSquared();
  if (!(norm2 > 0.0)) {
    throw Error(ErrorCode::kNumericGuard,
                "photon distribution of a zero state");
  }
  const FockVector fock = ToFock(s, cutoff, tail_tolerance);
  PhotonTable table;
  table.cutoff = cutoff;
  table.modes = s.modes();
  table.tail_bound = fock.tail_bound;
  table.probs.reserve(fock.amps.size());
  for (const auto& a : fock.amps) table.probs.push_back(std::norm(a) / norm2);
  return table;
}

}  // namespace ecs
