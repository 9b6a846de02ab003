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

#include "ecs/ecs.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "ecs/decoherence.hpp"
#include "ecs/entanglement_metrics.hpp"
#include "ecs/error.hpp"
#include "ecs/protocols.hpp"
#include "ecs/runner.hpp"

struct ecs_density {
  ecs::TwoQubitDensity rho;
};

struct ecs_run_config {
  ecs::RunConfig config;
};

struct ecs_buffer {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

ecs_status FromCode(ecs::ErrorCode code) {
  switch (code) {
    case ecs::ErrorCode::kInvalidArgument: return ECS_ERR_INVALID_ARGUMENT;
    case ecs::ErrorCode::kDegenerateBasis: return ECS_ERR_DEGENERATE_BASIS;
    case ecs::ErrorCode::kOutsideSpan: return ECS_ERR_OUTSIDE_SPAN;
    case ecs::ErrorCode::kCutoffInsufficient:
      return ECS_ERR_CUTOFF_INSUFFICIENT;
    case ecs::ErrorCode::kNumericGuard: return ECS_ERR_NUMERIC_GUARD;
    case ecs::ErrorCode::kIo: return ECS_ERR_IO;
  }
  return ECS_ERR_INTERNAL;
}

ecs_status Fail(ecs_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs `body` and converts exceptions to status codes.
template <typename F>
ecs_status Guard(F&& body) {
  try {
    g_last_error.clear();
    std::forward<F>(body)();
    return ECS_OK;
  } catch (const ecs::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(ECS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(ECS_ERR_INTERNAL, e.what());
  }
}

#define ECS_REQUIRE(ptr)                                               \
  do {                                                                 \
    if ((ptr) == nullptr) {                                            \
      return Fail(ECS_ERR_INVALID_ARGUMENT, #ptr " must not be null"); \
    }                                                                  \
  } while (0)

template <typename F>
ecs_status Scalar(double* out, F&& f) {
  ECS_REQUIRE(out);
  return Guard([&] { *out = f(); });
}

}  // namespace

extern "C" {

const char* ecs_version(void) { return "0.1.0"; }

const char* ecs_status_string(ecs_status status) {
  switch (status) {
    case ECS_OK: return "ok";
    case ECS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ECS_ERR_DEGENERATE_BASIS: return "degenerate basis";
    case ECS_ERR_OUTSIDE_SPAN: return "outside span";
    case ECS_ERR_CUTOFF_INSUFFICIENT: return "cutoff insufficient";
    case ECS_ERR_NUMERIC_GUARD: return "numeric guard";
    case ECS_ERR_IO: return "i/o error";
    case ECS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ecs_last_error(void) { return g_last_error.c_str(); }

ecs_status ecs_closed_form_e(double alpha, double r, double* out) {
  return Scalar(out, [&] { return ecs::ClosedFormE(alpha, r); });
}

ecs_status ecs_closed_form_f(double alpha, double r, double* out) {
  return Scalar(out, [&] { return ecs::ClosedFormF(alpha, r); });
}

ecs_status ecs_closed_form_s(double alpha, double r, double* out) {
  return Scalar(out, [&] { return ecs::ClosedFormS(alpha, r); });
}

ecs_status ecs_characteristic_time(double alpha, double* out) {
  return Scalar(out, [&] { return ecs::CharacteristicTime(alpha); });
}

ecs_status ecs_misid_closed_form(double alpha, double* out) {
  return Scalar(out, [&] { return ecs::MisidClosedForm(alpha); });
}

ecs_status ecs_concentration_probability(double alpha, double eta,
                                         double* out) {
  return Scalar(out, [&] { return ecs::ConcentrationProbability(alpha, eta); });
}

ecs_status ecs_cv_fidelity(double alpha_r, double* out) {
  return Scalar(out, [&] { return ecs::CvFidelity(alpha_r); });
}

ecs_status ecs_channel_rho4(double alpha, double r, ecs_density** out) {
  ECS_REQUIRE(out);
  *out = nullptr;
  return Guard([&] { *out = new ecs_density{ecs::ChannelRho4(alpha, r)}; });
}

ecs_status ecs_density_from_matrix(const double* re_im, ecs_density** out) {
  ECS_REQUIRE(re_im);
  ECS_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    ecs::Matrix4c m;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const int k = 2 * (4 * i + j);
        m(i, j) = {re_im[k], re_im[k + 1]};
      }
    }
    if (!m.allFinite()) {
      throw ecs::Error(ecs::ErrorCode::kInvalidArgument,
                       "matrix has non-finite entries");
    }
    *out = new ecs_density{ecs::TwoQubitDensity::FromMatrix(m)};
  });
}

ecs_status ecs_density_matrix(const ecs_density* rho, double* re_im) {
  ECS_REQUIRE(rho);
  ECS_REQUIRE(re_im);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int k = 2 * (4 * i + j);
      re_im[k] = rho->rho(i, j).real();
      re_im[k + 1] = rho->rho(i, j).imag();
    }
  }
  return ECS_OK;
}

ecs_status ecs_density_metrics(const ecs_density* rho, ecs_metrics* out) {
  ECS_REQUIRE(rho);
  ECS_REQUIRE(out);
  return Guard([&] {
    const ecs::MetricReport m = ecs::Evaluate(rho->rho);
    *out = {m.e_measure, m.singlet_fraction, m.optimal_fidelity,
            m.linear_entropy, m.vn_entropy};
  });
}

ecs_status ecs_density_average_fidelity(const ecs_density* rho, double* out) {
  ECS_REQUIRE(rho);
  return Scalar(out, [&] { return ecs::AverageFidelity(rho->rho); });
}

ecs_status ecs_teleport_mc(const ecs_density* rho, uint64_t samples,
                           uint64_t seed, double* mean, double* std_error) {
  ECS_REQUIRE(rho);
  ECS_REQUIRE(mean);
  ECS_REQUIRE(std_error);
  return Guard([&] {
    const int frame = ecs::BestCorrectionFrame(rho->rho).frame;
    const ecs::MonteCarloResult r =
        ecs::TeleportMonteCarlo(rho->rho, samples, seed, frame);
    *mean = r.mean;
    *std_error = r.std_error;
  });
}

void ecs_density_destroy(ecs_density* rho) { delete rho; }

ecs_status ecs_run_config_create(const char* command, ecs_run_config** out) {
  ECS_REQUIRE(command);
  ECS_REQUIRE(out);
  *out = nullptr;
  const auto parsed = ecs::ParseCommand(command);
  if (!parsed) {
    return Fail(ECS_ERR_INVALID_ARGUMENT,
                (std::string("unknown command: ") + command).c_str());
  }
  return Guard([&] {
    *out = new ecs_run_config{};
    (*out)->config.command = *parsed;
  });
}

void ecs_run_config_destroy(ecs_run_config* config) { delete config; }

ecs_status ecs_run_config_set_alphas(ecs_run_config* config,
                                     const double* alphas, size_t count) {
  ECS_REQUIRE(config);
  if (count > 0) ECS_REQUIRE(alphas);
  config->config.alphas.assign(alphas, alphas + count);
  return ECS_OK;
}

ecs_status ecs_run_config_set_sweep(ecs_run_config* config, double r_min,
                                    double r_max, int r_steps) {
  ECS_REQUIRE(config);
  config->config.r_min = r_min;
  config->config.r_max = r_max;
  config->config.r_steps = r_steps;
  return ECS_OK;
}

ecs_status ecs_run_config_set_cutoff(ecs_run_config* config, int cutoff) {
  ECS_REQUIRE(config);
  config->config.cutoff = cutoff;
  return ECS_OK;
}

ecs_status ecs_run_config_set_seed(ecs_run_config* config, uint64_t seed) {
  ECS_REQUIRE(config);
  config->config.seed = seed;
  return ECS_OK;
}

ecs_status ecs_run_config_set_samples(ecs_run_config* config,
                                      uint64_t samples) {
  ECS_REQUIRE(config);
  config->config.samples = samples;
  return ECS_OK;
}

ecs_status ecs_run_config_set_etas(ecs_run_config* config, const double* etas,
                                   size_t count) {
  ECS_REQUIRE(config);
  if (count > 0) ECS_REQUIRE(etas);
  config->config.etas.assign(etas, etas + count);
  return ECS_OK;
}

ecs_status ecs_run_config_set_format(ecs_run_config* config,
                                     const char* format) {
  ECS_REQUIRE(config);
  ECS_REQUIRE(format);
  const auto parsed = ecs::ParseFormat(format);
  if (!parsed) {
    return Fail(ECS_ERR_INVALID_ARGUMENT,
                (std::string("unknown format: ") + format).c_str());
  }
  config->config.format = *parsed;
  return ECS_OK;
}

ecs_status ecs_run_config_set_threads(ecs_run_config* config, int threads) {
  ECS_REQUIRE(config);
  config->config.threads = threads;
  return ECS_OK;
}

ecs_status ecs_run(const ecs_run_config* config, ecs_buffer** out,
                   int* all_passed) {
  ECS_REQUIRE(config);
  ECS_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    ecs::RunOutcome outcome = ecs::RunWithOutcome(config->config);
    if (all_passed != nullptr) *all_passed = outcome.all_passed ? 1 : 0;
    *out = new ecs_buffer{std::move(outcome.text)};
  });
}

const char* ecs_buffer_data(const ecs_buffer* buffer) {
  return buffer != nullptr ? buffer->text.c_str() : "";
}

size_t ecs_buffer_size(const ecs_buffer* buffer) {
  return buffer != nullptr ? buffer->text.size() : 0;
}

void ecs_buffer_destroy(ecs_buffer* buffer) { delete buffer; }

}  // extern "C"
