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

/* C interface to the ecs library. All functions return an ecs_status; on
 * failure ecs_last_error() holds a message for the calling thread. Handles
 * are opaque and must be released with the matching destroy function. */

#ifndef ECS_ECS_H_
#define ECS_ECS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ECS_BUILDING_LIBRARY)
#define ECS_API __declspec(dllexport)
#else
#define ECS_API __declspec(dllimport)
#endif
#else
#define ECS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecs_status {
  ECS_OK = 0,
  ECS_ERR_INVALID_ARGUMENT = 1,
  ECS_ERR_DEGENERATE_BASIS = 2,
  ECS_ERR_OUTSIDE_SPAN = 3,
  ECS_ERR_CUTOFF_INSUFFICIENT = 4,
  ECS_ERR_NUMERIC_GUARD = 5,
  ECS_ERR_IO = 6,
  ECS_ERR_INTERNAL = 7
} ecs_status;

ECS_API const char* ecs_version(void);
ECS_API const char* ecs_status_string(ecs_status status);
/* Message of the last failure on this thread, "" if none. */
ECS_API const char* ecs_last_error(void);

/* Closed forms --------------------------------------------------------- */

ECS_API ecs_status ecs_closed_form_e(double alpha, double r, double* out);
ECS_API ecs_status ecs_closed_form_f(double alpha, double r, double* out);
ECS_API ecs_status ecs_closed_form_s(double alpha, double r, double* out);
ECS_API ecs_status ecs_characteristic_time(double alpha, double* out);
ECS_API ecs_status ecs_misid_closed_form(double alpha, double* out);
ECS_API ecs_status ecs_concentration_probability(double alpha, double eta,
                                                 double* out);
ECS_API ecs_status ecs_cv_fidelity(double alpha_r, double* out);

/* Two-qubit densities -------------------------------------------------- */

typedef struct ecs_density ecs_density;

typedef struct ecs_metrics {
  double e_measure;
  double singlet_fraction;
  double optimal_fidelity;
  double linear_entropy;
  double vn_entropy;
} ecs_metrics;

/* Decohered B4 channel in the logical basis, 0 <= r < 1. */
ECS_API ecs_status ecs_channel_rho4(double alpha, double r, ecs_density** out);
/* 4x4 row-major matrix as 32 doubles (re, im interleaved). */
ECS_API ecs_status ecs_density_from_matrix(const double* re_im,
                                           ecs_density** out);
ECS_API ecs_status ecs_density_matrix(const ecs_density* rho, double* re_im);
ECS_API ecs_status ecs_density_metrics(const ecs_density* rho,
                                       ecs_metrics* out);
/* Best-frame standard-scheme teleportation fidelity. */
ECS_API ecs_status ecs_density_average_fidelity(const ecs_density* rho,
                                                double* out);
ECS_API ecs_status ecs_teleport_mc(const ecs_density* rho, uint64_t samples,
                                   uint64_t seed, double* mean,
                                   double* std_error);
ECS_API void ecs_density_destroy(ecs_density* rho);

/* Runs ------------------------------------------------------------------ */

typedef struct ecs_run_config ecs_run_config;
typedef struct ecs_buffer ecs_buffer;

/* command: fig2a, fig2b, fig3, bellmeas, teleport-mc, concentrate, cv,
 * report. Starts from the defaults. */
ECS_API ecs_status ecs_run_config_create(const char* command,
                                         ecs_run_config** out);
ECS_API void ecs_run_config_destroy(ecs_run_config* config);
ECS_API ecs_status ecs_run_config_set_alphas(ecs_run_config* config,
                                             const double* alphas,
                                             size_t count);
ECS_API ecs_status ecs_run_config_set_sweep(ecs_run_config* config,
                                            double r_min, double r_max,
                                            int r_steps);
/* 0 = automatic. */
ECS_API ecs_status ecs_run_config_set_cutoff(ecs_run_config* config,
                                             int cutoff);
ECS_API ecs_status ecs_run_config_set_seed(ecs_run_config* config,
                                           uint64_t seed);
ECS_API ecs_status ecs_run_config_set_samples(ecs_run_config* config,
                                              uint64_t samples);
ECS_API ecs_status ecs_run_config_set_etas(ecs_run_config* config,
                                           const double* etas, size_t count);
/* "csv" or "json". */
ECS_API ecs_status ecs_run_config_set_format(ecs_run_config* config,
                                             const char* format);
ECS_API ecs_status ecs_run_config_set_threads(ecs_run_config* config,
                                              int threads);

/* On success *out holds the rendered output. For the report command,
 * *all_passed (if non-null) is set to 0 when a criterion failed. */
ECS_API ecs_status ecs_run(const ecs_run_config* config, ecs_buffer** out,
                           int* all_passed);
ECS_API const char* ecs_buffer_data(const ecs_buffer* buffer);
ECS_API size_t ecs_buffer_size(const ecs_buffer* buffer);
ECS_API void ecs_buffer_destroy(ecs_buffer* buffer);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* ECS_ECS_H_ */
