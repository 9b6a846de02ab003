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

// ecs: command-line front end. Emits plot-ready CSV or JSON for the figure
// sweeps and protocol experiments, or runs the acceptance report.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecs/ecs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReportFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int ExitCodeFor(ecs_status status) {
  switch (status) {
    case ECS_OK: return kExitOk;
    case ECS_ERR_INVALID_ARGUMENT:
    case ECS_ERR_DEGENERATE_BASIS:
    case ECS_ERR_OUTSIDE_SPAN: return kExitConfig;
    case ECS_ERR_IO: return kExitIo;
    default: return kExitNumeric;
  }
}

struct ConfigDeleter {
  void operator()(ecs_run_config* c) const { ecs_run_config_destroy(c); }
};
struct BufferDeleter {
  void operator()(ecs_buffer* b) const { ecs_buffer_destroy(b); }
};

int Report(ecs_status status) {
  std::cerr << "ecs: " << ecs_status_string(status) << ": " << ecs_last_error()
            << "\n";
  return ExitCodeFor(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled coherent state channels: figure data and protocols"};
  app.set_version_flag("--version", std::string(ecs_version()));

  std::string command;
  std::vector<double> alphas{0.1, 1.0, 2.0};
  double r_min = 0.0;
  double r_max = 0.995;
  int r_steps = 200;
  std::string cutoff = "auto";
  std::uint64_t seed = 42;
  std::uint64_t samples = 10000;
  std::vector<double> etas;
  std::string format = "csv";
  std::string output;
  int threads = 0;

  app.add_option("command", command,
                 "fig2a | fig2b | fig3 | bellmeas | teleport-mc | concentrate "
                 "| cv | report")
      ->required()
      ->check(CLI::IsMember({"fig2a", "fig2b", "fig3", "bellmeas",
                             "teleport-mc", "concentrate", "cv", "report"}));
  app.add_option("--alphas", alphas, "Initial amplitudes")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--r-min", r_min, "Sweep start in r")->capture_default_str();
  app.add_option("--r-max", r_max, "Sweep end in r, below 1")
      ->capture_default_str();
  app.add_option("--r-steps", r_steps, "Sweep points (>= 2)")
      ->capture_default_str();
  app.add_option("--cutoff", cutoff, "Fock cutoff per mode, or auto")
      ->capture_default_str();
  app.add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--samples", samples, "Monte Carlo samples per point")
      ->capture_default_str();
  app.add_option("--etas", etas,
                 "Concentration angles in (0, pi/2); default pi/8,pi/6,pi/4,pi/3")
      ->delimiter(',');
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output, "Output file (default stdout)");
  app.add_option("--threads", threads, "Worker threads, 0 = all cores")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  int cutoff_value = 0;
  if (cutoff != "auto") {
    try {
      std::size_t used = 0;
      cutoff_value = std::stoi(cutoff, &used);
      if (used != cutoff.size() || cutoff_value < 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      std::cerr << "ecs: --cutoff must be a positive integer or 'auto'\n";
      return kExitConfig;
    }
  }

  ecs_run_config* raw_config = nullptr;
  ecs_status status = ecs_run_config_create(command.c_str(), &raw_config);
  if (status != ECS_OK) return Report(status);
  std::unique_ptr<ecs_run_config, ConfigDeleter> config(raw_config);

  const ecs_status setters[] = {
      ecs_run_config_set_alphas(config.get(), alphas.data(), alphas.size()),
      ecs_run_config_set_sweep(config.get(), r_min, r_max, r_steps),
      ecs_run_config_set_cutoff(config.get(), cutoff_value),
      ecs_run_config_set_seed(config.get(), seed),
      ecs_run_config_set_samples(config.get(), samples),
      ecs_run_config_set_etas(config.get(), etas.data(), etas.size()),
      ecs_run_config_set_format(config.get(), format.c_str()),
      ecs_run_config_set_threads(config.get(), threads),
  };
  for (ecs_status s : setters) {
    if (s != ECS_OK) return Report(s);
  }

  ecs_buffer* raw_buffer = nullptr;
  int all_passed = 1;
  status = ecs_run(config.get(), &raw_buffer, &all_passed);
  if (status != ECS_OK) return Report(status);
  std::unique_ptr<ecs_buffer, BufferDeleter> buffer(raw_buffer);

  const char* data = ecs_buffer_data(buffer.get());
  const std::size_t size = ecs_buffer_size(buffer.get());
  if (output.empty() || output == "-") {
    std::cout.write(data, static_cast<std::streamsize>(size));
    std::cout.flush();
    if (!std::cout) {
      std::cerr << "ecs: failed to write to stdout\n";
      return kExitIo;
    }
  } else {
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    out.write(data, static_cast<std::streamsize>(size));
    out.close();
    if (!out) {
      std::cerr << "ecs: cannot write " << output << "\n";
      return kExitIo;
    }
  }
  return all_passed ? kExitOk : kExitReportFailed;
}
