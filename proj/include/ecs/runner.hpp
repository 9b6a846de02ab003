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

// Sweep driver shared by the CLI and the C API. A RunConfig selects one
// command; Run produces the full output text so callers only deal with I/O.

#ifndef ECS_RUNNER_HPP_
#define ECS_RUNNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ecs {

enum class Command {
  kFig2a,
  kFig2b,
  kFig3,
  kBellMeas,
  kTeleportMc,
  kConcentrate,
  kCv,
  kReport,
};

enum class OutputFormat { kCsv, kJson };

std::optional<Command> ParseCommand(std::string_view name);
std::string_view ToString(Command command);
std::optional<OutputFormat> ParseFormat(std::string_view name);

struct RunConfig {
  Command command = Command::kFig2b;
  std::vector<double> alphas{0.1, 1.0, 2.0};
  double r_min = 0.0;
  double r_max = 0.995;
  int r_steps = 200;
  int cutoff = 0;  // 0 = automatic
  std::uint64_t seed = 42;
  std::uint64_t samples = 10000;
  // concentrate only; empty = pi/8, pi/6, pi/4, pi/3
  std::vector<double> etas;
  OutputFormat format = OutputFormat::kCsv;
  int threads = 0;  // 0 = hardware concurrency
};

// Throws Error(kInvalidArgument or kDegenerateBasis).
void Validate(const RunConfig& config);

std::vector<double> SweepPoints(double lo, double hi, int steps);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Table RunTable(const RunConfig& config);

// CSV: header row, 17 significant digits. JSON: array of objects.
std::string Render(const Table& table, OutputFormat format);

std::string Run(const RunConfig& config);

// Set by the report command: true when every criterion passed.
struct RunOutcome {
  std::string text;
  bool all_passed = true;
};
RunOutcome RunWithOutcome(const RunConfig& config);

}  // namespace ecs

#endif  // ECS_RUNNER_HPP_
