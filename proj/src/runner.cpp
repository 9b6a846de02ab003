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

#include "ecs/runner.hpp"

#include <algorithm>
#include <cmath>
#include <locale>
#include <numbers>
#include <sstream>

#include "ecs/acceptance.hpp"
#include "ecs/decoherence.hpp"
#include "ecs/entanglement_metrics.hpp"
#include "ecs/error.hpp"
#include "ecs/protocols.hpp"
#include "json.hpp"

namespace ecs {
namespace {

constexpr double kCvGridMax = 3.0;

struct CommandName {
  Command command;
  std::string_view name;
};

constexpr CommandName kCommands[] = {
    {Command::kFig2a, "fig2a"},
    {Command::kFig2b, "fig2b"},
    {Command::kFig3, "fig3"},
    {Command::kBellMeas, "bellmeas"},
    {Command::kTeleportMc, "teleport-mc"},
    {Command::kConcentrate, "concentrate"},
    {Command::kCv, "cv"},
    {Command::kReport, "report"},
};

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

std::vector<double> Etas(const RunConfig& config) {
  if (!config.etas.empty()) return config.etas;
  constexpr double pi = std::numbers::pi;
  return {pi / 8.0, pi / 6.0, pi / 4.0, pi / 3.0};
}

// The sweep plus the located characteristic time, so the crossing row is
// always present.
std::vector<double> FigureSweep(const RunConfig& config, double alpha) {
  std::vector<double> rs =
      SweepPoints(config.r_min, config.r_max, config.r_steps);
  const double rc = CharacteristicTime(alpha);
  if (rc >= config.r_min && rc <= config.r_max &&
      std::none_of(rs.begin(), rs.end(),
                   [&](double r) { return std::abs(r - rc) < 1e-12; })) {
    rs.insert(std::upper_bound(rs.begin(), rs.end(), rc), rc);
  }
  return rs;
}

Table Fig2a(const RunConfig& config) {
  Table t{{"alpha", "r", "E_closed", "E_numeric"}, {}};
  for (double alpha : config.alphas) {
    for (double r : FigureSweep(config, alpha)) {
      t.rows.push_back({alpha, r, ClosedFormE(alpha, r),
                        NegativityE(ChannelRho4(alpha, r))});
    }
  }
  return t;
}

Table Fig2b(const RunConfig& config) {
  Table t{{"alpha", "r", "f_closed", "f_numeric", "classical_limit"}, {}};
  for (double alpha : config.alphas) {
    for (double r : FigureSweep(config, alpha)) {
      t.rows.push_back({alpha, r, ClosedFormF(alpha, r),
                        OptimalFidelity(ChannelRho4(alpha, r)),
                        kClassicalFidelity});
    }
  }
  return t;
}

Table Fig3(const RunConfig& config) {
  Table t{{"alpha", "r", "S_closed", "S_numeric"}, {}};
  for (double alpha : config.alphas) {
    for (double r : FigureSweep(config, alpha)) {
      t.rows.push_back({alpha, r, ClosedFormS(alpha, r),
                        LinearEntropy(ChannelRho4(alpha, r))});
    }
  }
  return t;
}

Table BellMeas(const RunConfig& config) {
  Table t{{"alpha", "P_i_closed", "P_i_numeric", "tail_bound", "cutoff",
           "b1_as_b3_closed", "b1_as_b3_numeric"},
          {}};
  for (double alpha : config.alphas) {
    const MisidResult m = MisidProbability(alpha, config.cutoff);
    t.rows.push_back({alpha, MisidClosedForm(alpha), m.probability,
                      m.tail_bound, static_cast<std::int64_t>(m.cutoff),
                      ConfusionMassClosedForm(alpha), m.b1_as_b3});
  }
  return t;
}

Table TeleportMc(const RunConfig& config) {
  Table t{{"alpha", "r", "f_analytic", "f_mc", "stderr", "samples", "frame"},
          {}};
  const std::vector<double> rs =
      SweepPoints(config.r_min, config.r_max, config.r_steps);
  std::uint64_t point = 0;
  for (double alpha : config.alphas) {
    for (double r : rs) {
      std::uint64_t state = config.seed + 0x9e3779b97f4a7c15ULL * ++point;
      const std::uint64_t point_seed = SplitMix64(state);
      const TwoQubitDensity rho = ChannelRho4(alpha, r);
      const FrameChoice best = BestCorrectionFrame(rho);
      const MonteCarloResult mc = TeleportMonteCarlo(
          rho, config.samples, point_seed, best.frame, config.threads);
      t.rows.push_back({alpha, r, best.fidelity, mc.mean, mc.std_error,
                        static_cast<std::int64_t>(mc.samples),
                        static_cast<std::int64_t>(best.frame)});
    }
  }
  return t;
}

Table Concentrate(const RunConfig& config) {
  Table t{{"alpha", "eta", "p_ideal_closed", "p1_numeric", "p2_numeric",
           "P2_published", "P2_closed", "P2_numeric", "fidelity_b2"},
          {}};
  const std::vector<double> etas = Etas(config);
  for (double alpha : config.alphas) {
    for (double eta : etas) {
      const ConcentrationResult ideal = ConcentrateIdeal(eta);
      const ExactConcentration exact = ConcentrateExact(alpha, eta);
      t.rows.push_back({alpha, eta, IdealConcentrationProbability(eta),
                        ideal.p1, ideal.p2,
                        PublishedConcentrationProbability(alpha, eta),
                        ConcentrationProbability(alpha, eta),
                        exact.probability, exact.fidelity_to_b2});
    }
  }
  return t;
}

Table Cv(const RunConfig& config) {
  Table t{{"kind", "alpha_r", "f"}, {}};
  for (double x : SweepPoints(0.0, kCvGridMax, config.r_steps)) {
    t.rows.push_back({std::string("sample"), x, CvFidelity(x)});
  }
  const Extremum best = CvMax();
  t.rows.push_back({std::string("max"), best.x, best.value});
  return t;
}

Table Report(bool* all_passed) {
  Table t{{"criterion", "status", "title", "detail"}, {}};
  *all_passed = true;
  for (const CriterionResult& c : RunAcceptanceSuite()) {
    *all_passed = *all_passed && c.passed;
    t.rows.push_back({static_cast<std::int64_t>(c.id),
                      std::string(c.passed ? "PASS" : "FAIL"), c.title,
                      c.detail});
  }
  return t;
}

std::string FormatDouble(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

std::string CsvField(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) return FormatDouble(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  const std::string& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

std::optional<Command> ParseCommand(std::string_view name) {
  for (const auto& c : kCommands) {
    if (c.name == name) return c.command;
  }
  return std::nullopt;
}

std::string_view ToString(Command command) {
  for (const auto& c : kCommands) {
    if (c.command == command) return c.name;
  }
  return "?";
}

std::optional<OutputFormat> ParseFormat(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

void Validate(const RunConfig& config) {
  if (config.alphas.empty()) Invalid("at least one alpha is required");
  if (!std::isfinite(config.r_min) || !std::isfinite(config.r_max) ||
      config.r_min < 0.0 || config.r_max >= 1.0 ||
      config.r_min > config.r_max) {
    Invalid("sweep needs 0 <= r_min <= r_max < 1");
  }
  if (config.r_steps < 2) Invalid("r_steps must be >= 2");
  if (config.samples < 1) Invalid("samples must be >= 1");
  if (config.cutoff < 0) Invalid("cutoff must be >= 0 (0 = auto)");
  if (config.threads < 0) Invalid("threads must be >= 0");
  for (double eta : config.etas) {
    if (!(eta > 0.0 && eta < std::numbers::pi / 2.0)) {
      Invalid("eta must lie in (0, pi/2)");
    }
  }
  const double t_min = std::sqrt(1.0 - config.r_max * config.r_max);
  for (double alpha : config.alphas) {
    if (!std::isfinite(alpha) || alpha <= 0.0) Invalid("alpha must be > 0");
    LogicalBasis::Make(alpha, 1.0);
    if (config.command == Command::kFig2a ||
        config.command == Command::kFig2b ||
        config.command == Command::kFig3 ||
        config.command == Command::kTeleportMc) {
      LogicalBasis::Make(alpha, t_min);
    }
  }
}

std::vector<double> SweepPoints(double lo, double hi, int steps) {
  if (steps < 2) Invalid("sweep needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  out.back() = hi;
  return out;
}

Table RunTable(const RunConfig& config) {
  bool ignored = true;
  switch (config.command) {
    case Command::kFig2a: return Fig2a(config);
    case Command::kFig2b: return Fig2b(config);
    case Command::kFig3: return Fig3(config);
    case Command::kBellMeas: return BellMeas(config);
    case Command::kTeleportMc: return TeleportMc(config);
    case Command::kConcentrate: return Concentrate(config);
    case Command::kCv: return Cv(config);
    case Command::kReport: return Report(&ignored);
  }
  Invalid("unknown command");
}

std::string Render(const Table& table, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
      }
      records.push_back(std::move(obj));
    }
    return records.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += CsvField(row[i]);
    }
    out += '\n';
  }
  return out;
}

RunOutcome RunWithOutcome(const RunConfig& config) {
  Validate(config);
  RunOutcome outcome;
  if (config.command == Command::kReport) {
    outcome.text = Render(Report(&outcome.all_passed), config.format);
  } else {
    outcome.text = Render(RunTable(config), config.format);
  }
  return outcome;
}

std::string Run(const RunConfig& config) { return RunWithOutcome(config).text; }

}  // namespace ecs
