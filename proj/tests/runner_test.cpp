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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ecs/error.hpp"
#include "ecs/protocols.hpp"
#include "json.hpp"

namespace ecs {
namespace {

std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

RunConfig Config(Command command) {
  RunConfig c;
  c.command = command;
  return c;
}

TEST(ParseTest, CommandsAndFormats) {
  EXPECT_EQ(ParseCommand("teleport-mc"), Command::kTeleportMc);
  EXPECT_EQ(ToString(Command::kFig2a), "fig2a");
  EXPECT_FALSE(ParseCommand("fig4").has_value());
  EXPECT_EQ(ParseFormat("json"), OutputFormat::kJson);
  EXPECT_FALSE(ParseFormat("xml").has_value());
}

TEST(SweepTest, EndpointsAreExact) {
  const auto pts = SweepPoints(0.0, 0.995, 200);
  ASSERT_EQ(pts.size(), 200u);
  EXPECT_EQ(pts.front(), 0.0);
  EXPECT_EQ(pts.back(), 0.995);
  EXPECT_NEAR(pts[1], 0.005, 1e-16);
}

TEST(ValidateTest, RejectsBadConfigs) {
  RunConfig c = Config(Command::kFig2a);
  EXPECT_NO_THROW(Validate(c));
  c.r_max = 1.0;
  EXPECT_THROW(Validate(c), Error);
  c = Config(Command::kFig2a);
  c.r_steps = 1;
  EXPECT_THROW(Validate(c), Error);
  c = Config(Command::kTeleportMc);
  c.samples = 0;
  EXPECT_THROW(Validate(c), Error);
  c = Config(Command::kFig2a);
  c.alphas = {};
  EXPECT_THROW(Validate(c), Error);
  c.alphas = {-1.0};
  EXPECT_THROW(Validate(c), Error);
  c = Config(Command::kConcentrate);
  c.etas = {2.0};
  EXPECT_THROW(Validate(c), Error);
  c = Config(Command::kFig2a);
  c.alphas = {1e-8};
  try {
    Validate(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateBasis);
  }
}

TEST(RunTest, Fig2bContainsCrossingRow) {
  RunConfig c = Config(Command::kFig2b);
  c.alphas = {1.0};
  const auto rows = ParseCsv(ecs::Run(c));
  ASSERT_GT(rows.size(), 200u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"alpha", "r", "f_closed",
                                               "f_numeric", "classical_limit"}));
  bool found = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double r = std::stod(rows[i][1]);
    if (std::abs(r - 1.0 / std::sqrt(2.0)) < 1e-9) {
      found = true;
      EXPECT_NEAR(std::stod(rows[i][2]), 2.0 / 3.0, 1e-6);
      EXPECT_NEAR(std::stod(rows[i][3]), 2.0 / 3.0, 1e-6);
    }
  }
  EXPECT_TRUE(found);
}

TEST(RunTest, ClosedAndNumericColumnsAgree) {
  for (Command cmd : {Command::kFig2a, Command::kFig2b, Command::kFig3}) {
    RunConfig c = Config(cmd);
    c.r_steps = 60;
    const auto rows = ParseCsv(ecs::Run(c));
    for (std::size_t i = 1; i < rows.size(); ++i) {
      EXPECT_NEAR(std::stod(rows[i][2]), std::stod(rows[i][3]), 1e-9)
          << ToString(cmd) << " row " << i;
    }
  }
}

TEST(RunTest, CvReportsMaximumRow) {
  const auto rows = ParseCsv(ecs::Run(Config(Command::kCv)));
  ASSERT_EQ(rows.back()[0], "max");
  EXPECT_NEAR(std::stod(rows.back()[1]), 0.66384, 1e-4);
  EXPECT_NEAR(std::stod(rows.back()[2]), 0.60355, 1e-4);
}

TEST(RunTest, TeleportMcIsDeterministic) {
  RunConfig c = Config(Command::kTeleportMc);
  c.alphas = {1.0};
  c.samples = 1000;
  c.r_steps = 20;
  const std::string a = ecs::Run(c);
  EXPECT_EQ(a, ecs::Run(c));
  c.threads = 2;
  EXPECT_EQ(a, ecs::Run(c));
  c.seed = 43;
  EXPECT_NE(a, ecs::Run(c));
}

TEST(RunTest, CsvUsesSeventeenDigits) {
  RunConfig c = Config(Command::kBellMeas);
  c.alphas = {1.0};
  const auto rows = ParseCsv(ecs::Run(c));
  ASSERT_EQ(rows.size(), 2u);
  // 1/(2(1+e^4)) round-trips exactly through 17 significant digits.
  EXPECT_EQ(std::stod(rows[1][1]), MisidClosedForm(1.0));
  EXPECT_EQ(rows[1][1], "0.0089931049810457776");
}

TEST(RunTest, JsonMirrorsCsv) {
  RunConfig c = Config(Command::kConcentrate);
  c.alphas = {0.5, 1.0};
  const auto csv = ParseCsv(ecs::Run(c));
  c.format = OutputFormat::kJson;
  const auto json = nlohmann::json::parse(ecs::Run(c));
  ASSERT_EQ(json.size() + 1, csv.size());
  for (std::size_t i = 0; i < json.size(); ++i) {
    for (std::size_t k = 0; k < csv[0].size(); ++k) {
      EXPECT_EQ(json[i][csv[0][k]].get<double>(), std::stod(csv[i + 1][k]));
    }
  }
}

TEST(RunTest, ConcentrateNumericMatchesCorrectedForm) {
  const auto rows = ParseCsv(ecs::Run(Config(Command::kConcentrate)));
  ASSERT_EQ(rows[0][6], "P2_closed");
  ASSERT_EQ(rows[0][7], "P2_numeric");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NEAR(std::stod(rows[i][6]), std::stod(rows[i][7]), 1e-12);
    EXPECT_NEAR(std::stod(rows[i][3]), std::stod(rows[i][2]), 1e-14);
  }
}

}  // namespace
}  // namespace ecs
