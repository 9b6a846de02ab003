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

// Acceptance suite: one check per published claim, shared by the report
// command and the acceptance test binary.

#ifndef ECS_ACCEPTANCE_HPP_
#define ECS_ACCEPTANCE_HPP_

#include <string>
#include <vector>

namespace ecs {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

// id in 1..kCriterionCount.
CriterionResult RunCriterion(int id);
std::vector<CriterionResult> RunAcceptanceSuite();

}  // namespace ecs

#endif  // ECS_ACCEPTANCE_HPP_
