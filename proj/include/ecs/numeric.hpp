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

#ifndef ECS_NUMERIC_HPP_
#define ECS_NUMERIC_HPP_

#include <functional>

namespace ecs {

struct Extremum {
  double x;
  double value;
};

// Golden-section search for the maximum of a unimodal function on [lo, hi].
Extremum GoldenSectionMaximize(const std::function<double(double)>& f,
                               double lo, double hi, double tol);

// Root of f on [lo, hi] by bisection. Throws kNumericGuard without a sign
// change.
double Bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol);

}  // namespace ecs

#endif  // ECS_NUMERIC_HPP_
