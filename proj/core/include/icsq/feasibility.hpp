// Copyright 2026 The icsq Authors
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
#pragma once

#include <optional>
#include <vector>

namespace icsq {

/// Finds x >= 0 with A x = b by phase-one simplex (Bland's rule), or
/// reports infeasibility. A system counts as feasible when the minimal total
/// artificial slack is at most `tol`. Dense; meant for a few dozen variables.
std::optional<std::vector<double>> find_nonnegative_solution(const std::vector<std::vector<double>> &a,
                                                             const std::vector<double> &b, double tol = 1e-9);

}  // namespace icsq
