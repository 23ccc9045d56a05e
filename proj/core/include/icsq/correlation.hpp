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

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

// Two-party, two-setting, two-outcome correlation experiments on the spin
// singlet, and the classical (local hidden variable) side of the CHSH bound.
namespace icsq::bell {

/// Measurement angles in radians, in the x-z plane of the Bloch sphere.
struct AngleSettings {
    double a = 0.0;
    double a_prime = 0.0;
    double b = 0.0;
    double b_prime = 0.0;
};

/// p[i][j] for Alice's outcome i and Bob's outcome j; index 0 is "up"
/// (value +1), index 1 is "down" (value -1).
using JointDistribution = std::array<std::array<double, 2>, 2>;

/// Joint outcome distribution of the singlet with Alice's analyser at
/// `alpha` and Bob's at `beta`, computed by the Born engine.
JointDistribution singlet_joint(double alpha, double beta);

/// E = P(same) - P(different).
double expectation(const JointDistribution &p);
double correlation(double alpha, double beta);

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
double chsh_value(const AngleSettings &settings);

/// Deterministic outcome (+1 / -1) for each local setting; index 0 is the
/// unprimed setting.
struct LHVStrategy {
    std::array<int, 2> alice{1, 1};
    std::array<int, 2> bob{1, 1};

    bool operator==(const LHVStrategy &) const = default;
};

/// The 16 strategies in a fixed order: bit k of `index` set means value -1
/// for, in order, a, a', b, b'.
LHVStrategy strategy_from_index(std::size_t index);
/// The CHSH combination evaluated on a deterministic strategy.
double classical_chsh_value(const LHVStrategy &strategy);

struct LhvMaximum {
    double max = 0.0;
    LHVStrategy witness;
    /// Every strategy with its CHSH value, in enumeration order.
    std::vector<std::pair<LHVStrategy, double>> table;
};

/// Exhaustive maximisation of |S| over deterministic strategies.
LhvMaximum lhv_max_chsh();

/// Joint distributions for each setting pair: p[x][y] with x, y in {0, 1}
/// selecting unprimed / primed settings.
struct CorrelationTable {
    std::array<std::array<JointDistribution, 2>, 2> p{};

    double expectation(std::size_t x, std::size_t y) const {
        return bell::expectation(p[x][y]);
    }
};

CorrelationTable singlet_table(const AngleSettings &settings);
CorrelationTable deterministic_table(const LHVStrategy &strategy);

/// Throws Error(MalformedTable) on negative entries, bad normalisation or
/// signalling marginals (tolerance 1e-9).
void validate_table(const CorrelationTable &table);

struct JointExistence {
    bool exists = false;
    /// Weights over the 16 global assignments (see strategy_from_index).
    std::optional<std::array<double, 16>> witness;
};

/// Decides whether some distribution over global assignments (a, a', b, b')
/// reproduces every measured joint distribution.
JointExistence joint_distribution_exists(const CorrelationTable &table);

/// The table produced by a mixture of deterministic strategies.
CorrelationTable mixture_table(const std::array<double, 16> &weights);

}  // namespace icsq::bell
