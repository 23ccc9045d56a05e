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
#include "icsq/correlation.hpp"

#include <cmath>

#include "icsq/error.hpp"
#include "icsq/feasibility.hpp"
#include "icsq/quantum.hpp"
#include "icsq/standard.hpp"

namespace icsq::bell {

namespace {

constexpr double kTableTol = 1e-9;

std::size_t outcome_index(int value) {
    return value == 1 ? 0 : 1;
}

}  // namespace

JointDistribution singlet_joint(double alpha, double beta) {
    static const QuantumStructure singlet = standard::singlet();
    const Configuration joint = tensor_config(standard::spin_axis(alpha, 0.0, "alice"),
                                              standard::spin_axis(beta, 0.0, "bob"));
    const OutcomeDistribution dist = born_probabilities(singlet, joint);
    // tensor_config orders labels (up,up), (up,down), (down,up), (down,down).
    const auto &e = dist.entries();
    return JointDistribution{{{e[0].probability, e[1].probability}, {e[2].probability, e[3].probability}}};
}

double expectation(const JointDistribution &p) {
    return p[0][0] + p[1][1] - p[0][1] - p[1][0];
}

double correlation(double alpha, double beta) {
    return expectation(singlet_joint(alpha, beta));
}

double chsh_value(const AngleSettings &s) {
    return correlation(s.a, s.b) - correlation(s.a, s.b_prime) + correlation(s.a_prime, s.b) +
           correlation(s.a_prime, s.b_prime);
}

LHVStrategy strategy_from_index(std::size_t index) {
    auto bit = [&](std::size_t k) { return ((index >> k) & 1U) ? -1 : 1; };
    return LHVStrategy{{bit(0), bit(1)}, {bit(2), bit(3)}};
}

double classical_chsh_value(const LHVStrategy &s) {
    return s.alice[0] * s.bob[0] - s.alice[0] * s.bob[1] + s.alice[1] * s.bob[0] + s.alice[1] * s.bob[1];
}

LhvMaximum lhv_max_chsh() {
    LhvMaximum result;
    result.max = -1.0;
    for (std::size_t k = 0; k < 16; ++k) {
        const LHVStrategy s = strategy_from_index(k);
        const double value = classical_chsh_value(s);
        result.table.emplace_back(s, value);
        if (std::abs(value) > result.max) {
            result.max = std::abs(value);
            result.witness = s;
        }
    }
    return result;
}

CorrelationTable singlet_table(const AngleSettings &s) {
    CorrelationTable t;
    const std::array<double, 2> alice{s.a, s.a_prime};
    const std::array<double, 2> bob{s.b, s.b_prime};
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            t.p[x][y] = singlet_joint(alice[x], bob[y]);
        }
    }
    return t;
}

CorrelationTable deterministic_table(const LHVStrategy &s) {
    CorrelationTable t;
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            t.p[x][y][outcome_index(s.alice[x])][outcome_index(s.bob[y])] = 1.0;
        }
    }
    return t;
}

CorrelationTable mixture_table(const std::array<double, 16> &weights) {
    CorrelationTable t;
    for (std::size_t k = 0; k < 16; ++k) {
        const CorrelationTable d = deterministic_table(strategy_from_index(k));
        for (std::size_t x = 0; x < 2; ++x) {
            for (std::size_t y = 0; y < 2; ++y) {
                for (std::size_t i = 0; i < 2; ++i) {
                    for (std::size_t j = 0; j < 2; ++j) {
                        t.p[x][y][i][j] += weights[k] * d.p[x][y][i][j];
                    }
                }
            }
        }
    }
    return t;
}

void validate_table(const CorrelationTable &t) {
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            double total = 0.0;
            for (const auto &row : t.p[x][y]) {
                for (double v : row) {
                    if (!std::isfinite(v) || v < -kTableTol) {
                        throw Error(ErrorKind::MalformedTable, "negative or non-finite probability");
                    }
                    total += v;
                }
            }
            if (std::abs(total - 1.0) > kTableTol) {
                throw Error(ErrorKind::MalformedTable, "joint distribution does not sum to 1");
            }
        }
    }
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t i = 0; i < 2; ++i) {
            const double m0 = t.p[x][0][i][0] + t.p[x][0][i][1];
            const double m1 = t.p[x][1][i][0] + t.p[x][1][i][1];
            if (std::abs(m0 - m1) > kTableTol) {
                throw Error(ErrorKind::MalformedTable, "Alice's marginal depends on Bob's setting");
            }
        }
    }
    for (std::size_t y = 0; y < 2; ++y) {
        for (std::size_t j = 0; j < 2; ++j) {
            const double m0 = t.p[0][y][0][j] + t.p[0][y][1][j];
            const double m1 = t.p[1][y][0][j] + t.p[1][y][1][j];
            if (std::abs(m0 - m1) > kTableTol) {
                throw Error(ErrorKind::MalformedTable, "Bob's marginal depends on Alice's setting");
            }
        }
    }
}

JointExistence joint_distribution_exists(const CorrelationTable &table) {
    validate_table(table);
    // One equation per (x, y, i, j): total weight of assignments that give
    // outcome i at Alice's setting x and j at Bob's setting y.
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    std::vector<double> row(16, 0.0);
                    for (std::size_t k = 0; k < 16; ++k) {
                        const LHVStrategy s = strategy_from_index(k);
                        if (outcome_index(s.alice[x]) == i && outcome_index(s.bob[y]) == j) {
                            row[k] = 1.0;
                        }
                    }
                    a.push_back(std::move(row));
                    b.push_back(table.p[x][y][i][j]);
                }
            }
        }
    }
    JointExistence result;
    if (auto x = find_nonnegative_solution(a, b, kTableTol)) {
        result.exists = true;
        std::array<double, 16> w{};
        for (std::size_t k = 0; k < 16; ++k) {
            w[k] = (*x)[k];
        }
        result.witness = w;
    }
    return result;
}

}  // namespace icsq::bell
