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
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "icsq/correlation.hpp"
#include "icsq/error.hpp"
#include "oracle.hpp"

namespace {

using namespace icsq::bell;
constexpr double kPi = std::numbers::pi;

TEST(SingletJoint, EqualSettingsAnticorrelate) {
    const auto p = singlet_joint(0.4, 0.4);
    EXPECT_NEAR(p[0][1], 0.5, 1e-12);
    EXPECT_NEAR(p[1][0], 0.5, 1e-12);
    EXPECT_NEAR(p[0][0], 0.0, 1e-12);
    EXPECT_NEAR(p[1][1], 0.0, 1e-12);
}

TEST(SingletJoint, OrthogonalSettingsAreUniform) {
    const auto p = singlet_joint(kPi / 2, 0.0);
    for (const auto &row : p)
        for (double v : row) EXPECT_NEAR(v, 0.25, 1e-12);
}

TEST(SingletJoint, SameOutcomeAtSixtyDegrees) {
    const auto p = singlet_joint(kPi / 3, 0.0);
    // Frozen from the numpy oracle; equals 1/2 sin^2(pi/6).
    EXPECT_NEAR(p[0][0], 0.125, 1e-12);
    EXPECT_NEAR(p[0][0], 0.5 * std::pow(std::sin(kPi / 6), 2), 1e-12);
    const auto q = oracle::singlet_joint(kPi / 3, 0.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_NEAR(p[i][j], q[i][j], 1e-12);
}

TEST(Correlation, KnownValues) {
    EXPECT_NEAR(correlation(1.0, 1.0), -1.0, 1e-12);
    EXPECT_NEAR(correlation(kPi / 2, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(correlation(kPi / 3, 0.0), -0.5, 1e-12);
}

TEST(Chsh, TsirelsonSettings) {
    const double s = chsh_value({0.0, kPi / 2, kPi / 4, 3 * kPi / 4});
    EXPECT_NEAR(std::abs(s), 2.0 * std::sqrt(2.0), 1e-9);
}

TEST(Chsh, DegenerateSettings) {
    EXPECT_NEAR(std::abs(chsh_value({0.3, 0.3, 0.3, 0.3})), 2.0, 1e-12);
}

TEST(Lhv, ExhaustiveMaximumIsTwo) {
    const auto r = lhv_max_chsh();
    EXPECT_EQ(r.max, 2.0);
    EXPECT_EQ(std::abs(classical_chsh_value(r.witness)), 2.0);
    ASSERT_EQ(r.table.size(), 16u);
    for (const auto &[strategy, value] : r.table) EXPECT_EQ(std::abs(value), 2.0);
}

TEST(Lhv, StrategyIndexing) {
    EXPECT_EQ(strategy_from_index(0), (LHVStrategy{{1, 1}, {1, 1}}));
    EXPECT_EQ(strategy_from_index(0b1010), (LHVStrategy{{1, -1}, {1, -1}}));
}

TEST(Tables, DeterministicTableIsAPointMass) {
    const LHVStrategy s = strategy_from_index(6);
    const auto t = deterministic_table(s);
    EXPECT_NO_THROW(validate_table(t));
    const auto r = joint_distribution_exists(t);
    ASSERT_TRUE(r.exists);
    ASSERT_TRUE(r.witness);
    EXPECT_NEAR((*r.witness)[6], 1.0, 1e-12);
}

TEST(Tables, TsirelsonTableHasNoJointDistribution) {
    const auto t = singlet_table({0.0, kPi / 2, kPi / 4, 3 * kPi / 4});
    EXPECT_FALSE(joint_distribution_exists(t).exists);
}

TEST(Tables, EqualSettingsEmbed) {
    const auto t = singlet_table({0.7, 0.7, 0.7, 0.7});
    const auto r = joint_distribution_exists(t);
    ASSERT_TRUE(r.exists);
    const auto back = mixture_table(*r.witness);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) EXPECT_NEAR(back.p[x][y][i][j], t.p[x][y][i][j], 1e-9);
}

TEST(Tables, MalformedTablesAreRejected) {
    CorrelationTable bad = deterministic_table(strategy_from_index(0));
    bad.p[0][0][0][0] = 0.9;
    EXPECT_THROW(validate_table(bad), icsq::Error);

    // Normalised but signalling: Alice's marginal at x = 0 depends on y.
    CorrelationTable sig = deterministic_table(strategy_from_index(0));
    sig.p[0][1] = {{{0.0, 0.0}, {1.0, 0.0}}};
    try {
        (void)joint_distribution_exists(sig);
        FAIL();
    } catch (const icsq::Error &e) {
        EXPECT_EQ(e.kind(), icsq::ErrorKind::MalformedTable);
    }

    CorrelationTable neg = singlet_table({0, 0, 0, 0});
    neg.p[1][1][0][0] = -0.1;
    neg.p[1][1][1][1] = 0.1;
    EXPECT_THROW(validate_table(neg), icsq::Error);
}

}  // namespace
