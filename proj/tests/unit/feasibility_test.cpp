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
#include <random>

#include <gtest/gtest.h>

#include "icsq/error.hpp"
#include "icsq/feasibility.hpp"

namespace {

using icsq::find_nonnegative_solution;

double residual(const std::vector<std::vector<double>> &a, const std::vector<double> &b, const std::vector<double> &x) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) s += a[i][j] * x[j];
        r = std::max(r, std::abs(s - b[i]));
    }
    return r;
}

TEST(Feasibility, SimplexPoint) {
    const std::vector<std::vector<double>> a{{1, 1, 1}};
    const auto x = find_nonnegative_solution(a, {1.0});
    ASSERT_TRUE(x);
    EXPECT_LT(residual(a, {1.0}, *x), 1e-12);
    for (double v : *x) EXPECT_GE(v, 0.0);
}

TEST(Feasibility, NegativeRightHandSide) {
    const std::vector<std::vector<double>> a{{1, -1}};
    const auto x = find_nonnegative_solution(a, {-2.0});
    ASSERT_TRUE(x);
    EXPECT_NEAR((*x)[1] - (*x)[0], 2.0, 1e-12);
    EXPECT_FALSE(find_nonnegative_solution({{1, 1}}, {-1.0}));
}

TEST(Feasibility, Infeasible) {
    EXPECT_FALSE(find_nonnegative_solution({{1, 1}, {1, 1}}, {1.0, 2.0}));
    EXPECT_FALSE(find_nonnegative_solution({{1, 0}, {0, 1}, {1, 1}}, {0.5, 0.6, 1.0}));
}

TEST(Feasibility, RedundantAndDegenerateRows) {
    const std::vector<std::vector<double>> a{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    const std::vector<double> b{1.0, 1.0, 0.0, 0.0};
    const auto x = find_nonnegative_solution(a, b);
    ASSERT_TRUE(x);
    EXPECT_LT(residual(a, b, *x), 1e-12);
}

TEST(Feasibility, RandomFeasibleSystemsAreSolved) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 8;
        const std::size_t n = m + rng() % 8;
        std::vector<std::vector<double>> a(m, std::vector<double>(n));
        std::vector<double> x0(n);
        for (auto &v : x0) v = (rng() % 3 == 0) ? 0.0 : pos(rng);
        std::vector<double> b(m, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = u(rng);
                b[i] += a[i][j] * x0[j];
            }
        const auto x = find_nonnegative_solution(a, b);
        ASSERT_TRUE(x) << "trial " << trial;
        EXPECT_LT(residual(a, b, *x), 1e-8);
    }
}

TEST(Feasibility, ShapeErrors) {
    EXPECT_THROW(find_nonnegative_solution({{1, 2}, {1}}, {1, 1}), icsq::Error);
    EXPECT_THROW(find_nonnegative_solution({{1, 2}}, {1, 1}), icsq::Error);
    EXPECT_TRUE(find_nonnegative_solution({}, {}));
}

}  // namespace
