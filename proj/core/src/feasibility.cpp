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
#include "icsq/feasibility.hpp"

#include <cmath>
#include <cstddef>

#include "icsq/error.hpp"

namespace icsq {

std::optional<std::vector<double>> find_nonnegative_solution(const std::vector<std::vector<double>> &a,
                                                             const std::vector<double> &b, double tol) {
    constexpr double kPivotEps = 1e-12;
    const std::size_t m = a.size();
    if (b.size() != m) {
        throw Error(ErrorKind::InvalidArgument, "row count of A and b differ");
    }
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto &row : a) {
        if (row.size() != n) {
            throw Error(ErrorKind::InvalidArgument, "ragged constraint matrix");
        }
    }
    // Tableau columns: n originals, m artificials, rhs. Row m is the
    // reduced-cost row of the phase-one objective (sum of artificials).
    const std::size_t cols = n + m + 1;
    const std::size_t rhs = n + m;
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = b[i] < 0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = sign * a[i][j];
        }
        t[i][n + i] = 1.0;
        t[i][rhs] = sign * b[i];
        basis[i] = n + i;
        for (std::size_t j = 0; j < n; ++j) {
            t[m][j] -= t[i][j];
        }
        t[m][rhs] -= t[i][rhs];
    }

    const std::size_t max_iterations = 50 * (n + m + 1) * (m + 1);
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < rhs; ++j) {
            if (t[m][j] < -kPivotEps) {
                enter = j;
                break;
            }
        }
        if (enter == cols) {
            break;
        }
        std::size_t leave = m;
        double best = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > kPivotEps) {
                const double ratio = t[i][rhs] / t[i][enter];
                if (leave == m || ratio < best - kPivotEps ||
                    (std::abs(ratio - best) <= kPivotEps && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        }
        if (leave == m) {
            // Unbounded direction; impossible for a phase-one objective >= 0.
            break;
        }
        const double pivot = t[leave][enter];
        for (auto &v : t[leave]) {
            v /= pivot;
        }
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0.0) {
                continue;
            }
            const double f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) {
                t[i][j] -= f * t[leave][j];
            }
        }
        basis[leave] = enter;
    }

    const double infeasibility = -t[m][rhs];
    if (infeasibility > tol) {
        return std::nullopt;
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            x[basis[i]] = std::max(0.0, t[i][rhs]);
        }
    }
    return x;
}

}  // namespace icsq
