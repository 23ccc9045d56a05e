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
#include <numbers>
#include <string>

#include <benchmark/benchmark.h>

#include "icsq/cases.hpp"
#include "icsq/checker.hpp"
#include "icsq/correlation.hpp"
#include "icsq/ks.hpp"
#include "icsq/parser.hpp"
#include "icsq/quantum.hpp"
#include "icsq/standard.hpp"

namespace {

using namespace icsq;

void BM_BornSinglet(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(bell::singlet_joint(0.3, 1.1));
}
BENCHMARK(BM_BornSinglet);

void BM_Sample(benchmark::State &state) {
    const auto z_up = standard::spin_state(0.0, 0.0);
    const auto x_axis = standard::spin_axis(std::numbers::pi / 2, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(sample(z_up, x_axis, 1, static_cast<std::uint64_t>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(100000);

void BM_ParseCaseStudies(benchmark::State &state) {
    const auto all = cases::all_cases();
    std::size_t bytes = 0;
    for (const auto &cs : all) bytes += cs.source.size();
    for (auto _ : state)
        for (const auto &cs : all) benchmark::DoNotOptimize(lang::parse(cs.source));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_ParseCaseStudies);

void BM_CheckCaseStudies(benchmark::State &state) {
    const auto all = cases::all_cases();
    for (auto _ : state)
        for (const auto &cs : all) benchmark::DoNotOptimize(check::check(cs.scenario));
}
BENCHMARK(BM_CheckCaseStudies);

void BM_JointDistributionExists(benchmark::State &state) {
    constexpr double pi = std::numbers::pi;
    const auto table = bell::singlet_table({0.0, pi / 2, pi / 4, 3 * pi / 4});
    for (auto _ : state) benchmark::DoNotOptimize(bell::joint_distribution_exists(table));
}
BENCHMARK(BM_JointDistributionExists);

void BM_KsColor(benchmark::State &state, const char *name) {
    const auto instance = *ks::find_builtin(name);
    for (auto _ : state) benchmark::DoNotOptimize(ks::color(instance));
}
BENCHMARK_CAPTURE(BM_KsColor, cabello_18, "cabello-18");
BENCHMARK_CAPTURE(BM_KsColor, peres_33, "peres-33");

}  // namespace

BENCHMARK_MAIN();
