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
#include <string>

#include <gtest/gtest.h>

#include "icsq/error.hpp"
#include "icsq/ks.hpp"
#include "oracle.hpp"

namespace {

using namespace icsq::ks;

KSInstance parse(const std::string &text) {
    return parse_instance(text);
}

const char *const kBasis3 = "dim 3\nray 0 1 0 0\nray 1 0 1 0\nray 2 0 0 1\ncontext 0 1 2\n";

TEST(Instance, SingleBasisIsValid) {
    EXPECT_TRUE(verify_instance(parse(kBasis3)).empty());
}

TEST(Instance, RepeatedRayIsNotOrthogonal) {
    const auto issues = verify_instance(parse("dim 3\nray 0 1 0 0\nray 1 0 1 0\ncontext 0 0 1\n"));
    ASSERT_FALSE(issues.empty());
    EXPECT_NE(issues[0].message.find("not orthogonal"), std::string::npos);
    EXPECT_EQ(issues[0].context, 0u);
}

TEST(Instance, OtherViolations) {
    EXPECT_FALSE(verify_instance(parse("dim 3\nray 0 1 1 0\n")).empty());
    EXPECT_FALSE(verify_instance(parse("dim 3\nray 0 1 0 0\nray 1 0 1 0\ncontext 0 1\n")).empty());
    EXPECT_FALSE(verify_instance(parse("dim 3\nray 0 1 0 0\ncontext 0 1 2\n")).empty());
    EXPECT_FALSE(verify_instance(parse("dim 2\nray 0 1 0\nray 1 0 1\ncontext 0 1\n")).empty());
}

TEST(Instance, ComplexComponents) {
    const auto inst = parse("dim 3\nray 0 0.6,0.8 0 0\nray 1 0 0,1 0\nray 2 0 0 1\ncontext 0 1 2 # done\n");
    EXPECT_TRUE(verify_instance(inst).empty());
    EXPECT_EQ(inst.rays[0](0), std::complex<double>(0.6, 0.8));
}

TEST(Instance, FormatErrors) {
    EXPECT_THROW(parse("ray 0 1 0 0\n"), icsq::Error);
    EXPECT_THROW(parse("dim 3\nray 1 1 0 0\n"), icsq::Error);
    EXPECT_THROW(parse("dim 3\nray 0 1 0\n"), icsq::Error);
    EXPECT_THROW(parse("dim 3\nray 0 1 x 0\n"), icsq::Error);
    EXPECT_THROW(parse("dim 3\nbasis 0 1 2\n"), icsq::Error);
    EXPECT_THROW(parse(""), icsq::Error);
}

TEST(Instance, FormatRoundTrips) {
    for (const auto &[name, inst] : builtin_instances()) {
        const auto again = parse_instance(format_instance(inst));
        ASSERT_EQ(again.rays.size(), inst.rays.size()) << name;
        for (std::size_t i = 0; i < inst.rays.size(); ++i) EXPECT_EQ(again.rays[i], inst.rays[i]);
        EXPECT_EQ(again.contexts, inst.contexts);
    }
}

TEST(Color, SingleBasis) {
    const auto inst = parse(kBasis3);
    const auto r = color(inst);
    ASSERT_TRUE(r.colorable);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ((*r.witness)[0] + (*r.witness)[1] + (*r.witness)[2], 1);
    EXPECT_TRUE(verify_coloring(inst, *r.witness));
}

TEST(Color, TwoDisjointContexts) {
    const auto inst = parse(std::string(kBasis3) +
                            "ray 3 0.7071067811865476 0.7071067811865476 0\n"
                            "ray 4 0.7071067811865476 -0.7071067811865476 0\n"
                            "ray 5 0 0 1\n"
                            "context 3 4 5\n");
    // Rays 2 and 5 coincide, so they are not orthogonal; rays 3, 4 are
    // orthogonal to 2. The search must respect that globally.
    const auto r = color(inst);
    ASSERT_TRUE(r.colorable);
    EXPECT_TRUE(verify_coloring(inst, *r.witness));
}

TEST(Color, GlobalOrthogonalityIsEnforced) {
    // Two contexts sharing no ray, where ray 0 is orthogonal to every ray of
    // the second context except through the global constraint.
    const auto inst = parse("dim 3\nray 0 1 0 0\nray 1 0 1 0\nray 2 0 0 1\n"
                            "ray 3 0 0.6 0.8\nray 4 0 0.8 -0.6\nray 5 1 0 0\n"
                            "context 0 1 2\ncontext 3 4 5\n");
    const auto r = color(inst);
    ASSERT_TRUE(r.colorable);
    const auto &w = *r.witness;
    EXPECT_FALSE(w[0] == 1 && (w[3] == 1 || w[4] == 1));
    Coloring bad(6, 0);
    bad[0] = 1;
    bad[3] = 1;
    EXPECT_FALSE(verify_coloring(inst, bad));
}

TEST(Builtins, Lookup) {
    const auto cab = find_builtin("cabello-18");
    ASSERT_TRUE(cab);
    EXPECT_EQ(cab->dim, 4u);
    EXPECT_EQ(cab->rays.size(), 18u);
    EXPECT_EQ(cab->contexts.size(), 9u);
    const auto peres = find_builtin("peres-33");
    ASSERT_TRUE(peres);
    EXPECT_EQ(peres->dim, 3u);
    EXPECT_EQ(peres->rays.size(), 33u);
    EXPECT_FALSE(find_builtin("mermin-9"));
    for (const auto &[name, inst] : builtin_instances()) EXPECT_TRUE(verify_instance(inst).empty()) << name;
}

TEST(Builtins, CabelloIsNotColorable) {
    const auto cab = *find_builtin("cabello-18");
    EXPECT_TRUE(oracle::parity_obstruction(cab.rays.size(), cab.contexts));
    const auto r = color(cab);
    EXPECT_FALSE(r.colorable);
    EXPECT_FALSE(r.witness);
    EXPECT_GT(r.nodes_explored, 0u);
    EXPECT_EQ(color(cab).nodes_explored, r.nodes_explored);
}

TEST(Builtins, CabelloDeletionsAreColorable) {
    const auto cab = *find_builtin("cabello-18");
    for (std::size_t c = 0; c < cab.contexts.size(); ++c) {
        const auto reduced = without_context(cab, c);
        EXPECT_FALSE(oracle::parity_obstruction(reduced.rays.size(), reduced.contexts));
        const auto r = color(reduced);
        ASSERT_TRUE(r.colorable) << "context " << c;
        EXPECT_TRUE(verify_coloring(reduced, *r.witness));
    }
    EXPECT_THROW(without_context(cab, 9), icsq::Error);
}

TEST(Builtins, PeresIsNotColorable) {
    EXPECT_FALSE(color(*find_builtin("peres-33")).colorable);
}

}  // namespace
