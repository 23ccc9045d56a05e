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
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "icsq/cases.hpp"
#include "icsq/parser.hpp"

namespace {

using namespace icsq;
using namespace icsq::lang;

Scenario parse_ok(std::string_view text) {
    auto r = parse(text);
    EXPECT_TRUE(r.ok()) << (r.errors.empty() ? "" : r.errors.front().message);
    return r.ok() ? *r.scenario : Scenario{};
}

TEST(Parse, EmptyInput) {
    const Scenario s = parse_ok("");
    EXPECT_TRUE(s.systems.empty());
    EXPECT_TRUE(s.structures.empty());
    EXPECT_TRUE(s.configurations.empty());
    EXPECT_TRUE(s.statements.empty());
    EXPECT_TRUE(s.bridges.empty());
    EXPECT_TRUE(parse_ok("  # only a comment\n// and another\n").statements.empty());
}

TEST(Parse, RelativeYields) {
    const Scenario s = parse_ok("statement s1 { yields(particle, z_axis) = up }");
    ASSERT_EQ(s.statements.size(), 1u);
    const StatementNode &n = s.statements[0].node;
    EXPECT_EQ(s.statements[0].id.name, "s1");
    EXPECT_EQ(n.kind, NodeKind::yields);
    EXPECT_EQ(n.subject.str(), "particle");
    ASSERT_TRUE(n.config.has_value());
    EXPECT_EQ(n.config->name, "z_axis");
    EXPECT_EQ(n.outcome->label(), "up");
}

TEST(Parse, IntrinsicFormIsNotASyntaxError) {
    const Scenario s = parse_ok("statement bad { yields(particle) = up }");
    ASSERT_EQ(s.statements.size(), 1u);
    EXPECT_EQ(s.statements[0].node.kind, NodeKind::intrinsic_yields);
    EXPECT_FALSE(s.statements[0].node.config.has_value());
}

TEST(Parse, CompositeJointAndPaths) {
    const Scenario s = parse_ok(R"(
statement c {
  compose {
    yields(pair.left, a) = up
    compose { yields(pair.right, b) = (up, down)  yields(pair, c) = x }
  } using door
}
statement j { joint(lab.record, c1, c2) }
)");
    ASSERT_EQ(s.statements.size(), 2u);
    const StatementNode &c = s.statements[0].node;
    EXPECT_EQ(c.kind, NodeKind::composite);
    ASSERT_EQ(c.children.size(), 2u);
    EXPECT_EQ(c.children[0].subject.str(), "pair.left");
    EXPECT_EQ(c.children[1].kind, NodeKind::composite);
    EXPECT_EQ(c.children[1].children[0].outcome->label(), "(up,down)");
    EXPECT_EQ(c.bridge->name, "door");
    const StatementNode &j = s.statements[1].node;
    EXPECT_EQ(j.kind, NodeKind::joint_request);
    EXPECT_EQ(j.subject.str(), "lab.record");
    EXPECT_EQ(j.config->name, "c1");
    EXPECT_EQ(j.config2->name, "c2");
}

TEST(Parse, Declarations) {
    const Scenario s = parse_ok(R"(
system a dim 2
system b dim 3
system ab dim 6 = a x b
structure psi over a builtin spin(1.5, 0.25)
structure amp over a [0.6, 0.8i]
structure mix over b density [[0.5, 0, 0], [0, 0.25 + 0.25i, 0], [0, 0, -1 - 2i]]
config z over a builtin spin(0, 0)
config lit over a povm { yes = [[0.5, 0], [0, 0.5]] no = [[0.5, 0], [0, 0.5]] }
bridge door epistemic via z { (up, down) -> yes  up -> no }
)");
    ASSERT_EQ(s.systems.size(), 3u);
    EXPECT_EQ(s.systems[2].dim, 6u);
    ASSERT_EQ(s.systems[2].factors.size(), 2u);
    EXPECT_EQ(s.systems[2].factors[1].name, "b");
    const auto &call = std::get<BuiltinCall>(s.structures[0].body);
    EXPECT_EQ(call.name.name, "spin");
    EXPECT_EQ(call.args, (std::vector<double>{1.5, 0.25}));
    const auto &amp = std::get<AmplitudeTable>(s.structures[1].body);
    EXPECT_EQ(amp.amplitudes[1], Complex(0, 0.8));
    const auto &mix = std::get<DensityTable>(s.structures[2].body);
    EXPECT_EQ(mix.rows[1][1], Complex(0.25, 0.25));
    EXPECT_EQ(mix.rows[2][2], Complex(-1, -2));
    const auto &table = std::get<EffectTable>(s.configurations[1].body);
    EXPECT_EQ(table.kind, ConfigKind::povm);
    EXPECT_EQ(table.effects[1].label.label(), "no");
    EXPECT_EQ(s.bridges[0].kind, BridgeKind::epistemic);
    EXPECT_EQ(s.bridges[0].maps[0].from.label(), "(up,down)");
    EXPECT_EQ(s.bridges[0].maps[1].to.label(), "no");
}

TEST(Parse, SyntaxErrorsCarryPositionsAndRecover) {
    const auto r = parse("system a dim\nstatement x { yields(a = }\nsystem b dim 2\nsystem c dim zero\n");
    ASSERT_FALSE(r.ok());
    ASSERT_EQ(r.errors.size(), 3u);
    for (const auto &e : r.errors) EXPECT_EQ(e.code, DiagCode::P001);
    EXPECT_EQ(r.errors[0].span.line, 2u);
    EXPECT_EQ(r.errors[0].span.col, 1u);
    EXPECT_EQ(r.errors[1].span.line, 2u);
    EXPECT_EQ(r.errors[1].span.col, 24u);
    EXPECT_NE(r.errors[1].message.find("expected ')'"), std::string::npos);
    EXPECT_EQ(r.errors[2].span.line, 4u);
}

TEST(Parse, DuplicateIdentifiersPerNamespace) {
    auto r = parse("system a dim 2\nsystem a dim 3\n");
    ASSERT_EQ(r.errors.size(), 1u);
    EXPECT_EQ(r.errors[0].code, DiagCode::P002);
    EXPECT_EQ(r.errors[0].span.line, 2u);
    // A system and a configuration may share a name.
    EXPECT_TRUE(parse("system a dim 2\nconfig a over a builtin spin(0, 0)\n").ok());
    EXPECT_EQ(parse("statement s { joint(a, b, c) }\nstatement s { joint(a, b, c) }").errors.at(0).code,
              DiagCode::P002);
}

TEST(Parse, StructuralRejections) {
    EXPECT_FALSE(parse("statement c { compose { yields(a, c) = up } }").ok());
    EXPECT_FALSE(parse("statement c { compose { yields(a, c) = up joint(a, b, c) } }").ok());
    EXPECT_FALSE(parse("system a dim 0").ok());
    EXPECT_FALSE(parse("system a dim 2 = b").ok());
    EXPECT_FALSE(parse("system a dim 4 = b x b").ok());
    EXPECT_FALSE(parse("statement s { yields(a, c) = up").ok());
    EXPECT_FALSE(parse("structure s over a [0.5 + i]").ok());
    EXPECT_FALSE(parse("\x01\x02").ok());
}

TEST(Parse, NestingAndSizeLimits) {
    std::string deep = "statement d { ";
    for (int i = 0; i < 200; ++i) deep += "compose { yields(a, b) = c ";
    const auto r = parse(deep);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.errors[0].code, DiagCode::P001);

    const std::string huge(kMaxInputBytes + 1, ' ');
    const auto h = parse(huge);
    ASSERT_FALSE(h.ok());
    EXPECT_NE(h.errors[0].message.find("1 MiB"), std::string::npos);
}

TEST(Parse, ErrorCountIsCapped) {
    std::string junk;
    for (int i = 0; i < 500; ++i) junk += "system\n";
    const auto r = parse(junk);
    EXPECT_FALSE(r.ok());
    EXPECT_LE(r.errors.size(), 64u);
}

TEST(Parse, SpansPointIntoTheSource) {
    const std::string src = "\n\n  statement   s { yields(p, c) = up }";
    const Scenario s = parse_ok(src);
    const Span sp = s.statements[0].node.span;
    EXPECT_EQ(sp.line, 3u);
    EXPECT_EQ(src.substr(sp.offset, sp.len), "yields(p, c) = up");
    EXPECT_EQ(sp.col, sp.offset - src.rfind('\n', sp.offset) );
}

TEST(Serialize, RoundTripsBundledScenarios) {
    for (const auto &cs : cases::all_cases()) {
        const std::string text = serialize(cs.scenario);
        const auto again = parse(text);
        ASSERT_TRUE(again.ok()) << cs.name;
        EXPECT_TRUE(structurally_equal(cs.scenario, *again.scenario)) << cs.name;
        EXPECT_EQ(serialize(*again.scenario), text) << cs.name;
    }
}

TEST(Serialize, NumbersRoundTripExactly) {
    for (double v : {0.1, 1.0 / 3.0, 1.5707963267948966, -2.5e-17, 1e300, 0.0, 3.0}) {
        const std::string s = format_number(v);
        EXPECT_EQ(std::stod(s), v) << s;
    }
    EXPECT_EQ(format_number(3.0), "3");
}

}  // namespace
