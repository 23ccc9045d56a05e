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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "icsq/diagnostic.hpp"
#include "icsq/quantum.hpp"

// Abstract syntax for .icsq scenario files. Every node carries the span it
// was parsed from; spans do not take part in structural comparison (see
// strip_spans).
namespace icsq::lang {

struct Ident {
    std::string name;
    Span span;

    bool operator==(const Ident &) const = default;
};

/// `pair.left` -> {pair, left}.
struct SystemRef {
    std::vector<Ident> path;

    std::string str() const;
    bool operator==(const SystemRef &) const = default;
};

/// An outcome label: a bare identifier or a parenthesised tuple of labels.
struct Outcome {
    std::string name;
    std::vector<Outcome> parts;
    bool tuple = false;
    Span span;

    /// Canonical label text: `up` or `(up,down)`.
    std::string label() const;
    bool operator==(const Outcome &) const = default;
};

using ComplexRow = std::vector<Complex>;
using ComplexTable = std::vector<ComplexRow>;

struct BuiltinCall {
    Ident name;
    std::vector<double> args;

    bool operator==(const BuiltinCall &) const = default;
};

struct AmplitudeTable {
    std::vector<Complex> amplitudes;
    bool operator==(const AmplitudeTable &) const = default;
};

struct DensityTable {
    ComplexTable rows;
    bool operator==(const DensityTable &) const = default;
};

struct SystemDecl {
    Ident id;
    std::uint64_t dim = 0;
    /// Factor systems for a composite, in tensor order. Empty for a simple system.
    std::vector<Ident> factors;
    Span span;

    bool operator==(const SystemDecl &) const = default;
};

struct StructureDecl {
    Ident id;
    SystemRef over;
    std::variant<BuiltinCall, AmplitudeTable, DensityTable> body;
    Span span;

    bool operator==(const StructureDecl &) const = default;
};

struct EffectEntry {
    Outcome label;
    ComplexTable matrix;
    Span span;

    bool operator==(const EffectEntry &) const = default;
};

struct EffectTable {
    ConfigKind kind = ConfigKind::projective;
    std::vector<EffectEntry> effects;

    bool operator==(const EffectTable &) const = default;
};

struct ConfigDecl {
    Ident id;
    SystemRef over;
    std::variant<BuiltinCall, EffectTable> body;
    Span span;

    bool operator==(const ConfigDecl &) const = default;
};

enum class BridgeKind { physical, epistemic };

struct BridgeMapping {
    Outcome from;
    /// Outcome label of the bridging configuration; may itself be a tuple.
    Outcome to;
    Span span;

    bool operator==(const BridgeMapping &) const = default;
};

struct BridgeDecl {
    Ident id;
    BridgeKind kind = BridgeKind::physical;
    /// The configuration C* the bridge instantiates.
    Ident config;
    std::vector<BridgeMapping> maps;
    Span span;

    bool operator==(const BridgeDecl &) const = default;
};

enum class NodeKind { yields, intrinsic_yields, composite, joint_request };

struct StatementNode {
    NodeKind kind = NodeKind::yields;
    SystemRef subject;
    /// yields: the configuration; joint_request: the first configuration.
    std::optional<Ident> config;
    /// joint_request only.
    std::optional<Ident> config2;
    std::optional<Outcome> outcome;
    std::vector<StatementNode> children;
    std::optional<Ident> bridge;
    Span span;

    bool operator==(const StatementNode &) const = default;
};

struct Statement {
    Ident id;
    StatementNode node;
    Span span;

    bool operator==(const Statement &) const = default;
};

struct Scenario {
    std::vector<SystemDecl> systems;
    std::vector<StructureDecl> structures;
    std::vector<ConfigDecl> configurations;
    std::vector<Statement> statements;
    std::vector<BridgeDecl> bridges;

    bool operator==(const Scenario &) const = default;
};

std::string_view to_string(NodeKind kind);

/// Copy of `scenario` with every span reset, for structural comparison.
Scenario strip_spans(Scenario scenario);
bool structurally_equal(const Scenario &a, const Scenario &b);

}  // namespace icsq::lang
