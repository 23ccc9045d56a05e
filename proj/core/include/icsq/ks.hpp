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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icsq/quantum.hpp"

// Kochen-Specker instances: unit rays grouped into orthonormal contexts, and
// an exhaustive search for a non-contextual 0/1 value assignment.
namespace icsq::ks {

inline constexpr double kOrthoTol = 1e-9;

struct KSInstance {
    std::size_t dim = 0;
    std::vector<Vector> rays;
    std::vector<std::vector<std::size_t>> contexts;
};

struct InstanceIssue {
    std::string message;
    std::vector<std::size_t> rays;
    std::optional<std::size_t> context;
};

/// Empty iff the instance is well formed: dim >= 3, unit rays, contexts of
/// exactly `dim` distinct, pairwise orthogonal, in-range rays.
std::vector<InstanceIssue> verify_instance(const KSInstance &instance);

/// One entry per ray, 0 or 1.
using Coloring = std::vector<std::uint8_t>;

struct ColorResult {
    bool colorable = false;
    std::optional<Coloring> witness;
    std::uint64_t nodes_explored = 0;
};

/// Backtracking with unit propagation. Rays are branched in ascending index
/// order, trying 1 before 0. Any two orthogonal rays (whether or not they
/// share a listed context) may not both receive 1.
ColorResult color(const KSInstance &instance);

/// Checks a coloring directly against the instance, without the search's
/// data structures.
bool verify_coloring(const KSInstance &instance, const Coloring &coloring);

/// Pairs of distinct rays with |<u,v>| < kOrthoTol.
std::vector<std::vector<std::size_t>> orthogonality_graph(const KSInstance &instance);

/// Copy of `instance` with context `index` removed.
KSInstance without_context(const KSInstance &instance, std::size_t index);

/// Parses the text format: `dim N`, `ray IDX c1 ... cN` (complex components
/// as `re,im`), `context I1 ... IN`; `#` starts a comment. Ray indices must
/// be 0, 1, 2, ... in order. Throws Error(InvalidArgument) with a line number.
KSInstance parse_instance(std::string_view text);
std::string format_instance(const KSInstance &instance);

struct NamedInstance {
    std::string name;
    KSInstance instance;
};

/// Bundled instances: "cabello-18" and "peres-33".
std::vector<NamedInstance> builtin_instances();
std::optional<KSInstance> find_builtin(std::string_view name);

}  // namespace icsq::ks
