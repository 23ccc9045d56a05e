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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icsq/ast.hpp"
#include "icsq/diagnostic.hpp"

namespace icsq::lang {

inline constexpr std::size_t kMaxInputBytes = std::size_t{1} << 20;
inline constexpr std::size_t kMaxNesting = 64;

struct ParseResult {
    std::optional<Scenario> scenario;
    /// P001 (syntax) and P002 (duplicate identifier) diagnostics, in source order.
    std::vector<Diagnostic> errors;

    bool ok() const noexcept {
        return scenario.has_value();
    }
};

/// Total over arbitrary bytes: returns a Scenario or at least one error.
ParseResult parse(std::string_view text);

/// Canonical text form; parse(serialize(s)) is structurally equal to s.
std::string serialize(const Scenario &scenario);

std::string format_number(double value);

}  // namespace icsq::lang
