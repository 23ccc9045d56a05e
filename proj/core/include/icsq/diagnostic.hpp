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
#include <span>
#include <string>
#include <string_view>

namespace icsq {

/// Byte range in a source file. Lines and columns are 1-based.
struct Span {
    std::size_t offset = 0;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t len = 0;

    bool operator==(const Span &) const = default;
};

enum class Severity { error, warning };

enum class DiagCode {
    E001,  // IllTypedIntrinsic
    E002,  // InadmissibleComposition
    E003,  // EpistemicBridge
    E004,  // InvalidBridge
    E005,  // UndefinedJointDistribution
    E006,  // UnresolvedReference
    E007,  // DimensionMismatch / invalid declaration
    W001,  // RedundantBridge
    P001,  // syntax error
    P002,  // duplicate identifier
};

std::string_view code_string(DiagCode code);
std::string_view code_name(DiagCode code);
/// W-codes are warnings; everything else is an error.
Severity severity_of(DiagCode code);

struct Diagnostic {
    DiagCode code;
    Severity severity;
    std::string message;
    Span span;
    /// Id of the statement (or declaration) the diagnostic belongs to.
    std::string statement;

    static Diagnostic make(DiagCode code, std::string message, Span span, std::string statement = {}) {
        return Diagnostic{code, severity_of(code), std::move(message), span, std::move(statement)};
    }
};

enum class ReportFormat { text, json };

struct RenderOptions {
    std::string_view source;
    std::string_view filename = "<input>";
    bool color = false;
};

/// Text output shows the offending line with a caret underline when
/// `options.source` is available. JSON output is one line with fixed key
/// order: {"diagnostics":[{"code","severity","message","span","statement"}]}.
std::string render_diagnostics(std::span<const Diagnostic> diags, ReportFormat format, const RenderOptions &options = {});

}  // namespace icsq
