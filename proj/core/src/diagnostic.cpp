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
#include "icsq/diagnostic.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace icsq {

std::string_view code_string(DiagCode code) {
    switch (code) {
        case DiagCode::E001:
            return "E001";
        case DiagCode::E002:
            return "E002";
        case DiagCode::E003:
            return "E003";
        case DiagCode::E004:
            return "E004";
        case DiagCode::E005:
            return "E005";
        case DiagCode::E006:
            return "E006";
        case DiagCode::E007:
            return "E007";
        case DiagCode::W001:
            return "W001";
        case DiagCode::P001:
            return "P001";
        case DiagCode::P002:
            return "P002";
    }
    return "????";
}

std::string_view code_name(DiagCode code) {
    switch (code) {
        case DiagCode::E001:
            return "IllTypedIntrinsic";
        case DiagCode::E002:
            return "InadmissibleComposition";
        case DiagCode::E003:
            return "EpistemicBridge";
        case DiagCode::E004:
            return "InvalidBridge";
        case DiagCode::E005:
            return "UndefinedJointDistribution";
        case DiagCode::E006:
            return "UnresolvedReference";
        case DiagCode::E007:
            return "DimensionMismatch";
        case DiagCode::W001:
            return "RedundantBridge";
        case DiagCode::P001:
            return "ParseError";
        case DiagCode::P002:
            return "DuplicateIdentifier";
    }
    return "Unknown";
}

Severity severity_of(DiagCode code) {
    return code == DiagCode::W001 ? Severity::warning : Severity::error;
}

namespace {

std::string_view line_at(std::string_view source, std::size_t offset) {
    if (offset > source.size()) {
        return {};
    }
    std::size_t begin = 0;
    if (offset > 0) {
        const std::size_t nl = source.rfind('\n', offset - 1);
        begin = nl == std::string_view::npos ? 0 : nl + 1;
    }
    std::size_t end = source.find('\n', offset);
    if (end == std::string_view::npos) {
        end = source.size();
    }
    return source.substr(begin, end - begin);
}

std::string render_text(std::span<const Diagnostic> diags, const RenderOptions &opt) {
    const char *red = opt.color ? "\x1b[31m" : "";
    const char *yellow = opt.color ? "\x1b[33m" : "";
    const char *bold = opt.color ? "\x1b[1m" : "";
    const char *reset = opt.color ? "\x1b[0m" : "";
    std::string out;
    for (const auto &d : diags) {
        const bool warn = d.severity == Severity::warning;
        out += std::string(bold) + std::string(opt.filename) + ":" + std::to_string(d.span.line) + ":" +
               std::to_string(d.span.col) + ": " + reset + (warn ? yellow : red) + (warn ? "warning" : "error") + "[" +
               std::string(code_string(d.code)) + "]" + reset + ": " + d.message;
        if (!d.statement.empty()) {
            out += " (in '" + d.statement + "')";
        }
        out += "\n";
        if (opt.source.empty() || d.span.offset > opt.source.size()) {
            continue;
        }
        const std::string_view line = line_at(opt.source, d.span.offset);
        const std::string gutter = std::to_string(d.span.line);
        out += " " + gutter + " | " + std::string(line) + "\n";
        out += " " + std::string(gutter.size(), ' ') + " | ";
        const std::size_t col = d.span.col == 0 ? 0 : d.span.col - 1;
        for (std::size_t i = 0; i < col && i < line.size(); ++i) {
            out += line[i] == '\t' ? '\t' : ' ';
        }
        const std::size_t room = line.size() > col ? line.size() - col : 1;
        const std::size_t width = std::max<std::size_t>(1, std::min(d.span.len, room));
        out += std::string(warn ? yellow : red) + std::string(width, '^') + reset + "\n";
    }
    return out;
}

}  // namespace

std::string render_diagnostics(std::span<const Diagnostic> diags, ReportFormat format, const RenderOptions &options) {
    if (format == ReportFormat::text) {
        return render_text(diags, options);
    }
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto &d : diags) {
        nlohmann::ordered_json item;
        item["code"] = code_string(d.code);
        item["severity"] = d.severity == Severity::warning ? "warning" : "error";
        item["message"] = d.message;
        item["span"] = {{"line", d.span.line}, {"col", d.span.col}, {"len", d.span.len}};
        item["statement"] = d.statement;
        list.push_back(std::move(item));
    }
    nlohmann::ordered_json root;
    root["diagnostics"] = std::move(list);
    return root.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

}  // namespace icsq
