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

#include <stdexcept>
#include <string>
#include <string_view>

namespace icsq {

enum class ErrorKind {
    DimensionMismatch,
    InvalidStructure,
    InvalidConfiguration,
    UnknownOutcome,
    ZeroProbabilityOutcome,
    NonProjectiveUpdate,
    InvalidArgument,
    MalformedTable,
    InternalLimit,
};

std::string_view to_string(ErrorKind kind);

/// Raised by the numeric layers (quantum core, correlation analysis, KS
/// instances). The type checker never throws it for scenario content except
/// for InternalLimit.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace icsq
