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
#include "icsq/error.hpp"

namespace icsq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::InvalidStructure:
            return "InvalidStructure";
        case ErrorKind::InvalidConfiguration:
            return "InvalidConfiguration";
        case ErrorKind::UnknownOutcome:
            return "UnknownOutcome";
        case ErrorKind::ZeroProbabilityOutcome:
            return "ZeroProbabilityOutcome";
        case ErrorKind::NonProjectiveUpdate:
            return "NonProjectiveUpdate";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::MalformedTable:
            return "MalformedTable";
        case ErrorKind::InternalLimit:
            return "InternalLimit";
    }
    return "Error";
}

}  // namespace icsq
