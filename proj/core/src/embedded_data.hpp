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

#include <string_view>
#include <vector>

// Data files compiled into the library (generated at configure time).
namespace icsq::detail {

/// Contents of a bundled file by relative path, e.g. "ks/peres-33.ks".
/// Throws std::out_of_range if no such file is bundled.
std::string_view embedded_file(std::string_view name);

std::vector<std::string_view> embedded_names();

}  // namespace icsq::detail
