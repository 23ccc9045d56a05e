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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icsq/ast.hpp"
#include "icsq/diagnostic.hpp"
#include "icsq/quantum.hpp"

// The four bundled case studies: Stern-Gerlach, double slit, singlet Bell
// pair and Wigner's friend.
namespace icsq::cases {

struct ExpectedProbability {
    std::string structure;
    std::string config;
    /// Label/probability pairs in the configuration's declaration order.
    std::vector<std::pair<std::string, double>> probabilities;
};

struct CaseStudy {
    std::string name;
    /// Canonical `.icsq` source of the scenario.
    std::string source;
    lang::Scenario scenario;
    /// Statement id -> diagnostic codes the checker must report for it.
    std::map<std::string, std::vector<DiagCode>> expected_codes;
    std::vector<ExpectedProbability> expected_probabilities;
};

CaseStudy stern_gerlach();
CaseStudy double_slit();
CaseStudy singlet_bell();
CaseStudy wigner_friend();

std::vector<CaseStudy> all_cases();
std::optional<CaseStudy> find_case(std::string_view name);

}  // namespace icsq::cases
