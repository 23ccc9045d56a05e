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
#include "icsq/cases.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "embedded_data.hpp"
#include "icsq/parser.hpp"

namespace icsq::cases {

namespace {

using Codes = std::map<std::string, std::vector<DiagCode>>;

CaseStudy load(const std::string &name, Codes codes) {
    CaseStudy cs;
    cs.name = name;
    cs.source = std::string(detail::embedded_file("scenarios/" + name + ".icsq"));
    auto parsed = lang::parse(cs.source);
    if (!parsed.ok()) {
        throw std::logic_error("bundled scenario '" + name + "' does not parse");
    }
    cs.scenario = std::move(*parsed.scenario);
    cs.expected_codes = std::move(codes);

    const auto doc = nlohmann::ordered_json::parse(detail::embedded_file("expected/" + name + ".json"));
    for (const auto &entry : doc.at("entries")) {
        ExpectedProbability e;
        e.structure = entry.at("structure").get<std::string>();
        e.config = entry.at("config").get<std::string>();
        for (const auto &[label, p] : entry.at("probabilities").items()) {
            e.probabilities.emplace_back(label, p.get<double>());
        }
        cs.expected_probabilities.push_back(std::move(e));
    }
    return cs;
}

}  // namespace

CaseStudy stern_gerlach() {
    return load("stern_gerlach", {
                                     {"intrinsic", {DiagCode::E001}},
                                     {"z_relative", {}},
                                     {"x_relative", {}},
                                     {"mixed_axes", {DiagCode::E002}},
                                     {"same_axis_joint", {}},
                                     {"cross_axis_joint", {DiagCode::E005}},
                                 });
}

CaseStudy double_slit() {
    return load("double_slit", {
                                   {"intrinsic_slit", {DiagCode::E001}},
                                   {"fringe", {}},
                                   {"localised", {}},
                                   {"duality", {DiagCode::E002}},
                                   {"tagged_record", {}},
                                   {"fringe_and_path", {DiagCode::E005}},
                               });
}

CaseStudy singlet_bell() {
    return load("singlet_bell", {
                                    {"definite_values", {DiagCode::E001}},
                                    {"cross_wing", {}},
                                    {"same_wing", {DiagCode::E002}},
                                    {"same_wing_joint", {DiagCode::E005}},
                                    {"equal_setting_joint", {}},
                                });
}

CaseStudy wigner_friend() {
    return load("wigner_friend", {
                                     {"friend_view", {}},
                                     {"wigner_view", {}},
                                     {"recorded_fact", {DiagCode::E001}},
                                     {"combined", {DiagCode::E002}},
                                     {"deduced", {DiagCode::E003}},
                                     {"door_opened", {}},
                                 });
}

std::vector<CaseStudy> all_cases() {
    return {stern_gerlach(), double_slit(), singlet_bell(), wigner_friend()};
}

std::optional<CaseStudy> find_case(std::string_view name) {
    if (name == "stern_gerlach") return stern_gerlach();
    if (name == "double_slit") return double_slit();
    if (name == "singlet_bell") return singlet_bell();
    if (name == "wigner_friend") return wigner_friend();
    return std::nullopt;
}

}  // namespace icsq::cases
