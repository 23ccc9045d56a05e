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

#include <string>
#include <vector>

#include "icsq/ast.hpp"
#include "icsq/diagnostic.hpp"
#include "icsq/model.hpp"

// Admissibility checking for outcome statements.
//
//   * An outcome statement must name the configuration it is relative to;
//     `yields(S) = o` is reported as E001.
//   * A composite claim whose parts come from incompatible configurations
//     needs a physical bridging configuration (E002/E003/E004).
//   * A joint distribution over incompatible configurations is undefined (E005).
namespace icsq::check {

struct CheckReport {
    /// Sorted by source position.
    std::vector<Diagnostic> diagnostics;
    /// Statements without error diagnostics, in declaration order.
    std::vector<std::string> admissible_statements;

    bool has_errors() const;
};

CheckReport check(const lang::Scenario &scenario);

std::vector<Diagnostic> check_composition(const lang::StatementNode &node, const lang::Scenario &scenario);
std::vector<Diagnostic> validate_bridge(const lang::BridgeDecl &bridge, const lang::StatementNode &node,
                                        const lang::Scenario &scenario);
std::vector<Diagnostic> check_joint_request(const lang::StatementNode &node, const lang::Scenario &scenario);

/// The checker proper, reusable across calls on one scenario.
class Checker {
   public:
    explicit Checker(const lang::Scenario &scenario) : model_(scenario) {
    }

    const ScenarioModel &model() const noexcept {
        return model_;
    }

    CheckReport check_all() const;
    /// Appends diagnostics for one statement node; returns false on any error.
    bool judge(const lang::StatementNode &node, const std::string &statement, std::vector<Diagnostic> &out) const;
    void check_composition(const lang::StatementNode &node, const std::string &statement,
                           std::vector<Diagnostic> &out) const;
    void validate_bridge(const lang::BridgeDecl &bridge, const lang::StatementNode &node,
                         const std::string &statement, std::vector<Diagnostic> &out) const;
    void check_joint_request(const lang::StatementNode &node, const std::string &statement,
                             std::vector<Diagnostic> &out) const;

   private:
    struct Leaf {
        Site subject;
        const Configuration *config;
        std::string config_id;
    };
    bool judge_yields(const lang::StatementNode &node, const std::string &statement, std::vector<Diagnostic> &out,
                      Leaf *leaf) const;
    void collect_leaves(const lang::StatementNode &node, std::vector<Leaf> &leaves) const;
    bool leaves_compatible(const Leaf &a, const Leaf &b) const;

    ScenarioModel model_;
};

}  // namespace icsq::check
