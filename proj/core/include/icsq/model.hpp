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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "icsq/ast.hpp"
#include "icsq/diagnostic.hpp"
#include "icsq/quantum.hpp"

namespace icsq::check {

/// A resolved system reference: a declared root system and the chain of
/// factor positions leading to the addressed subsystem.
struct Site {
    std::string root;
    std::vector<std::size_t> path;
    /// Declared system id of the addressed subsystem.
    std::string leaf;
    std::size_t dim = 0;

    bool operator==(const Site &) const = default;
};

/// Resolution failure: which diagnostic to raise and why.
struct ResolveError {
    DiagCode code;
    std::string message;
};

template <typename T>
using Resolved = std::variant<T, ResolveError>;

/// Quantum objects built from a scenario's declarations. Building never
/// throws for bad content (those become declaration diagnostics) except
/// InternalLimit when a system exceeds the dimension cap.
class ScenarioModel {
   public:
    explicit ScenarioModel(const lang::Scenario &scenario);

    const lang::Scenario &scenario() const noexcept {
        return *scenario_;
    }
    /// E006/E007 raised by declarations themselves.
    const std::vector<Diagnostic> &declaration_diagnostics() const noexcept {
        return decl_diags_;
    }

    Resolved<Site> resolve(const lang::SystemRef &ref) const;
    Resolved<const Configuration *> configuration(const std::string &id) const;
    Resolved<const QuantumStructure *> structure(const std::string &id) const;
    std::optional<Site> config_site(const std::string &id) const;
    std::optional<Site> structure_site(const std::string &id) const;
    const lang::BridgeDecl *bridge(const std::string &id) const;

    /// True if a configuration declared at `config_site` measures `subject`.
    static bool applies_to(const Site &config_site, const Site &subject);

    /// Lifts a configuration acting on the subsystem at `at` to the whole
    /// root system by identity padding.
    Configuration lift_to_root(const Configuration &config, const Site &at) const;

    /// The structure together with the named configuration embedded into
    /// the structure's system, ready for born_probabilities.
    struct Evaluation {
        QuantumStructure structure;
        Configuration config;
    };
    Resolved<Evaluation> evaluation(const std::string &structure_id, const std::string &config_id) const;

   private:
    struct SystemInfo {
        const lang::SystemDecl *decl = nullptr;
        bool built = false;
        bool valid = false;
        std::vector<std::string> factors;
        std::vector<std::size_t> factor_dims;
    };

    void build_systems();
    bool build_system(const std::string &id, std::vector<std::string> &stack);
    void build_structures();
    void build_configurations();
    void check_bridges();
    std::optional<std::vector<std::size_t>> locate(const std::string &system, const std::string &leaf) const;
    Configuration lift_path(const Configuration &config, const std::string &system,
                            std::span<const std::size_t> path) const;

    const lang::Scenario *scenario_;
    std::map<std::string, SystemInfo> systems_;
    std::map<std::string, std::variant<QuantumStructure, ResolveError>> structures_;
    std::map<std::string, std::variant<Configuration, ResolveError>> configs_;
    std::map<std::string, Site> structure_sites_;
    std::map<std::string, Site> config_sites_;
    std::map<std::string, const lang::BridgeDecl *> bridges_;
    std::vector<Diagnostic> decl_diags_;
};

}  // namespace icsq::check
