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
#include "icsq/model.hpp"

#include <algorithm>

#include "icsq/standard.hpp"

namespace icsq::check {

namespace {

ResolveError err(DiagCode code, std::string message) {
    return ResolveError{code, std::move(message)};
}

bool square(const lang::ComplexTable &rows) {
    return std::all_of(rows.begin(), rows.end(), [&](const auto &r) { return r.size() == rows.size(); });
}

Matrix to_matrix(const lang::ComplexTable &rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

// Builtins take a fixed number of real arguments; `optional` trailing ones
// default to zero.
bool arity_ok(const lang::BuiltinCall &call, std::size_t required, std::size_t optional = 0) {
    return call.args.size() >= required && call.args.size() <= required + optional;
}

double arg(const lang::BuiltinCall &call, std::size_t i) {
    return i < call.args.size() ? call.args[i] : 0.0;
}

struct BuiltinFailure {
    DiagCode code;
    std::string message;
};

std::variant<QuantumStructure, BuiltinFailure> structure_builtin(const lang::BuiltinCall &call, std::size_t dim) {
    const std::string &name = call.name.name;
    auto need_dim = [&](std::size_t d) -> std::optional<BuiltinFailure> {
        if (dim != d) {
            return BuiltinFailure{DiagCode::E007, "builtin structure '" + name + "' has dimension " +
                                                      std::to_string(d) + ", system has dimension " +
                                                      std::to_string(dim)};
        }
        return std::nullopt;
    };
    auto bad_arity = [&](std::string_view expected) {
        return BuiltinFailure{DiagCode::E007, "builtin structure '" + name + "' takes " + std::string(expected)};
    };
    if (name == "spin") {
        if (!arity_ok(call, 1, 1)) {
            return bad_arity("(theta[, phi])");
        }
        if (auto f = need_dim(2)) {
            return *f;
        }
        return standard::spin_state(arg(call, 0), arg(call, 1));
    }
    if (name == "singlet" || name == "phi_plus") {
        if (!call.args.empty()) {
            return bad_arity("no arguments");
        }
        if (auto f = need_dim(4)) {
            return *f;
        }
        return name == "singlet" ? standard::singlet() : standard::phi_plus();
    }
    if (name == "two_path" || name == "marked_two_path") {
        if (!arity_ok(call, 1)) {
            return bad_arity("(phase)");
        }
        const bool marked = name == "marked_two_path";
        if (auto f = need_dim(marked ? 4 : 2)) {
            return *f;
        }
        return marked ? standard::marked_two_path(call.args[0]) : standard::two_path(call.args[0]);
    }
    if (name == "basis") {
        if (!arity_ok(call, 1) || call.args[0] < 0 || call.args[0] != static_cast<double>(static_cast<std::size_t>(call.args[0]))) {
            return bad_arity("(index) with a non-negative integer index");
        }
        const auto k = static_cast<std::size_t>(call.args[0]);
        if (k >= dim) {
            return BuiltinFailure{DiagCode::E007, "basis index " + std::to_string(k) + " out of range for dimension " +
                                                      std::to_string(dim)};
        }
        return standard::basis_state(dim, k);
    }
    if (name == "maximally_mixed") {
        if (!call.args.empty()) {
            return bad_arity("no arguments");
        }
        return standard::maximally_mixed(dim);
    }
    return BuiltinFailure{DiagCode::E006, "unknown builtin structure '" + name + "'"};
}

std::variant<Configuration, BuiltinFailure> config_builtin(const lang::BuiltinCall &call, std::size_t dim,
                                                           const std::string &id) {
    const std::string &name = call.name.name;
    auto need_dim = [&](std::size_t d) -> std::optional<BuiltinFailure> {
        if (dim != d) {
            return BuiltinFailure{DiagCode::E007, "builtin configuration '" + name + "' has dimension " +
                                                      std::to_string(d) + ", system has dimension " +
                                                      std::to_string(dim)};
        }
        return std::nullopt;
    };
    auto bad_arity = [&](std::string_view expected) {
        return BuiltinFailure{DiagCode::E007, "builtin configuration '" + name + "' takes " + std::string(expected)};
    };
    if (name == "spin") {
        if (!arity_ok(call, 1, 1)) {
            return bad_arity("(theta[, phi])");
        }
        if (auto f = need_dim(2)) {
            return *f;
        }
        return standard::spin_axis(arg(call, 0), arg(call, 1), id);
    }
    if (name == "spin_pair") {
        if (!arity_ok(call, 4)) {
            return bad_arity("(theta_a, phi_a, theta_b, phi_b)");
        }
        if (auto f = need_dim(4)) {
            return *f;
        }
        return tensor_config(standard::spin_axis(call.args[0], call.args[1]),
                             standard::spin_axis(call.args[2], call.args[3]))
            .renamed(id);
    }
    if (name == "basis") {
        if (!call.args.empty()) {
            return bad_arity("no arguments");
        }
        return standard::computational_basis(dim, id);
    }
    if (name == "interference" || name == "which_path") {
        if (!call.args.empty()) {
            return bad_arity("no arguments");
        }
        if (auto f = need_dim(2)) {
            return *f;
        }
        return name == "interference" ? standard::interference(id) : standard::which_path(id);
    }
    if (name == "bell") {
        if (!call.args.empty()) {
            return bad_arity("no arguments");
        }
        if (auto f = need_dim(4)) {
            return *f;
        }
        return standard::bell_basis(id);
    }
    return BuiltinFailure{DiagCode::E006, "unknown builtin configuration '" + name + "'"};
}

}  // namespace

ScenarioModel::ScenarioModel(const lang::Scenario &scenario) : scenario_(&scenario) {
    build_systems();
    build_structures();
    build_configurations();
    check_bridges();
    std::stable_sort(decl_diags_.begin(), decl_diags_.end(),
                     [](const Diagnostic &a, const Diagnostic &b) { return a.span.offset < b.span.offset; });
}

void ScenarioModel::build_systems() {
    for (const auto &d : scenario_->systems) {
        systems_[d.id.name].decl = &d;
    }
    for (const auto &d : scenario_->systems) {
        if (d.dim > kMaxDim) {
            throw Error(ErrorKind::InternalLimit,
                        "system '" + d.id.name + "' has dimension " + std::to_string(d.dim) + ", cap is 64");
        }
    }
    for (const auto &d : scenario_->systems) {
        std::vector<std::string> stack;
        build_system(d.id.name, stack);
    }
}

// Returns validity; emits diagnostics only for the system's own declaration.
bool ScenarioModel::build_system(const std::string &id, std::vector<std::string> &stack) {
    SystemInfo &info = systems_.at(id);
    if (info.built) {
        return info.valid;
    }
    if (std::find(stack.begin(), stack.end(), id) != stack.end()) {
        return false;
    }
    const lang::SystemDecl &d = *info.decl;
    if (d.factors.empty()) {
        info.built = true;
        info.valid = true;
        return true;
    }
    stack.push_back(id);
    bool ok = true;
    std::size_t product = 1;
    std::vector<std::string> factors;
    std::vector<std::size_t> dims;
    for (const auto &f : d.factors) {
        auto it = systems_.find(f.name);
        if (it == systems_.end()) {
            decl_diags_.push_back(Diagnostic::make(DiagCode::E006, "factor system '" + f.name + "' is not declared",
                                                   f.span, d.id.name));
            ok = false;
            continue;
        }
        if (std::find(stack.begin(), stack.end(), f.name) != stack.end()) {
            decl_diags_.push_back(Diagnostic::make(
                DiagCode::E006, "system '" + d.id.name + "' contains itself through factor '" + f.name + "'", f.span,
                d.id.name));
            ok = false;
            continue;
        }
        if (!build_system(f.name, stack)) {
            decl_diags_.push_back(Diagnostic::make(DiagCode::E006, "factor system '" + f.name + "' is invalid",
                                                   f.span, d.id.name));
            ok = false;
            continue;
        }
        factors.push_back(f.name);
        dims.push_back(it->second.decl->dim);
        product *= it->second.decl->dim;
        if (product > kMaxDim) {
            // Each factor is within the cap; a product beyond it cannot equal
            // the declared dimension either.
            product = kMaxDim + 1;
        }
    }
    stack.pop_back();
    if (ok && product != d.dim) {
        decl_diags_.push_back(Diagnostic::make(
            DiagCode::E007,
            "system '" + d.id.name + "' declares dimension " + std::to_string(d.dim) +
                " but its factors multiply to " + (product > kMaxDim ? std::string("more than 64") : std::to_string(product)),
            d.id.span, d.id.name));
        ok = false;
    }
    info.built = true;
    info.valid = ok;
    if (ok) {
        info.factors = std::move(factors);
        info.factor_dims = std::move(dims);
    }
    return ok;
}

Resolved<Site> ScenarioModel::resolve(const lang::SystemRef &ref) const {
    if (ref.path.empty()) {
        return err(DiagCode::E006, "empty system reference");
    }
    auto it = systems_.find(ref.path[0].name);
    if (it == systems_.end()) {
        return err(DiagCode::E006, "system '" + ref.path[0].name + "' is not declared");
    }
    if (!it->second.valid) {
        return err(DiagCode::E006, "system '" + ref.path[0].name + "' has an invalid declaration");
    }
    Site site;
    site.root = ref.path[0].name;
    std::string current = site.root;
    for (std::size_t i = 1; i < ref.path.size(); ++i) {
        const SystemInfo &info = systems_.at(current);
        const auto &factors = info.factors;
        auto f = std::find(factors.begin(), factors.end(), ref.path[i].name);
        if (f == factors.end()) {
            return err(DiagCode::E006, "'" + current + "' has no factor named '" + ref.path[i].name + "'");
        }
        site.path.push_back(static_cast<std::size_t>(f - factors.begin()));
        current = *f;
    }
    site.leaf = current;
    site.dim = systems_.at(current).decl->dim;
    return site;
}

void ScenarioModel::build_structures() {
    for (const auto &d : scenario_->structures) {
        const std::string &id = d.id.name;
        auto fail = [&](DiagCode code, std::string message, const Span &span) {
            decl_diags_.push_back(Diagnostic::make(code, message, span, id));
            structures_.insert_or_assign(id, ResolveError{code, std::move(message)});
        };
        auto site = resolve(d.over);
        if (auto *e = std::get_if<ResolveError>(&site)) {
            fail(e->code, e->message, d.over.path.empty() ? d.span : d.over.path[0].span);
            continue;
        }
        const Site &s = std::get<Site>(site);
        try {
            if (const auto *call = std::get_if<lang::BuiltinCall>(&d.body)) {
                auto built = structure_builtin(*call, s.dim);
                if (auto *f = std::get_if<BuiltinFailure>(&built)) {
                    fail(f->code, f->message, call->name.span);
                    continue;
                }
                structures_.insert_or_assign(id, std::get<QuantumStructure>(std::move(built)));
            } else if (const auto *amp = std::get_if<lang::AmplitudeTable>(&d.body)) {
                if (amp->amplitudes.size() != s.dim) {
                    fail(DiagCode::E007, "structure '" + id + "' has " + std::to_string(amp->amplitudes.size()) +
                                             " amplitudes, system '" + d.over.str() + "' has dimension " +
                                             std::to_string(s.dim),
                         d.id.span);
                    continue;
                }
                Vector v(static_cast<Eigen::Index>(s.dim));
                for (std::size_t i = 0; i < s.dim; ++i) {
                    v(static_cast<Eigen::Index>(i)) = amp->amplitudes[i];
                }
                structures_.insert_or_assign(id, QuantumStructure::pure(std::move(v)));
            } else {
                const auto &rows = std::get<lang::DensityTable>(d.body).rows;
                if (!square(rows) || rows.size() != s.dim) {
                    fail(DiagCode::E007, "density matrix of '" + id + "' is not " + std::to_string(s.dim) + "x" +
                                             std::to_string(s.dim),
                         d.id.span);
                    continue;
                }
                structures_.insert_or_assign(id, QuantumStructure::mixed(to_matrix(rows)));
            }
            structure_sites_[id] = s;
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::InternalLimit) {
                throw;
            }
            fail(DiagCode::E007, "invalid structure '" + id + "': " + e.what(), d.id.span);
        }
    }
}

void ScenarioModel::build_configurations() {
    for (const auto &d : scenario_->configurations) {
        const std::string &id = d.id.name;
        auto fail = [&](DiagCode code, std::string message, const Span &span) {
            decl_diags_.push_back(Diagnostic::make(code, message, span, id));
            configs_.insert_or_assign(id, ResolveError{code, std::move(message)});
        };
        auto site = resolve(d.over);
        if (auto *e = std::get_if<ResolveError>(&site)) {
            fail(e->code, e->message, d.over.path.empty() ? d.span : d.over.path[0].span);
            continue;
        }
        const Site &s = std::get<Site>(site);
        try {
            if (const auto *call = std::get_if<lang::BuiltinCall>(&d.body)) {
                auto built = config_builtin(*call, s.dim, id);
                if (auto *f = std::get_if<BuiltinFailure>(&built)) {
                    fail(f->code, f->message, call->name.span);
                    continue;
                }
                configs_.insert_or_assign(id, std::get<Configuration>(std::move(built)));
            } else {
                const auto &table = std::get<lang::EffectTable>(d.body);
                std::vector<Effect> effects;
                bool shape_ok = true;
                for (const auto &e : table.effects) {
                    if (!square(e.matrix) || e.matrix.size() != s.dim) {
                        fail(DiagCode::E007, "effect '" + e.label.label() + "' of '" + id + "' is not " +
                                                 std::to_string(s.dim) + "x" + std::to_string(s.dim),
                             e.label.span);
                        shape_ok = false;
                        break;
                    }
                    effects.push_back({e.label.label(), to_matrix(e.matrix)});
                }
                if (!shape_ok) {
                    continue;
                }
                configs_.insert_or_assign(id, Configuration::make(id, table.kind, std::move(effects)));
            }
            config_sites_[id] = s;
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::InternalLimit) {
                throw;
            }
            fail(DiagCode::E007, "invalid configuration '" + id + "': " + e.what(), d.id.span);
        }
    }
}

void ScenarioModel::check_bridges() {
    for (const auto &b : scenario_->bridges) {
        bridges_[b.id.name] = &b;
        if (configs_.find(b.config.name) == configs_.end()) {
            decl_diags_.push_back(Diagnostic::make(
                DiagCode::E006, "bridge '" + b.id.name + "' names undeclared configuration '" + b.config.name + "'",
                b.config.span, b.id.name));
        }
    }
}

Resolved<const Configuration *> ScenarioModel::configuration(const std::string &id) const {
    auto it = configs_.find(id);
    if (it == configs_.end()) {
        return err(DiagCode::E006, "configuration '" + id + "' is not declared");
    }
    if (const auto *c = std::get_if<Configuration>(&it->second)) {
        return c;
    }
    return err(DiagCode::E006, "configuration '" + id + "' has an invalid declaration");
}

Resolved<const QuantumStructure *> ScenarioModel::structure(const std::string &id) const {
    auto it = structures_.find(id);
    if (it == structures_.end()) {
        return err(DiagCode::E006, "structure '" + id + "' is not declared");
    }
    if (const auto *s = std::get_if<QuantumStructure>(&it->second)) {
        return s;
    }
    return err(DiagCode::E006, "structure '" + id + "' has an invalid declaration");
}

std::optional<Site> ScenarioModel::config_site(const std::string &id) const {
    auto it = config_sites_.find(id);
    return it == config_sites_.end() ? std::nullopt : std::optional<Site>(it->second);
}

std::optional<Site> ScenarioModel::structure_site(const std::string &id) const {
    auto it = structure_sites_.find(id);
    return it == structure_sites_.end() ? std::nullopt : std::optional<Site>(it->second);
}

const lang::BridgeDecl *ScenarioModel::bridge(const std::string &id) const {
    auto it = bridges_.find(id);
    return it == bridges_.end() ? nullptr : it->second;
}

bool ScenarioModel::applies_to(const Site &config_site, const Site &subject) {
    if (config_site.leaf != subject.leaf) {
        return false;
    }
    if (config_site.path.empty()) {
        return true;
    }
    return config_site.root == subject.root && config_site.path == subject.path;
}

Configuration ScenarioModel::lift_path(const Configuration &config, const std::string &system,
                                       std::span<const std::size_t> path) const {
    if (path.empty()) {
        return config;
    }
    const SystemInfo &info = systems_.at(system);
    Configuration inner = lift_path(config, info.factors[path[0]], path.subspan(1));
    return embed(inner, info.factor_dims, path[0]);
}

Configuration ScenarioModel::lift_to_root(const Configuration &config, const Site &at) const {
    return lift_path(config, at.root, at.path);
}

std::optional<std::vector<std::size_t>> ScenarioModel::locate(const std::string &system,
                                                              const std::string &leaf) const {
    if (system == leaf) {
        return std::vector<std::size_t>{};
    }
    std::optional<std::vector<std::size_t>> found;
    const SystemInfo &info = systems_.at(system);
    for (std::size_t i = 0; i < info.factors.size(); ++i) {
        if (auto sub = locate(info.factors[i], leaf)) {
            if (found) {
                return std::nullopt;
            }
            sub->insert(sub->begin(), i);
            found = std::move(sub);
        }
    }
    return found;
}

Resolved<ScenarioModel::Evaluation> ScenarioModel::evaluation(const std::string &structure_id,
                                                              const std::string &config_id) const {
    auto s = structure(structure_id);
    if (auto *e = std::get_if<ResolveError>(&s)) {
        return *e;
    }
    auto c = configuration(config_id);
    if (auto *e = std::get_if<ResolveError>(&c)) {
        return *e;
    }
    const Site &ss = structure_sites_.at(structure_id);
    const Site &cs = config_sites_.at(config_id);
    // Position of the configuration's subsystem inside the structure's system.
    std::optional<std::vector<std::size_t>> rel;
    if (!cs.path.empty()) {
        if (cs.root == ss.root && std::equal(ss.path.begin(), ss.path.end(), cs.path.begin()) &&
            ss.path.size() <= cs.path.size()) {
            rel = std::vector<std::size_t>(cs.path.begin() + static_cast<std::ptrdiff_t>(ss.path.size()),
                                           cs.path.end());
        }
    } else {
        rel = locate(ss.leaf, cs.leaf);
    }
    if (!rel) {
        return err(DiagCode::E007, "configuration '" + config_id + "' does not act on a unique subsystem of '" +
                                       ss.leaf + "', the system of structure '" + structure_id + "'");
    }
    Configuration lifted = lift_path(*std::get<const Configuration *>(c), ss.leaf, *rel);
    return Evaluation{*std::get<const QuantumStructure *>(s), std::move(lifted)};
}

}  // namespace icsq::check
