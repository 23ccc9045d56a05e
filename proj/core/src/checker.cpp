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
#include "icsq/checker.hpp"

#include <algorithm>

namespace icsq::check {

namespace {

void sort_by_position(std::vector<Diagnostic> &diags) {
    std::stable_sort(diags.begin(), diags.end(),
                     [](const Diagnostic &a, const Diagnostic &b) { return a.span.offset < b.span.offset; });
}

bool any_error(const std::vector<Diagnostic> &diags, std::size_t from) {
    return std::any_of(diags.begin() + static_cast<std::ptrdiff_t>(from), diags.end(),
                       [](const Diagnostic &d) { return d.severity == Severity::error; });
}

// Outcome tuple referenced by a composite: one entry per child, in order.
std::string outcome_tuple(const lang::StatementNode &node) {
    if (node.kind != lang::NodeKind::composite) {
        return node.outcome ? node.outcome->label() : std::string();
    }
    std::string out = "(";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += outcome_tuple(node.children[i]);
    }
    return out + ")";
}

bool is_prefix(const std::vector<std::size_t> &prefix, const std::vector<std::size_t> &path) {
    return prefix.size() <= path.size() && std::equal(prefix.begin(), prefix.end(), path.begin());
}

}  // namespace

bool CheckReport::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic &d) { return d.severity == Severity::error; });
}

CheckReport Checker::check_all() const {
    CheckReport report;
    report.diagnostics = model_.declaration_diagnostics();
    for (const auto &st : model_.scenario().statements) {
        const std::size_t before = report.diagnostics.size();
        judge(st.node, st.id.name, report.diagnostics);
        if (!any_error(report.diagnostics, before)) {
            report.admissible_statements.push_back(st.id.name);
        }
    }
    sort_by_position(report.diagnostics);
    return report;
}

bool Checker::judge_yields(const lang::StatementNode &node, const std::string &statement,
                           std::vector<Diagnostic> &out, Leaf *leaf) const {
    const Span subject_span = node.subject.path.empty() ? node.span : node.subject.path.front().span;
    auto site = model_.resolve(node.subject);
    if (auto *e = std::get_if<ResolveError>(&site)) {
        out.push_back(Diagnostic::make(e->code, e->message, subject_span, statement));
        return false;
    }
    const std::string config_id = node.config ? node.config->name : std::string();
    const Span config_span = node.config ? node.config->span : node.span;
    auto config = model_.configuration(config_id);
    if (auto *e = std::get_if<ResolveError>(&config)) {
        out.push_back(Diagnostic::make(e->code, e->message, config_span, statement));
        return false;
    }
    const Site &subject = std::get<Site>(site);
    const Site config_site = *model_.config_site(config_id);
    if (!ScenarioModel::applies_to(config_site, subject)) {
        out.push_back(Diagnostic::make(DiagCode::E007,
                                       "configuration '" + config_id + "' acts on system '" + config_site.leaf +
                                           "', not on '" + node.subject.str() + "'",
                                       config_span, statement));
        return false;
    }
    const Configuration *c = std::get<const Configuration *>(config);
    if (node.kind == lang::NodeKind::yields && node.outcome && !c->index_of(node.outcome->label())) {
        out.push_back(Diagnostic::make(DiagCode::E006,
                                       "configuration '" + config_id + "' has no outcome '" + node.outcome->label() + "'",
                                       node.outcome->span, statement));
        return false;
    }
    if (leaf) {
        *leaf = Leaf{subject, c, config_id};
    }
    return true;
}

bool Checker::judge(const lang::StatementNode &node, const std::string &statement,
                    std::vector<Diagnostic> &out) const {
    switch (node.kind) {
        case lang::NodeKind::intrinsic_yields: {
            const std::string outcome = node.outcome ? node.outcome->label() : std::string("?");
            out.push_back(Diagnostic::make(DiagCode::E001,
                                           "'yields(" + node.subject.str() + ") = " + outcome +
                                               "' is ill-typed: an outcome is only defined relative to a "
                                               "configuration, as yields(" + node.subject.str() + ", <config>)",
                                           node.span, statement));
            return false;
        }
        case lang::NodeKind::yields:
            return judge_yields(node, statement, out, nullptr);
        case lang::NodeKind::composite: {
            bool children_ok = true;
            for (const auto &child : node.children) {
                children_ok = judge(child, statement, out) && children_ok;
            }
            if (!children_ok) {
                return false;
            }
            const std::size_t before = out.size();
            check_composition(node, statement, out);
            return !any_error(out, before);
        }
        case lang::NodeKind::joint_request: {
            const std::size_t before = out.size();
            check_joint_request(node, statement, out);
            return !any_error(out, before);
        }
    }
    return false;
}

void Checker::collect_leaves(const lang::StatementNode &node, std::vector<Leaf> &leaves) const {
    if (node.kind == lang::NodeKind::composite) {
        for (const auto &child : node.children) {
            collect_leaves(child, leaves);
        }
        return;
    }
    std::vector<Diagnostic> scratch;
    Leaf leaf;
    if (node.kind == lang::NodeKind::yields && judge_yields(node, {}, scratch, &leaf)) {
        leaves.push_back(std::move(leaf));
    }
}

bool Checker::leaves_compatible(const Leaf &a, const Leaf &b) const {
    if (a.subject.root != b.subject.root) {
        // Distinct declared systems: operators on different tensor factors.
        return true;
    }
    return compatible(model_.lift_to_root(*a.config, a.subject), model_.lift_to_root(*b.config, b.subject));
}

void Checker::check_composition(const lang::StatementNode &node, const std::string &statement,
                                std::vector<Diagnostic> &out) const {
    std::vector<Leaf> leaves;
    collect_leaves(node, leaves);
    std::optional<std::pair<std::string, std::string>> clash;
    for (std::size_t i = 0; i < leaves.size() && !clash; ++i) {
        for (std::size_t j = i + 1; j < leaves.size() && !clash; ++j) {
            if (!leaves_compatible(leaves[i], leaves[j])) {
                clash = std::make_pair(leaves[i].config_id, leaves[j].config_id);
            }
        }
    }
    if (!clash) {
        if (node.bridge) {
            out.push_back(Diagnostic::make(DiagCode::W001,
                                           "bridge '" + node.bridge->name +
                                               "' is redundant: the combined configurations are already compatible",
                                           node.bridge->span, statement));
        }
        return;
    }
    if (!node.bridge) {
        out.push_back(Diagnostic::make(DiagCode::E002,
                                       "composite claim combines outcomes of incompatible configurations '" +
                                           clash->first + "' and '" + clash->second +
                                           "' without a bridging interaction",
                                       node.span, statement));
        return;
    }
    const lang::BridgeDecl *bridge = model_.bridge(node.bridge->name);
    if (!bridge) {
        out.push_back(Diagnostic::make(DiagCode::E006, "bridge '" + node.bridge->name + "' is not declared",
                                       node.bridge->span, statement));
        return;
    }
    if (bridge->kind == lang::BridgeKind::epistemic) {
        out.push_back(Diagnostic::make(DiagCode::E003,
                                       "bridge '" + bridge->id.name +
                                           "' is epistemic: inferring an outcome does not instantiate a configuration "
                                           "in which '" + clash->first + "' and '" + clash->second +
                                           "' outcomes can be compared",
                                       node.bridge->span, statement));
        return;
    }
    validate_bridge(*bridge, node, statement, out);
}

void Checker::validate_bridge(const lang::BridgeDecl &bridge, const lang::StatementNode &node,
                              const std::string &statement, std::vector<Diagnostic> &out) const {
    const Span span = node.bridge ? node.bridge->span : node.span;
    auto invalid = [&](const std::string &reason) {
        out.push_back(Diagnostic::make(DiagCode::E004, "bridge '" + bridge.id.name + "' is invalid: " + reason, span,
                                       statement));
    };
    auto config = model_.configuration(bridge.config.name);
    if (auto *e = std::get_if<ResolveError>(&config)) {
        invalid("unresolved configuration (" + e->message + ")");
        return;
    }
    const Configuration &cstar = *std::get<const Configuration *>(config);
    const Site cstar_site = *model_.config_site(bridge.config.name);

    std::vector<Leaf> leaves;
    collect_leaves(node, leaves);
    for (const auto &leaf : leaves) {
        if (leaf.subject.root != cstar_site.root || !is_prefix(cstar_site.path, leaf.subject.path)) {
            invalid("wrong system: configuration '" + bridge.config.name + "' does not act on a system containing '" +
                    leaf.subject.root + "'");
            return;
        }
    }
    for (const auto &m : bridge.maps) {
        if (!cstar.index_of(m.to.label())) {
            invalid("unknown label '" + m.to.label() + "' for configuration '" + bridge.config.name + "'");
            return;
        }
    }
    const std::string tuple = outcome_tuple(node);
    const bool mapped = std::any_of(bridge.maps.begin(), bridge.maps.end(),
                                    [&](const lang::BridgeMapping &m) { return m.from.label() == tuple; });
    if (!mapped) {
        invalid("missing mapping for outcome tuple " + tuple);
    }
}

void Checker::check_joint_request(const lang::StatementNode &node, const std::string &statement,
                                  std::vector<Diagnostic> &out) const {
    // Each configuration must measure the subject, like a yields claim.
    lang::StatementNode first = node;
    first.kind = lang::NodeKind::yields;
    first.outcome.reset();
    lang::StatementNode second = first;
    second.config = node.config2;
    Leaf a;
    Leaf b;
    const bool ok_a = judge_yields(first, statement, out, &a);
    const bool ok_b = judge_yields(second, statement, out, &b);
    if (!ok_a || !ok_b) {
        return;
    }
    if (!compatible(*a.config, *b.config)) {
        out.push_back(Diagnostic::make(DiagCode::E005,
                                       "no joint distribution is defined over incompatible configurations '" +
                                           a.config_id + "' and '" + b.config_id +
                                           "'; requesting one is a category error, not a request for missing data",
                                       node.span, statement));
    }
}

CheckReport check(const lang::Scenario &scenario) {
    return Checker(scenario).check_all();
}

std::vector<Diagnostic> check_composition(const lang::StatementNode &node, const lang::Scenario &scenario) {
    std::vector<Diagnostic> out;
    Checker(scenario).check_composition(node, {}, out);
    return out;
}

std::vector<Diagnostic> validate_bridge(const lang::BridgeDecl &bridge, const lang::StatementNode &node,
                                        const lang::Scenario &scenario) {
    std::vector<Diagnostic> out;
    Checker(scenario).validate_bridge(bridge, node, {}, out);
    return out;
}

std::vector<Diagnostic> check_joint_request(const lang::StatementNode &node, const lang::Scenario &scenario) {
    std::vector<Diagnostic> out;
    Checker(scenario).check_joint_request(node, {}, out);
    return out;
}

}  // namespace icsq::check
