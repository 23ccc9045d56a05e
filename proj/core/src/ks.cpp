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
#include "icsq/ks.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "embedded_data.hpp"
#include "icsq/error.hpp"
#include "icsq/parser.hpp"

namespace icsq::ks {

namespace {

bool orthogonal(const Vector &u, const Vector &v) {
    return std::abs(u.dot(v)) < kOrthoTol;
}

std::string join(const std::vector<std::size_t> &xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? " " : "") + std::to_string(xs[i]);
    }
    return out;
}

class Search {
   public:
    explicit Search(const KSInstance &inst)
        : inst_(inst), ortho_(orthogonality_graph(inst)), member_of_(inst.rays.size()),
          value_(inst.rays.size(), kUnset) {
        for (std::size_t c = 0; c < inst.contexts.size(); ++c) {
            for (std::size_t r : inst.contexts[c]) {
                member_of_[r].push_back(c);
            }
        }
    }

    ColorResult run() {
        ColorResult result;
        result.colorable = dfs();
        result.nodes_explored = nodes_;
        if (result.colorable) {
            Coloring coloring(value_.size());
            for (std::size_t i = 0; i < value_.size(); ++i) {
                coloring[i] = value_[i] == 1 ? 1 : 0;
            }
            result.witness = std::move(coloring);
        }
        return result;
    }

   private:
    static constexpr std::int8_t kUnset = -1;

    bool dfs() {
        const auto next = std::find(value_.begin(), value_.end(), kUnset);
        if (next == value_.end()) {
            return true;
        }
        const auto ray = static_cast<std::size_t>(next - value_.begin());
        for (std::int8_t v : {std::int8_t{1}, std::int8_t{0}}) {
            ++nodes_;
            const std::size_t mark = trail_.size();
            if (assign(ray, v) && propagate() && dfs()) {
                return true;
            }
            undo(mark);
        }
        return false;
    }

    bool assign(std::size_t ray, std::int8_t v) {
        if (value_[ray] != kUnset) {
            return value_[ray] == v;
        }
        value_[ray] = v;
        trail_.push_back(ray);
        queue_.push_back(ray);
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = kUnset;
            trail_.pop_back();
        }
        queue_.clear();
    }

    bool propagate() {
        while (!queue_.empty()) {
            const std::size_t r = queue_.back();
            queue_.pop_back();
            if (value_[r] == 1) {
                for (std::size_t nb : ortho_[r]) {
                    if (!assign(nb, 0)) {
                        return false;
                    }
                }
            }
            for (std::size_t c : member_of_[r]) {
                if (!propagate_context(inst_.contexts[c])) {
                    return false;
                }
            }
        }
        return true;
    }

    bool propagate_context(const std::vector<std::size_t> &ctx) {
        std::size_t ones = 0;
        std::size_t unset = 0;
        std::size_t last_unset = 0;
        for (std::size_t r : ctx) {
            if (value_[r] == 1) {
                ++ones;
            } else if (value_[r] == kUnset) {
                ++unset;
                last_unset = r;
            }
        }
        if (ones > 1 || (ones == 0 && unset == 0)) {
            return false;
        }
        if (ones == 0 && unset == 1) {
            return assign(last_unset, 1);
        }
        if (ones == 1) {
            for (std::size_t r : ctx) {
                if (value_[r] == kUnset && !assign(r, 0)) {
                    return false;
                }
            }
        }
        return true;
    }

    const KSInstance &inst_;
    std::vector<std::vector<std::size_t>> ortho_;
    std::vector<std::vector<std::size_t>> member_of_;
    std::vector<std::int8_t> value_;
    std::vector<std::size_t> trail_;
    std::vector<std::size_t> queue_;
    std::uint64_t nodes_ = 0;
};

double parse_double(std::string_view s, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::InvalidArgument,
                    "line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    }
    return v;
}

std::size_t parse_index(std::string_view s, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    "line " + std::to_string(line) + ": bad index '" + std::string(s) + "'");
    }
    return v;
}

Complex parse_component(std::string_view s, std::size_t line) {
    const std::size_t comma = s.find(',');
    if (comma == std::string_view::npos) {
        return {parse_double(s, line), 0.0};
    }
    return {parse_double(s.substr(0, comma), line), parse_double(s.substr(comma + 1), line)};
}

}  // namespace

std::vector<std::vector<std::size_t>> orthogonality_graph(const KSInstance &inst) {
    std::vector<std::vector<std::size_t>> adj(inst.rays.size());
    for (std::size_t i = 0; i < inst.rays.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.rays.size(); ++j) {
            if (inst.rays[i].size() == inst.rays[j].size() && orthogonal(inst.rays[i], inst.rays[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    return adj;
}

std::vector<InstanceIssue> verify_instance(const KSInstance &inst) {
    std::vector<InstanceIssue> issues;
    if (inst.dim < 3) {
        issues.push_back({"dimension must be at least 3", {}, std::nullopt});
    }
    for (std::size_t i = 0; i < inst.rays.size(); ++i) {
        const Vector &r = inst.rays[i];
        if (static_cast<std::size_t>(r.size()) != inst.dim) {
            issues.push_back({"ray has " + std::to_string(r.size()) + " components, expected " +
                                  std::to_string(inst.dim),
                              {i},
                              std::nullopt});
        } else if (!r.allFinite() || std::abs(r.norm() - 1.0) > kTolNorm) {
            issues.push_back({"ray is not a unit vector", {i}, std::nullopt});
        }
    }
    for (std::size_t c = 0; c < inst.contexts.size(); ++c) {
        const auto &ctx = inst.contexts[c];
        if (ctx.size() != inst.dim) {
            issues.push_back({"context has " + std::to_string(ctx.size()) + " rays, expected " +
                                  std::to_string(inst.dim),
                              ctx,
                              c});
        }
        bool in_range = true;
        for (std::size_t r : ctx) {
            if (r >= inst.rays.size()) {
                issues.push_back({"context refers to unknown ray " + std::to_string(r), {r}, c});
                in_range = false;
            }
        }
        if (!in_range) {
            continue;
        }
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            for (std::size_t j = i + 1; j < ctx.size(); ++j) {
                const Vector &u = inst.rays[ctx[i]];
                const Vector &v = inst.rays[ctx[j]];
                if (ctx[i] == ctx[j] || u.size() != v.size() || !orthogonal(u, v)) {
                    issues.push_back({"rays " + std::to_string(ctx[i]) + " and " + std::to_string(ctx[j]) +
                                          " are not orthogonal",
                                      {ctx[i], ctx[j]},
                                      c});
                }
            }
        }
    }
    return issues;
}

ColorResult color(const KSInstance &instance) {
    return Search(instance).run();
}

bool verify_coloring(const KSInstance &inst, const Coloring &coloring) {
    if (coloring.size() != inst.rays.size()) {
        return false;
    }
    for (std::uint8_t v : coloring) {
        if (v > 1) {
            return false;
        }
    }
    for (const auto &ctx : inst.contexts) {
        int ones = 0;
        for (std::size_t r : ctx) {
            ones += coloring[r];
        }
        if (ones != 1) {
            return false;
        }
    }
    for (std::size_t i = 0; i < inst.rays.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.rays.size(); ++j) {
            if (coloring[i] == 1 && coloring[j] == 1 && std::abs(inst.rays[i].dot(inst.rays[j])) < kOrthoTol) {
                return false;
            }
        }
    }
    return true;
}

KSInstance without_context(const KSInstance &instance, std::size_t index) {
    if (index >= instance.contexts.size()) {
        throw Error(ErrorKind::InvalidArgument, "context index out of range");
    }
    KSInstance out = instance;
    out.contexts.erase(out.contexts.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

KSInstance parse_instance(std::string_view text) {
    KSInstance inst;
    bool have_dim = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        auto fail = [&](const std::string &msg) {
            throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": " + msg);
        };
        if (tok[0] == "dim") {
            if (have_dim || tok.size() != 2) {
                fail("expected a single 'dim N' header");
            }
            inst.dim = parse_index(tok[1], line_no);
            if (inst.dim == 0 || inst.dim > kMaxDim) {
                fail("dimension out of range");
            }
            have_dim = true;
        } else if (!have_dim) {
            fail("'dim N' must come first");
        } else if (tok[0] == "ray") {
            if (tok.size() != inst.dim + 2) {
                fail("ray needs an index and " + std::to_string(inst.dim) + " components");
            }
            if (parse_index(tok[1], line_no) != inst.rays.size()) {
                fail("ray indices must be consecutive from 0");
            }
            Vector v(static_cast<Eigen::Index>(inst.dim));
            for (std::size_t k = 0; k < inst.dim; ++k) {
                v(static_cast<Eigen::Index>(k)) = parse_component(tok[k + 2], line_no);
            }
            inst.rays.push_back(std::move(v));
        } else if (tok[0] == "context") {
            std::vector<std::size_t> ctx;
            for (std::size_t k = 1; k < tok.size(); ++k) {
                ctx.push_back(parse_index(tok[k], line_no));
            }
            inst.contexts.push_back(std::move(ctx));
        } else {
            fail("unknown directive '" + tok[0] + "'");
        }
    }
    if (!have_dim) {
        throw Error(ErrorKind::InvalidArgument, "missing 'dim N' header");
    }
    return inst;
}

std::string format_instance(const KSInstance &inst) {
    std::string out = "dim " + std::to_string(inst.dim) + "\n";
    for (std::size_t i = 0; i < inst.rays.size(); ++i) {
        out += "ray " + std::to_string(i);
        for (Eigen::Index k = 0; k < inst.rays[i].size(); ++k) {
            const Complex c = inst.rays[i](k);
            out += " " + lang::format_number(c.real());
            if (c.imag() != 0.0) {
                out += "," + lang::format_number(c.imag());
            }
        }
        out += "\n";
    }
    for (const auto &ctx : inst.contexts) {
        out += "context " + join(ctx) + "\n";
    }
    return out;
}

std::vector<NamedInstance> builtin_instances() {
    std::vector<NamedInstance> out;
    for (const char *name : {"cabello-18", "peres-33"}) {
        out.push_back({name, parse_instance(detail::embedded_file(std::string("ks/") + name + ".ks"))});
    }
    return out;
}

std::optional<KSInstance> find_builtin(std::string_view name) {
    for (auto &entry : builtin_instances()) {
        if (entry.name == name) {
            return std::move(entry.instance);
        }
    }
    return std::nullopt;
}

}  // namespace icsq::ks
