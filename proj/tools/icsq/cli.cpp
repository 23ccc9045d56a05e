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
#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "icsq/cases.hpp"
#include "icsq/checker.hpp"
#include "icsq/correlation.hpp"
#include "icsq/error.hpp"
#include "icsq/ks.hpp"
#include "icsq/model.hpp"
#include "icsq/parser.hpp"

namespace icsq::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string file;
    std::string structure;
    std::string config;
    std::uint64_t n = 100000;
    double tol = 0.01;
    std::string angles;
    bool degrees = false;
    std::string instance;
    std::string write_dir;
};

/// Raised for unreadable inputs and malformed non-scenario inputs (exit 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised for flag values CLI11 cannot validate on its own (exit 3).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    return lang::format_number(v);
}

std::string dump(const Json &j) {
    return j.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw InputError("error while reading '" + path + "'");
    }
    return buf.str();
}

class Runner {
   public:
    Runner(const Options &opt, std::ostream &out, std::ostream &err, bool color)
        : opt_(opt), out_(out), err_(err), color_(color) {
    }

    int check() {
        auto scenario = load();
        if (!scenario) {
            return kExitInputError;
        }
        const auto report = check::check(*scenario);
        if (json()) {
            out_ << render_diagnostics(report.diagnostics, ReportFormat::json, {}) << "\n";
        } else {
            out_ << render_diagnostics(report.diagnostics, ReportFormat::text, render_options());
            std::size_t errors = 0;
            for (const auto &d : report.diagnostics) {
                errors += d.severity == Severity::error ? 1 : 0;
            }
            out_ << opt_.file << ": " << errors << " error(s), " << report.diagnostics.size() - errors
                 << " warning(s); " << report.admissible_statements.size() << " of "
                 << scenario->statements.size() << " statement(s) admissible\n";
        }
        return report.has_errors() ? kExitFindings : kExitOk;
    }

    int prob() {
        auto scenario = load();
        if (!scenario) {
            return kExitInputError;
        }
        const check::ScenarioModel model(*scenario);
        auto ev = evaluation(model);
        if (!ev) {
            return kExitFindings;
        }
        const OutcomeDistribution dist = born_probabilities(ev->structure, ev->config);
        if (json()) {
            Json probs = Json::object();
            for (const auto &e : dist) {
                probs[e.label] = e.probability;
            }
            out_ << dump(Json{{"structure", opt_.structure}, {"config", opt_.config}, {"probabilities", probs}});
        } else {
            for (const auto &e : dist) {
                out_ << "P(" << e.label << " | " << opt_.structure << ", " << opt_.config << ") = " << num(e.probability)
                     << "\n";
            }
        }
        return kExitOk;
    }

    int repeat() {
        if (opt_.n == 0) {
            throw UsageError("--n must be at least 1");
        }
        auto scenario = load();
        if (!scenario) {
            return kExitInputError;
        }
        const check::ScenarioModel model(*scenario);
        auto ev = evaluation(model);
        if (!ev) {
            return kExitFindings;
        }
        const RepeatabilityReport rep = repeatability_check(ev->structure, ev->config, opt_.seed, opt_.n, opt_.tol);
        const double n = static_cast<double>(opt_.n);
        if (json()) {
            Json outcomes = Json::array();
            for (std::size_t i = 0; i < rep.counts.size(); ++i) {
                const double expected = rep.expected.entries()[i].probability;
                const double freq = static_cast<double>(rep.counts[i].count) / n;
                outcomes.push_back(Json{{"label", rep.counts[i].label},
                                        {"expected", expected},
                                        {"count", rep.counts[i].count},
                                        {"frequency", freq},
                                        {"deviation", std::abs(freq - expected)}});
            }
            out_ << dump(Json{{"structure", opt_.structure},
                              {"config", opt_.config},
                              {"n", opt_.n},
                              {"seed", opt_.seed},
                              {"tolerance", opt_.tol},
                              {"outcomes", outcomes},
                              {"max_abs_deviation", rep.max_abs_deviation},
                              {"pass", rep.pass}});
        } else {
            out_ << "structure " << opt_.structure << ", config " << opt_.config << ", n = " << opt_.n
                 << ", seed = " << opt_.seed << "\n";
            for (std::size_t i = 0; i < rep.counts.size(); ++i) {
                const double freq = static_cast<double>(rep.counts[i].count) / n;
                out_ << "  " << rep.counts[i].label << ": expected " << num(rep.expected.entries()[i].probability)
                     << ", observed " << num(freq) << " (" << rep.counts[i].count << ")\n";
            }
            out_ << "max |deviation| = " << num(rep.max_abs_deviation) << " (tolerance " << num(opt_.tol) << "): "
                 << (rep.pass ? "PASS" : "FAIL") << "\n";
        }
        return rep.pass ? kExitOk : kExitFindings;
    }

    int bell() {
        bell::AngleSettings s = parse_angles();
        const double e_ab = bell::correlation(s.a, s.b);
        const double e_abp = bell::correlation(s.a, s.b_prime);
        const double e_apb = bell::correlation(s.a_prime, s.b);
        const double e_apbp = bell::correlation(s.a_prime, s.b_prime);
        const double chsh = e_ab - e_abp + e_apb + e_apbp;
        const bell::LhvMaximum lhv = bell::lhv_max_chsh();
        const bell::JointExistence joint = bell::joint_distribution_exists(bell::singlet_table(s));
        const double tsirelson = 2.0 * std::numbers::sqrt2;
        if (json()) {
            Json witness = nullptr;
            if (joint.witness) {
                witness = Json::array();
                for (double w : *joint.witness) {
                    witness.push_back(w);
                }
            }
            out_ << dump(Json{
                {"angles", {{"a", s.a}, {"a_prime", s.a_prime}, {"b", s.b}, {"b_prime", s.b_prime}}},
                {"correlations", {{"E(a,b)", e_ab}, {"E(a,b')", e_abp}, {"E(a',b)", e_apb}, {"E(a',b')", e_apbp}}},
                {"S", std::abs(chsh)},
                {"S_signed", chsh},
                {"lhv_max", lhv.max},
                {"tsirelson_bound", tsirelson},
                {"joint_distribution_exists", joint.exists},
                {"witness", witness}});
        } else {
            out_ << "angles (rad): a = " << num(s.a) << ", a' = " << num(s.a_prime) << ", b = " << num(s.b)
                 << ", b' = " << num(s.b_prime) << "\n";
            out_ << "E(a,b)   = " << num(e_ab) << "\n";
            out_ << "E(a,b')  = " << num(e_abp) << "\n";
            out_ << "E(a',b)  = " << num(e_apb) << "\n";
            out_ << "E(a',b') = " << num(e_apbp) << "\n";
            out_ << "S = " << num(chsh) << ", |S| = " << num(std::abs(chsh)) << "\n";
            out_ << "LHV max |S| = " << num(lhv.max) << ", Tsirelson bound = " << num(tsirelson) << "\n";
            out_ << "joint distribution over (a, a', b, b'): " << (joint.exists ? "exists" : "does not exist")
                 << "\n";
        }
        return kExitOk;
    }

    int ks() {
        std::string name = opt_.instance;
        std::optional<ks::KSInstance> inst = ks::find_builtin(name);
        if (!inst) {
            try {
                inst = ks::parse_instance(read_file(opt_.instance));
            } catch (const Error &e) {
                throw InputError(opt_.instance + ": " + e.what());
            }
        }
        const auto issues = ks::verify_instance(*inst);
        if (!issues.empty()) {
            for (const auto &issue : issues) {
                err_ << opt_.instance << ": " << issue.message;
                if (issue.context) {
                    err_ << " (context " << *issue.context << ")";
                }
                err_ << "\n";
            }
            return kExitFindings;
        }
        const ks::ColorResult res = ks::color(*inst);
        if (json()) {
            Json witness = nullptr;
            if (res.witness) {
                witness = Json::array();
                for (auto v : *res.witness) {
                    witness.push_back(static_cast<int>(v));
                }
            }
            out_ << dump(Json{{"instance", name},
                              {"dim", inst->dim},
                              {"rays", inst->rays.size()},
                              {"contexts", inst->contexts.size()},
                              {"colorable", res.colorable},
                              {"nodes_explored", res.nodes_explored},
                              {"witness", witness}});
        } else {
            out_ << "instance: " << name << " (dim " << inst->dim << ", " << inst->rays.size() << " rays, "
                 << inst->contexts.size() << " contexts)\n";
            out_ << "colorable: " << (res.colorable ? "true" : "false") << "\n";
            out_ << "nodes_explored: " << res.nodes_explored << "\n";
            if (res.witness) {
                out_ << "witness:";
                for (auto v : *res.witness) {
                    out_ << " " << static_cast<int>(v);
                }
                out_ << "\n";
            }
        }
        return kExitOk;
    }

    int examples() {
        const auto all = cases::all_cases();
        if (!opt_.write_dir.empty()) {
            std::error_code ec;
            fs::create_directories(opt_.write_dir, ec);
            if (ec) {
                throw InputError("cannot create '" + opt_.write_dir + "': " + ec.message());
            }
            for (const auto &cs : all) {
                const fs::path path = fs::path(opt_.write_dir) / (cs.name + ".icsq");
                std::ofstream f(path, std::ios::binary);
                f << cs.source;
                if (!f) {
                    throw InputError("cannot write '" + path.string() + "'");
                }
            }
        }
        if (json()) {
            Json list = Json::array();
            for (const auto &cs : all) {
                Json codes = Json::object();
                for (const auto &[id, cs_codes] : cs.expected_codes) {
                    Json arr = Json::array();
                    for (DiagCode c : cs_codes) {
                        arr.push_back(code_string(c));
                    }
                    codes[id] = arr;
                }
                Json item{{"name", cs.name}, {"statements", cs.scenario.statements.size()}, {"expected_codes", codes}};
                if (!opt_.write_dir.empty()) {
                    item["file"] = (fs::path(opt_.write_dir) / (cs.name + ".icsq")).generic_string();
                }
                list.push_back(std::move(item));
            }
            out_ << dump(Json{{"examples", list}});
        } else {
            for (const auto &cs : all) {
                out_ << cs.name << ": " << cs.scenario.statements.size() << " statements;";
                for (const auto &[id, cs_codes] : cs.expected_codes) {
                    for (DiagCode c : cs_codes) {
                        out_ << " " << id << "=" << code_string(c);
                    }
                }
                if (!opt_.write_dir.empty()) {
                    out_ << "; wrote " << (fs::path(opt_.write_dir) / (cs.name + ".icsq")).generic_string();
                }
                out_ << "\n";
            }
        }
        return kExitOk;
    }

   private:
    bool json() const {
        return opt_.format == "json";
    }

    RenderOptions render_options() const {
        RenderOptions r;
        r.source = source_;
        r.filename = opt_.file;
        r.color = color_;
        return r;
    }

    std::optional<lang::Scenario> load() {
        source_ = read_file(opt_.file);
        auto parsed = lang::parse(source_);
        if (!parsed.ok()) {
            const auto format = json() ? ReportFormat::json : ReportFormat::text;
            out_ << render_diagnostics(parsed.errors, format, render_options());
            if (json()) {
                out_ << "\n";
            }
            return std::nullopt;
        }
        return std::move(parsed.scenario);
    }

    std::optional<check::ScenarioModel::Evaluation> evaluation(const check::ScenarioModel &model) {
        auto ev = model.evaluation(opt_.structure, opt_.config);
        if (auto *bad = std::get_if<check::ResolveError>(&ev)) {
            err_ << opt_.file << ": error[" << code_string(bad->code) << "]: " << bad->message << "\n";
            return std::nullopt;
        }
        return std::get<check::ScenarioModel::Evaluation>(std::move(ev));
    }

    bell::AngleSettings parse_angles() const {
        if (opt_.angles.empty()) {
            return {0.0, std::numbers::pi / 2, std::numbers::pi / 4, 3 * std::numbers::pi / 4};
        }
        std::vector<double> v;
        std::stringstream ss(opt_.angles);
        ss.imbue(std::locale::classic());
        for (std::string item; std::getline(ss, item, ',');) {
            try {
                std::size_t used = 0;
                const double x = std::stod(item, &used);
                if (used != item.size() || !std::isfinite(x)) {
                    throw std::invalid_argument(item);
                }
                v.push_back(opt_.degrees ? x * std::numbers::pi / 180.0 : x);
            } catch (const std::logic_error &) {
                throw UsageError("--angles: '" + item + "' is not a finite number");
            }
        }
        if (v.size() != 4) {
            throw UsageError("--angles expects four comma-separated values a,a',b,b'");
        }
        return {v[0], v[1], v[2], v[3]};
    }

    const Options &opt_;
    std::ostream &out_;
    std::ostream &err_;
    bool color_;
    std::string source_;
};

}  // namespace

bool color_from_env() {
    const char *v = std::getenv("ICSQ_COLOR");
    return v != nullptr && std::string_view(v) == "1";
}

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err, bool color) {
    Options opt;
    CLI::App app{"Configuration-relative outcome checker and quantum toolkit", "icsq"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "icsq 0.1.0");
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for all sampling")->capture_default_str();

    auto *check_cmd = app.add_subcommand("check", "Parse and type-check a scenario file");
    check_cmd->add_option("file", opt.file, "Scenario (.icsq) file")->required();

    auto *prob_cmd = app.add_subcommand("prob", "Born probabilities of a configuration on a structure");
    prob_cmd->add_option("file", opt.file, "Scenario (.icsq) file")->required();
    prob_cmd->add_option("--structure", opt.structure, "Structure id")->required();
    prob_cmd->add_option("--config", opt.config, "Configuration id")->required();

    auto *bell_cmd = app.add_subcommand("bell", "CHSH analysis of the spin singlet");
    bell_cmd->add_option("--angles", opt.angles, "a,a',b,b' (default 0,pi/2,pi/4,3pi/4)");
    bell_cmd->add_flag("--degrees", opt.degrees, "Read --angles in degrees");

    auto *ks_cmd = app.add_subcommand("ks", "Kochen-Specker colorability search");
    ks_cmd->add_option("--instance", opt.instance, "Bundled instance name (cabello-18, peres-33) or file")
        ->required();

    auto *repeat_cmd = app.add_subcommand("repeat", "Monte Carlo repeatability check against Born probabilities");
    repeat_cmd->add_option("file", opt.file, "Scenario (.icsq) file")->required();
    repeat_cmd->add_option("--structure", opt.structure, "Structure id")->required();
    repeat_cmd->add_option("--config", opt.config, "Configuration id")->required();
    repeat_cmd->add_option("--n", opt.n, "Number of samples")->check(CLI::NonNegativeNumber)->capture_default_str();
    repeat_cmd->add_option("--tol", opt.tol, "Maximum allowed |frequency - probability|")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto *examples_cmd = app.add_subcommand("examples", "List the bundled case studies");
    examples_cmd->add_option("--write", opt.write_dir, "Write each case study as DIR/<name>.icsq");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        const auto selected = app.get_subcommands();
        out << (selected.empty() ? app.help("", CLI::AppFormatMode::All) : selected.front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &e) {
        out << e.what() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "icsq: " << e.what() << "\nRun 'icsq --help' for usage.\n";
        return kExitUsage;
    }

    Runner runner(opt, out, err, color);
    try {
        if (check_cmd->parsed()) return runner.check();
        if (prob_cmd->parsed()) return runner.prob();
        if (bell_cmd->parsed()) return runner.bell();
        if (ks_cmd->parsed()) return runner.ks();
        if (repeat_cmd->parsed()) return runner.repeat();
        if (examples_cmd->parsed()) return runner.examples();
    } catch (const UsageError &e) {
        err << "icsq: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError &e) {
        err << "icsq: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error &e) {
        err << "icsq: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitUsage;
}

}  // namespace icsq::cli
