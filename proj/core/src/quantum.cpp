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
#include "icsq/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include <Eigen/Eigenvalues>

namespace icsq {

namespace detail {

bool is_finite(const Matrix &m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Complex z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double max_abs(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

double min_eigenvalue(const Matrix &m) {
    Matrix h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void check_dim(std::size_t dim, ErrorKind zero_kind) {
    if (dim == 0) {
        throw Error(zero_kind, "dimension must be positive");
    }
    if (dim > kMaxDim) {
        throw Error(ErrorKind::InternalLimit, "dimension " + std::to_string(dim) + " exceeds cap of 64");
    }
}

}  // namespace detail

namespace {

Matrix identity(std::size_t dim) {
    return Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

double clamp_probability(double p) {
    return std::clamp(p, 0.0, 1.0);
}

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementation.
double unit_interval(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

QuantumStructure QuantumStructure::pure(Vector amplitudes) {
    detail::check_dim(static_cast<std::size_t>(amplitudes.size()), ErrorKind::InvalidStructure);
    if (!detail::is_finite(amplitudes)) {
        throw Error(ErrorKind::InvalidStructure, "amplitudes must be finite");
    }
    const double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > kTolNorm) {
        throw Error(ErrorKind::InvalidStructure, "pure state has norm " + std::to_string(norm) + ", expected 1");
    }
    return QuantumStructure(std::move(amplitudes));
}

QuantumStructure QuantumStructure::mixed(Matrix density) {
    if (density.rows() != density.cols()) {
        throw Error(ErrorKind::InvalidStructure, "density matrix must be square");
    }
    detail::check_dim(static_cast<std::size_t>(density.rows()), ErrorKind::InvalidStructure);
    if (!detail::is_finite(density)) {
        throw Error(ErrorKind::InvalidStructure, "density matrix entries must be finite");
    }
    if (!detail::is_hermitian(density, kTolHerm)) {
        throw Error(ErrorKind::InvalidStructure, "density matrix is not Hermitian");
    }
    const Complex tr = density.trace();
    if (std::abs(tr.real() - 1.0) > kTolNorm || std::abs(tr.imag()) > kTolNorm) {
        throw Error(ErrorKind::InvalidStructure, "density matrix trace is not 1");
    }
    if (detail::min_eigenvalue(density) < kTolPsd) {
        throw Error(ErrorKind::InvalidStructure, "density matrix is not positive semidefinite");
    }
    return QuantumStructure(std::move(density));
}

std::size_t QuantumStructure::dim() const noexcept {
    return std::visit([](const auto &b) { return static_cast<std::size_t>(b.rows()); }, body_);
}

const Vector &QuantumStructure::amplitudes() const {
    if (!is_pure()) {
        throw Error(ErrorKind::InvalidArgument, "structure is a density matrix, not a pure vector");
    }
    return std::get<Vector>(body_);
}

Matrix QuantumStructure::density() const {
    if (const auto *v = std::get_if<Vector>(&body_)) {
        return (*v) * v->adjoint();
    }
    return std::get<Matrix>(body_);
}

Configuration Configuration::make(std::string id, ConfigKind kind, std::vector<Effect> effects) {
    if (effects.empty()) {
        throw Error(ErrorKind::InvalidConfiguration, "configuration '" + id + "' has no effects");
    }
    const auto dim = static_cast<std::size_t>(effects.front().op.rows());
    detail::check_dim(dim, ErrorKind::InvalidConfiguration);
    std::unordered_set<std::string> labels;
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &e : effects) {
        const std::string where = "effect '" + e.label + "' of '" + id + "'";
        if (static_cast<std::size_t>(e.op.rows()) != dim || static_cast<std::size_t>(e.op.cols()) != dim) {
            throw Error(ErrorKind::DimensionMismatch, where + " is not " + std::to_string(dim) + "x" +
                                                          std::to_string(dim));
        }
        if (!labels.insert(e.label).second) {
            throw Error(ErrorKind::InvalidConfiguration, "duplicate outcome label '" + e.label + "' in '" + id + "'");
        }
        if (!detail::is_finite(e.op)) {
            throw Error(ErrorKind::InvalidConfiguration, where + " has non-finite entries");
        }
        if (!detail::is_hermitian(e.op, kTolHerm)) {
            throw Error(ErrorKind::InvalidConfiguration, where + " is not Hermitian");
        }
        if (detail::min_eigenvalue(e.op) < kTolPsd) {
            throw Error(ErrorKind::InvalidConfiguration, where + " is not positive semidefinite");
        }
        sum += e.op;
    }
    if (detail::max_abs(sum - identity(dim)) > kTolHerm) {
        throw Error(ErrorKind::InvalidConfiguration, "effects of '" + id + "' do not sum to the identity");
    }
    if (kind == ConfigKind::projective) {
        for (std::size_t i = 0; i < effects.size(); ++i) {
            const Matrix &a = effects[i].op;
            if (detail::max_abs(a * a - a) > kTolHerm) {
                throw Error(ErrorKind::InvalidConfiguration,
                            "effect '" + effects[i].label + "' of projective '" + id + "' is not idempotent");
            }
            for (std::size_t j = i + 1; j < effects.size(); ++j) {
                if (detail::max_abs(a * effects[j].op) > kTolHerm) {
                    throw Error(ErrorKind::InvalidConfiguration, "effects '" + effects[i].label + "' and '" +
                                                                     effects[j].label + "' of projective '" + id +
                                                                     "' are not orthogonal");
                }
            }
        }
    }
    Configuration c;
    c.id_ = std::move(id);
    c.kind_ = kind;
    c.dim_ = dim;
    c.effects_ = std::move(effects);
    return c;
}

std::optional<std::size_t> Configuration::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < effects_.size(); ++i) {
        if (effects_[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

Configuration Configuration::renamed(std::string id) const {
    Configuration c = *this;
    c.id_ = std::move(id);
    return c;
}

double OutcomeDistribution::at(std::string_view label) const {
    for (const auto &e : entries_) {
        if (e.label == label) {
            return e.probability;
        }
    }
    throw Error(ErrorKind::UnknownOutcome, "no outcome labelled '" + std::string(label) + "'");
}

double OutcomeDistribution::total() const {
    double t = 0.0;
    for (const auto &e : entries_) {
        t += e.probability;
    }
    return t;
}

OutcomeDistribution born_probabilities(const QuantumStructure &structure, const Configuration &config) {
    if (structure.dim() != config.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "structure has dimension " + std::to_string(structure.dim()) +
                                                      ", configuration '" + config.id() + "' has dimension " +
                                                      std::to_string(config.dim()));
    }
    std::vector<OutcomeProbability> entries;
    entries.reserve(config.effects().size());
    double total = 0.0;
    for (const auto &e : config.effects()) {
        double p;
        if (structure.is_pure()) {
            const Vector &psi = structure.amplitudes();
            p = psi.dot(e.op * psi).real();
        } else {
            p = (e.op * structure.density()).trace().real();
        }
        // Valid inputs land within kTolZero of [0, 1]; anything past kTolNorm
        // means an invariant was broken upstream.
        if (p < -kTolNorm || p > 1.0 + kTolNorm) {
            throw Error(ErrorKind::InvalidConfiguration, "probability for '" + e.label + "' out of range");
        }
        total += p;
        entries.push_back({e.label, clamp_probability(p)});
    }
    if (std::abs(total - 1.0) > kTolNorm) {
        throw Error(ErrorKind::InvalidStructure, "probabilities sum to " + std::to_string(total));
    }
    return OutcomeDistribution(std::move(entries));
}

QuantumStructure update(const QuantumStructure &structure, const Configuration &config, std::string_view outcome) {
    if (config.kind() != ConfigKind::projective) {
        throw Error(ErrorKind::NonProjectiveUpdate, "configuration '" + config.id() + "' is a POVM");
    }
    const auto idx = config.index_of(outcome);
    if (!idx) {
        throw Error(ErrorKind::UnknownOutcome,
                    "configuration '" + config.id() + "' has no outcome '" + std::string(outcome) + "'");
    }
    const double p = born_probabilities(structure, config).entries()[*idx].probability;
    if (p <= kTolZero) {
        throw Error(ErrorKind::ZeroProbabilityOutcome, "outcome '" + std::string(outcome) + "' has probability 0");
    }
    const Matrix &e = config.effects()[*idx].op;
    if (structure.is_pure()) {
        Vector v = e * structure.amplitudes();
        v /= v.norm();
        return QuantumStructure::pure(std::move(v));
    }
    Matrix rho = e * structure.density() * e;
    rho /= rho.trace().real();
    return QuantumStructure::mixed(std::move(rho));
}

namespace {

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::size_t checked_product(std::size_t a, std::size_t b) {
    if (a > kMaxDim || b > kMaxDim || a * b > kMaxDim) {
        throw Error(ErrorKind::InternalLimit, "tensor product dimension exceeds cap of 64");
    }
    return a * b;
}

}  // namespace

QuantumStructure tensor(const QuantumStructure &a, const QuantumStructure &b) {
    checked_product(a.dim(), b.dim());
    if (a.is_pure() && b.is_pure()) {
        return QuantumStructure::pure(kron(a.amplitudes(), b.amplitudes()));
    }
    return QuantumStructure::mixed(kron(a.density(), b.density()));
}

std::string tuple_label(std::string_view a, std::string_view b) {
    std::string out;
    out.reserve(a.size() + b.size() + 3);
    out += '(';
    out += a;
    out += ',';
    out += b;
    out += ')';
    return out;
}

Configuration tensor_config(const Configuration &a, const Configuration &b) {
    checked_product(a.dim(), b.dim());
    std::vector<Effect> effects;
    effects.reserve(a.effects().size() * b.effects().size());
    for (const auto &ea : a.effects()) {
        for (const auto &eb : b.effects()) {
            effects.push_back({tuple_label(ea.label, eb.label), kron(ea.op, eb.op)});
        }
    }
    const ConfigKind kind = (a.kind() == ConfigKind::projective && b.kind() == ConfigKind::projective)
                                ? ConfigKind::projective
                                : ConfigKind::povm;
    return Configuration::make(tuple_label(a.id(), b.id()), kind, std::move(effects));
}

bool compatible(const Configuration &c1, const Configuration &c2) {
    if (c1.dim() != c2.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "configurations '" + c1.id() + "' and '" + c2.id() +
                                                      "' act on different dimensions");
    }
    for (const auto &e : c1.effects()) {
        for (const auto &f : c2.effects()) {
            if (detail::max_abs(e.op * f.op - f.op * e.op) > kTolHerm) {
                return false;
            }
        }
    }
    return true;
}

std::vector<OutcomeCount> sample(
    const QuantumStructure &structure, const Configuration &config, std::uint64_t seed, std::uint64_t n) {
    const OutcomeDistribution dist = born_probabilities(structure, config);
    const auto &entries = dist.entries();
    std::vector<double> cumulative;
    cumulative.reserve(entries.size());
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        acc += entries[i].probability;
        cumulative.push_back(acc);
        if (entries[i].probability > 0.0) {
            last_positive = i;
        }
    }
    std::vector<OutcomeCount> counts;
    counts.reserve(entries.size());
    for (const auto &e : entries) {
        counts.push_back({e.label, 0});
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < n; ++k) {
        const double u = unit_interval(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = it == cumulative.end() ? last_positive : static_cast<std::size_t>(it - cumulative.begin());
        counts[idx].count += 1;
    }
    return counts;
}

RepeatabilityReport repeatability_check(
    const QuantumStructure &structure, const Configuration &config, std::uint64_t seed, std::uint64_t n, double tol) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "repeatability check needs n >= 1");
    }
    RepeatabilityReport report;
    report.expected = born_probabilities(structure, config);
    report.counts = sample(structure, config, seed, n);
    for (std::size_t i = 0; i < report.counts.size(); ++i) {
        const double freq = static_cast<double>(report.counts[i].count) / static_cast<double>(n);
        report.max_abs_deviation =
            std::max(report.max_abs_deviation, std::abs(freq - report.expected.entries()[i].probability));
    }
    report.pass = report.max_abs_deviation < tol;
    return report;
}

Configuration embed(const Configuration &config, std::span<const std::size_t> factor_dims, std::size_t factor) {
    if (factor >= factor_dims.size()) {
        throw Error(ErrorKind::InvalidArgument, "factor index out of range");
    }
    if (factor_dims[factor] != config.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "configuration '" + config.id() + "' has dimension " +
                                                      std::to_string(config.dim()) + ", factor has dimension " +
                                                      std::to_string(factor_dims[factor]));
    }
    std::size_t before = 1;
    std::size_t after = 1;
    for (std::size_t i = 0; i < factor_dims.size(); ++i) {
        if (i < factor) {
            before = checked_product(before, factor_dims[i]);
        } else if (i > factor) {
            after = checked_product(after, factor_dims[i]);
        }
    }
    checked_product(before * after, config.dim());
    std::vector<Effect> effects;
    effects.reserve(config.effects().size());
    for (const auto &e : config.effects()) {
        effects.push_back({e.label, kron(kron(identity(before), e.op), identity(after))});
    }
    return Configuration::make(config.id(), config.kind(), std::move(effects));
}

Matrix partial_trace_keep(const QuantumStructure &structure, std::span<const std::size_t> factor_dims, std::size_t keep) {
    if (keep >= factor_dims.size()) {
        throw Error(ErrorKind::InvalidArgument, "factor index out of range");
    }
    std::size_t before = 1;
    std::size_t after = 1;
    for (std::size_t i = 0; i < factor_dims.size(); ++i) {
        if (i < keep) {
            before *= factor_dims[i];
        } else if (i > keep) {
            after *= factor_dims[i];
        }
    }
    const std::size_t d = factor_dims[keep];
    if (before * d * after != structure.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "factor dimensions do not multiply to the structure dimension");
    }
    const Matrix rho = structure.density();
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    auto index = [&](std::size_t b, std::size_t k, std::size_t a) {
        return static_cast<Eigen::Index>((b * d + k) * after + a);
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Complex s = 0.0;
            for (std::size_t b = 0; b < before; ++b) {
                for (std::size_t a = 0; a < after; ++a) {
                    s += rho(index(b, i, a), index(b, j, a));
                }
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
        }
    }
    return out;
}

}  // namespace icsq
