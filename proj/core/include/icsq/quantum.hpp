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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "icsq/error.hpp"

namespace icsq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kTolNorm = 1e-9;
inline constexpr double kTolHerm = 1e-9;
/// Floor on the smallest eigenvalue of a PSD operator.
inline constexpr double kTolPsd = -1e-9;
inline constexpr double kTolZero = 1e-12;
inline constexpr std::size_t kMaxDim = 64;

/// A normalized pure vector or unit-trace density matrix. Construction
/// validates; a QuantumStructure that exists is valid.
class QuantumStructure {
   public:
    static QuantumStructure pure(Vector amplitudes);
    static QuantumStructure mixed(Matrix density);

    std::size_t dim() const noexcept;
    bool is_pure() const noexcept {
        return std::holds_alternative<Vector>(body_);
    }
    /// Requires is_pure().
    const Vector &amplitudes() const;
    /// The density form; for a pure state this is the outer product.
    Matrix density() const;

   private:
    explicit QuantumStructure(std::variant<Vector, Matrix> body) : body_(std::move(body)) {
    }
    std::variant<Vector, Matrix> body_;
};

enum class ConfigKind { projective, povm };

struct Effect {
    std::string label;
    Matrix op;
};

/// A labelled set of effects summing to the identity.
class Configuration {
   public:
    static Configuration make(std::string id, ConfigKind kind, std::vector<Effect> effects);

    const std::string &id() const noexcept {
        return id_;
    }
    ConfigKind kind() const noexcept {
        return kind_;
    }
    std::size_t dim() const noexcept {
        return dim_;
    }
    const std::vector<Effect> &effects() const noexcept {
        return effects_;
    }
    std::optional<std::size_t> index_of(std::string_view label) const;

    Configuration renamed(std::string id) const;

   private:
    Configuration() = default;
    std::string id_;
    ConfigKind kind_ = ConfigKind::projective;
    std::size_t dim_ = 0;
    std::vector<Effect> effects_;
};

struct OutcomeProbability {
    std::string label;
    double probability;
};

/// Outcome probabilities in the configuration's declaration order.
class OutcomeDistribution {
   public:
    OutcomeDistribution() = default;
    explicit OutcomeDistribution(std::vector<OutcomeProbability> entries) : entries_(std::move(entries)) {
    }

    const std::vector<OutcomeProbability> &entries() const noexcept {
        return entries_;
    }
    std::size_t size() const noexcept {
        return entries_.size();
    }
    /// Throws UnknownOutcome.
    double at(std::string_view label) const;
    double total() const;

    auto begin() const {
        return entries_.begin();
    }
    auto end() const {
        return entries_.end();
    }

   private:
    std::vector<OutcomeProbability> entries_;
};

struct OutcomeCount {
    std::string label;
    std::uint64_t count;
};

struct RepeatabilityReport {
    OutcomeDistribution expected;
    std::vector<OutcomeCount> counts;
    double max_abs_deviation = 0.0;
    bool pass = false;
};

/// P(label | structure, config) = tr(E_label rho), clamped to [0, 1].
OutcomeDistribution born_probabilities(const QuantumStructure &structure, const Configuration &config);

/// Lueders update E rho E / tr(E rho E). Pure inputs stay pure.
QuantumStructure update(const QuantumStructure &structure, const Configuration &config, std::string_view outcome);

QuantumStructure tensor(const QuantumStructure &a, const QuantumStructure &b);

/// Joint configuration with labels "(a,b)" and Kronecker-product effects.
Configuration tensor_config(const Configuration &a, const Configuration &b);

/// True iff every effect of c1 commutes with every effect of c2.
bool compatible(const Configuration &c1, const Configuration &c2);

/// Inverse-CDF sampling over the declared label order, driven by a
/// mt19937_64 seeded with `seed`. Bit-reproducible for a given build.
std::vector<OutcomeCount> sample(
    const QuantumStructure &structure, const Configuration &config, std::uint64_t seed, std::uint64_t n);

RepeatabilityReport repeatability_check(
    const QuantumStructure &structure, const Configuration &config, std::uint64_t seed, std::uint64_t n, double tol);

/// Pads `config` with identities so that it acts on factor `factor` of a
/// product space with the given factor dimensions.
Configuration embed(const Configuration &config, std::span<const std::size_t> factor_dims, std::size_t factor);

/// Reduced density matrix on the listed factor, tracing out the rest.
Matrix partial_trace_keep(const QuantumStructure &structure, std::span<const std::size_t> factor_dims, std::size_t keep);

std::string tuple_label(std::string_view a, std::string_view b);

namespace detail {
bool is_finite(const Matrix &m);
bool is_hermitian(const Matrix &m, double tol);
double min_eigenvalue(const Matrix &m);
double max_abs(const Matrix &m);
/// Throws \`zero_kind\` for dim 0 and InternalLimit above kMaxDim.
void check_dim(std::size_t dim, ErrorKind zero_kind = ErrorKind::InvalidArgument);
}  // namespace detail

}  // namespace icsq
