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
#include <random>
#include <string>
#include <vector>

#include "icsq/quantum.hpp"
#include "oracle.hpp"

namespace testing_util {

inline oracle::Mat to_oracle(const icsq::Matrix &m) {
    oracle::Mat r(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

inline icsq::Matrix from_oracle(const oracle::Mat &m) {
    icsq::Matrix r(static_cast<Eigen::Index>(m.n), static_cast<Eigen::Index>(m.n));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) r(i, j) = m(i, j);
    return r;
}

inline icsq::Vector vec(std::initializer_list<std::complex<double>> xs) {
    icsq::Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) v(i++) = x;
    return v;
}

/// Gaussian vector normalised to the unit sphere.
inline icsq::Vector random_unit(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> g;
    icsq::Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {g(rng), g(rng)};
    return v / v.norm();
}

/// Random unitary from the QR decomposition of a complex Gaussian matrix.
inline icsq::Matrix random_unitary(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> g;
    icsq::Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = {g(rng), g(rng)};
    Eigen::HouseholderQR<icsq::Matrix> qr(m);
    return qr.householderQ();
}

/// Random density matrix: mixture of `rank` random pure states.
inline icsq::QuantumStructure random_mixed(std::mt19937_64 &rng, std::size_t dim, std::size_t rank) {
    std::uniform_real_distribution<double> u(0.1, 1.0);
    icsq::Matrix rho = icsq::Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    double total = 0.0;
    for (std::size_t k = 0; k < rank; ++k) {
        const double w = u(rng);
        const icsq::Vector v = random_unit(rng, dim);
        rho += w * v * v.adjoint();
        total += w;
    }
    return icsq::QuantumStructure::mixed(rho / total);
}

/// Random projective configuration: the columns of a random unitary grouped
/// into `outcomes` nonempty blocks.
inline icsq::Configuration random_projective(std::mt19937_64 &rng, std::size_t dim, std::size_t outcomes,
                                             const std::string &id = "random") {
    const icsq::Matrix u = random_unitary(rng, dim);
    std::vector<std::size_t> block(dim);
    for (std::size_t i = 0; i < dim; ++i) block[i] = i < outcomes ? i : rng() % outcomes;
    std::vector<icsq::Effect> effects;
    for (std::size_t b = 0; b < outcomes; ++b) {
        icsq::Matrix p = icsq::Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < dim; ++i)
            if (block[i] == b) p += u.col(static_cast<Eigen::Index>(i)) * u.col(static_cast<Eigen::Index>(i)).adjoint();
        effects.push_back({"o" + std::to_string(b), p});
    }
    return icsq::Configuration::make(id, icsq::ConfigKind::projective, std::move(effects));
}

}  // namespace testing_util
