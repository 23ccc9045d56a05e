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
#include "icsq/standard.hpp"

#include <cmath>

namespace icsq::standard {

namespace {

Matrix projector(const Vector &v) {
    return v * v.adjoint();
}

Vector ket(std::size_t dim, std::size_t index) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

QuantumStructure spin_state(double theta, double phi) {
    Vector v(2);
    v << std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2);
    return QuantumStructure::pure(std::move(v));
}

Configuration spin_axis(double theta, double phi, std::string id) {
    const Matrix up = projector(spin_state(theta, phi).amplitudes());
    const Matrix down = Matrix::Identity(2, 2) - up;
    return Configuration::make(std::move(id), ConfigKind::projective, {{"up", up}, {"down", down}});
}

QuantumStructure singlet() {
    Vector v = (ket(4, 1) - ket(4, 2)) * kInvSqrt2;
    return QuantumStructure::pure(std::move(v));
}

QuantumStructure phi_plus() {
    Vector v = (ket(4, 0) + ket(4, 3)) * kInvSqrt2;
    return QuantumStructure::pure(std::move(v));
}

QuantumStructure two_path(double phase) {
    Vector v = (ket(2, 0) + std::polar(1.0, phase) * ket(2, 1)) * kInvSqrt2;
    return QuantumStructure::pure(std::move(v));
}

QuantumStructure marked_two_path(double phase) {
    Vector v = (ket(4, 0) + std::polar(1.0, phase) * ket(4, 3)) * kInvSqrt2;
    return QuantumStructure::pure(std::move(v));
}

QuantumStructure basis_state(std::size_t dim, std::size_t index) {
    detail::check_dim(dim);
    if (index >= dim) {
        throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    }
    return QuantumStructure::pure(ket(dim, index));
}

QuantumStructure maximally_mixed(std::size_t dim) {
    detail::check_dim(dim);
    const auto d = static_cast<Eigen::Index>(dim);
    return QuantumStructure::mixed(Matrix::Identity(d, d) / static_cast<double>(dim));
}

Configuration computational_basis(std::size_t dim, std::string id) {
    detail::check_dim(dim);
    std::vector<Effect> effects;
    for (std::size_t k = 0; k < dim; ++k) {
        effects.push_back({"b" + std::to_string(k), projector(ket(dim, k))});
    }
    return Configuration::make(std::move(id), ConfigKind::projective, std::move(effects));
}

Configuration interference(std::string id) {
    const Vector plus = (ket(2, 0) + ket(2, 1)) * kInvSqrt2;
    const Vector minus = (ket(2, 0) - ket(2, 1)) * kInvSqrt2;
    return Configuration::make(
        std::move(id), ConfigKind::projective, {{"bright", projector(plus)}, {"dark", projector(minus)}});
}

Configuration which_path(std::string id) {
    return Configuration::make(
        std::move(id), ConfigKind::projective, {{"upper", projector(ket(2, 0))}, {"lower", projector(ket(2, 1))}});
}

Configuration bell_basis(std::string id) {
    return Configuration::make(std::move(id), ConfigKind::projective,
                               {
                                   {"phi_plus", projector((ket(4, 0) + ket(4, 3)) * kInvSqrt2)},
                                   {"phi_minus", projector((ket(4, 0) - ket(4, 3)) * kInvSqrt2)},
                                   {"psi_plus", projector((ket(4, 1) + ket(4, 2)) * kInvSqrt2)},
                                   {"psi_minus", projector((ket(4, 1) - ket(4, 2)) * kInvSqrt2)},
                               });
}

}  // namespace icsq::standard
