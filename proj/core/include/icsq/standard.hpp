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

#include "icsq/quantum.hpp"

// Named states and configurations used by the scenario builtins and the
// case studies.
namespace icsq::standard {

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
QuantumStructure spin_state(double theta, double phi);

/// Projective pair {up, down} along the Bloch axis (theta, phi).
Configuration spin_axis(double theta, double phi, std::string id = "spin");

/// (|01> - |10>) / sqrt(2), with |0> = up.
QuantumStructure singlet();
/// (|00> + |11>) / sqrt(2).
QuantumStructure phi_plus();
/// (|0> + e^{i phase}|1>) / sqrt(2).
QuantumStructure two_path(double phase);
/// (|00> + e^{i phase}|11>) / sqrt(2): path correlated with a marker.
QuantumStructure marked_two_path(double phase);
QuantumStructure basis_state(std::size_t dim, std::size_t index);
QuantumStructure maximally_mixed(std::size_t dim);

/// Computational basis with labels b0, b1, ...
Configuration computational_basis(std::size_t dim, std::string id = "basis");
/// {bright: |+><+|, dark: |-><-|}.
Configuration interference(std::string id = "interference");
/// {upper: |0><0|, lower: |1><1|}.
Configuration which_path(std::string id = "which_path");
/// phi_plus, phi_minus, psi_plus, psi_minus.
Configuration bell_basis(std::string id = "bell");

}  // namespace icsq::standard
