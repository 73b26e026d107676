// Copyright 2026 The pqclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "pqclab/channels.hpp"

namespace pqclab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

const CMatrix& pauli_x();
const CMatrix& pauli_y();
const CMatrix& pauli_z();
/// sigma_x, sigma_y, sigma_z in that order.
const std::array<CMatrix, 3>& pauli_vector();

/// Real 3-vector r with rho = (1 + r.sigma) / 2.
struct BlochVector {
  Vec3 r = Vec3::Zero();
};

/**
 * Affine action of a qubit map on Bloch vectors: r -> T r + t. The full 4x4
 * matrix in the basis {1, sigma_x, sigma_y, sigma_z} has first row (1,0,0,0).
 */
struct PauliTransfer {
  Mat3 T = Mat3::Zero();
  Vec3 t = Vec3::Zero();

  Eigen::Matrix4d full() const;
};

BlochVector density_to_bloch(const DensityOperator& rho);

/// (1 + r.sigma)/2. Throws BlochVectorTooLong if |r| > 1 + atol.
DensityOperator bloch_to_density(const BlochVector& r, const Tolerance& tol = {});

/// Pure qubit state with Bloch vector r/|r|, |0> amplitude real and >= 0.
CVector pure_state_from_bloch(const Vec3& r);

PauliTransfer transfer(const Channel& ch);

/// Qubit channel with the given affine action. Throws if it is not CPTP.
Channel channel_from_transfer(const PauliTransfer& pt, const Tolerance& tol = {});

struct EmptySet {};

/// The two states on the null line of T, +axis first.
struct AntipodalPair {
  std::array<CVector, 2> states;
  Vec3 axis;
};

/// Pure states whose Bloch vectors are orthogonal to `normal`.
struct GreatCircle {
  Vec3 normal;
};

struct AllStates {};

using PrivateStateSet = std::variant<EmptySet, AntipodalPair, GreatCircle, AllStates>;

std::string tag(const PrivateStateSet& s);

/// Dimension of the nullspace the set came from (0..3).
int nullity(const PrivateStateSet& s);

/// Flips sign so the first component exceeding atol in magnitude is positive.
Vec3 canonical_sign(const Vec3& v, const Tolerance& tol = {});

/**
 * Private states of [S, ch, 1/2] for a unital qubit channel, read off the
 * nullspace of T. Throws NotUnital for non-unital input.
 */
PrivateStateSet classify(const Channel& ch, const Tolerance& tol = {});

/// Deterministic Fibonacci covering of the unit sphere.
std::vector<Vec3> fibonacci_sphere(std::size_t count);

/**
 * Representative pure states of a private-state set: nothing for Empty, the
 * pair for AntipodalPair, `count` equally spaced states on the circle, or
 * `count` Fibonacci points for AllStates.
 */
std::vector<CVector> sample_private_states(const PrivateStateSet& s,
                                           std::size_t count);

}  // namespace pqclab
