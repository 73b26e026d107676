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

#include "pqclab/bloch.hpp"

#include <cmath>
#include <numbers>

namespace pqclab {

namespace {

std::array<CMatrix, 3> make_paulis() {
  const Complex i(0.0, 1.0);
  CMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  return {x, y, z};
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

const std::array<CMatrix, 3>& pauli_vector() {
  static const std::array<CMatrix, 3> paulis = make_paulis();
  return paulis;
}

const CMatrix& pauli_x() { return pauli_vector()[0]; }
const CMatrix& pauli_y() { return pauli_vector()[1]; }
const CMatrix& pauli_z() { return pauli_vector()[2]; }

Eigen::Matrix4d PauliTransfer::full() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1.0;
  m.block<3, 1>(1, 0) = t;
  m.block<3, 3>(1, 1) = T;
  return m;
}

BlochVector density_to_bloch(const DensityOperator& rho) {
  if (rho.dim() != 2) {
    throw PqcError(ErrorKind::DimensionMismatch, "Bloch vectors need a qubit state");
  }
  BlochVector b;
  for (int k = 0; k < 3; ++k) {
    b.r(k) = (rho.matrix() * pauli_vector()[k]).trace().real();
  }
  return b;
}

DensityOperator bloch_to_density(const BlochVector& b, const Tolerance& tol) {
  if (!b.r.allFinite() || b.r.norm() > 1.0 + tol.atol) {
    throw PqcError(ErrorKind::BlochVectorTooLong,
                   "Bloch vector longer than one");
  }
  CMatrix rho = identity(2);
  for (int k = 0; k < 3; ++k) rho += b.r(k) * pauli_vector()[k];
  return DensityOperator(0.5 * rho, tol);
}

CVector pure_state_from_bloch(const Vec3& r) {
  const Vec3 u = r.normalized();
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  CVector psi(2);
  psi << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
  return psi;
}

PauliTransfer transfer(const Channel& ch) {
  if (ch.dim_in() != 2 || ch.dim_out() != 2) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "transfer matrix needs a qubit-to-qubit channel");
  }
  const auto& s = pauli_vector();
  PauliTransfer pt;
  const CMatrix image_of_identity = apply_channel(ch, identity(2));
  for (int j = 0; j < 3; ++j) {
    pt.t(j) = 0.5 * (s[j] * image_of_identity).trace().real();
    for (int k = 0; k < 3; ++k) {
      pt.T(j, k) = 0.5 * (s[j] * apply_channel(ch, s[k])).trace().real();
    }
  }
  return pt;
}

Channel channel_from_transfer(const PauliTransfer& pt, const Tolerance& tol) {
  const auto& s = pauli_vector();
  // Image of each Pauli basis element under the affine map.
  std::array<CMatrix, 4> image;
  image[0] = identity(2);
  for (int j = 0; j < 3; ++j) image[0] += pt.t(j) * s[j];
  for (int k = 0; k < 3; ++k) {
    image[k + 1] = CMatrix::Zero(2, 2);
    for (int j = 0; j < 3; ++j) image[k + 1] += pt.T(j, k) * s[j];
  }
  const auto map = [&](const CMatrix& x) {
    CMatrix out = 0.5 * x.trace() * image[0];
    for (int k = 0; k < 3; ++k) {
      out += 0.5 * (s[k] * x).trace() * image[k + 1];
    }
    return out;
  };
  CMatrix j = CMatrix::Zero(4, 4);
  for (Eigen::Index r = 0; r < 2; ++r) {
    for (Eigen::Index c = 0; c < 2; ++c) {
      j.block(r * 2, c * 2, 2, 2) = map(matrix_unit(2, r, c));
    }
  }
  return from_choi(j, 2, 2, tol);
}

std::string tag(const PrivateStateSet& s) {
  return std::visit(overloaded{
                        [](const EmptySet&) { return std::string("Empty"); },
                        [](const AntipodalPair&) { return std::string("AntipodalPair"); },
                        [](const GreatCircle&) { return std::string("GreatCircle"); },
                        [](const AllStates&) { return std::string("AllStates"); },
                    },
                    s);
}

int nullity(const PrivateStateSet& s) { return static_cast<int>(s.index()); }

Vec3 canonical_sign(const Vec3& v, const Tolerance& tol) {
  for (int k = 0; k < 3; ++k) {
    if (std::abs(v(k)) > tol.atol) return v(k) > 0 ? v : Vec3(-v);
  }
  return v;
}

PrivateStateSet classify(const Channel& ch, const Tolerance& tol) {
  if (ch.dim_in() != 2 || ch.dim_out() != 2) {
    throw PqcError(ErrorKind::DimensionMismatch, "classify needs a qubit channel");
  }
  if (!is_unital(ch, tol)) {
    throw PqcError(ErrorKind::NotUnital,
                   "classify assumes a unital channel (rho0 = 1/2)");
  }
  const PauliTransfer pt = transfer(ch);
  const auto null = nullspace_basis(RMatrix(pt.T), tol);
  switch (null.size()) {
    case 0:
      return EmptySet{};
    case 1: {
      const Vec3 axis = canonical_sign(Vec3(null[0]).normalized(), tol);
      return AntipodalPair{{pure_state_from_bloch(axis), pure_state_from_bloch(-axis)},
                           axis};
    }
    case 2: {
      const Vec3 normal = Vec3(null[0]).cross(Vec3(null[1])).normalized();
      return GreatCircle{canonical_sign(normal, tol)};
    }
    default:
      return AllStates{};
  }
}

std::vector<Vec3> fibonacci_sphere(std::size_t count) {
  std::vector<Vec3> points;
  points.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double n = static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    points.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
  }
  return points;
}

std::vector<CVector> sample_private_states(const PrivateStateSet& s,
                                           std::size_t count) {
  std::vector<CVector> out;
  std::visit(
      overloaded{
          [](const EmptySet&) {},
          [&](const AntipodalPair& p) { out.assign(p.states.begin(), p.states.end()); },
          [&](const GreatCircle& c) {
            // In-plane axis from the coordinate direction least aligned with
            // the normal.
            int axis = 0;
            for (int k = 1; k < 3; ++k) {
              if (std::abs(c.normal(k)) < std::abs(c.normal(axis))) axis = k;
            }
            Vec3 u = Vec3::Unit(axis);
            u = (u - u.dot(c.normal) * c.normal).normalized();
            const Vec3 w = c.normal.cross(u);
            for (std::size_t k = 0; k < count; ++k) {
              const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(count);
              out.push_back(pure_state_from_bloch(std::cos(angle) * u +
                                                  std::sin(angle) * w));
            }
          },
          [&](const AllStates&) {
            for (const Vec3& r : fibonacci_sphere(count)) {
              out.push_back(pure_state_from_bloch(r));
            }
          },
      },
      s);
  return out;
}

}  // namespace pqclab
