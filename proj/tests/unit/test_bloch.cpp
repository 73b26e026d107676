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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pqclab/bloch.hpp"
#include "pqclab/condexp.hpp"
#include "pqclab/random.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace pqclab;

namespace {

Channel pauli_mixture(double p0, double p1, double p2, double p3) {
  const std::vector<double> probs{p0, p1, p2, p3};
  const std::vector<CMatrix> us{identity(2), pauli_x(), pauli_y(), pauli_z()};
  return random_unitary(probs, us);
}

Channel diagonal_transfer(double a, double b, double c) {
  PauliTransfer pt;
  pt.T = Vec3(a, b, c).asDiagonal();
  return channel_from_transfer(pt);
}

/// Rotation R with U (r.sigma) U^dagger = (R r).sigma.
Mat3 rotation_of(const CMatrix& u) {
  Mat3 r;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      r(j, k) = 0.5 * (pauli_vector()[j] * u * pauli_vector()[k] * u.adjoint()).trace().real();
  return r;
}

/// rho -> U ch(U^dagger rho U) U^dagger.
Channel conjugated(const Channel& ch, const CMatrix& u) {
  const Channel undo = Channel::from_kraus({u.adjoint()});
  const Channel redo = Channel::from_kraus({u});
  return compose(compose(undo, ch), redo);
}

Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> g;
  return Vec3(g(rng), g(rng), g(rng)).normalized();
}

bool parallel(const Vec3& a, const Vec3& b, double atol) {
  return std::min((a - b).norm(), (a + b).norm()) <= atol;
}

}  // namespace

TEST_CASE("density_to_bloch and bloch_to_density") {
  CHECK(density_to_bloch(DensityOperator::maximally_mixed(2)).r.norm() < 1e-15);
  CVector zero = CVector::Zero(2);
  zero(0) = 1.0;
  CHECK((density_to_bloch(DensityOperator::pure(zero)).r - Vec3(0, 0, 1)).norm() < 1e-15);
  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK((density_to_bloch(DensityOperator::pure(plus)).r - Vec3(1, 0, 0)).norm() < 1e-15);

  CHECK(max_abs_diff(bloch_to_density({Vec3::Zero()}).matrix(), 0.5 * identity(2)) < 1e-15);
  CHECK(max_abs_diff(bloch_to_density({Vec3(0, 0, -1)}).matrix(), matrix_unit(2, 1, 1)) <
        1e-15);
  CHECK_ERROR_KIND(bloch_to_density({Vec3(0, 0.8, 0.8)}), ErrorKind::BlochVectorTooLong);
  CHECK_ERROR_KIND(density_to_bloch(DensityOperator::maximally_mixed(3)),
                   ErrorKind::DimensionMismatch);

  Rng rng(43);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 r = radius(rng) * random_direction(rng);
    CHECK((density_to_bloch(bloch_to_density({r})).r - r).norm() < 1e-12);
  }
}

TEST_CASE("pure_state_from_bloch") {
  for (const Vec3& r : fibonacci_sphere(200)) {
    const CVector psi = pure_state_from_bloch(r);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    CHECK(std::abs(psi(0).imag()) < 1e-15);
    CHECK(psi(0).real() >= 0.0);
    CHECK((density_to_bloch(DensityOperator::pure(psi)).r - r).norm() < 1e-12);
  }
}

TEST_CASE("transfer") {
  const PauliTransfer id = transfer(identity_channel(2));
  CHECK((id.T - Mat3::Identity()).norm() < 1e-15);
  CHECK(id.t.norm() < 1e-15);

  const PauliTransfer ec = transfer(completely_depolarizing(2));
  CHECK(ec.T.norm() < 1e-12);
  CHECK(ec.t.norm() < 1e-12);

  const PauliTransfer delta = transfer(condexp_channel(AlgebraSpec::diagonal(2)));
  CHECK((delta.T - Vec3(0, 0, 1).asDiagonal().toDenseMatrix()).norm() < 1e-12);
  CHECK(delta.t.norm() < 1e-12);

  const Eigen::Matrix4d full = id.full();
  CHECK(full(0, 0) == 1.0);
  CHECK(full.row(0).tail(3).isZero());

  CHECK_ERROR_KIND(transfer(identity_channel(3)), ErrorKind::DimensionMismatch);

  SUBCASE("affine consistency on random channels and Bloch vectors") {
    Rng rng(47);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      // Random qubit channel (generally not unital) from an isometry.
      const CMatrix g = ginibre(rng, 6, 2);
      Eigen::HouseholderQR<CMatrix> qr(g);
      const CMatrix q = qr.householderQ() * CMatrix::Identity(6, 2);
      const Channel ch =
          Channel::from_kraus({q.block(0, 0, 2, 2), q.block(2, 0, 2, 2), q.block(4, 0, 2, 2)});
      const PauliTransfer pt = transfer(ch);
      const Vec3 r = radius(rng) * random_direction(rng);
      const CMatrix lhs = apply_channel(ch, bloch_to_density({r}).matrix());
      const CMatrix rhs = 0.5 * (identity(2) + ((pt.T * r + pt.t)(0)) * pauli_x() +
                                 ((pt.T * r + pt.t)(1)) * pauli_y() +
                                 ((pt.T * r + pt.t)(2)) * pauli_z());
      CHECK(max_abs_diff(lhs, rhs) <= 10 * 1e-9);
      // Reconstructing from the transfer matrix gives the same channel.
      CHECK(channels_equal(channel_from_transfer(pt), ch, Tolerance(1e-8)));
    }
  }

  SUBCASE("pauli channel eigenvalues") {
    const PauliTransfer pt = transfer(pauli_mixture(0.5, 0.0, 0.25, 0.25));
    CHECK((pt.T - Vec3(0, 0.5, 0.5).asDiagonal().toDenseMatrix()).norm() < 1e-12);
  }
}

TEST_CASE("channel_from_transfer rejects non-CP maps") {
  // Transpose: T = diag(1, -1, 1).
  PauliTransfer pt;
  pt.T = Vec3(1, -1, 1).asDiagonal();
  CHECK_ERROR_KIND(channel_from_transfer(pt), ErrorKind::NotCompletelyPositive);
}

TEST_CASE("classify") {
  SUBCASE("named channels") {
    const auto pair = classify(pauli_mixture(0.5, 0.0, 0.25, 0.25));
    REQUIRE(std::holds_alternative<AntipodalPair>(pair));
    const auto& p = std::get<AntipodalPair>(pair);
    CHECK((p.axis - Vec3(1, 0, 0)).norm() < 1e-12);
    CVector plus(2), minus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    CHECK((p.states[0] - plus).norm() < 1e-12);
    CHECK((p.states[1] - minus).norm() < 1e-12);
    CHECK(std::abs(p.states[0].dot(p.states[1])) < 1e-12);
    CHECK(tag(pair) == "AntipodalPair");
    CHECK(nullity(pair) == 1);

    const auto circle = classify(condexp_channel(AlgebraSpec::diagonal(2)));
    REQUIRE(std::holds_alternative<GreatCircle>(circle));
    CHECK((std::get<GreatCircle>(circle).normal - Vec3(0, 0, 1)).norm() < 1e-12);
    CHECK(nullity(circle) == 2);

    const auto all = classify(completely_depolarizing(2));
    CHECK(std::holds_alternative<AllStates>(all));
    CHECK(tag(all) == "AllStates");
    CHECK(nullity(all) == 3);

    const auto none = classify(identity_channel(2));
    CHECK(std::holds_alternative<EmptySet>(none));
    CHECK(tag(none) == "Empty");
    CHECK(nullity(none) == 0);

    CHECK(std::holds_alternative<AllStates>(classify(condexp_channel(AlgebraSpec::scalars(2)))));
  }

  SUBCASE("errors") {
    CMatrix k0 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(0.5);
    k1(0, 1) = std::sqrt(0.5);
    CHECK_ERROR_KIND(classify(Channel::from_kraus({k0, k1})), ErrorKind::NotUnital);
    CHECK_ERROR_KIND(classify(completely_depolarizing(3)), ErrorKind::DimensionMismatch);
  }

  SUBCASE("near-threshold singular values resolve to the smaller nullity") {
    CHECK(std::holds_alternative<GreatCircle>(classify(diagonal_transfer(0, 0, 1e-6))));
    CHECK(std::holds_alternative<AllStates>(classify(diagonal_transfer(0, 0, 1e-10))));
    CHECK(std::holds_alternative<AllStates>(
        classify(diagonal_transfer(0, 0, 1e-6), Tolerance(1e-5))));
  }

  SUBCASE("sign convention") {
    CHECK((canonical_sign(Vec3(0, -1, 0.5)) - Vec3(0, 1, -0.5)).norm() == 0.0);
    CHECK((canonical_sign(Vec3(1e-12, -1, 0)) - Vec3(-1e-12, 1, 0)).norm() == 0.0);
    const auto circle = classify(diagonal_transfer(0, 0.4, 0));
    REQUIRE(std::holds_alternative<GreatCircle>(circle));
    CHECK((std::get<GreatCircle>(circle).normal - Vec3(0, 1, 0)).norm() < 1e-12);
  }
}

TEST_CASE("classification agrees with a brute-force scan") {
  Rng rng(53);
  std::vector<Channel> suite{identity_channel(2), completely_depolarizing(2), dephasing_z(),
                             pauli_mixture(0.5, 0.0, 0.25, 0.25), diagonal_transfer(0, 0.3, 0)};
  for (int trial = 0; trial < 4; ++trial) {
    const std::vector<double> probs = random_probabilities(rng, 3);
    const std::vector<CMatrix> us{haar_unitary(rng, 2), haar_unitary(rng, 2),
                                  haar_unitary(rng, 2)};
    suite.push_back(random_unitary(probs, us));
  }
  for (const Channel& ch : suite) {
    const auto set = classify(ch);
    const auto scan = oracle::scan_classification(ch, set, 2000, 1e-6, 0.05);
    CHECK_MESSAGE(scan.agrees, tag(set) << ": " << scan.detail);
  }
}

TEST_CASE("unitary covariance") {
  Rng rng(59);
  const std::vector<Channel> suite{pauli_mixture(0.5, 0.0, 0.25, 0.25),
                                   condexp_channel(AlgebraSpec::diagonal(2)),
                                   completely_depolarizing(2), identity_channel(2)};
  for (const Channel& ch : suite) {
    const auto base = classify(ch);
    for (int trial = 0; trial < 5; ++trial) {
      const CMatrix u = haar_unitary(rng, 2);
      const Mat3 r = rotation_of(u);
      const auto rotated = classify(conjugated(ch, u));
      REQUIRE(rotated.index() == base.index());
      if (const auto* p = std::get_if<AntipodalPair>(&base)) {
        CHECK(parallel(std::get<AntipodalPair>(rotated).axis, r * p->axis, 1e-9));
      } else if (const auto* c = std::get_if<GreatCircle>(&base)) {
        CHECK(parallel(std::get<GreatCircle>(rotated).normal, r * c->normal, 1e-9));
      }
    }
  }
}

TEST_CASE("convex mixture of the diagonal and scalar expectations") {
  const Channel delta = condexp_channel(AlgebraSpec::diagonal(2));
  const Channel scalar = completely_depolarizing(2);
  for (double p : {0.25, 0.5, 1.0}) {
    const CMatrix mixed = p * choi(delta) + (1.0 - p) * choi(scalar);
    CHECK(max_abs_diff(mixed, choi(diagonal_transfer(0, 0, p))) <= 1e-9);
  }
}

TEST_CASE("sample_private_states") {
  CHECK(sample_private_states(EmptySet{}, 5).empty());

  const auto pair = classify(pauli_mixture(0.5, 0.0, 0.25, 0.25));
  CHECK(sample_private_states(pair, 7).size() == 2);

  const auto equator = sample_private_states(GreatCircle{Vec3(0, 0, 1)}, 4);
  REQUIRE(equator.size() == 4);
  const std::array<Vec3, 4> expected{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(-1, 0, 0),
                                     Vec3(0, -1, 0)};
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec3 r = density_to_bloch(DensityOperator::pure(equator[k])).r;
    CHECK((r - expected[k]).norm() < 1e-12);
  }

  CHECK(sample_private_states(AllStates{}, 25).size() == 25);

  SUBCASE("every sample is private for the channel that produced it") {
    Rng rng(61);
    std::vector<Channel> suite{completely_depolarizing(2), dephasing_z(),
                               pauli_mixture(0.5, 0.0, 0.25, 0.25)};
    const std::vector<double> probs{0.5, 0.5};
    const std::vector<CMatrix> us{identity(2), haar_unitary(rng, 2)};
    suite.push_back(random_unitary(probs, us));
    for (const Channel& ch : suite) {
      for (const CVector& psi : sample_private_states(classify(ch), 16)) {
        CHECK(max_abs_diff(apply_channel(ch, outer(psi)), 0.5 * identity(2)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("fibonacci_sphere") {
  const auto points = fibonacci_sphere(1000);
  REQUIRE(points.size() == 1000);
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : points) {
    CHECK(std::abs(p.norm() - 1.0) < 1e-12);
    centroid += p;
  }
  CHECK(centroid.norm() / 1000.0 < 1e-2);
}
