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
#include "pqclab/channels.hpp"
#include "pqclab/random.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace pqclab;

namespace {

CMatrix ket_bra(Eigen::Index d, Eigen::Index r, Eigen::Index c) { return matrix_unit(d, r, c); }

CVector plus_state() {
  CVector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

Channel random_channel(Rng& rng, Eigen::Index din, Eigen::Index dout, int count) {
  // An isometry needs at least din rows.
  count = std::max(count, static_cast<int>((din + dout - 1) / dout));
  // Stack Ginibre blocks and orthonormalize: the blocks of an isometry are Kraus operators.
  const CMatrix g = ginibre(rng, dout * count, din);
  Eigen::HouseholderQR<CMatrix> qr(g);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(dout * count, din);
  std::vector<CMatrix> kraus;
  for (int i = 0; i < count; ++i) kraus.push_back(q.block(i * dout, 0, dout, din));
  return Channel::from_kraus(kraus);
}

Channel amplitude_damping(double gamma) {
  CMatrix k0 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return Channel::from_kraus({k0, k1});
}

}  // namespace

TEST_CASE("from_kraus") {
  const Channel id = Channel::from_kraus({identity(2)});
  CHECK(channels_equal(id, identity_channel(2)));

  const Channel xy =
      Channel::from_kraus({pauli_x() / std::sqrt(2.0), pauli_y() / std::sqrt(2.0)});
  CHECK(xy.kraus().size() == 2);

  CHECK_ERROR_KIND(Channel::from_kraus({CMatrix(2.0 * pauli_x())}),
                   ErrorKind::NotTracePreserving);
  CHECK_ERROR_KIND(Channel::from_kraus({}), ErrorKind::DimensionMismatch);
  CHECK_ERROR_KIND(Channel::from_kraus({identity(2), identity(3)}),
                   ErrorKind::DimensionMismatch);
}

TEST_CASE("random_unitary") {
  const std::vector<double> one{1.0};
  const std::vector<CMatrix> id{identity(2)};
  CHECK(channels_equal(random_unitary(one, id), identity_channel(2)));

  const std::vector<double> half{0.5, 0.5};
  const std::vector<CMatrix> zs{identity(2), pauli_z()};
  const Channel deph = random_unitary(half, zs);
  CMatrix generic(2, 2);
  generic << 0.6, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.4;
  const CMatrix out = apply_channel(deph, generic);
  CHECK(std::abs(out(0, 1)) < 1e-15);
  CHECK(std::abs(out(1, 0)) < 1e-15);
  CHECK(std::abs(out(0, 0) - 0.6) < 1e-15);

  const std::vector<double> quarter(4, 0.25);
  const std::vector<CMatrix> paulis{identity(2), pauli_x(), pauli_y(), pauli_z()};
  const Channel pauli_twirl = random_unitary(quarter, paulis);
  CHECK(channels_equal(pauli_twirl, completely_depolarizing(2)));
  for (const auto& p : paulis)
    CHECK(max_abs_diff(apply_channel(pauli_twirl, p),
                       0.5 * p.trace() * identity(2)) < 1e-12);

  SUBCASE("errors") {
    const std::vector<double> bad{0.5, 0.6};
    CHECK_ERROR_KIND(random_unitary(bad, zs), ErrorKind::NotAProbabilityDistribution);
    const std::vector<double> negative{1.5, -0.5};
    CHECK_ERROR_KIND(random_unitary(negative, zs), ErrorKind::NotAProbabilityDistribution);
    const std::vector<CMatrix> not_unitary{identity(2), CMatrix(2.0 * pauli_z())};
    CHECK_ERROR_KIND(random_unitary(half, not_unitary), ErrorKind::NotUnitary);
    CHECK_ERROR_KIND(random_unitary(one, zs), ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("depolarizing") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const CVector psi = random_unit_vector(rng, 2);
    CHECK(max_abs_diff(apply_channel(depolarizing(1.0, 2), outer(psi)), 0.5 * identity(2)) <
          1e-12);
  }
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(0, 0) = 0.75;
  expected(1, 1) = 0.25;
  CHECK(max_abs_diff(apply_channel(depolarizing(0.5, 2), ket_bra(2, 0, 0)), expected) < 1e-12);

  for (Eigen::Index d : {2, 3, 4}) {
    for (double p : {0.1, 0.5, 1.0}) {
      const Channel ch = depolarizing(p, d);
      const CMatrix mixed = identity(d) / static_cast<double>(d);
      CHECK(max_abs_diff(apply_channel(ch, mixed), mixed) < 1e-12);
      // Convex combination p E_C + (1-p) id, checked on every matrix unit.
      for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
          const CMatrix e = ket_bra(d, r, c);
          const CMatrix mix = p * apply_channel(completely_depolarizing(d), e) + (1.0 - p) * e;
          CHECK(max_abs_diff(apply_channel(ch, e), mix) < 1e-12);
          CHECK(max_abs_diff(apply_channel(ch, e), oracle::depolarizing_formula(p, e)) < 1e-12);
        }
      }
    }
  }
  CHECK_ERROR_KIND(depolarizing(0.0, 2), ErrorKind::OutOfRange);
  CHECK_ERROR_KIND(depolarizing(1.5, 2), ErrorKind::OutOfRange);
}

TEST_CASE("weyl operators are unitary and HS-orthogonal") {
  const Eigen::Index d = 3;
  std::vector<CMatrix> ops;
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) ops.push_back(weyl_operator(d, a, b));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    CHECK(is_unitary(ops[i], Tolerance{}));
    for (std::size_t j = 0; j < ops.size(); ++j)
      CHECK(std::abs(hs_inner(ops[i], ops[j]) - (i == j ? 3.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("apply_channel") {
  Rng rng(23);
  const DensityOperator rho(random_density(rng, 2));
  CHECK(max_abs_diff(apply_channel(identity_channel(2), rho).matrix(), rho.matrix()) < 1e-15);

  const DensityOperator plus = DensityOperator::pure(plus_state());
  CHECK(max_abs_diff(apply_channel(dephasing_z(), plus).matrix(), 0.5 * identity(2)) < 1e-15);
  CHECK(max_abs_diff(apply_channel(completely_depolarizing(2), rho).matrix(),
                     0.5 * identity(2)) < 1e-12);

  CHECK_ERROR_KIND(apply_channel(identity_channel(3), rho), ErrorKind::DimensionMismatch);

  SUBCASE("outputs are states for random channels and inputs") {
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Index din = 2 + trial % 3, dout = 2 + (trial / 3) % 2;
      const Channel ch = random_channel(rng, din, dout, 1 + trial % 4);
      const CMatrix out = apply_channel(ch, random_density(rng, din));
      CHECK(std::abs(out.trace() - 1.0) < 1e-9);
      CHECK(is_psd(out, Tolerance{}));
    }
  }
}

TEST_CASE("density operator validation") {
  CHECK_ERROR_KIND(DensityOperator(CMatrix(CMatrix::Zero(2, 3))), ErrorKind::DimensionMismatch);
  CHECK_ERROR_KIND(DensityOperator(CMatrix(pauli_z())), ErrorKind::NotADensityOperator);
  CHECK_ERROR_KIND(DensityOperator(identity(2)), ErrorKind::NotADensityOperator);
  CHECK_ERROR_KIND(DensityOperator::pure(CVector(CVector::Ones(2))), ErrorKind::NotUnitVector);
  CHECK(DensityOperator::maximally_mixed(3).dim() == 3);
}

TEST_CASE("choi") {
  const CMatrix j_id = choi(identity_channel(2));
  CVector omega = CVector::Zero(4);
  omega(0) = omega(3) = 1.0;
  CHECK(max_abs_diff(j_id, outer(omega)) < 1e-15);
  CHECK(numerical_rank(j_id, Tolerance{}) == 1);

  CHECK(max_abs_diff(choi(completely_depolarizing(2)), 0.5 * identity(4)) < 1e-12);

  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const Channel ch = random_channel(rng, 2 + trial % 2, 3, 1 + trial % 3);
    CHECK(is_psd(choi(ch), Tolerance{}));
    // from_choi reproduces the channel
    CHECK(channels_equal(from_choi(choi(ch), ch.dim_in(), ch.dim_out()), ch,
                         Tolerance(1e-8)));
  }
}

TEST_CASE("from_choi") {
  CHECK_ERROR_KIND(from_choi(identity(4), 2, 3), ErrorKind::DimensionMismatch);
  CHECK_ERROR_KIND(from_choi(CMatrix(-1.0 * identity(4)), 2, 2),
                   ErrorKind::NotCompletelyPositive);
  // Positive but not trace preserving.
  CHECK_ERROR_KIND(from_choi(identity(4), 2, 2), ErrorKind::NotTracePreserving);
  // Transpose map: trace preserving but not completely positive.
  CMatrix swap = CMatrix::Zero(4, 4);
  for (Eigen::Index r = 0; r < 2; ++r)
    for (Eigen::Index c = 0; c < 2; ++c) swap(r * 2 + c, c * 2 + r) = 1.0;
  CHECK_ERROR_KIND(from_choi(swap, 2, 2), ErrorKind::NotCompletelyPositive);
}

TEST_CASE("compose") {
  Rng rng(31);
  const Channel ch = random_channel(rng, 2, 2, 3);
  CHECK(channels_equal(compose(identity_channel(2), ch), ch));
  CHECK(channels_equal(compose(ch, identity_channel(2)), ch));
  CHECK(channels_equal(compose(dephasing_z(), dephasing_z()), dephasing_z()));

  const std::vector<double> probs = random_probabilities(rng, 3);
  const std::vector<CMatrix> us{haar_unitary(rng, 2), haar_unitary(rng, 2), haar_unitary(rng, 2)};
  const Channel unital = random_unitary(probs, us);
  CHECK(channels_equal(compose(completely_depolarizing(2), unital), completely_depolarizing(2)));

  for (int trial = 0; trial < 5; ++trial) {
    const Channel a = random_channel(rng, 2, 3, 2);
    const Channel b = random_channel(rng, 3, 2, 2);
    const CMatrix rho = random_density(rng, 2);
    CHECK(max_abs_diff(apply_channel(compose(a, b), rho),
                       apply_channel(b, apply_channel(a, rho))) < 1e-12);
  }
  CHECK_ERROR_KIND(compose(identity_channel(2), identity_channel(3)),
                   ErrorKind::DimensionMismatch);
}

TEST_CASE("is_unital") {
  CHECK(is_unital(identity_channel(2)));
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index d = 2 + trial % 3;
    const std::vector<double> probs = random_probabilities(rng, 3);
    const std::vector<CMatrix> us{haar_unitary(rng, d), haar_unitary(rng, d),
                                  haar_unitary(rng, d)};
    CHECK(is_unital(random_unitary(probs, us)));
  }
  CHECK_FALSE(is_unital(amplitude_damping(0.5)));
  CHECK_FALSE(is_unital(random_channel(rng, 2, 3, 2)));
}

TEST_CASE("corrupted kraus lists are rejected") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Channel ch = random_channel(rng, 3, 3, 2);
    std::vector<CMatrix> kraus = ch.kraus();
    kraus[0] *= 1.01;
    CHECK_ERROR_KIND(Channel::from_kraus(kraus), ErrorKind::NotTracePreserving);
    kraus = ch.kraus();
    kraus.pop_back();
    CHECK_ERROR_KIND(Channel::from_kraus(kraus), ErrorKind::NotTracePreserving);
  }
}
