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

#include "pqclab/random.hpp"

#include <cmath>

namespace pqclab {

CMatrix ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CMatrix haar_unitary(Rng& rng, Eigen::Index d) {
  const CMatrix g = ginibre(rng, d, d);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

CVector random_unit_vector(Rng& rng, Eigen::Index d) {
  CVector v = ginibre(rng, d, 1).col(0);
  return v / v.norm();
}

CMatrix random_density(Rng& rng, Eigen::Index d) {
  const CMatrix g = ginibre(rng, d, d);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

std::vector<double> random_probabilities(Rng& rng, std::size_t count) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(count);
  double total = 0.0;
  for (auto& x : p) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace pqclab
