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

#include <span>
#include <vector>

#include "pqclab/matrix_core.hpp"

namespace pqclab {

/// Square, Hermitian, PSD, unit-trace matrix. Validated on construction.
class DensityOperator {
 public:
  explicit DensityOperator(CMatrix mat, const Tolerance& tol = {});

  /// Pure state |v><v| of a unit vector.
  static DensityOperator pure(const CVector& v, const Tolerance& tol = {});
  static DensityOperator maximally_mixed(Eigen::Index d);

  const CMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  CMatrix mat_;
};

/**
 * A quantum channel in Kraus form. Construction goes through from_kraus, so
 * every Channel satisfies sum_i K_i^dagger K_i = 1 within the tolerance it
 * was built with.
 */
class Channel {
 public:
  static Channel from_kraus(std::vector<CMatrix> kraus, const Tolerance& tol = {});

  Eigen::Index dim_in() const { return dim_in_; }
  Eigen::Index dim_out() const { return dim_out_; }
  const std::vector<CMatrix>& kraus() const { return kraus_; }

 private:
  Channel(Eigen::Index dim_in, Eigen::Index dim_out, std::vector<CMatrix> kraus)
      : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {}

  Eigen::Index dim_in_;
  Eigen::Index dim_out_;
  std::vector<CMatrix> kraus_;
};

Channel identity_channel(Eigen::Index d);

/// Channel with Kraus operators sqrt(p_i) U_i.
Channel random_unitary(std::span<const double> probs,
                       std::span<const CMatrix> unitaries,
                       const Tolerance& tol = {});

/**
 * rho -> (p/d) tr(rho) 1_d + (1 - p) rho, for 0 < p <= 1. p = 1 gives the
 * completely depolarizing channel.
 */
Channel depolarizing(double p, Eigen::Index d);
Channel completely_depolarizing(Eigen::Index d);

/// Dephasing in the computational basis: Kraus {1/sqrt2, sigma_z/sqrt2}.
Channel dephasing_z();

/// Discrete Weyl operator X^a Z^b on C^d.
CMatrix weyl_operator(Eigen::Index d, Eigen::Index a, Eigen::Index b);

/// sum_i K_i x K_i^dagger for any dim_in-square x (not only states).
CMatrix apply_channel(const Channel& ch, const CMatrix& x);
DensityOperator apply_channel(const Channel& ch, const DensityOperator& rho);

/// sum_{ij} |i><j| (x) ch(|i><j|), a (dim_in*dim_out)-square matrix.
CMatrix choi(const Channel& ch);

/**
 * Channel whose Choi matrix is `choi_matrix` (layout as in choi()). Kraus
 * operators come from the eigendecomposition; eigenvalues <= atol are
 * dropped. Throws NotCompletelyPositive if the matrix is not PSD.
 */
Channel from_choi(const CMatrix& choi_matrix, Eigen::Index dim_in,
                  Eigen::Index dim_out, const Tolerance& tol = {});

/// First a, then b.
Channel compose(const Channel& a, const Channel& b);

bool is_unital(const Channel& ch, const Tolerance& tol = {});

/// Channel equality is Choi-matrix equality.
bool channels_equal(const Channel& a, const Channel& b, const Tolerance& tol = {});

}  // namespace pqclab
