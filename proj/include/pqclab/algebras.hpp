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

#include <vector>

#include "pqclab/channels.hpp"

namespace pqclab {

/// One summand 1_m (x) M_n: multiplicity m, matrix size n.
struct BlockShape {
  Eigen::Index m = 1;
  Eigen::Index n = 1;

  bool operator==(const BlockShape&) const = default;
};

/**
 * Concrete finite-dimensional C*-algebra
 *
 *   A = U^dagger ( (+)_i (1_{m_i} (x) M_{n_i}) (+) 0_k ) U.
 *
 * In block coordinates (after conjugating by U) block i occupies a contiguous
 * range of m_i * n_i indices, ordered multiplicity-major: index
 * offset_i + a * n_i + b for a < m_i, b < n_i. The zero summand comes last.
 */
class AlgebraSpec {
 public:
  AlgebraSpec(std::vector<BlockShape> blocks, Eigen::Index zero_dim,
              CMatrix basis_change, const Tolerance& tol = {});
  /// Same, with U = 1.
  AlgebraSpec(std::vector<BlockShape> blocks, Eigen::Index zero_dim = 0);

  /// Diagonal matrices on C^d (Delta_d).
  static AlgebraSpec diagonal(Eigen::Index d);
  /// Scalars C.1_d.
  static AlgebraSpec scalars(Eigen::Index d);
  /// Full matrix algebra M_d.
  static AlgebraSpec full(Eigen::Index d);

  const std::vector<BlockShape>& blocks() const { return blocks_; }
  Eigen::Index zero_dim() const { return zero_dim_; }
  const CMatrix& basis_change() const { return basis_change_; }

  /// Hilbert-space dimension sum m_i n_i + k.
  Eigen::Index dim() const { return dim_; }
  /// Linear dimension of the algebra, sum n_i^2.
  Eigen::Index algebra_dim() const;
  bool is_unital() const { return zero_dim_ == 0; }
  /// Start of block i in block coordinates.
  Eigen::Index offset(std::size_t block) const { return offsets_[block]; }

  /// U x U^dagger.
  CMatrix to_block_coords(const CMatrix& x) const;
  /// U^dagger x U.
  CMatrix from_block_coords(const CMatrix& x) const;

 private:
  void init(const Tolerance& tol);

  std::vector<BlockShape> blocks_;
  Eigen::Index zero_dim_ = 0;
  CMatrix basis_change_;
  Eigen::Index dim_ = 0;
  std::vector<Eigen::Index> offsets_;
};

/// The sum n_i^2 elements U^dagger (1_{m_i} (x) E_st) U spanning the algebra.
std::vector<CMatrix> canonical_basis(const AlgebraSpec& alg);

struct TraceVectorReport {
  CVector vector;
  CMatrix rho0;
  /// Worst |<v|a|v> - tr(rho0 a)| over the canonical basis.
  double max_violation = 0.0;
  bool passed = false;
};

/**
 * Checks <v|a|v> = tr(rho0 a) on every canonical basis element. With
 * rho0 = 1/n this is the plain trace-vector condition.
 */
TraceVectorReport is_trace_vector(const CVector& v, const AlgebraSpec& alg,
                                  const DensityOperator& rho0,
                                  const Tolerance& tol = {});

/// True iff a -> a|v> is injective on the algebra.
bool is_separating(const CVector& v, const AlgebraSpec& alg,
                   const Tolerance& tol = {});

/// A unital algebra has a trace vector iff m_i >= n_i for every block.
bool has_trace_vector(const AlgebraSpec& alg);

/// (1/sqrt n) sum_i |e_i> (x) |f_i> on C^m (x) C^n, for m >= n.
CVector max_entangled_trace_vector(Eigen::Index m, Eigen::Index n);

/**
 * Orthonormal basis of C^n made of trace vectors (rho0 = 1/n).
 *
 * In block coordinates vector beta has entries
 *   n^{-1/2} exp(2 pi i a b / m_i) exp(2 pi i x beta / n),   x = offset_i + a n_i + b,
 * i.e. a column of the n-point Fourier matrix with per-block phases. Each
 * block slice, read as an m_i x n_i matrix V, satisfies V^dagger V = (m_i/n) 1,
 * which is exactly the trace-vector condition.
 */
std::vector<CVector> trace_vector_onb(const AlgebraSpec& alg);

/**
 * A trace vector with respect to rho0. Requires rho0 in the algebra; block i
 * of rho0 is 1_{m_i} (x) w_i and the block-i slice of v is built so that
 * V_i^dagger V_i = m_i w_i^T. Throws Infeasible when rank(w_i) > m_i.
 */
CVector trace_vector_wrt(const AlgebraSpec& alg, const DensityOperator& rho0,
                         const Tolerance& tol = {});

}  // namespace pqclab
