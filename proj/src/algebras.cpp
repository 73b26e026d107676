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

#include "pqclab/algebras.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pqclab/condexp.hpp"

namespace pqclab {

AlgebraSpec::AlgebraSpec(std::vector<BlockShape> blocks, Eigen::Index zero_dim,
                         CMatrix basis_change, const Tolerance& tol)
    : blocks_(std::move(blocks)),
      zero_dim_(zero_dim),
      basis_change_(std::move(basis_change)) {
  init(tol);
}

AlgebraSpec::AlgebraSpec(std::vector<BlockShape> blocks, Eigen::Index zero_dim)
    : blocks_(std::move(blocks)), zero_dim_(zero_dim) {
  Eigen::Index n = zero_dim_;
  for (const auto& b : blocks_) n += b.m * b.n;
  basis_change_ = identity(n);
  init(Tolerance{});
}

void AlgebraSpec::init(const Tolerance& tol) {
  if (blocks_.empty()) {
    throw PqcError(ErrorKind::DimensionMismatch, "algebra needs at least one block");
  }
  if (zero_dim_ < 0) {
    throw PqcError(ErrorKind::OutOfRange, "zero summand dimension is negative");
  }
  dim_ = 0;
  offsets_.clear();
  for (const auto& b : blocks_) {
    if (b.m <= 0 || b.n <= 0) {
      throw PqcError(ErrorKind::OutOfRange, "block sizes must be positive");
    }
    offsets_.push_back(dim_);
    dim_ += b.m * b.n;
  }
  dim_ += zero_dim_;
  if (basis_change_.rows() != dim_ || basis_change_.cols() != dim_) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "basis change must be " + std::to_string(dim_) + "x" +
                       std::to_string(dim_));
  }
  require_finite(basis_change_, "basis change");
  if (!is_unitary(basis_change_, tol)) {
    throw PqcError(ErrorKind::NotUnitary, "basis change is not unitary");
  }
}

AlgebraSpec AlgebraSpec::diagonal(Eigen::Index d) {
  return AlgebraSpec(std::vector<BlockShape>(static_cast<std::size_t>(d), {1, 1}));
}

AlgebraSpec AlgebraSpec::scalars(Eigen::Index d) { return AlgebraSpec({{d, 1}}); }

AlgebraSpec AlgebraSpec::full(Eigen::Index d) { return AlgebraSpec({{1, d}}); }

Eigen::Index AlgebraSpec::algebra_dim() const {
  Eigen::Index total = 0;
  for (const auto& b : blocks_) total += b.n * b.n;
  return total;
}

CMatrix AlgebraSpec::to_block_coords(const CMatrix& x) const {
  return basis_change_ * x * basis_change_.adjoint();
}

CMatrix AlgebraSpec::from_block_coords(const CMatrix& x) const {
  return basis_change_.adjoint() * x * basis_change_;
}

std::vector<CMatrix> canonical_basis(const AlgebraSpec& alg) {
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(alg.algebra_dim()));
  for (std::size_t i = 0; i < alg.blocks().size(); ++i) {
    const auto [m, n] = alg.blocks()[i];
    const Eigen::Index off = alg.offset(i);
    for (Eigen::Index s = 0; s < n; ++s) {
      for (Eigen::Index t = 0; t < n; ++t) {
        CMatrix b = CMatrix::Zero(alg.dim(), alg.dim());
        b.block(off, off, m * n, m * n) = tensor(identity(m), matrix_unit(n, s, t));
        basis.push_back(alg.from_block_coords(b));
      }
    }
  }
  return basis;
}

namespace {

void require_unit(const CVector& v, Eigen::Index dim, const Tolerance& tol) {
  if (v.size() != dim) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "vector has dimension " + std::to_string(v.size()) +
                       ", algebra acts on " + std::to_string(dim));
  }
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > tol.atol) {
    throw PqcError(ErrorKind::NotUnitVector, "vector is not of unit length");
  }
}

void require_unital(const AlgebraSpec& alg) {
  if (!alg.is_unital()) {
    throw PqcError(ErrorKind::NotUnitalAlgebra,
                   "operation requires a unital algebra (zero summand must be empty)");
  }
}

}  // namespace

TraceVectorReport is_trace_vector(const CVector& v, const AlgebraSpec& alg,
                                  const DensityOperator& rho0,
                                  const Tolerance& tol) {
  require_unit(v, alg.dim(), tol);
  if (rho0.dim() != alg.dim()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "rho0 dimension does not match the algebra");
  }
  TraceVectorReport report{v, rho0.matrix(), 0.0, false};
  for (const CMatrix& a : canonical_basis(alg)) {
    const Complex lhs = v.dot(a * v);
    const Complex rhs = (rho0.matrix() * a).trace();
    report.max_violation = std::max(report.max_violation, std::abs(lhs - rhs));
  }
  report.passed = report.max_violation <= tol.atol;
  return report;
}

bool is_separating(const CVector& v, const AlgebraSpec& alg, const Tolerance& tol) {
  if (v.size() != alg.dim()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "vector dimension does not match the algebra");
  }
  const auto basis = canonical_basis(alg);
  CMatrix images(alg.dim(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    images.col(static_cast<Eigen::Index>(k)) = basis[k] * v;
  }
  return numerical_rank(images, tol) == static_cast<Eigen::Index>(basis.size());
}

bool has_trace_vector(const AlgebraSpec& alg) {
  require_unital(alg);
  for (const auto& b : alg.blocks()) {
    if (b.m < b.n) return false;
  }
  return true;
}

CVector max_entangled_trace_vector(Eigen::Index m, Eigen::Index n) {
  if (m <= 0 || n <= 0 || m < n) {
    throw PqcError(ErrorKind::OutOfRange,
                   "maximally entangled trace vector needs m >= n >= 1");
  }
  CVector v = CVector::Zero(m * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index i = 0; i < n; ++i) v(i * n + i) = amp;
  return v;
}

std::vector<CVector> trace_vector_onb(const AlgebraSpec& alg) {
  if (!has_trace_vector(alg)) {
    throw PqcError(ErrorKind::NoTraceVectors,
                   "algebra has a block with multiplicity below its matrix size");
  }
  const Eigen::Index n = alg.dim();
  const double two_pi = 2.0 * std::numbers::pi;
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<CVector> onb;
  onb.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index beta = 0; beta < n; ++beta) {
    CVector w(n);
    for (std::size_t i = 0; i < alg.blocks().size(); ++i) {
      const auto [m, bn] = alg.blocks()[i];
      for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < bn; ++b) {
          const Eigen::Index x = alg.offset(i) + a * bn + b;
          // Reduce exponents before scaling to keep the phases exact.
          const double block_phase = static_cast<double>((a * b) % m) / static_cast<double>(m);
          const double fourier_phase = static_cast<double>((x * beta) % n) / static_cast<double>(n);
          w(x) = std::polar(amp, two_pi * (block_phase + fourier_phase));
        }
      }
    }
    onb.push_back(alg.basis_change().adjoint() * w);
  }
  return onb;
}

CVector trace_vector_wrt(const AlgebraSpec& alg, const DensityOperator& rho0,
                         const Tolerance& tol) {
  require_unital(alg);
  if (rho0.dim() != alg.dim()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "rho0 dimension does not match the algebra");
  }
  if (!in_algebra(alg, rho0.matrix(), tol)) {
    throw PqcError(ErrorKind::Rho0NotInAlgebra, "rho0 is not an element of the algebra");
  }
  const CMatrix r = alg.to_block_coords(rho0.matrix());
  CVector w = CVector::Zero(alg.dim());
  for (std::size_t i = 0; i < alg.blocks().size(); ++i) {
    const auto [m, n] = alg.blocks()[i];
    const Eigen::Index off = alg.offset(i);
    const CMatrix weight =
        partial_trace(r.block(off, off, m * n, m * n), m, n, Side::Left) /
        static_cast<double>(m);
    // Target Gram matrix of the block slice.
    CMatrix gram = static_cast<double>(m) * weight.transpose();
    gram = 0.5 * (gram + gram.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    Eigen::Index row = 0;
    for (Eigen::Index e = n - 1; e >= 0; --e) {
      const double lambda = es.eigenvalues()(e);
      if (lambda <= tol.atol) continue;
      if (row >= m) {
        throw PqcError(ErrorKind::Infeasible,
                       "rho0 block " + std::to_string(i) +
                           " has rank above its multiplicity");
      }
      const CVector slice_row = std::sqrt(lambda) * es.eigenvectors().col(e).conjugate();
      w.segment(off + row * n, n) = slice_row;
      ++row;
    }
  }
  w.normalize();
  return alg.basis_change().adjoint() * w;
}

}  // namespace pqclab
