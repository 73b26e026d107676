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

#include "pqclab/matrix_core.hpp"

#include <algorithm>
#include <cmath>

namespace pqclab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::NonFinite:
      return "NonFinite";
    case ErrorKind::NotTracePreserving:
      return "NotTracePreserving";
    case ErrorKind::NotCompletelyPositive:
      return "NotCompletelyPositive";
    case ErrorKind::NotAProbabilityDistribution:
      return "NotAProbabilityDistribution";
    case ErrorKind::NotUnitary:
      return "NotUnitary";
    case ErrorKind::NotADensityOperator:
      return "NotADensityOperator";
    case ErrorKind::OutOfRange:
      return "OutOfRange";
    case ErrorKind::NotUnital:
      return "NotUnital";
    case ErrorKind::BlochVectorTooLong:
      return "BlochVectorTooLong";
    case ErrorKind::NotUnitVector:
      return "NotUnitVector";
    case ErrorKind::NotUnitalAlgebra:
      return "NotUnitalAlgebra";
    case ErrorKind::NoTraceVectors:
      return "NoTraceVectors";
    case ErrorKind::Rho0NotInAlgebra:
      return "Rho0NotInAlgebra";
    case ErrorKind::Infeasible:
      return "Infeasible";
    case ErrorKind::Parse:
      return "Parse";
  }
  return "Unknown";
}

Tolerance::Tolerance(double a) : atol(a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw PqcError(ErrorKind::OutOfRange, "tolerance must be positive");
  }
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw PqcError(ErrorKind::NonFinite,
                   std::string(what) + " has non-finite entries");
  }
}

CMatrix identity(Eigen::Index d) { return CMatrix::Identity(d, d); }

CMatrix matrix_unit(Eigen::Index d, Eigen::Index row, Eigen::Index col) {
  CMatrix e = CMatrix::Zero(d, d);
  e(row, col) = 1.0;
  return e;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector tensor(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix partial_trace(const CMatrix& x, Eigen::Index dim_left,
                      Eigen::Index dim_right, Side side) {
  const Eigen::Index n = dim_left * dim_right;
  if (dim_left <= 0 || dim_right <= 0 || x.rows() != n || x.cols() != n) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "partial_trace: operator is not (dim_left*dim_right) square");
  }
  if (side == Side::Left) {
    CMatrix out = CMatrix::Zero(dim_right, dim_right);
    for (Eigen::Index k = 0; k < dim_left; ++k) {
      out += x.block(k * dim_right, k * dim_right, dim_right, dim_right);
    }
    return out;
  }
  CMatrix out(dim_left, dim_left);
  for (Eigen::Index i = 0; i < dim_left; ++i) {
    for (Eigen::Index j = 0; j < dim_left; ++j) {
      out(i, j) =
          x.block(i * dim_right, j * dim_right, dim_right, dim_right).trace();
    }
  }
  return out;
}

namespace {

template <typename Matrix, typename Vector>
std::vector<Vector> nullspace_impl(const Matrix& m, const Tolerance& tol) {
  const Eigen::Index cols = m.cols();
  std::vector<Vector> basis;
  if (cols == 0) return basis;
  // Pad with zero rows so the full right-singular basis is available.
  Matrix square = Matrix::Zero(std::max(m.rows(), cols), cols);
  square.topRows(m.rows()) = m;
  Eigen::JacobiSVD<Matrix> svd(square, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.atol * std::max(sv.size() ? sv(0) : 0.0, 1.0);
  for (Eigen::Index i = 0; i < cols; ++i) {
    if (sv(i) <= cutoff) basis.push_back(svd.matrixV().col(i));
  }
  return basis;
}

}  // namespace

std::vector<CVector> nullspace_basis(const CMatrix& m, const Tolerance& tol) {
  return nullspace_impl<CMatrix, CVector>(m, tol);
}

std::vector<RVector> nullspace_basis(const RMatrix& m, const Tolerance& tol) {
  return nullspace_impl<RMatrix, RVector>(m, tol);
}

Eigen::Index numerical_rank(const CMatrix& m, const Tolerance& tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.atol * std::max(sv(0), 1.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PqcError(ErrorKind::DimensionMismatch, "max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol.atol;
}

bool is_hermitian(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m, m.adjoint()) <= tol.atol;
}

bool is_unitary(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) return false;
  return approx_equal(m.adjoint() * m, identity(m.rows()), tol);
}

bool is_psd(const CMatrix& m, const Tolerance& tol) {
  if (!is_hermitian(m, tol)) return false;
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().size() == 0 || es.eigenvalues().minCoeff() >= -tol.atol;
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PqcError(ErrorKind::DimensionMismatch, "hs_inner: shape mismatch");
  }
  return (a.adjoint() * b).trace();
}

CMatrix outer(const CVector& v) { return v * v.adjoint(); }

}  // namespace pqclab
