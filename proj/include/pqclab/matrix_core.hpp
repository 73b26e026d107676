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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pqclab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/**
 * Failure categories raised by the library. Every public operation that can
 * fail throws PqcError carrying one of these.
 */
enum class ErrorKind {
  DimensionMismatch,
  NonFinite,
  NotTracePreserving,
  NotCompletelyPositive,
  NotAProbabilityDistribution,
  NotUnitary,
  NotADensityOperator,
  OutOfRange,
  NotUnital,
  BlochVectorTooLong,
  NotUnitVector,
  NotUnitalAlgebra,
  NoTraceVectors,
  Rho0NotInAlgebra,
  Infeasible,
  Parse,
};

const char* to_string(ErrorKind kind);

class PqcError : public std::runtime_error {
 public:
  PqcError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Absolute tolerance used for equality, PSD and rank decisions.
struct Tolerance {
  double atol = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double a);
};

enum class Side { Left, Right };

/// Throws NonFinite if any entry is NaN or infinite.
void require_finite(const CMatrix& m, const char* what);

CMatrix identity(Eigen::Index d);

/// |row><col| in dimension d.
CMatrix matrix_unit(Eigen::Index d, Eigen::Index row, Eigen::Index col);

/// Kronecker product a (x) b.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CVector tensor(const CVector& a, const CVector& b);

/// Block-diagonal matrix with a top-left and b bottom-right.
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

/**
 * Traces out one factor of a bipartite operator on C^dim_left (x) C^dim_right.
 * Side::Left removes the left factor and returns a dim_right square matrix;
 * Side::Right removes the right factor.
 */
CMatrix partial_trace(const CMatrix& x, Eigen::Index dim_left,
                      Eigen::Index dim_right, Side side);

/**
 * Orthonormal basis of the numerical nullspace. Singular values at or below
 * atol * max(sigma_max, 1) count as zero.
 */
std::vector<CVector> nullspace_basis(const CMatrix& m, const Tolerance& tol);
std::vector<RVector> nullspace_basis(const RMatrix& m, const Tolerance& tol);

/// Numerical rank with the same cutoff as nullspace_basis.
Eigen::Index numerical_rank(const CMatrix& m, const Tolerance& tol);

/// Entrywise max-modulus difference. Shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Matrix equality: same shape and entrywise difference <= atol.
bool approx_equal(const CMatrix& a, const CMatrix& b, const Tolerance& tol);

bool is_hermitian(const CMatrix& m, const Tolerance& tol);
bool is_unitary(const CMatrix& m, const Tolerance& tol);

/// Hermitian within atol and every eigenvalue >= -atol.
bool is_psd(const CMatrix& m, const Tolerance& tol);

/// Hilbert-Schmidt inner product tr(a^dagger b).
Complex hs_inner(const CMatrix& a, const CMatrix& b);

/// |v><v|.
CMatrix outer(const CVector& v);

}  // namespace pqclab
