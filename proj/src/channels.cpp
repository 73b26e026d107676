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

#include "pqclab/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pqclab {

DensityOperator::DensityOperator(CMatrix mat, const Tolerance& tol)
    : mat_(std::move(mat)) {
  require_finite(mat_, "density operator");
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "density operator must be a nonempty square matrix");
  }
  if (!is_psd(mat_, tol)) {
    throw PqcError(ErrorKind::NotADensityOperator,
                   "density operator must be Hermitian and PSD");
  }
  if (std::abs(mat_.trace() - 1.0) > tol.atol) {
    throw PqcError(ErrorKind::NotADensityOperator,
                   "density operator must have unit trace");
  }
}

DensityOperator DensityOperator::pure(const CVector& v, const Tolerance& tol) {
  if (std::abs(v.norm() - 1.0) > tol.atol) {
    throw PqcError(ErrorKind::NotUnitVector, "pure state must be a unit vector");
  }
  return DensityOperator(outer(v), tol);
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index d) {
  return DensityOperator(identity(d) / static_cast<double>(d));
}

Channel Channel::from_kraus(std::vector<CMatrix> kraus, const Tolerance& tol) {
  if (kraus.empty()) {
    throw PqcError(ErrorKind::DimensionMismatch, "Kraus list is empty");
  }
  const Eigen::Index dim_out = kraus.front().rows();
  const Eigen::Index dim_in = kraus.front().cols();
  if (dim_out == 0 || dim_in == 0) {
    throw PqcError(ErrorKind::DimensionMismatch, "Kraus operator is empty");
  }
  CMatrix sum = CMatrix::Zero(dim_in, dim_in);
  for (const auto& k : kraus) {
    if (k.rows() != dim_out || k.cols() != dim_in) {
      throw PqcError(ErrorKind::DimensionMismatch,
                     "Kraus operators have inconsistent shapes");
    }
    require_finite(k, "Kraus operator");
    sum += k.adjoint() * k;
  }
  const double dev = max_abs_diff(sum, identity(dim_in));
  if (dev > tol.atol) {
    throw PqcError(ErrorKind::NotTracePreserving,
                   "sum of K^dagger K deviates from identity by " +
                       std::to_string(dev));
  }
  return Channel(dim_in, dim_out, std::move(kraus));
}

Channel identity_channel(Eigen::Index d) {
  return Channel::from_kraus({identity(d)});
}

Channel random_unitary(std::span<const double> probs,
                       std::span<const CMatrix> unitaries,
                       const Tolerance& tol) {
  if (probs.size() != unitaries.size() || probs.empty()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "random_unitary: need equal, nonzero counts of weights and "
                   "unitaries");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw PqcError(ErrorKind::NotAProbabilityDistribution,
                     "random_unitary: negative or non-finite weight");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol.atol) {
    throw PqcError(ErrorKind::NotAProbabilityDistribution,
                   "random_unitary: weights do not sum to one");
  }
  std::vector<CMatrix> kraus;
  kraus.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    require_finite(unitaries[i], "unitary");
    if (!is_unitary(unitaries[i], tol)) {
      throw PqcError(ErrorKind::NotUnitary,
                     "random_unitary: operator " + std::to_string(i) +
                         " is not unitary");
    }
    kraus.push_back(std::sqrt(probs[i]) * unitaries[i]);
  }
  return Channel::from_kraus(std::move(kraus), tol);
}

CMatrix weyl_operator(Eigen::Index d, Eigen::Index a, Eigen::Index b) {
  const double two_pi = 2.0 * std::numbers::pi;
  CMatrix out = CMatrix::Zero(d, d);
  // X^a Z^b |j> = w^{b j} |j + a>
  for (Eigen::Index j = 0; j < d; ++j) {
    const double phase = two_pi * static_cast<double>((b * j) % d) /
                         static_cast<double>(d);
    out((j + a) % d, j) = std::polar(1.0, phase);
  }
  return out;
}

Channel depolarizing(double p, Eigen::Index d) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw PqcError(ErrorKind::OutOfRange, "depolarizing: p must lie in (0, 1]");
  }
  if (d <= 0) {
    throw PqcError(ErrorKind::OutOfRange, "depolarizing: dimension must be positive");
  }
  // (1/d^2) sum_W W rho W^dagger = tr(rho) 1/d over the d^2 unitaries W.
  const double dd = static_cast<double>(d * d);
  std::vector<CMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(d * d));
  if (d == 2) {
    const Complex i(0.0, 1.0);
    CMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    kraus.push_back(std::sqrt(1.0 - p + p / 4.0) * identity(2));
    for (const CMatrix* s : {&x, &y, &z}) {
      kraus.push_back(std::sqrt(p / 4.0) * *s);
    }
  } else {
    kraus.push_back(std::sqrt(1.0 - p + p / dd) * identity(d));
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        if (a == 0 && b == 0) continue;
        kraus.push_back(std::sqrt(p / dd) * weyl_operator(d, a, b));
      }
    }
  }
  return Channel::from_kraus(std::move(kraus));
}

Channel completely_depolarizing(Eigen::Index d) { return depolarizing(1.0, d); }

Channel dephasing_z() {
  CMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return Channel::from_kraus({identity(2) / std::sqrt(2.0), z / std::sqrt(2.0)});
}

CMatrix apply_channel(const Channel& ch, const CMatrix& x) {
  if (x.rows() != ch.dim_in() || x.cols() != ch.dim_in()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "apply: input dimension does not match channel");
  }
  CMatrix out = CMatrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& k : ch.kraus()) out += k * x * k.adjoint();
  return out;
}

DensityOperator apply_channel(const Channel& ch, const DensityOperator& rho) {
  // Trace preservation and complete positivity are channel invariants; allow
  // for accumulated rounding when re-validating the output.
  CMatrix out = apply_channel(ch, rho.matrix());
  out = 0.5 * (out + out.adjoint());
  return DensityOperator(std::move(out), Tolerance(1e-7));
}

CMatrix choi(const Channel& ch) {
  const Eigen::Index din = ch.dim_in();
  const Eigen::Index dout = ch.dim_out();
  CMatrix j = CMatrix::Zero(din * dout, din * dout);
  for (Eigen::Index r = 0; r < din; ++r) {
    for (Eigen::Index c = 0; c < din; ++c) {
      j.block(r * dout, c * dout, dout, dout) = apply_channel(ch, matrix_unit(din, r, c));
    }
  }
  return j;
}

Channel from_choi(const CMatrix& choi_matrix, Eigen::Index dim_in,
                  Eigen::Index dim_out, const Tolerance& tol) {
  const Eigen::Index n = dim_in * dim_out;
  if (choi_matrix.rows() != n || choi_matrix.cols() != n) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "from_choi: Choi matrix has wrong size");
  }
  require_finite(choi_matrix, "Choi matrix");
  if (!is_psd(choi_matrix, tol)) {
    throw PqcError(ErrorKind::NotCompletelyPositive,
                   "from_choi: Choi matrix is not PSD");
  }
  const CMatrix h = 0.5 * (choi_matrix + choi_matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  std::vector<CMatrix> kraus;
  // Largest eigenvalues first.
  for (Eigen::Index e = n - 1; e >= 0; --e) {
    const double lambda = es.eigenvalues()(e);
    if (lambda <= tol.atol) continue;
    const CVector v = std::sqrt(lambda) * es.eigenvectors().col(e);
    CMatrix k(dim_out, dim_in);
    for (Eigen::Index i = 0; i < dim_in; ++i) {
      for (Eigen::Index o = 0; o < dim_out; ++o) k(o, i) = v(i * dim_out + o);
    }
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) {
    throw PqcError(ErrorKind::NotTracePreserving, "from_choi: zero map");
  }
  // Dropped eigenvalues are at most atol each.
  return Channel::from_kraus(std::move(kraus),
                             Tolerance(tol.atol * static_cast<double>(n + 1)));
}

Channel compose(const Channel& a, const Channel& b) {
  if (a.dim_out() != b.dim_in()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "compose: output of first channel does not match input of "
                   "second");
  }
  std::vector<CMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& kb : b.kraus()) {
    for (const auto& ka : a.kraus()) kraus.push_back(kb * ka);
  }
  return Channel::from_kraus(std::move(kraus), Tolerance(1e-7));
}

bool is_unital(const Channel& ch, const Tolerance& tol) {
  if (ch.dim_in() != ch.dim_out()) return false;
  const Eigen::Index d = ch.dim_in();
  const CMatrix mixed = identity(d) / static_cast<double>(d);
  return approx_equal(apply_channel(ch, mixed), mixed, tol);
}

bool channels_equal(const Channel& a, const Channel& b, const Tolerance& tol) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) return false;
  return approx_equal(choi(a), choi(b), tol);
}

}  // namespace pqclab
