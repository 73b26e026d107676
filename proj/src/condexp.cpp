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

#include "pqclab/condexp.hpp"

#include <cmath>

namespace pqclab {

CMatrix project_onto(const AlgebraSpec& alg, const CMatrix& x) {
  if (x.rows() != alg.dim() || x.cols() != alg.dim()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "operator dimension does not match the algebra");
  }
  const CMatrix y = alg.to_block_coords(x);
  CMatrix out = CMatrix::Zero(alg.dim(), alg.dim());
  for (std::size_t i = 0; i < alg.blocks().size(); ++i) {
    const auto [m, n] = alg.blocks()[i];
    const Eigen::Index off = alg.offset(i);
    const CMatrix reduced = partial_trace(y.block(off, off, m * n, m * n), m, n, Side::Left);
    out.block(off, off, m * n, m * n) =
        tensor(identity(m) / static_cast<double>(m), reduced);
  }
  return alg.from_block_coords(out);
}

bool in_algebra(const AlgebraSpec& alg, const CMatrix& x, const Tolerance& tol) {
  return max_abs_diff(x, project_onto(alg, x)) <= tol.atol;
}

Channel condexp_channel(const AlgebraSpec& alg, const Tolerance& tol) {
  if (!alg.is_unital()) {
    throw PqcError(ErrorKind::NotUnitalAlgebra,
                   "conditional expectation onto a non-unital algebra is not trace "
                   "preserving");
  }
  const Eigen::Index d = alg.dim();
  CMatrix j = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      j.block(r * d, c * d, d, d) = project_onto(alg, matrix_unit(d, r, c));
    }
  }
  return from_choi(j, d, d, tol);
}

AxiomReport verify_condexp_axioms(const Channel& ch, const AlgebraSpec& alg,
                                  const Tolerance& tol) {
  const Eigen::Index d = alg.dim();
  if (ch.dim_in() != d || ch.dim_out() != d) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "channel and algebra act on different dimensions");
  }
  AxiomReport report;
  const auto basis = canonical_basis(alg);

  // Images of the matrix units; everything else follows by linearity.
  std::vector<CMatrix> unit_image(static_cast<std::size_t>(d * d));
  for (Eigen::Index p = 0; p < d; ++p) {
    for (Eigen::Index q = 0; q < d; ++q) {
      const CMatrix img = apply_channel(ch, matrix_unit(d, p, q));
      unit_image[static_cast<std::size_t>(p * d + q)] = img;
      const double expected_trace = p == q ? 1.0 : 0.0;
      report.trace_preserving =
          std::max(report.trace_preserving, std::abs(img.trace() - expected_trace));
      report.maps_into_subalgebra =
          std::max(report.maps_into_subalgebra, max_abs_diff(img, project_onto(alg, img)));
    }
  }
  const auto image = [&](Eigen::Index p, Eigen::Index q) -> const CMatrix& {
    return unit_image[static_cast<std::size_t>(p * d + q)];
  };

  for (const CMatrix& b : basis) {
    report.fixes_subalgebra = std::max(report.fixes_subalgebra, max_abs_diff(apply_channel(ch, b), b));
    for (Eigen::Index p = 0; p < d; ++p) {
      for (Eigen::Index q = 0; q < d; ++q) {
        // b E_pq = sum_r b(r,p) E_rq and E_pq b = sum_s b(q,s) E_ps.
        CMatrix left = CMatrix::Zero(d, d);
        CMatrix right = CMatrix::Zero(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
          if (b(r, p) != Complex(0.0)) left += b(r, p) * image(r, q);
          if (b(q, r) != Complex(0.0)) right += b(q, r) * image(p, r);
        }
        report.bimodule = std::max(report.bimodule, max_abs_diff(left, b * image(p, q)));
        report.bimodule = std::max(report.bimodule, max_abs_diff(right, image(p, q) * b));
      }
    }
  }
  report.positive = is_psd(choi(ch), tol);
  report.passed = report.positive && report.fixes_subalgebra <= tol.atol &&
                  report.bimodule <= tol.atol &&
                  report.maps_into_subalgebra <= tol.atol &&
                  report.trace_preserving <= tol.atol;
  return report;
}

PqcVerdict is_pqc(const PQCInstance& inst, const Tolerance& tol) {
  const Channel& ch = inst.channel;
  if (ch.dim_in() != ch.dim_out() || inst.rho0.dim() != ch.dim_out()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "PQC needs a channel on one space and rho0 on that space");
  }
  if (inst.states.empty()) {
    throw PqcError(ErrorKind::DimensionMismatch, "PQC state set is empty");
  }
  PqcVerdict verdict;
  verdict.is_private = true;
  for (const CVector& phi : inst.states) {
    if (phi.size() != ch.dim_in()) {
      throw PqcError(ErrorKind::DimensionMismatch,
                     "state dimension does not match the channel");
    }
    if (!phi.allFinite() || std::abs(phi.norm() - 1.0) > tol.atol) {
      throw PqcError(ErrorKind::NotUnitVector, "PQC state is not of unit length");
    }
    const double residual = max_abs_diff(apply_channel(ch, outer(phi)), inst.rho0.matrix());
    verdict.residuals.push_back(residual);
    if (residual > tol.atol) verdict.is_private = false;
  }
  return verdict;
}

bool private_states_certificate(const AlgebraSpec& alg, const DensityOperator& rho0,
                                const CVector& v, const Tolerance& tol) {
  if (!alg.is_unital()) {
    throw PqcError(ErrorKind::NotUnitalAlgebra,
                   "private-state certificate needs a unital algebra");
  }
  if (rho0.dim() != alg.dim()) {
    throw PqcError(ErrorKind::DimensionMismatch,
                   "rho0 dimension does not match the algebra");
  }
  if (!in_algebra(alg, rho0.matrix(), tol)) {
    throw PqcError(ErrorKind::Rho0NotInAlgebra, "rho0 is not an element of the algebra");
  }
  return is_trace_vector(v, alg, rho0, tol).passed;
}

CMatrix singlet_triplet_basis_change() {
  const double h = 1.0 / std::sqrt(2.0);
  CMatrix u(4, 4);
  u << 1, 0, 0, 0,  //
      0, h, h, 0,   //
      0, 0, 0, 1,   //
      0, h, -h, 0;
  return u;
}

FrameExample collective_noise_channel_n2() {
  const CMatrix u = singlet_triplet_basis_change();
  // Column k of u^dagger is the k-th new basis vector.
  const CMatrix basis = u.adjoint();
  const CVector singlet = basis.col(3);
  const CMatrix p_singlet = outer(singlet);
  const CMatrix p_triplet = identity(4) - p_singlet;

  std::vector<CMatrix> kraus;
  kraus.push_back(p_singlet);
  const double w = 1.0 / std::sqrt(3.0);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      kraus.push_back(w * basis.col(a) * basis.col(b).adjoint());
    }
  }
  return FrameExample{Channel::from_kraus(std::move(kraus)),
                      AlgebraSpec({{3, 1}, {1, 1}}, 0, u), p_singlet, p_triplet};
}

}  // namespace pqclab
