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

#include "pqclab/algebras.hpp"

namespace pqclab {

/**
 * Hilbert-Schmidt orthogonal projection of x onto the algebra: in block
 * coordinates each block is replaced by 1_{m_i}/m_i (x) tr_{m_i}(block) and
 * everything else (inter-block parts, the zero summand) is dropped.
 */
CMatrix project_onto(const AlgebraSpec& alg, const CMatrix& x);

/// ||x - project_onto(alg, x)||_max <= atol.
bool in_algebra(const AlgebraSpec& alg, const CMatrix& x, const Tolerance& tol = {});

/// Trace-preserving conditional expectation onto a unital algebra, as a channel.
Channel condexp_channel(const AlgebraSpec& alg, const Tolerance& tol = {});

/// Violations are maxima of entrywise deviations; `passed` needs all <= atol.
struct AxiomReport {
  /// E(b) = b on the canonical basis.
  double fixes_subalgebra = 0.0;
  /// E(b1 a b2) = b1 E(a) b2.
  double bimodule = 0.0;
  /// E(a) lies in the subalgebra.
  double maps_into_subalgebra = 0.0;
  /// Choi matrix PSD.
  bool positive = false;
  /// tr E(a) = tr a on matrix units.
  double trace_preserving = 0.0;
  bool passed = false;
};

/**
 * Checks that `ch` is a trace-preserving conditional expectation onto `alg`.
 * The bimodule property is checked as the left and right module identities
 * E(b a) = b E(a), E(a b) = E(a) b for b in the canonical basis and a over all
 * matrix units, which together are equivalent to the two-sided identity.
 */
AxiomReport verify_condexp_axioms(const Channel& ch, const AlgebraSpec& alg,
                                  const Tolerance& tol = {});

struct PQCInstance {
  std::vector<CVector> states;
  Channel channel;
  DensityOperator rho0;
};

struct PqcVerdict {
  bool is_private = false;
  /// ||E(|phi><phi|) - rho0||_max per state.
  std::vector<double> residuals;
};

PqcVerdict is_pqc(const PQCInstance& inst, const Tolerance& tol = {});

/**
 * Whether v is a private state of the conditional expectation channel of alg
 * with output rho0, decided through the trace-vector condition.
 */
bool private_states_certificate(const AlgebraSpec& alg, const DensityOperator& rho0,
                                const CVector& v, const Tolerance& tol = {});

/// Two-qubit collective-noise example: channel plus its range algebra.
struct FrameExample {
  Channel channel;
  AlgebraSpec algebra;
  /// Projections onto the singlet and triplet subspaces.
  CMatrix singlet_projector;
  CMatrix triplet_projector;
};

/// Rows: <00|, <t0|, <11|, <s| with t0 = (|01>+|10>)/sqrt2, s = (|01>-|10>)/sqrt2.
CMatrix singlet_triplet_basis_change();

/**
 * rho -> tr(P_s rho) |s><s| + tr(P_t rho)/3 P_t on two qubits, with algebra
 * blocks [(3,1),(1,1)] in the triplet-then-singlet basis.
 */
FrameExample collective_noise_channel_n2();

}  // namespace pqclab
