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

#include <random>

#include "pqclab/matrix_core.hpp"

namespace pqclab {

// Sampling helpers for randomized checks. All take the engine explicitly so
// runs are reproducible from a seed.

using Rng = std::mt19937_64;

CMatrix ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix haar_unitary(Rng& rng, Eigen::Index d);

/// Uniformly distributed unit vector in C^d.
CVector random_unit_vector(Rng& rng, Eigen::Index d);

/// Hilbert-Schmidt random full-rank density matrix.
CMatrix random_density(Rng& rng, Eigen::Index d);

/// Random probability vector of the given length (flat Dirichlet).
std::vector<double> random_probabilities(Rng& rng, std::size_t count);

}  // namespace pqclab
