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

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pqclab/algebras.hpp"
#include "pqclab/channels.hpp"

namespace pqclab::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Complex numbers are [re, im]; a bare number is read as a real value.
// Matrices are row-major arrays of rows; vectors are flat arrays.

Complex complex_from_json(const json& j);
CMatrix matrix_from_json(const json& j);
CVector vector_from_json(const json& j);

ordered_json to_json(Complex z);
ordered_json to_json(const CMatrix& m);
ordered_json to_json(const CVector& v);
ordered_json to_json(const RMatrix& m);
ordered_json to_json(const RVector& v);

struct KrausSpec {
  std::vector<CMatrix> kraus;
};
struct RandomUnitarySpec {
  std::vector<double> probs;
  std::vector<CMatrix> unitaries;
};
struct DepolarizingSpec {
  double p = 1.0;
  Eigen::Index d = 2;
};
struct CondexpSpec {
  AlgebraSpec algebra;
};
/// identity, completely_depolarizing, dephasing_z, frame_n2.
struct NamedSpec {
  std::string name;
  Eigen::Index d = 2;
};

using ChannelSpec =
    std::variant<KrausSpec, RandomUnitarySpec, DepolarizingSpec, CondexpSpec, NamedSpec>;

ChannelSpec channel_spec_from_json(const json& j);
ordered_json to_json(const ChannelSpec& spec);
Channel build_channel(const ChannelSpec& spec, const Tolerance& tol = {});

/// Kraus-form spec of an existing channel.
ChannelSpec kraus_spec(const Channel& ch);

/**
 * {"blocks": [[m, n], ...], "zero_dim": k, "basis_change": U} with zero_dim
 * and basis_change optional, or {"name": "frame_n2" | "diagonal" | "scalars"
 * | "full", "d": d}.
 */
AlgebraSpec algebra_from_json(const json& j, const Tolerance& tol = {});
ordered_json to_json(const AlgebraSpec& alg);

/// {"states": [v, ...]}
std::vector<CVector> states_from_json(const json& j);
/// {"matrix": M}
CMatrix density_matrix_from_json(const json& j);
/// {"vector": v}
CVector single_vector_from_json(const json& j);

/// Parses a JSON file; "-" reads standard input.
json read_json(const std::string& path, std::istream& stdin_stream);

}  // namespace pqclab::io
