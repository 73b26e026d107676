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

#include "pqclab/io.hpp"

#include <fstream>
#include <iterator>

#include "pqclab/condexp.hpp"

namespace pqclab::io {

namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw PqcError(ErrorKind::Parse, message);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    parse_error(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double number(const json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

Eigen::Index positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    parse_error(std::string(what) + " must be a positive integer");
  }
  return static_cast<Eigen::Index>(j.get<long long>());
}

std::vector<CMatrix> matrix_list(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of matrices");
  std::vector<CMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  parse_error("complex number must be [re, im] or a real number");
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    parse_error("matrix must be a nonempty array of nonempty rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      parse_error("matrix rows have unequal lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

CVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) parse_error("vector must be a nonempty array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  }
  return v;
}

ordered_json to_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json to_json(const CMatrix& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json to_json(const CVector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

ordered_json to_json(const RMatrix& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json to_json(const RVector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

ChannelSpec channel_spec_from_json(const json& j) {
  const json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) parse_error("\"kind\" must be a string");
  const auto kind = kind_field.get<std::string>();
  if (kind == "kraus") {
    return KrausSpec{matrix_list(field(j, "kraus"), "kraus")};
  }
  if (kind == "random_unitary") {
    RandomUnitarySpec spec;
    const json& probs = field(j, "probs");
    if (!probs.is_array()) parse_error("probs must be an array");
    for (const auto& p : probs) spec.probs.push_back(number(p, "probability"));
    spec.unitaries = matrix_list(field(j, "unitaries"), "unitaries");
    return spec;
  }
  if (kind == "depolarizing") {
    return DepolarizingSpec{number(field(j, "p"), "p"), positive_int(field(j, "d"), "d")};
  }
  if (kind == "condexp") {
    return CondexpSpec{algebra_from_json(field(j, "algebra"))};
  }
  if (kind == "named") {
    const json& name = field(j, "name");
    if (!name.is_string()) parse_error("\"name\" must be a string");
    NamedSpec spec{name.get<std::string>(), 2};
    if (j.contains("d")) spec.d = positive_int(j.at("d"), "d");
    return spec;
  }
  parse_error("unknown channel kind \"" + kind + "\"");
}

ordered_json to_json(const ChannelSpec& spec) {
  return std::visit(
      overloaded{
          [](const KrausSpec& s) {
            ordered_json out{{"kind", "kraus"}, {"kraus", ordered_json::array()}};
            for (const auto& k : s.kraus) out["kraus"].push_back(to_json(k));
            return out;
          },
          [](const RandomUnitarySpec& s) {
            ordered_json out{{"kind", "random_unitary"},
                             {"probs", s.probs},
                             {"unitaries", ordered_json::array()}};
            for (const auto& u : s.unitaries) out["unitaries"].push_back(to_json(u));
            return out;
          },
          [](const DepolarizingSpec& s) {
            return ordered_json{{"kind", "depolarizing"}, {"p", s.p}, {"d", s.d}};
          },
          [](const CondexpSpec& s) {
            return ordered_json{{"kind", "condexp"}, {"algebra", to_json(s.algebra)}};
          },
          [](const NamedSpec& s) {
            return ordered_json{{"kind", "named"}, {"name", s.name}, {"d", s.d}};
          },
      },
      spec);
}

Channel build_channel(const ChannelSpec& spec, const Tolerance& tol) {
  return std::visit(
      overloaded{
          [&](const KrausSpec& s) { return Channel::from_kraus(s.kraus, tol); },
          [&](const RandomUnitarySpec& s) {
            return random_unitary(s.probs, s.unitaries, tol);
          },
          [&](const DepolarizingSpec& s) { return depolarizing(s.p, s.d); },
          [&](const CondexpSpec& s) { return condexp_channel(s.algebra, tol); },
          [&](const NamedSpec& s) {
            if (s.name == "identity") return identity_channel(s.d);
            if (s.name == "completely_depolarizing") return completely_depolarizing(s.d);
            if (s.name == "dephasing_z") return dephasing_z();
            if (s.name == "frame_n2") return collective_noise_channel_n2().channel;
            parse_error("unknown named channel \"" + s.name + "\"");
          },
      },
      spec);
}

ChannelSpec kraus_spec(const Channel& ch) { return KrausSpec{ch.kraus()}; }

AlgebraSpec algebra_from_json(const json& j, const Tolerance& tol) {
  if (!j.is_object()) parse_error("algebra must be an object");
  if (j.contains("name")) {
    if (!j.at("name").is_string()) parse_error("\"name\" must be a string");
    const auto name = j.at("name").get<std::string>();
    if (name == "frame_n2") return collective_noise_channel_n2().algebra;
    const Eigen::Index d = j.contains("d") ? positive_int(j.at("d"), "d") : 2;
    if (name == "diagonal") return AlgebraSpec::diagonal(d);
    if (name == "scalars") return AlgebraSpec::scalars(d);
    if (name == "full") return AlgebraSpec::full(d);
    parse_error("unknown named algebra \"" + name + "\"");
  }
  const json& blocks_field = field(j, "blocks");
  if (!blocks_field.is_array() || blocks_field.empty()) {
    parse_error("blocks must be a nonempty array of [m, n] pairs");
  }
  std::vector<BlockShape> blocks;
  for (const auto& b : blocks_field) {
    if (!b.is_array() || b.size() != 2) parse_error("each block must be [m, n]");
    blocks.push_back({positive_int(b[0], "m"), positive_int(b[1], "n")});
  }
  Eigen::Index zero_dim = 0;
  if (j.contains("zero_dim")) {
    const json& k = j.at("zero_dim");
    if (!k.is_number_integer() || k.get<long long>() < 0) {
      parse_error("zero_dim must be a nonnegative integer");
    }
    zero_dim = static_cast<Eigen::Index>(k.get<long long>());
  }
  if (j.contains("basis_change")) {
    return AlgebraSpec(std::move(blocks), zero_dim, matrix_from_json(j.at("basis_change")),
                       tol);
  }
  return AlgebraSpec(std::move(blocks), zero_dim);
}

ordered_json to_json(const AlgebraSpec& alg) {
  ordered_json blocks = ordered_json::array();
  for (const auto& b : alg.blocks()) blocks.push_back({b.m, b.n});
  return ordered_json{{"blocks", blocks},
                      {"zero_dim", alg.zero_dim()},
                      {"basis_change", to_json(alg.basis_change())}};
}

std::vector<CVector> states_from_json(const json& j) {
  const json& states = field(j, "states");
  if (!states.is_array() || states.empty()) {
    parse_error("states must be a nonempty array of vectors");
  }
  std::vector<CVector> out;
  for (const auto& s : states) out.push_back(vector_from_json(s));
  return out;
}

CMatrix density_matrix_from_json(const json& j) { return matrix_from_json(field(j, "matrix")); }

CVector single_vector_from_json(const json& j) { return vector_from_json(field(j, "vector")); }

json read_json(const std::string& path, std::istream& stdin_stream) {
  try {
    if (path == "-") return json::parse(stdin_stream);
    std::ifstream file(path);
    if (!file) parse_error("cannot open \"" + path + "\"");
    return json::parse(file);
  } catch (const json::exception& e) {
    parse_error("invalid JSON in \"" + path + "\": " + e.what());
  }
}

}  // namespace pqclab::io
