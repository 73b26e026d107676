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

#include "pqclab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "pqclab/bloch.hpp"
#include "pqclab/condexp.hpp"
#include "pqclab/io.hpp"

namespace pqclab::cli {

namespace {

using io::ordered_json;

constexpr const char* kSampleHeader = "theta,rx,ry,rz,re0,im0,re1,im1";

/// Reports print 12 significant digits and flush values below 1e-12 to zero.
double display_value(double x) {
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

void round_numbers(ordered_json& j) {
  if (j.is_number_float()) {
    j = display_value(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotUnital:
    case ErrorKind::NotUnitalAlgebra:
    case ErrorKind::NoTraceVectors:
    case ErrorKind::Rho0NotInAlgebra:
    case ErrorKind::Infeasible:
      return kUnsupportedInput;
    default:
      return kInputError;
  }
}

void render_text(const ordered_json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 1);
    } else {
      out << pad << key << ": " << value.dump() << "\n";
    }
  }
}

struct Options {
  std::optional<double> tol;
  std::string format = "json";
};

Tolerance resolve_tolerance(const Options& opts) {
  if (opts.tol) return Tolerance(*opts.tol);
  if (const char* env = std::getenv("PQCLAB_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw PqcError(ErrorKind::Parse, "PQCLAB_TOL is not a number");
    }
    return Tolerance(v);
  }
  return Tolerance{};
}

ordered_json transfer_json(const PauliTransfer& pt) {
  return ordered_json{{"T", io::to_json(RMatrix(pt.T))}, {"t", io::to_json(RVector(pt.t))}};
}

ordered_json axioms_json(const AxiomReport& r) {
  return ordered_json{{"passed", r.passed},
                      {"fixes_subalgebra", r.fixes_subalgebra},
                      {"bimodule", r.bimodule},
                      {"maps_into_subalgebra", r.maps_into_subalgebra},
                      {"positive", r.positive},
                      {"trace_preserving", r.trace_preserving}};
}

ordered_json trace_vector_report_json(const TraceVectorReport& r) {
  return ordered_json{{"passed", r.passed},
                      {"max_violation", r.max_violation},
                      {"vector", io::to_json(r.vector)}};
}

struct SampleRow {
  double theta;
  Vec3 r;
  CVector psi;
};

std::vector<SampleRow> sample_rows(const PrivateStateSet& set, std::size_t count) {
  std::vector<SampleRow> rows;
  for (const CVector& psi : sample_private_states(set, count)) {
    const CMatrix rho = outer(psi);
    Vec3 r;
    for (int k = 0; k < 3; ++k) r(k) = (rho * pauli_vector()[k]).trace().real();
    rows.push_back({std::acos(std::clamp(r.z(), -1.0, 1.0)), r, psi});
  }
  return rows;
}

void write_sample_table(const std::vector<SampleRow>& rows, std::ostream& out) {
  out << kSampleHeader << "\n";
  char buf[64];
  const auto put = [&](double x, bool last) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf << (last ? "\n" : ",");
  };
  for (const auto& row : rows) {
    put(row.theta, false);
    put(row.r.x(), false);
    put(row.r.y(), false);
    put(row.r.z(), false);
    put(row.psi(0).real(), false);
    put(row.psi(0).imag(), false);
    put(row.psi(1).real(), false);
    put(row.psi(1).imag(), true);
  }
}

ordered_json private_set_json(const PrivateStateSet& set) {
  ordered_json out{{"tag", tag(set)}, {"nullity", nullity(set)}};
  if (const auto* pair = std::get_if<AntipodalPair>(&set)) {
    out["axis"] = io::to_json(RVector(pair->axis));
    out["bloch_vectors"] = {io::to_json(RVector(pair->axis)),
                            io::to_json(RVector(-pair->axis))};
    out["states"] = {io::to_json(pair->states[0]), io::to_json(pair->states[1])};
  } else if (const auto* circle = std::get_if<GreatCircle>(&set)) {
    out["normal"] = io::to_json(RVector(circle->normal));
  }
  return out;
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& err) : in_(in), err_(err) {}

  io::json read(const std::string& path) { return io::read_json(path, in_); }

  Channel load_channel(const std::string& path, const Tolerance& tol) {
    return io::build_channel(io::channel_spec_from_json(read(path)), tol);
  }

  AlgebraSpec load_algebra(const std::string& path, const Tolerance& tol) {
    return io::algebra_from_json(read(path), tol);
  }

  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Private quantum channels, conditional expectations and trace vectors",
               "pqclab"};
  app.require_subcommand(1);
  Options opts;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", opts.tol, "Absolute tolerance (default 1e-9 or PQCLAB_TOL)");
    sub->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  Runner runner(in, err);
  std::function<ordered_json(const Tolerance&)> handler;

  // classify
  std::string channel_file;
  std::optional<std::size_t> samples;
  std::string out_file;
  auto* classify_cmd = app.add_subcommand("classify", "Classify private states of a unital qubit channel");
  classify_cmd->add_option("channel", channel_file, "Channel spec file")->required();
  classify_cmd->add_option("--samples", samples, "Number of private states to sample")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--out", out_file, "CSV file for sampled states");
  add_common(classify_cmd);
  classify_cmd->callback([&] {
    handler = [&](const Tolerance& tol) {
      const Channel ch = runner.load_channel(channel_file, tol);
      const PrivateStateSet set = classify(ch, tol);
      ordered_json result = private_set_json(set);
      const PauliTransfer pt = transfer(ch);
      result["T"] = io::to_json(RMatrix(pt.T));
      result["t"] = io::to_json(RVector(pt.t));
      if (samples) {
        const auto rows = sample_rows(set, *samples);
        if (!out_file.empty()) {
          std::ofstream csv(out_file);
          if (!csv) throw PqcError(ErrorKind::Parse, "cannot write \"" + out_file + "\"");
          write_sample_table(rows, csv);
          result["samples_file"] = out_file;
          result["samples_written"] = rows.size();
        } else {
          ordered_json table = ordered_json::array();
          for (const auto& row : rows) {
            table.push_back({{"theta", row.theta},
                             {"rx", row.r.x()},
                             {"ry", row.r.y()},
                             {"rz", row.r.z()},
                             {"state", io::to_json(row.psi)}});
          }
          result["samples"] = std::move(table);
        }
      }
      return result;
    };
  });

  // check-pqc
  std::string pqc_channel, pqc_states, pqc_rho0;
  auto* pqc_cmd = app.add_subcommand("check-pqc", "Check whether [S, E, rho0] is a private quantum channel");
  pqc_cmd->add_option("channel", pqc_channel, "Channel spec file")->required();
  pqc_cmd->add_option("states", pqc_states, "States file")->required();
  pqc_cmd->add_option("rho0", pqc_rho0, "Output density operator file")->required();
  add_common(pqc_cmd);
  pqc_cmd->callback([&] {
    handler = [&](const Tolerance& tol) {
      const Channel ch = runner.load_channel(pqc_channel, tol);
      auto states = io::states_from_json(runner.read(pqc_states));
      DensityOperator rho0(io::density_matrix_from_json(runner.read(pqc_rho0)), tol);
      const PqcVerdict verdict = is_pqc(PQCInstance{std::move(states), ch, rho0}, tol);
      return ordered_json{{"is_private", verdict.is_private}, {"residuals", verdict.residuals}};
    };
  });

  // trace-vectors
  std::string tv_algebra, tv_rho0, tv_check;
  bool tv_onb = false;
  auto* tv_cmd = app.add_subcommand("trace-vectors", "Construct or check trace vectors of an algebra");
  tv_cmd->add_option("algebra", tv_algebra, "Algebra spec file")->required();
  tv_cmd->add_option("--rho0", tv_rho0, "Density operator file (default 1/n)");
  tv_cmd->add_flag("--onb", tv_onb, "Emit an orthonormal basis of trace vectors");
  tv_cmd->add_option("--check", tv_check, "Vector file to check");
  add_common(tv_cmd);
  tv_cmd->callback([&] {
    handler = [&](const Tolerance& tol) {
      const AlgebraSpec alg = runner.load_algebra(tv_algebra, tol);
      ordered_json result{{"dim", alg.dim()}, {"has_trace_vector", has_trace_vector(alg)}};
      const DensityOperator rho0 =
          tv_rho0.empty()
              ? DensityOperator::maximally_mixed(alg.dim())
              : DensityOperator(io::density_matrix_from_json(runner.read(tv_rho0)), tol);
      if (tv_onb) {
        if (alg.dim() > 0 && has_trace_vector(alg)) {
          ordered_json vectors = ordered_json::array();
          for (const CVector& v : trace_vector_onb(alg)) vectors.push_back(io::to_json(v));
          result["onb"] = {{"status", "ok"}, {"vectors", std::move(vectors)}};
        } else {
          result["onb"] = {{"status", "NoTraceVectors"}};
        }
      }
      if (!tv_check.empty()) {
        const CVector v = io::single_vector_from_json(runner.read(tv_check));
        const TraceVectorReport report = is_trace_vector(v, alg, rho0, tol);
        result["check"] = trace_vector_report_json(report);
        result["check"]["separating"] = is_separating(v, alg, tol);
      }
      if (!tv_rho0.empty() && !tv_onb && tv_check.empty()) {
        result["trace_vector"] = io::to_json(trace_vector_wrt(alg, rho0, tol));
      }
      return result;
    };
  });

  // condexp
  std::string ce_algebra;
  std::string ce_emit = "choi";
  bool ce_verify = false;
  auto* ce_cmd = app.add_subcommand("condexp", "Conditional expectation channel onto an algebra");
  ce_cmd->add_option("algebra", ce_algebra, "Algebra spec file")->required();
  ce_cmd->add_option("--emit", ce_emit, "Representation to emit")
      ->check(CLI::IsMember({"kraus", "choi", "transfer"}));
  ce_cmd->add_flag("--verify", ce_verify, "Append the axiom report");
  add_common(ce_cmd);
  ce_cmd->callback([&] {
    handler = [&](const Tolerance& tol) {
      const AlgebraSpec alg = runner.load_algebra(ce_algebra, tol);
      const Channel ch = condexp_channel(alg, tol);
      ordered_json result{{"emit", ce_emit}};
      if (ce_emit == "kraus") {
        result["kraus"] = io::to_json(io::kraus_spec(ch))["kraus"];
      } else if (ce_emit == "choi") {
        result["choi"] = io::to_json(choi(ch));
      } else {
        result["transfer"] = transfer_json(transfer(ch));
      }
      if (ce_verify) result["axioms"] = axioms_json(verify_condexp_axioms(ch, alg, tol));
      return result;
    };
  });

  // demo-frame
  auto* demo_cmd = app.add_subcommand("demo-frame", "Two-qubit shared reference frame example");
  add_common(demo_cmd);
  demo_cmd->callback([&] {
    handler = [&](const Tolerance& tol) {
      const FrameExample frame = collective_noise_channel_n2();
      const DensityOperator rho0 = DensityOperator::maximally_mixed(4);
      const CVector v = trace_vector_wrt(frame.algebra, rho0, tol);
      const PqcVerdict verdict = is_pqc(PQCInstance{{v}, frame.channel, rho0}, tol);
      return ordered_json{
          {"axioms", axioms_json(verify_condexp_axioms(frame.channel, frame.algebra, tol))},
          {"trace_vector", io::to_json(v)},
          {"triplet_weight", v.dot(frame.triplet_projector * v).real()},
          {"singlet_weight", v.dot(frame.singlet_projector * v).real()},
          {"trace_vector_check",
           trace_vector_report_json(is_trace_vector(v, frame.algebra, rho0, tol))},
          {"is_private", verdict.is_private},
          {"residual", verdict.residuals.front()}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pqclab: " << e.what() << "\n";
    return kInputError;
  }

  ordered_json report{{"command", app.get_subcommands().front()->get_name()},
                      {"argv", args}};
  int code = kOk;
  try {
    const Tolerance tol = resolve_tolerance(opts);
    report["tolerance"] = tol.atol;
    ordered_json result = handler(tol);
    round_numbers(result);
    report["result"] = std::move(result);
  } catch (const PqcError& e) {
    code = exit_code_for(e.kind());
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    err << "pqclab: " << to_string(e.kind()) << ": " << e.what() << "\n";
  }
  report["exit_code"] = code;

  if (opts.format == "text") {
    render_text(report, out, 0);
  } else {
    out << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace pqclab::cli
