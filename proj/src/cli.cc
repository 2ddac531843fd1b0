// Copyright 2026 The chandisc Authors
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

#include "chandisc/cli.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chandisc/discrimination.h"
#include "chandisc/errors.h"
#include "chandisc/oracle.h"
#include "json.hpp"

namespace chandisc::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Tolerance for probability vectors typed by hand or stored with ~10 digits.
constexpr double kInputSumTolerance = 1e-9;

Error spec_error(const std::string &what) { return Error(ErrorCode::kInvalidArgument, "channel spec: " + what); }

const json &require_field(const json &doc, const char *name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw spec_error(std::string("missing field '") + name + "'");
  }
  return *it;
}

double read_number(const json &j, const std::string &where) {
  if (!j.is_number()) {
    throw spec_error(where + " must be a number");
  }
  return j.get<double>();
}

CMatrix read_matrix(const json &j, size_t dim, const std::string &where) {
  if (!j.is_array() || j.size() != dim) {
    throw spec_error(where + " must be a list of " + std::to_string(dim) + " rows");
  }
  CMatrix m(dim, dim);
  for (size_t i = 0; i < dim; i++) {
    const json &row = j[i];
    if (!row.is_array() || row.size() != dim) {
      throw spec_error(where + " row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    for (size_t k = 0; k < dim; k++) {
      const json &entry = row[k];
      if (!entry.is_array() || entry.size() != 2) {
        throw spec_error(where + " entries must be [re, im] pairs");
      }
      m(i, k) = Complex(read_number(entry[0], where), read_number(entry[1], where));
    }
  }
  return m;
}

json write_matrix(const CMatrix &m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); i++) {
    json row = json::array();
    for (size_t k = 0; k < m.cols(); k++) {
      row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Accepts a sum within kInputSumTolerance of 1, then rescales to exactly 1
// so the library's stricter probability check passes.
std::vector<double> normalized_input_probabilities(std::vector<double> q, const std::string &what) {
  double sum = 0;
  for (double x : q) {
    if (!(x >= 0) || !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidProbabilityVector, what + " has a negative or non-finite entry");
    }
    sum += x;
  }
  if (std::abs(sum - 1) > kInputSumTolerance) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", sum);
    throw Error(ErrorCode::kInvalidProbabilityVector, what + " sums to " + buf + ", expected 1");
  }
  for (double &x : q) {
    x /= sum;
  }
  return q;
}

std::vector<double> read_probabilities(const json &j, size_t expected, const std::string &what) {
  if (!j.is_array() || j.size() != expected) {
    throw spec_error(what + " must be a list of " + std::to_string(expected) + " numbers");
  }
  std::vector<double> q;
  for (const auto &x : j) {
    q.push_back(read_number(x, what));
  }
  return normalized_input_probabilities(std::move(q), what);
}

QuantumOperation build_from_spec(const json &doc) {
  if (!doc.is_object()) {
    throw spec_error("document must be an object");
  }
  const json &dim_field = require_field(doc, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() <= 0) {
    throw spec_error("'dim' must be a positive integer");
  }
  const size_t dim = dim_field.get<size_t>();
  const json &kind_field = require_field(doc, "kind");
  if (!kind_field.is_string()) {
    throw spec_error("'kind' must be a string");
  }
  const std::string kind = kind_field.get<std::string>();

  if (kind == "kraus") {
    const json &list = require_field(doc, "kraus");
    if (!list.is_array() || list.empty()) {
      throw spec_error("'kraus' must be a nonempty list of matrices");
    }
    std::vector<CMatrix> kraus;
    for (size_t n = 0; n < list.size(); n++) {
      kraus.push_back(read_matrix(list[n], dim, "kraus[" + std::to_string(n) + "]"));
    }
    return make_operation(std::move(kraus));
  }
  if (kind == "pauli") {
    if (dim != 2) {
      throw spec_error("'pauli' channels have dim 2");
    }
    auto q = read_probabilities(require_field(doc, "q"), 4, "q");
    return pauli_channel(std::array<double, 4>{q[0], q[1], q[2], q[3]});
  }
  if (kind == "weyl") {
    auto q = read_probabilities(require_field(doc, "q"), dim * dim, "q");
    return to_operation(weyl_channel(dim, q));
  }
  if (kind == "depolarizing") {
    double p = 1;
    if (auto it = doc.find("p"); it != doc.end()) {
      p = read_number(*it, "p");
      if (!(p >= 0 && p <= 1)) {
        throw spec_error("'p' must lie in [0, 1]");
      }
    }
    const double n = static_cast<double>(dim * dim);
    std::vector<double> q(dim * dim, p / n);
    q[0] = 1 - p + p / n;
    return to_operation(weyl_channel(dim, normalized_input_probabilities(std::move(q), "q")));
  }
  if (kind == "unitary") {
    CMatrix u = read_matrix(require_field(doc, "u"), dim, "u");
    if (!is_unitary(u, kTolerances.unitarity)) {
      throw Error(ErrorCode::kNotUnitary, "channel spec: 'u' is not unitary");
    }
    return make_operation({std::move(u)});
  }
  throw spec_error("unknown kind '" + kind + "'");
}

ordered_json number(double v) { return ordered_json(round_significant(v)); }

ordered_json tolerances_json() {
  ordered_json t;
  t["hermiticity"] = kTolerances.hermiticity;
  t["reconstruction"] = kTolerances.reconstruction;
  t["optimizer"] = kTolerances.optimizer;
  t["completeness"] = kTolerances.completeness;
  t["entanglement_gap"] = kTolerances.entanglement_gap;
  return t;
}

struct CommonFlags {
  double p1 = 0.5;
  std::string file1;
  std::string file2;
  uint64_t seed = 0;
};

int run_pauli(const std::string &q1_text, const std::string &q2_text, double p1, std::ostream &out) {
  auto to_array = [](const std::string &text, const char *name) {
    auto v = parse_decimal_list(text);
    if (v.size() != 4) {
      throw Error(ErrorCode::kInvalidProbabilityVector,
                  std::string(name) + " needs 4 comma-separated values, got " + std::to_string(v.size()));
    }
    v = normalized_input_probabilities(std::move(v), name);
    return std::array<double, 4>{v[0], v[1], v[2], v[3]};
  };
  auto q1 = to_array(q1_text, "--q1");
  auto q2 = to_array(q2_text, "--q2");
  PauliDiscriminationSummary s = pauli_delta_summary(q1, q2, p1);

  ordered_json doc;
  doc["pe_entangled"] = number(s.pe_entangled);
  doc["pe_unentangled"] = number(s.pe_unentangled);
  ordered_json r = ordered_json::array();
  for (double x : s.r) {
    r.push_back(number(x));
  }
  doc["r"] = r;
  doc["M"] = number(s.m);
  doc["det_sign"] = s.det_sign;
  doc["entanglement_needed"] = s.entanglement_needed;
  doc["optimal_unentangled_axis"] = std::string(axis_name(s.optimal_unentangled_axis));
  doc["method"] = std::string(method_name(Method::kClosedFormPauli));
  out << doc.dump(2) << "\n";
  return 0;
}

int run_dump(const CommonFlags &flags, std::ostream &out) {
  ordered_json doc;
  doc["channel1"] = ordered_json::parse(dump_channel_spec(load_channel_spec(flags.file1)));
  if (!flags.file2.empty()) {
    doc["channel2"] = ordered_json::parse(dump_channel_spec(load_channel_spec(flags.file2)));
  }
  out << doc.dump(2) << "\n";
  return 0;
}

DiscriminationProblem load_problem(const CommonFlags &flags) {
  if (flags.file2.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--file2 is required");
  }
  QuantumOperation op1 = load_channel_spec(flags.file1);
  QuantumOperation op2 = load_channel_spec(flags.file2);
  return make_problem(std::move(op1), std::move(op2), flags.p1);
}

int run_general(const CommonFlags &flags, const OptimizerConfig &cfg, std::ostream &out) {
  DiscriminationProblem prob = load_problem(flags);
  DiscriminationResult res = discriminate(prob, cfg);

  ordered_json doc;
  doc["pe_entangled"] = number(*res.pe_entangled);
  doc["pe_unentangled"] = number(*res.pe_unentangled);
  doc["upper_bound"] = number(res.upper_bound);
  if (res.lower_bound) {
    doc["lower_bound"] = number(*res.lower_bound);
  }
  doc["method"] = std::string(method_name(res.method));
  doc["entanglement_needed"] = *res.pe_unentangled - *res.pe_entangled > kTolerances.entanglement_gap;

  const Diagnostics &diag = res.diagnostics;
  bool used = diag.entangled.ran || diag.unentangled.ran;
  bool converged = true;
  for (const SearchSummary *s : {&diag.entangled, &diag.unentangled}) {
    if (s->ran) {
      converged = converged && s->trace.best_converged;
    }
  }
  ordered_json opt;
  opt["used"] = used;
  opt["starts"] = cfg.num_starts;
  opt["seed"] = cfg.seed;
  opt["max_iters"] = cfg.max_iters;
  opt["ftol"] = cfg.ftol;
  opt["converged"] = converged;
  doc["optimizer"] = opt;
  doc["tolerances"] = tolerances_json();
  out << doc.dump(2) << "\n";
  return 0;
}

int run_oracle(const CommonFlags &flags, size_t grid, size_t samples, std::ostream &out) {
  DiscriminationProblem prob = load_problem(flags);
  ordered_json doc;
  doc["oracle_pe_entangled"] = number(brute_force_entangled(prob, samples, flags.seed));
  doc["oracle_pe_unentangled"] = number(brute_force_unentangled(prob, grid));
  doc["grid_density"] = grid;
  doc["samples"] = samples;
  doc["seed"] = flags.seed;
  out << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

QuantumOperation parse_channel_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw spec_error(std::string("not valid JSON (") + e.what() + ")");
  }
  return build_from_spec(doc);
}

QuantumOperation load_channel_spec(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open channel spec '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_channel_spec(buf.str());
}

std::string dump_channel_spec(const QuantumOperation &op) {
  ordered_json doc;
  doc["dim"] = op.dim();
  doc["kind"] = "kraus";
  json kraus = json::array();
  for (const auto &k : op.kraus()) {
    kraus.push_back(write_matrix(k));
  }
  doc["kraus"] = kraus;
  return doc.dump();
}

std::vector<double> parse_decimal_list(std::string_view text) {
  std::vector<double> values;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string item(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    const char *begin = item.c_str();
    char *end = nullptr;
    double v = std::strtod(begin, &end);
    if (item.empty() || end != begin + item.size()) {
      throw Error(ErrorCode::kInvalidArgument, "cannot parse '" + item + "' as a decimal number");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return values;
}

double round_significant(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Minimum-error discrimination of two quantum channels", "chandisc"};
  app.require_subcommand(1);

  std::string q1_text, q2_text;
  double pauli_p1 = 0.5;
  auto *pauli = app.add_subcommand("pauli", "Closed forms for two qubit Pauli channels");
  pauli->add_option("--q1", q1_text, "Weights of channel 1 over I,X,Y,Z")->required();
  pauli->add_option("--q2", q2_text, "Weights of channel 2 over I,X,Y,Z")->required();
  pauli->add_option("--p1", pauli_p1, "Prior of channel 1")->check(CLI::Range(0.0, 1.0));

  CommonFlags general_flags;
  OptimizerConfig cfg;
  bool dump_spec = false;
  auto *general = app.add_subcommand("general", "Entangled and unentangled optimum for channels read from files");
  general->add_option("--file1", general_flags.file1, "Channel spec for channel 1")->required();
  general->add_option("--file2", general_flags.file2, "Channel spec for channel 2");
  general->add_option("--p1", general_flags.p1, "Prior of channel 1")->check(CLI::Range(0.0, 1.0));
  general->add_option("--starts", cfg.num_starts, "Optimizer starts")->check(CLI::PositiveNumber);
  general->add_option("--max-iters", cfg.max_iters, "Optimizer iterations per start")->check(CLI::PositiveNumber);
  general->add_option("--seed", cfg.seed, "Seed for the optimizer's random starts");
  general->add_flag("--dump-spec", dump_spec, "Print the parsed channels as Kraus-form specs and exit");

  CommonFlags oracle_flags;
  size_t grid = 200;
  size_t samples = 500;
  auto *oracle = app.add_subcommand("oracle", "Brute-force reference values (d <= 4)");
  oracle->add_option("--file1", oracle_flags.file1, "Channel spec for channel 1")->required();
  oracle->add_option("--file2", oracle_flags.file2, "Channel spec for channel 2")->required();
  oracle->add_option("--p1", oracle_flags.p1, "Prior of channel 1")->check(CLI::Range(0.0, 1.0));
  oracle->add_option("--grid", grid, "Bloch-sphere grid density")->check(CLI::Range(size_t{2}, size_t{100000}));
  oracle->add_option("--samples", samples, "Random entangled inputs")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", oracle_flags.seed, "Seed for random inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (pauli->parsed()) {
      return run_pauli(q1_text, q2_text, pauli_p1, out);
    }
    if (general->parsed()) {
      if (dump_spec) {
        return run_dump(general_flags, out);
      }
      return run_general(general_flags, cfg, out);
    }
    return run_oracle(oracle_flags, grid, samples, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kOptimizerFailure ? 3 : 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace chandisc::cli
