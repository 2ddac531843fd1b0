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

#include "chandisc/discrimination.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "chandisc/errors.h"

namespace chandisc {

namespace {

// 1/2 (1 - ||.||_1), with rounding below zero removed.
double error_from_norm(double norm) { return std::max(0.0, 0.5 * (1 - norm)); }

}  // namespace

void validate_problem(const DiscriminationProblem &prob) {
  if (prob.op1.dim() != prob.op2.dim()) {
    throw dimension_mismatch(prob.op1.dim(), prob.op2.dim());
  }
  if (!(prob.p1 >= 0 && prob.p1 <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "prior p1 must lie in [0, 1], got " + std::to_string(prob.p1));
  }
}

DiscriminationProblem make_problem(QuantumOperation op1, QuantumOperation op2, double p1) {
  DiscriminationProblem prob{std::move(op1), std::move(op2), p1};
  validate_problem(prob);
  return prob;
}

HelstromResult helstrom(const CMatrix &rho1, const CMatrix &rho2, double p1) {
  if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols()) {
    throw dimension_mismatch(rho1.rows(), rho2.rows());
  }
  validate_state(rho1);
  validate_state(rho2);
  if (!(p1 >= 0 && p1 <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "prior p1 must lie in [0, 1], got " + std::to_string(p1));
  }
  const size_t n = rho1.rows();
  CMatrix diff = rho1 * Complex(p1) - rho2 * Complex(1 - p1);
  EigDecomposition eig = eig_hermitian(diff);

  double scale = std::max(1.0, diff.max_abs());
  CMatrix pi1(n, n);
  double norm1 = 0;
  for (size_t k = 0; k < n; k++) {
    double lambda = eig.eigenvalues[k];
    norm1 += std::abs(lambda);
    if (lambda > -1e-14 * scale) {
      CVector v(n);
      for (size_t i = 0; i < n; i++) {
        v[i] = eig.eigenvectors(i, k);
      }
      pi1 += outer(v, v);
    }
  }
  CMatrix pi2 = CMatrix::identity(n) - pi1;
  return HelstromResult{error_from_norm(norm1), TwoOutcomePovm{std::move(pi1), std::move(pi2)}};
}

CMatrix delta_operator(const DiscriminationProblem &prob) {
  validate_problem(prob);
  return choi_operator(prob.op1) * Complex(prob.p1) - choi_operator(prob.op2) * Complex(prob.p2());
}

double bound_max_entangled(const DiscriminationProblem &prob) {
  double d = static_cast<double>(prob.op1.dim());
  return error_from_norm(trace_norm_hermitian(delta_operator(prob)) / d);
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kClosedFormOrthogonal:
      return "closed-form-orthogonal";
    case Method::kClosedFormPauli:
      return "closed-form-pauli";
    case Method::kNumeric:
      return "numeric";
  }
  return "unknown";
}

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::kZ:
      return "z";
    case Axis::kX:
      return "x";
    case Axis::kY:
      return "y";
  }
  return "?";
}

namespace {

bool degenerate_prior(double p1) { return p1 == 0 || p1 == 1; }

CMatrix maximally_entangled_xi(size_t d) {
  return CMatrix::identity(d) * Complex(1 / std::sqrt(static_cast<double>(d)));
}

CVector basis_state(size_t d, size_t k) {
  CVector v(d);
  v[k] = 1;
  return v;
}

// Phi(X) = sum_k w_k A_k X A_k^dagger with signed weights.
struct SignedMap {
  std::vector<CMatrix> ops;
  std::vector<double> weights;

  CMatrix apply(const CMatrix &x) const {
    CMatrix out(ops[0].rows(), ops[0].rows());
    for (size_t k = 0; k < ops.size(); k++) {
      out += ops[k] * x * ops[k].adjoint() * Complex(weights[k]);
    }
    return out;
  }

  CMatrix apply_adjoint(const CMatrix &m) const {
    CMatrix out(ops[0].cols(), ops[0].cols());
    for (size_t k = 0; k < ops.size(); k++) {
      out += ops[k].adjoint() * m * ops[k] * Complex(weights[k]);
    }
    return out;
  }
};

SignedMap difference_map(const DiscriminationProblem &prob, size_t ancilla) {
  SignedMap map;
  const CMatrix id = CMatrix::identity(ancilla);
  for (const auto &k : prob.op1.kraus()) {
    map.ops.push_back(kron(k, id));
    map.weights.push_back(prob.p1);
  }
  for (const auto &k : prob.op2.kraus()) {
    map.ops.push_back(kron(k, id));
    map.weights.push_back(-prob.p2());
  }
  return map;
}

CMatrix sign_of(const CMatrix &h) {
  EigDecomposition eig = eig_hermitian(h);
  const size_t n = h.rows();
  CMatrix out(n, n);
  for (size_t k = 0; k < n; k++) {
    CVector v(n);
    for (size_t i = 0; i < n; i++) {
      v[i] = eig.eigenvectors(i, k);
    }
    out += outer(v, v) * Complex(eig.eigenvalues[k] >= 0 ? 1.0 : -1.0);
  }
  return out;
}

struct SeeSawResult {
  double value = -1;
  CVector psi;
  size_t evaluations = 0;
};

// Alternates M = sign(Phi(psi)) and psi = top eigenvector of Phi^dagger(M); each step
// cannot decrease ||Phi(psi)||_1. Where Phi(psi) is semidefinite the objective is flat,
// so the simplex search alone stalls; sign-indefinite starting M escape that plateau.
SeeSawResult see_saw(const SignedMap &map, const OptimizerConfig &cfg) {
  const size_t n = map.ops[0].cols();
  SeeSawResult best;
  for (size_t start = 0; start < cfg.num_starts; start++) {
    std::vector<double> raw = random_start(cfg.seed, cfg.num_starts + start, n * n);
    CMatrix h(n, n);
    size_t idx = 0;
    for (size_t i = 0; i < n; i++) {
      h(i, i) = raw[idx++];
      for (size_t j = i + 1; j < n; j++) {
        h(i, j) = Complex(raw[idx], raw[idx + 1]);
        h(j, i) = std::conj(h(i, j));
        idx += 2;
      }
    }
    CMatrix m = sign_of(h);
    double value = -1;
    CVector psi;
    for (size_t iter = 0; iter < 200; iter++) {
      EigDecomposition eig = eig_hermitian(map.apply_adjoint(m));
      CVector next(n);
      for (size_t i = 0; i < n; i++) {
        next[i] = eig.eigenvectors(i, 0);
      }
      CMatrix out = map.apply(outer(next, next));
      double next_value = trace_norm_hermitian(out);
      best.evaluations++;
      if (next_value <= value + cfg.ftol * 1e-3) {
        break;
      }
      value = next_value;
      psi = std::move(next);
      m = sign_of(out);
    }
    if (value > best.value) {
      best.value = value;
      best.psi = std::move(psi);
    }
  }
  return best;
}

// The simplex and see-saw candidates compete; the see-saw winner is polished.
void polish_with_see_saw(const Objective &objective, const std::vector<double> &seed, const OptimizerConfig &cfg,
                         MaximizeResult &best, size_t see_saw_evaluations) {
  LocalSearchResult polished = local_maximize(objective, seed, cfg);
  best.trace.evaluations += polished.evaluations + see_saw_evaluations;
  best.trace.iterations += polished.iterations;
  if (polished.value > best.best_value) {
    best.best_value = polished.value;
    best.best_params = std::move(polished.params);
    best.trace.best_converged = polished.converged;
  }
}

struct UnentangledSearch {
  double max_norm;
  CVector psi;
  OptimizerTrace trace;
};

UnentangledSearch search_unentangled(const DiscriminationProblem &prob, const OptimizerConfig &cfg) {
  const size_t d = prob.op1.dim();
  const double p1 = prob.p1;
  const double p2 = prob.p2();
  Objective objective = [&](std::span<const double> theta) {
    CVector psi = decode_pure_state(theta, d);
    CMatrix rho = outer(psi, psi);
    CMatrix diff = detail::apply_unchecked(prob.op1, rho) * Complex(p1) -
                   detail::apply_unchecked(prob.op2, rho) * Complex(p2);
    return trace_norm_hermitian(diff);
  };
  std::vector<std::vector<double>> seeds = {encode_pure_state(basis_state(d, 0))};
  MaximizeResult best = maximize(objective, 2 * d, cfg, seeds);
  SeeSawResult alt = see_saw(difference_map(prob, 1), cfg);
  polish_with_see_saw(objective, encode_pure_state(alt.psi), cfg, best, alt.evaluations);
  return UnentangledSearch{best.best_value, decode_pure_state(best.best_params, d), best.trace};
}

}  // namespace

DiscriminationResult pe_unentangled(const DiscriminationProblem &prob, const OptimizerConfig &cfg) {
  validate_problem(prob);
  validate_config(cfg);
  DiscriminationResult out;
  out.method = Method::kNumeric;
  out.upper_bound = bound_max_entangled(prob);
  if (degenerate_prior(prob.p1)) {
    out.pe_unentangled = 0.0;
    out.optimal_pure_input = basis_state(prob.op1.dim(), 0);
    out.diagnostics.degenerate_prior = true;
    return out;
  }
  UnentangledSearch search = search_unentangled(prob, cfg);
  out.pe_unentangled = error_from_norm(search.max_norm);
  out.optimal_pure_input = std::move(search.psi);
  out.diagnostics.unentangled = SearchSummary{true, search.trace};
  return out;
}

DiscriminationResult pe_entangled(const DiscriminationProblem &prob, const OptimizerConfig &cfg) {
  DiscriminationResult out = pe_unentangled(prob, cfg);
  const size_t d = prob.op1.dim();
  if (out.diagnostics.degenerate_prior) {
    out.pe_entangled = 0.0;
    out.optimal_xi = maximally_entangled_xi(d);
    return out;
  }

  const CMatrix delta = delta_operator(prob);
  const CMatrix id = CMatrix::identity(d);
  Objective objective = [&](std::span<const double> theta) {
    CMatrix lift = kron(id, decode_p(theta, d));
    return trace_norm_hermitian(lift * delta * lift);
  };

  std::vector<std::vector<double>> seeds = {encode_identity_p(d), encode_rank_one_p(basis_state(d, 0))};
  MaximizeResult best = maximize(objective, d * d, cfg, seeds);
  // A pure input |X>> reaches the same output norm as P = sqrt(conj(X) X^T).
  SeeSawResult alt = see_saw(difference_map(prob, d), cfg);
  CMatrix x = biket_to_mat(alt.psi, d);
  CMatrix gram = x.conj() * x.transpose();
  EigDecomposition eig = eig_hermitian(gram);
  CMatrix root(d, d);
  for (size_t k = 0; k < d; k++) {
    CVector v(d);
    for (size_t i = 0; i < d; i++) {
      v[i] = eig.eigenvectors(i, k);
    }
    root += outer(v, v) * Complex(std::sqrt(std::max(eig.eigenvalues[k], 0.0)));
  }
  polish_with_see_saw(objective, encode_p(root), cfg, best, alt.evaluations);

  // The unentangled optimum psi corresponds to the rank-one P = |psi*><psi*|.
  CVector psi_conj = *out.optimal_pure_input;
  for (auto &z : psi_conj) {
    z = std::conj(z);
  }
  LocalSearchResult polished = local_maximize(objective, encode_rank_one_p(psi_conj), cfg);
  double max_norm = best.best_value;
  std::vector<double> theta = best.best_params;
  if (polished.value > max_norm) {
    max_norm = polished.value;
    theta = polished.params;
  }

  out.pe_entangled = std::min(error_from_norm(max_norm), *out.pe_unentangled);
  // P = xi^T, with the unitary factor of the polar decomposition set to I.
  out.optimal_xi = decode_p(theta, d).transpose();
  best.trace.evaluations += polished.evaluations;
  best.trace.iterations += polished.iterations;
  out.diagnostics.entangled = SearchSummary{true, best.trace};
  return out;
}

bool entanglement_needed_numeric(const DiscriminationProblem &prob, const OptimizerConfig &cfg) {
  DiscriminationResult r = pe_entangled(prob, cfg);
  return *r.pe_unentangled - *r.pe_entangled > kTolerances.entanglement_gap;
}

bool is_orthogonal_unitary_family(const RandomUnitaryChannel &ch) {
  const double d = static_cast<double>(ch.dim);
  for (size_t m = 0; m < ch.unitaries.size(); m++) {
    for (size_t n = m; n < ch.unitaries.size(); n++) {
      Complex overlap = (ch.unitaries[m].adjoint() * ch.unitaries[n]).trace();
      double expected = m == n ? d : 0.0;
      if (std::abs(overlap - expected) > kTolerances.orthogonality) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void require_same_family(const RandomUnitaryChannel &ch1, const RandomUnitaryChannel &ch2) {
  if (ch1.dim != ch2.dim) {
    throw dimension_mismatch(ch1.dim, ch2.dim);
  }
  if (ch1.unitaries.size() != ch2.unitaries.size()) {
    throw Error(ErrorCode::kFamilyMismatch, "channels use unitary lists of different lengths");
  }
  for (size_t n = 0; n < ch1.unitaries.size(); n++) {
    if (max_abs_diff(ch1.unitaries[n], ch2.unitaries[n]) > kTolerances.unitarity) {
      throw Error(ErrorCode::kFamilyMismatch,
                  "channels differ in unitary #" + std::to_string(n));
    }
  }
}

void require_prior(double p1) {
  if (!(p1 >= 0 && p1 <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "prior p1 must lie in [0, 1], got " + std::to_string(p1));
  }
}

double sum_abs_r(std::span<const double> w1, std::span<const double> w2, double p1) {
  double s = 0;
  for (size_t n = 0; n < w1.size(); n++) {
    s += std::abs(p1 * w1[n] - (1 - p1) * w2[n]);
  }
  return s;
}

}  // namespace

double pe_random_unitary_exact(const RandomUnitaryChannel &ch1, const RandomUnitaryChannel &ch2,
                               double p1) {
  require_prior(p1);
  require_same_family(ch1, ch2);
  if (!is_orthogonal_unitary_family(ch1)) {
    throw Error(ErrorCode::kNotOrthogonal, "unitary family is not orthogonal");
  }
  return error_from_norm(sum_abs_r(ch1.weights, ch2.weights, p1));
}

ErrorBounds pe_random_unitary_bounds(const RandomUnitaryChannel &ch1, const RandomUnitaryChannel &ch2,
                                     double p1) {
  require_prior(p1);
  require_same_family(ch1, ch2);
  double lower = error_from_norm(sum_abs_r(ch1.weights, ch2.weights, p1));
  DiscriminationProblem prob{to_operation(ch1), to_operation(ch2), p1};
  return ErrorBounds{lower, bound_max_entangled(prob)};
}

PauliDiscriminationSummary pauli_delta_summary(const std::array<double, 4> &q1,
                                               const std::array<double, 4> &q2, double p1) {
  validate_probability_vector(q1);
  validate_probability_vector(q2);
  require_prior(p1);
  const double p2 = 1 - p1;

  PauliDiscriminationSummary s{};
  for (int alpha = 0; alpha < 4; alpha++) {
    s.r[alpha] = p1 * q1[alpha] - p2 * q2[alpha];
  }
  const auto &r = s.r;
  s.a = r[0] + r[3];
  s.c = r[0] - r[3];
  s.b = r[1] + r[2];
  s.d = r[1] - r[2];
  s.singular_values = {std::abs(s.a + s.c), std::abs(s.a - s.c), std::abs(s.b + s.d), std::abs(s.b - s.d)};

  double sum_abs = 0;
  int negatives = 0;
  bool any_zero = false;
  for (double x : r) {
    sum_abs += std::abs(x);
    negatives += x < 0 ? 1 : 0;
    any_zero = any_zero || x == 0;
  }
  s.det_sign = any_zero ? 0 : (negatives % 2 == 0 ? 1 : -1);

  // Eigenstates of sigma_z, sigma_x, sigma_y as the product input.
  const std::array<double, 3> candidates = {
      std::abs(r[0] + r[3]) + std::abs(r[1] + r[2]),
      std::abs(r[0] + r[1]) + std::abs(r[2] + r[3]),
      std::abs(r[0] + r[2]) + std::abs(r[1] + r[3]),
  };
  const std::array<Axis, 3> axes = {Axis::kZ, Axis::kX, Axis::kY};
  size_t best = 0;
  for (size_t k = 1; k < 3; k++) {
    if (candidates[k] > candidates[best]) {
      best = k;
    }
  }
  s.m = candidates[best];
  s.optimal_unentangled_axis = axes[best];
  s.pe_entangled = error_from_norm(sum_abs);
  s.pe_unentangled = error_from_norm(s.m);
  s.entanglement_needed = s.det_sign < 0;
  return s;
}

double pe_pauli_entangled(const std::array<double, 4> &q1, const std::array<double, 4> &q2, double p1) {
  return pauli_delta_summary(q1, q2, p1).pe_entangled;
}

double pe_pauli_unentangled(const std::array<double, 4> &q1, const std::array<double, 4> &q2, double p1) {
  return pauli_delta_summary(q1, q2, p1).pe_unentangled;
}

bool entanglement_needed_pauli(const std::array<double, 4> &q1, const std::array<double, 4> &q2, double p1) {
  return pauli_delta_summary(q1, q2, p1).entanglement_needed;
}

namespace {

// |Tr[a^dagger b]| = d within tolerance, i.e. equal up to a global phase.
bool same_up_to_phase(const CMatrix &a, const CMatrix &b) {
  double d = static_cast<double>(a.rows());
  return std::abs((a.adjoint() * b).trace()) >= d * (1 - kTolerances.unitarity);
}

// Splits K into sqrt(w) U when K^dagger K = w I.
std::optional<std::pair<CMatrix, double>> as_scaled_unitary(const CMatrix &k) {
  const size_t d = k.rows();
  CMatrix gram = k.adjoint() * k;
  double w = gram.trace().real() / static_cast<double>(d);
  if (w <= 0) {
    return std::nullopt;
  }
  if (max_abs_diff(gram, CMatrix::identity(d) * Complex(w)) > kTolerances.unitarity) {
    return std::nullopt;
  }
  return std::make_pair(k * Complex(1 / std::sqrt(w)), w);
}

void add_to_family(CommonUnitaryFamily &family, const CMatrix &u, double w, bool first) {
  for (size_t n = 0; n < family.unitaries.size(); n++) {
    if (same_up_to_phase(family.unitaries[n], u)) {
      (first ? family.weights1 : family.weights2)[n] += w;
      return;
    }
  }
  family.unitaries.push_back(u);
  family.weights1.push_back(first ? w : 0.0);
  family.weights2.push_back(first ? 0.0 : w);
}

std::optional<std::array<size_t, 4>> pauli_positions(const CommonUnitaryFamily &family) {
  if (family.unitaries.front().rows() != 2 || family.unitaries.size() > 4) {
    return std::nullopt;
  }
  std::array<size_t, 4> index{4, 4, 4, 4};
  for (size_t n = 0; n < family.unitaries.size(); n++) {
    bool matched = false;
    for (int alpha = 0; alpha < 4 && !matched; alpha++) {
      if (same_up_to_phase(pauli_matrix(alpha), family.unitaries[n])) {
        index[n] = static_cast<size_t>(alpha);
        matched = true;
      }
    }
    if (!matched) {
      return std::nullopt;
    }
  }
  return index;
}

CVector axis_eigenstate(Axis axis) {
  using namespace std::complex_literals;
  const double h = 1 / std::sqrt(2.0);
  switch (axis) {
    case Axis::kZ:
      return {1, 0};
    case Axis::kX:
      return {h, h};
    case Axis::kY:
      return {h, h * 1i};
  }
  return {1, 0};
}

}  // namespace

std::optional<CommonUnitaryFamily> common_unitary_family(const QuantumOperation &op1,
                                                         const QuantumOperation &op2) {
  if (op1.dim() != op2.dim()) {
    return std::nullopt;
  }
  CommonUnitaryFamily family;
  for (int which = 0; which < 2; which++) {
    const QuantumOperation &op = which == 0 ? op1 : op2;
    for (const auto &k : op.kraus()) {
      auto split = as_scaled_unitary(k);
      if (!split) {
        return std::nullopt;
      }
      add_to_family(family, split->first, split->second, which == 0);
    }
  }
  return family;
}

DiscriminationResult discriminate(const DiscriminationProblem &prob, const OptimizerConfig &cfg) {
  validate_problem(prob);
  validate_config(cfg);
  const size_t d = prob.op1.dim();
  auto family = common_unitary_family(prob.op1, prob.op2);
  if (!family) {
    return pe_entangled(prob, cfg);
  }

  RandomUnitaryChannel ch{d, family->unitaries, family->weights1};
  double lower = error_from_norm(sum_abs_r(family->weights1, family->weights2, prob.p1));
  if (!is_orthogonal_unitary_family(ch)) {
    DiscriminationResult out = pe_entangled(prob, cfg);
    out.lower_bound = lower;
    return out;
  }

  if (auto positions = pauli_positions(*family)) {
    std::array<double, 4> q1{}, q2{};
    for (size_t n = 0; n < family->unitaries.size(); n++) {
      q1[(*positions)[n]] += family->weights1[n];
      q2[(*positions)[n]] += family->weights2[n];
    }
    // Completeness already holds to 1e-9; renormalize to the tighter
    // probability-vector tolerance.
    for (auto *q : {&q1, &q2}) {
      double sum = std::accumulate(q->begin(), q->end(), 0.0);
      for (double &x : *q) {
        x /= sum;
      }
    }
    PauliDiscriminationSummary s = pauli_delta_summary(q1, q2, prob.p1);
    DiscriminationResult out;
    out.method = Method::kClosedFormPauli;
    out.pe_entangled = s.pe_entangled;
    out.pe_unentangled = s.pe_unentangled;
    out.upper_bound = bound_max_entangled(prob);
    out.lower_bound = lower;
    out.optimal_xi = maximally_entangled_xi(d);
    out.optimal_pure_input = axis_eigenstate(s.optimal_unentangled_axis);
    out.diagnostics.degenerate_prior = degenerate_prior(prob.p1);
    return out;
  }

  DiscriminationResult out = pe_unentangled(prob, cfg);
  out.method = Method::kClosedFormOrthogonal;
  out.pe_entangled = degenerate_prior(prob.p1) ? 0.0 : std::max(0.0, lower);
  out.lower_bound = lower;
  out.optimal_xi = maximally_entangled_xi(d);
  return out;
}

}  // namespace chandisc
