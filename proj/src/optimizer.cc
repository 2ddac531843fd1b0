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

#include "chandisc/optimizer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "chandisc/errors.h"

namespace chandisc {

namespace {

constexpr double kInitialStep = 0.25;
constexpr int kMaxRestarts = 8;

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class CountingObjective {
 public:
  explicit CountingObjective(const Objective &f) : f_(f) {}

  double operator()(std::span<const double> x) {
    evaluations_++;
    double v;
    try {
      v = f_(x);
    } catch (const Error &e) {
      throw Error(ErrorCode::kOptimizerFailure, std::string("objective evaluation failed: ") + e.what());
    }
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kOptimizerFailure, "objective returned a non-finite value");
    }
    return v;
  }

  size_t evaluations() const { return evaluations_; }

 private:
  const Objective &f_;
  size_t evaluations_ = 0;
};

struct SimplexRun {
  std::vector<double> best;
  double best_value;
  size_t iterations;
  bool converged;
};

// One Nelder-Mead pass maximizing f, standard coefficients (1, 2, 1/2, 1/2).
SimplexRun nelder_mead(CountingObjective &f, const std::vector<double> &start, double start_value,
                       double ftol, size_t budget) {
  const size_t n = start.size();
  std::vector<std::vector<double>> pts(n + 1, start);
  std::vector<double> vals(n + 1, start_value);
  for (size_t i = 0; i < n; i++) {
    pts[i + 1][i] += kInitialStep;
    vals[i + 1] = f(pts[i + 1]);
  }
  std::vector<size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  size_t iter = 0;
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    // Descending by value; stable so equal values keep their insertion order.
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] > vals[b]; });
    size_t hi = order.front();
    size_t lo = order.back();
    size_t second_lo = order[n - 1];
    if (vals[hi] - vals[lo] < ftol) {
      converged = true;
      break;
    }
    if (iter >= budget) {
      break;
    }
    iter++;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (size_t k = 0; k <= n; k++) {
      if (k == lo) {
        continue;
      }
      for (size_t i = 0; i < n; i++) {
        centroid[i] += pts[k][i];
      }
    }
    for (double &c : centroid) {
      c /= static_cast<double>(n);
    }

    for (size_t i = 0; i < n; i++) {
      trial[i] = centroid[i] + (centroid[i] - pts[lo][i]);
    }
    double reflected = f(trial);
    if (reflected > vals[hi]) {
      for (size_t i = 0; i < n; i++) {
        trial2[i] = centroid[i] + 2 * (centroid[i] - pts[lo][i]);
      }
      double expanded = f(trial2);
      if (expanded > reflected) {
        pts[lo] = trial2;
        vals[lo] = expanded;
      } else {
        pts[lo] = trial;
        vals[lo] = reflected;
      }
      continue;
    }
    if (reflected > vals[second_lo]) {
      pts[lo] = trial;
      vals[lo] = reflected;
      continue;
    }
    bool outside = reflected > vals[lo];
    for (size_t i = 0; i < n; i++) {
      trial2[i] = outside ? centroid[i] + 0.5 * (trial[i] - centroid[i])
                          : centroid[i] + 0.5 * (pts[lo][i] - centroid[i]);
    }
    double contracted = f(trial2);
    if (contracted > (outside ? reflected : vals[lo])) {
      pts[lo] = trial2;
      vals[lo] = contracted;
      continue;
    }
    // Shrink toward the best vertex.
    for (size_t k = 0; k <= n; k++) {
      if (k == hi) {
        continue;
      }
      for (size_t i = 0; i < n; i++) {
        pts[k][i] = pts[hi][i] + 0.5 * (pts[k][i] - pts[hi][i]);
      }
      vals[k] = f(pts[k]);
    }
  }

  size_t best = 0;
  for (size_t k = 1; k <= n; k++) {
    if (vals[k] > vals[best]) {
      best = k;
    }
  }
  return SimplexRun{pts[best], vals[best], iter, converged};
}

LocalSearchResult local_search(CountingObjective &f, std::vector<double> start, const OptimizerConfig &cfg) {
  LocalSearchResult out;
  out.params = std::move(start);
  out.value = f(out.params);
  if (out.params.empty()) {
    out.converged = true;
    return out;
  }
  for (int restart = 0; restart <= kMaxRestarts; restart++) {
    size_t budget = cfg.max_iters - out.iterations;
    SimplexRun run = nelder_mead(f, out.params, out.value, cfg.ftol, budget);
    out.iterations += run.iterations;
    out.converged = run.converged;
    double gain = run.best_value - out.value;
    if (run.best_value > out.value) {
      out.value = run.best_value;
      out.params = std::move(run.best);
    }
    if (!run.converged || gain <= cfg.ftol || out.iterations >= cfg.max_iters) {
      break;
    }
  }
  return out;
}

}  // namespace

void validate_config(const OptimizerConfig &cfg) {
  if (cfg.num_starts == 0) {
    throw Error(ErrorCode::kInvalidArgument, "optimizer needs at least one start");
  }
  if (cfg.max_iters == 0) {
    throw Error(ErrorCode::kInvalidArgument, "optimizer needs a positive iteration budget");
  }
  if (!(cfg.ftol > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "optimizer ftol must be positive");
  }
}

std::vector<double> random_start(uint64_t seed, uint64_t start_index, size_t dim_params) {
  uint64_t key = splitmix64(splitmix64(seed) ^ start_index);
  std::vector<double> x(dim_params);
  for (size_t i = 0; i < dim_params; i++) {
    uint64_t bits = splitmix64(key ^ splitmix64(i));
    double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    x[i] = 2 * u - 1;
  }
  return x;
}

LocalSearchResult local_maximize(const Objective &objective, std::vector<double> start,
                                 const OptimizerConfig &cfg) {
  validate_config(cfg);
  CountingObjective f(objective);
  LocalSearchResult r = local_search(f, std::move(start), cfg);
  r.evaluations = f.evaluations();
  return r;
}

MaximizeResult maximize(const Objective &objective, size_t dim_params, const OptimizerConfig &cfg,
                        std::span<const std::vector<double>> seeded_starts) {
  validate_config(cfg);
  for (const auto &s : seeded_starts) {
    if (s.size() != dim_params) {
      throw dimension_mismatch(dim_params, s.size());
    }
  }
  CountingObjective f(objective);
  MaximizeResult out;
  out.trace.starts = cfg.num_starts;
  for (size_t k = 0; k < cfg.num_starts; k++) {
    std::vector<double> start =
        k < seeded_starts.size() ? seeded_starts[k] : random_start(cfg.seed, k, dim_params);
    LocalSearchResult r = local_search(f, std::move(start), cfg);
    out.trace.iterations += r.iterations;
    if (r.converged) {
      out.trace.converged_starts++;
    }
    if (k == 0 || r.value > out.best_value) {
      out.best_value = r.value;
      out.best_params = std::move(r.params);
      out.trace.best_start = k;
      out.trace.best_converged = r.converged;
    }
  }
  out.trace.evaluations = f.evaluations();
  return out;
}

CMatrix decode_p(std::span<const double> theta, size_t d) {
  if (d == 0 || theta.size() != d * d) {
    throw dimension_mismatch(d * d, theta.size());
  }
  CMatrix l(d, d);
  for (size_t i = 0; i < d; i++) {
    l(i, i) = theta[i] * theta[i];
  }
  size_t idx = d;
  for (size_t j = 0; j < d; j++) {
    for (size_t i = j + 1; i < d; i++) {
      l(i, j) = Complex(theta[idx], theta[idx + 1]);
      idx += 2;
    }
  }
  CMatrix p = l * l.adjoint();
  double fro = p.frobenius_norm();
  if (fro == 0) {
    return CMatrix::identity(d) * Complex(1 / std::sqrt(static_cast<double>(d)));
  }
  return p * Complex(1 / fro);
}

std::vector<double> encode_identity_p(size_t d) {
  std::vector<double> theta(d * d, 0.0);
  for (size_t i = 0; i < d; i++) {
    theta[i] = 1;
  }
  return theta;
}

std::vector<double> encode_p(const CMatrix &p) {
  if (p.rows() != p.cols()) {
    throw Error(ErrorCode::kNonSquare, "P must be square");
  }
  if (!is_positive_semidefinite(p, kTolerances.eigenvalue_floor, kTolerances.hermiticity)) {
    throw Error(ErrorCode::kInvalidArgument, "P must be positive semidefinite");
  }
  const size_t d = p.rows();
  const double shift = 1e-12 * std::max(p.trace().real(), 1.0);
  CMatrix l(d, d);
  for (size_t j = 0; j < d; j++) {
    double diag = p(j, j).real() + shift;
    for (size_t k = 0; k < j; k++) {
      diag -= std::norm(l(j, k));
    }
    l(j, j) = std::sqrt(std::max(diag, shift));
    for (size_t i = j + 1; i < d; i++) {
      Complex z = p(i, j);
      for (size_t k = 0; k < j; k++) {
        z -= l(i, k) * std::conj(l(j, k));
      }
      l(i, j) = z / l(j, j);
    }
  }
  std::vector<double> theta(d * d, 0.0);
  for (size_t i = 0; i < d; i++) {
    theta[i] = std::sqrt(l(i, i).real());
  }
  size_t idx = d;
  for (size_t j = 0; j < d; j++) {
    for (size_t i = j + 1; i < d; i++) {
      theta[idx] = l(i, j).real();
      theta[idx + 1] = l(i, j).imag();
      idx += 2;
    }
  }
  return theta;
}

std::vector<double> encode_rank_one_p(std::span<const Complex> w) {
  const size_t d = w.size();
  std::vector<double> theta(d * d, 0.0);
  // First column of L carries w with its leading entry rotated to be real.
  Complex phase = std::abs(w[0]) > 0 ? std::conj(w[0]) / std::abs(w[0]) : Complex(1);
  theta[0] = std::sqrt(std::abs(w[0]));
  for (size_t i = 1; i < d; i++) {
    Complex z = w[i] * phase;
    size_t idx = d + 2 * (i - 1);
    theta[idx] = z.real();
    theta[idx + 1] = z.imag();
  }
  return theta;
}

CVector decode_pure_state(std::span<const double> theta, size_t d) {
  if (d == 0 || theta.size() != 2 * d) {
    throw dimension_mismatch(2 * d, theta.size());
  }
  CVector psi(d);
  for (size_t i = 0; i < d; i++) {
    psi[i] = Complex(theta[2 * i], theta[2 * i + 1]);
  }
  double n = norm(psi);
  if (n == 0) {
    psi[0] = 1;
    return psi;
  }
  Complex phase = 1;
  for (const auto &z : psi) {
    if (std::abs(z) > 0) {
      phase = std::conj(z) / std::abs(z);
      break;
    }
  }
  for (auto &z : psi) {
    z *= phase / n;
  }
  for (auto &z : psi) {
    if (std::abs(z) > 0) {
      z = std::abs(z);
      break;
    }
  }
  return psi;
}

std::vector<double> encode_pure_state(std::span<const Complex> psi) {
  std::vector<double> theta(2 * psi.size());
  for (size_t i = 0; i < psi.size(); i++) {
    theta[2 * i] = psi[i].real();
    theta[2 * i + 1] = psi[i].imag();
  }
  return theta;
}

}  // namespace chandisc
