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

#ifndef CHANDISC_OPTIMIZER_H
#define CHANDISC_OPTIMIZER_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "chandisc/linalg.h"

namespace chandisc {

struct OptimizerConfig {
  size_t num_starts = 32;
  size_t max_iters = 2000;
  double ftol = 1e-9;
  uint64_t seed = 0;
};

/// Throws kInvalidArgument for zero counts or a non-positive ftol.
void validate_config(const OptimizerConfig &cfg);

struct OptimizerTrace {
  size_t starts = 0;
  size_t converged_starts = 0;
  size_t best_start = 0;
  bool best_converged = false;
  size_t iterations = 0;
  size_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

struct LocalSearchResult {
  double value = 0;
  std::vector<double> params;
  size_t iterations = 0;
  size_t evaluations = 0;
  // True when the simplex value spread fell below ftol; false when the
  // iteration budget ran out first.
  bool converged = false;
};

struct MaximizeResult {
  double best_value = 0;
  std::vector<double> best_params;
  OptimizerTrace trace;
};

/// Nelder-Mead ascent from `start`, restarted from the incumbent with a fresh
/// simplex until a restart no longer improves by more than ftol.
LocalSearchResult local_maximize(const Objective &objective, std::vector<double> start,
                                 const OptimizerConfig &cfg);

/// Multi-start maximization. Start i begins at seeded_starts[i] when present,
/// otherwise at random_start(cfg.seed, i, dim_params). Returns the best start;
/// ties go to the lowest start index. Non-finite objective values raise
/// kOptimizerFailure.
MaximizeResult maximize(const Objective &objective, size_t dim_params, const OptimizerConfig &cfg,
                        std::span<const std::vector<double>> seeded_starts = {});

/// Entries uniform in [-1, 1] from a counter-based generator keyed by
/// (seed, start_index, coordinate).
std::vector<double> random_start(uint64_t seed, uint64_t start_index, size_t dim_params);

// Parameterization of {P >= 0, Tr[P^2] = 1} by d^2 reals: theta[0..d) are the
// square roots of the diagonal of a lower-triangular factor L, followed by
// (re, im) pairs of the strictly-lower entries in column-major order.
// P = L L^dagger / ||L L^dagger||_F. The all-zero factor decodes to I / sqrt(d).

CMatrix decode_p(std::span<const double> theta, size_t d);
/// theta for L = I, i.e. P = I / sqrt(d).
std::vector<double> encode_identity_p(size_t d);
/// theta whose decode is |w><w| / <w|w>.
std::vector<double> encode_rank_one_p(std::span<const Complex> w);
/// theta whose decode is p / ||p||_F for a positive semidefinite p. Singular p is
/// regularized by a relative 1e-12 shift of its diagonal before factoring.
std::vector<double> encode_p(const CMatrix &p);

// Pure states use 2d reals (re, im per amplitude). Decoding normalizes and
// rotates the global phase so the first nonzero amplitude is real and
// nonnegative. The zero vector decodes to |0>.

CVector decode_pure_state(std::span<const double> theta, size_t d);
std::vector<double> encode_pure_state(std::span<const Complex> psi);

}  // namespace chandisc

#endif  // CHANDISC_OPTIMIZER_H
