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

#ifndef CHANDISC_CLI_H
#define CHANDISC_CLI_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chandisc/channels.h"

namespace chandisc::cli {

// Channel spec documents are JSON objects:
//   {"dim": 2, "kind": "kraus", "kraus": [[[[re, im], ...], ...], ...]}
//   {"dim": 2, "kind": "pauli", "q": [q0, q1, q2, q3]}
//   {"dim": d, "kind": "weyl", "q": [... d*d weights, index a*d + b ...]}
//   {"dim": d, "kind": "depolarizing", "p": 1.0}      (p optional, default 1)
//   {"dim": d, "kind": "unitary", "u": [[[re, im], ...], ...]}

/// Throws chandisc::Error on malformed documents or invalid channels.
QuantumOperation parse_channel_spec(std::string_view text);
QuantumOperation load_channel_spec(const std::string &path);

/// Kraus-form spec with full double precision.
std::string dump_channel_spec(const QuantumOperation &op);

/// Parses comma-separated decimals ("0.5,0.25,0.25,0").
std::vector<double> parse_decimal_list(std::string_view text);

/// Prints `value` with 10 significant digits, as used in result documents.
double round_significant(double value);

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 2 input or validation error, 3 computation failure.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace chandisc::cli

#endif  // CHANDISC_CLI_H
