// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTCAP_REPORTS_HPP
#define ENTCAP_REPORTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entcap/acceptance.hpp"
#include "entcap/self_inverse.hpp"
#include "entcap/state_space.hpp"

namespace entcap {

/// Process exit codes of the CLI.
enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 2, kExitVerificationFailed = 3 };

/// Formats with 10 significant digits.
std::string format_number(double x);

struct NamedScalar {
  std::string name;
  double value = 0.0;
  std::optional<double> reference;
  std::optional<double> tolerance;
  /// Set explicitly for compound checks; otherwise derived from
  /// |value - reference| <= tolerance when both exist.
  std::optional<bool> verdict;
  std::string note;

  std::optional<bool> passed() const;
};

struct RunRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<NamedScalar> outputs;
  std::optional<std::string> curves;  // path of the CSV written, if any
  std::string timestamp;              // ISO-8601, UTC

  const NamedScalar* find(std::string_view name) const;
  /// False if any output with a verdict failed.
  bool all_passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Factor specs: pauli-z | ising | parity:j=<half-int> | boson:D=<int> |
// identity[:d=<int>] | file:<path> | <path to a factor JSON file>.
SelfInverseFactor parse_factor_spec(std::string_view spec);

// State specs: optimal[:x=<x>] | eigen-product | random | max-entangled |
// ecs[:eta=<r>][,phase=<phi>][,x=<x>] | file:<path> | <path>.
// Builtins are built for the given Hamiltonian; `seed` drives `random`.
BipartiteState parse_state_spec(std::string_view spec, const ProductHamiltonian& h, std::uint64_t seed);

/// Uniform grid of steps+1 points from t0 to t1.
std::vector<double> make_grid(double t0, double t1, int steps);

RunRecord cmd_beta();

RunRecord cmd_capability(std::string_view factorA, std::string_view factorB,
                         const std::optional<std::string>& stateOut);

struct CurveOptions {
  std::string factorA = "pauli-z";
  std::string factorB = "pauli-z";
  std::string state = "optimal";
  double t0 = -0.2;
  double t1 = 0.2;
  int steps = 40;
  std::optional<std::string> out;
  std::uint64_t seed = 0;
};

/// CSV columns: t,entropy_bits,gamma_bits_per_time,method
RunRecord cmd_rate_curve(const CurveOptions& options);

/// CSV columns: t,op_entanglement_bits,rate_fd,rate_analytic. The analytic
/// column is filled only when both factors are traceless (operator Schmidt
/// weights cos^2 t, sin^2 t), and left empty otherwise.
RunRecord cmd_op_rate(const CurveOptions& options);

RunRecord cmd_verify(const acceptance::Options& options);

}  // namespace entcap

#endif  // ENTCAP_REPORTS_HPP
