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

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "entcap/errors.hpp"
#include "entcap/reports.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ENTCAP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw entcap::InvalidInputError(std::string("ENTCAP_SEED is not an unsigned integer: ") + env);
    }
  }
  return 20260101;
}

int emit(const entcap::RunRecord& record, bool json) {
  if (json) {
    std::cout << record.to_json().dump(2) << '\n';
  } else {
    std::cout << record.to_text();
  }
  return record.all_passed() ? entcap::kExitOk : entcap::kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement capability of self-inverse product Hamiltonians"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::optional<std::uint64_t> seed;
  app.add_flag("--json", json, "Print the run record as JSON");
  app.add_option("--seed", seed, "Random seed (default: $ENTCAP_SEED or 20260101)");

  auto* beta = app.add_subcommand("beta", "Two-term capability bound beta and its maximiser x0");

  std::string capA = "pauli-z";
  std::string capB = "pauli-z";
  std::optional<std::string> stateOut;
  auto* capability = app.add_subcommand("capability", "Capability of H = X_A (x) X_B and its optimal input");
  capability->add_option("--factor-a", capA, "Factor spec or JSON file")->capture_default_str();
  capability->add_option("--factor-b", capB, "Factor spec or JSON file")->capture_default_str();
  capability->add_option("--hamiltonian", [&](const CLI::results_t& r) {
    capA = capB = r.front();
    return true;
  }, "Use the same factor spec for both sides");
  capability->add_option("--state-out", stateOut, "Write the optimal state as JSON");

  entcap::CurveOptions curve;
  auto add_curve_options = [&](CLI::App* sub, bool withState) {
    sub->add_option("--factor-a", curve.factorA, "Factor spec or JSON file")->capture_default_str();
    sub->add_option("--factor-b", curve.factorB, "Factor spec or JSON file")->capture_default_str();
    sub->add_option("--hamiltonian", [&](const CLI::results_t& r) {
      curve.factorA = curve.factorB = r.front();
      return true;
    }, "Use the same factor spec for both sides");
    if (withState) {
      sub->add_option("--state,--state-file", curve.state,
                      "optimal[:x=], eigen-product, random, max-entangled, ecs[:eta=,phase=,x=] or a JSON file")
          ->capture_default_str();
    }
    sub->add_option("--t0", curve.t0, "Grid start")->capture_default_str();
    sub->add_option("--t1", curve.t1, "Grid end")->capture_default_str();
    sub->add_option("--steps", curve.steps, "Number of grid intervals")->capture_default_str();
    sub->add_option("--out", curve.out, "CSV output path");
  };
  auto* rateCurve = app.add_subcommand("rate-curve", "Entropy and entanglement rate along a time grid");
  add_curve_options(rateCurve, true);
  auto* opRate = app.add_subcommand("op-rate", "Operator entanglement and its rate along a time grid");
  add_curve_options(opRate, false);

  entcap::acceptance::Options verifyOptions;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--beta-reference", verifyOptions.betaReference, "Reference value for beta")
      ->capture_default_str();
  verify->add_option("--ceiling-samples", verifyOptions.ceilingSamples, "Random states per ceiling check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? entcap::kExitOk : entcap::kExitInvalidInput;
  }

  try {
    const std::uint64_t s = seed ? *seed : default_seed();
    curve.seed = s;
    verifyOptions.seed = s;
    if (*beta) return emit(entcap::cmd_beta(), json);
    if (*capability) return emit(entcap::cmd_capability(capA, capB, stateOut), json);
    if (*rateCurve) return emit(entcap::cmd_rate_curve(curve), json);
    if (*opRate) return emit(entcap::cmd_op_rate(curve), json);
    if (*verify) return emit(entcap::cmd_verify(verifyOptions), json);
  } catch (const entcap::NumericalConsistencyError& e) {
    std::cerr << "entcap: verification failed: " << e.what() << '\n';
    return entcap::kExitVerificationFailed;
  } catch (const entcap::Error& e) {
    std::cerr << "entcap: " << e.what() << '\n';
    return entcap::kExitInvalidInput;
  }
  return entcap::kExitInvalidInput;
}
