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

#ifndef ENTCAP_ACCEPTANCE_HPP
#define ENTCAP_ACCEPTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace entcap::acceptance {

struct Options {
  double betaReference = 1.9123;  // four-digit reference for beta
  std::uint64_t seed = 20260101;
  std::size_t ceilingSamples = 10000;  // per Hamiltonian, per ancilla setting
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed deviation (or the value checked)
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

/// Reported numbers that are not pass/fail criteria.
struct Note {
  std::string name;
  double value = 0.0;
  std::string detail;
};

struct Report {
  std::vector<CriterionResult> criteria;
  std::vector<Note> notes;
  bool all_passed() const;
};

Report run_all(const Options& options = {});

}  // namespace entcap::acceptance

#endif  // ENTCAP_ACCEPTANCE_HPP
