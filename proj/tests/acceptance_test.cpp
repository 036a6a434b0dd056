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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <cstdio>

#include "entcap/acceptance.hpp"

int main() {
  const entcap::acceptance::Report report = entcap::acceptance::run_all();
  for (const auto& c : report.criteria) {
    std::printf("%s %2d %-30s measured=%.10g tol=%.3g time=%.3fs  %s\n", c.passed ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.measured, c.tolerance, c.seconds, c.detail.c_str());
  }
  for (const auto& n : report.notes) {
    std::printf("NOTE    %-30s value=%.10g  %s\n", n.name.c_str(), n.value, n.detail.c_str());
  }
  return report.all_passed() ? 0 : 1;
}
