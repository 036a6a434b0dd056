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

#include "entcap/io.hpp"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "entcap/errors.hpp"

namespace entcap {

namespace {

std::vector<Complex> read_entries(const nlohmann::json& j, std::size_t expected, const char* what) {
  if (!j.contains("re") || !j.contains("im") || !j["re"].is_array() || !j["im"].is_array()) {
    throw InvalidInputError(std::string(what) + ": expected numeric arrays \"re\" and \"im\"");
  }
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (re.size() != expected || im.size() != expected) {
    throw InvalidInputError(std::string(what) + ": expected " + std::to_string(expected) +
                            " entries in \"re\" and \"im\"");
  }
  std::vector<Complex> out(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    if (!re[i].is_number() || !im[i].is_number()) {
      throw InvalidInputError(std::string(what) + ": non-numeric entry at index " + std::to_string(i));
    }
    out[i] = {re[i].get<double>(), im[i].get<double>()};
  }
  return out;
}

std::size_t read_dimension(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() <= 0) {
    throw InvalidInputError(std::string(what) + ": \"" + key + "\" must be a positive integer");
  }
  return j[key].get<std::size_t>();
}

nlohmann::json split_parts(std::span<const Complex> entries) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (const auto& z : entries) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace

nlohmann::json state_to_json(const BipartiteState& state) {
  nlohmann::json j = split_parts(state.with_canonical_phase().amplitudes());
  j["dA"] = state.dA();
  j["dB"] = state.dB();
  return j;
}

BipartiteState state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInputError("state file: top level must be an object");
  const std::size_t dA = read_dimension(j, "dA", "state file");
  const std::size_t dB = read_dimension(j, "dB", "state file");
  std::vector<Complex> amps = read_entries(j, dA * dB, "state file");
  if (norm(amps) == 0.0) throw InvalidInputError("state file: zero vector");
  // Files carry finitely many digits, so normalization is restored on read.
  return BipartiteState::from_unnormalized(dA, dB, std::move(amps));
}

nlohmann::json factor_to_json(const ComplexMatrix& m) {
  nlohmann::json j = split_parts(m.entries());
  j["dim"] = m.rows();
  return j;
}

SelfInverseFactor factor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInputError("factor file: top level must be an object");
  const std::size_t dim = read_dimension(j, "dim", "factor file");
  return make_factor(ComplexMatrix(dim, dim, read_entries(j, dim * dim, "factor file")));
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace entcap
