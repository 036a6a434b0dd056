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

#ifndef ENTCAP_IO_HPP
#define ENTCAP_IO_HPP

#include <filesystem>

#include <json.hpp>

#include "entcap/numerics.hpp"
#include "entcap/self_inverse.hpp"
#include "entcap/state_space.hpp"

namespace entcap {

// State files:  {"dA": int, "dB": int, "re": [...], "im": [...]}
// Factor files: {"dim": int, "re": [...], "im": [...]}   (row-major)
// Malformed documents raise InvalidInputError.

nlohmann::json state_to_json(const BipartiteState& state);
BipartiteState state_from_json(const nlohmann::json& j);

nlohmann::json factor_to_json(const ComplexMatrix& m);
/// Parses and validates the matrix with make_factor, so factor errors
/// propagate unchanged.
SelfInverseFactor factor_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace entcap

#endif  // ENTCAP_IO_HPP
