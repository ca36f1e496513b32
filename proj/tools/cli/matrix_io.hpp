// Copyright 2026 The sunitary Authors
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

#pragma once

// JSON file formats for the command-line tool.
//
// MatrixFile: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.
// Map file:   {"superop": MatrixFile} or {"kraus_pairs": [[A, B], ...]},
//             meaning psi(X) = sum A X B^*. Both keys may be present.
// Kraus file: {"operators": [MatrixFile, ...]} or a bare array of them.
// Samples:    {"samples": [MatrixFile, ...]} or a bare array of them.

#include <string>
#include <vector>

#include <json.hpp>

#include "sunitary/channels.hpp"
#include "sunitary/maprep.hpp"
#include "sunitary/matcore.hpp"

namespace sunitary::cli {

/// Malformed input file: bad JSON, wrong schema, non-finite numbers.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedFile {
  std::string path;
  std::string sha256;  // hex digest of the raw bytes
  nlohmann::json document;
};

/// Reads and parses a JSON file; parse errors carry "path:line:col".
LoadedFile load_json_file(const std::string& path);

CMatrix matrix_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::ordered_json matrix_to_json(const CMatrix& X);

MapRep map_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::ordered_json map_to_json_superop(const MapRep& psi);
nlohmann::ordered_json map_to_json_pairs(const MapRep& psi, const Tolerances& tol);

std::vector<CMatrix> matrix_list_from_json(const nlohmann::json& j, const char* key,
                                           const std::string& where);
KrausSet kraus_set_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::ordered_json kraus_set_to_json(const KrausSet& K);

std::string sha256_hex(const std::string& bytes);

}  // namespace sunitary::cli
