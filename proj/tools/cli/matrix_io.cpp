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

#include "matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace sunitary::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) {
    throw InputError(where + ": expected a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw InputError(where + ": number is not finite");
  }
  return x;
}

Index positive_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() <= 0) {
    throw InputError(where + ": field \"" + key + "\" must be a positive integer");
  }
  return static_cast<Index>(j.at(key).get<long long>());
}

// -0.0 prints as "-0.0"; emit 0 so reports do not depend on rounding signs.
double clean(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int k = 0; k < length; ++k) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
  }
  return os.str();
}

LoadedFile load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  LoadedFile f;
  f.path = path;
  f.sha256 = sha256_hex(text);
  try {
    f.document = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    std::ostringstream os;
    os << path << ":" << line << ":" << col << ": malformed JSON (" << e.what() << ")";
    throw InputError(os.str());
  }
  return f;
}

CMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) {
    throw InputError(where + ": expected a matrix object with rows, cols, data");
  }
  const Index rows = positive_int(j, "rows", where);
  const Index cols = positive_int(j, "cols", where);
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw InputError(where + ": field \"data\" must be an array of [re, im] pairs");
  }
  const json& data = j.at("data");
  if (static_cast<Index>(data.size()) != rows * cols) {
    std::ostringstream os;
    os << where << ": \"data\" has " << data.size() << " entries, expected rows*cols = "
       << rows * cols;
    throw InputError(os.str());
  }
  CMatrix X(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    const json& e = data.at(static_cast<std::size_t>(k));
    const std::string at = where + ": data[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 2) {
      throw InputError(at + ": expected [re, im]");
    }
    X(k / cols, k % cols) = Complex(finite_number(e[0], at), finite_number(e[1], at));
  }
  return X;
}

ordered_json matrix_to_json(const CMatrix& X) {
  ordered_json j;
  j["rows"] = X.rows();
  j["cols"] = X.cols();
  ordered_json data = ordered_json::array();
  for (Index r = 0; r < X.rows(); ++r) {
    for (Index c = 0; c < X.cols(); ++c) {
      data.push_back({clean(X(r, c).real()), clean(X(r, c).imag())});
    }
  }
  j["data"] = std::move(data);
  return j;
}

MapRep map_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || (!j.contains("superop") && !j.contains("kraus_pairs"))) {
    throw InputError(where + ": expected an object with \"superop\" or \"kraus_pairs\"");
  }
  std::optional<CMatrix> superop;
  std::optional<std::vector<KrausPair>> pairs;
  if (j.contains("superop")) {
    superop = matrix_from_json(j.at("superop"), where + ": superop");
  }
  if (j.contains("kraus_pairs")) {
    const json& arr = j.at("kraus_pairs");
    if (!arr.is_array() || arr.empty()) {
      throw InputError(where + ": \"kraus_pairs\" must be a non-empty array of [A, B]");
    }
    pairs.emplace();
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string at = where + ": kraus_pairs[" + std::to_string(k) + "]";
      if (!arr[k].is_array() || arr[k].size() != 2) {
        throw InputError(at + ": expected [A, B]");
      }
      pairs->push_back({matrix_from_json(arr[k][0], at + "[0]"),
                        matrix_from_json(arr[k][1], at + "[1]")});
    }
  }
  try {
    if (superop && pairs) return MapRep::from_both(std::move(*superop), std::move(*pairs));
    if (superop) return MapRep::from_superoperator(std::move(*superop));
    return MapRep::from_kraus_pairs(std::move(*pairs));
  } catch (const Error& e) {
    throw InputError(where + ": " + e.what());
  }
}

ordered_json map_to_json_superop(const MapRep& psi) {
  ordered_json j;
  j["superop"] = matrix_to_json(psi.superoperator());
  return j;
}

ordered_json map_to_json_pairs(const MapRep& psi, const Tolerances& tol) {
  ordered_json arr = ordered_json::array();
  for (const KrausPair& p : psi.kraus_pairs(tol)) {
    arr.push_back({matrix_to_json(p.left), matrix_to_json(p.right)});
  }
  ordered_json j;
  j["kraus_pairs"] = std::move(arr);
  return j;
}

std::vector<CMatrix> matrix_list_from_json(const json& j, const char* key,
                                           const std::string& where) {
  const json* arr = &j;
  if (j.is_object() && j.contains(key)) arr = &j.at(key);
  if (!arr->is_array() || arr->empty()) {
    throw InputError(where + ": expected a non-empty array of matrices (or {\"" +
                     std::string(key) + "\": [...]})");
  }
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < arr->size(); ++k) {
    out.push_back(matrix_from_json((*arr)[k], where + ": " + key + "[" + std::to_string(k) + "]"));
  }
  return out;
}

KrausSet kraus_set_from_json(const json& j, const std::string& where) {
  KrausSet K{matrix_list_from_json(j, "operators", where)};
  const Index n = K.operators.front().rows();
  for (const CMatrix& A : K.operators) {
    if (A.rows() != n || A.cols() != n) {
      throw InputError(where + ": Kraus operators must all be n x n with one n");
    }
  }
  return K;
}

ordered_json kraus_set_to_json(const KrausSet& K) {
  ordered_json arr = ordered_json::array();
  for (const CMatrix& A : K.operators) arr.push_back(matrix_to_json(A));
  ordered_json j;
  j["operators"] = std::move(arr);
  return j;
}

}  // namespace sunitary::cli
