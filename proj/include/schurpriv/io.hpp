// Copyright 2026 The schurpriv Authors
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

#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "schurpriv/channels.hpp"
#include "schurpriv/cmatrix.hpp"
#include "schurpriv/codegen.hpp"
#include "schurpriv/graphs.hpp"

namespace schurpriv::io {

using nlohmann::json;

// Unreadable file, malformed JSON, or JSON that does not match a schema.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}, row-major.
json matrix_to_json(const CMat& m);
CMat matrix_from_json(const json& j);

// {"n": n, "edges": [[i, j], ...]} with 1-based vertices.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"n": n, "diagonals": [[[re, im], ...], ...]}.
json kraus_to_json(const std::vector<std::vector<Complex>>& diagonals);
std::vector<std::vector<Complex>> kraus_from_json(const json& j);
bool is_kraus_file(const json& j);

struct AlgebraFile {
  bool unital = false;
  std::vector<CMat> matrices;
};

// {"unital": bool, "matrices": [<matrix>, ...]}; a bare array of matrices is
// also accepted on input.
json algebra_to_json(std::span<const CMat> matrices, bool unital);
AlgebraFile algebra_from_json(const json& j);

json verdict_to_json(const PrivacyVerdict& v);
json certificate_to_json(const PrivateCodeCertificate& cert);
json report_to_json(const PrivacyReport& r);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

// 0-based index list rendered 1-based.
json one_based(std::span<const std::size_t> idx);

}  // namespace schurpriv::io
