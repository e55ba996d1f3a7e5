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


#include "schurpriv/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "schurpriv/errors.hpp"

namespace schurpriv::io {
namespace {

Complex scalar_from_json(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw IoError("expected a number or a [re, im] pair, got " + v.dump());
}

json scalar_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw IoError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw IoError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

json pairs_one_based(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  json out = json::array();
  for (const auto& [i, j] : pairs) out.push_back({i + 1, j + 1});
  return out;
}

json components_one_based(const std::vector<std::vector<std::size_t>>& comps) {
  json out = json::array();
  for (const auto& c : comps) out.push_back(one_based(c));
  return out;
}

}  // namespace

json one_based(std::span<const std::size_t> idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

json matrix_to_json(const CMat& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMat matrix_from_json(const json& j) {
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  const json& data = field(j, "data");
  if (rows == 0 || cols == 0) throw IoError("matrix must be at least 1x1");
  if (!data.is_array() || data.size() != rows) throw IoError("matrix data has wrong row count");
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!data[i].is_array() || data[i].size() != cols) {
      throw IoError("matrix row " + std::to_string(i + 1) + " has wrong length");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = scalar_from_json(data[i][k]);
    }
  }
  if (!m.allFinite()) throw IoError("matrix has non-finite entries");
  return CMat(std::move(m));
}

json graph_to_json(const Graph& g) {
  return {{"n", g.size()}, {"edges", pairs_one_based(g.edges())}};
}

Graph graph_from_json(const json& j) {
  const std::size_t n = count_field(j, "n");
  Graph g(n);
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw IoError("edge must be a pair");
    const auto a = e[0].get<std::size_t>();
    const auto b = e[1].get<std::size_t>();
    if (a == 0 || b == 0 || a > n || b > n) throw IoError("edge vertex out of range");
    g.add_edge(a - 1, b - 1);
  }
  return g;
}

json kraus_to_json(const std::vector<std::vector<Complex>>& diagonals) {
  json diags = json::array();
  for (const auto& d : diagonals) {
    json row = json::array();
    for (auto z : d) row.push_back(scalar_to_json(z));
    diags.push_back(std::move(row));
  }
  return {{"n", diagonals.empty() ? 0 : diagonals.front().size()}, {"diagonals", diags}};
}

std::vector<std::vector<Complex>> kraus_from_json(const json& j) {
  const std::size_t n = count_field(j, "n");
  std::vector<std::vector<Complex>> out;
  for (const auto& d : field(j, "diagonals")) {
    if (!d.is_array() || d.size() != n) throw IoError("Kraus diagonal length differs from n");
    std::vector<Complex> row;
    row.reserve(n);
    for (const auto& v : d) row.push_back(scalar_from_json(v));
    out.push_back(std::move(row));
  }
  if (out.empty()) throw IoError("no Kraus diagonals");
  return out;
}

bool is_kraus_file(const json& j) { return j.is_object() && j.contains("diagonals"); }

json algebra_to_json(std::span<const CMat> matrices, bool unital) {
  json mats = json::array();
  for (const auto& m : matrices) mats.push_back(matrix_to_json(m));
  return {{"unital", unital}, {"matrices", std::move(mats)}};
}

AlgebraFile algebra_from_json(const json& j) {
  AlgebraFile out;
  const json* mats = &j;
  if (j.is_object()) {
    mats = &field(j, "matrices");
    if (j.contains("unital")) out.unital = j.at("unital").get<bool>();
  }
  if (!mats->is_array() || mats->empty()) throw IoError("algebra file has no matrices");
  for (const auto& m : *mats) out.matrices.push_back(matrix_from_json(m));
  return out;
}

json verdict_to_json(const PrivacyVerdict& v) {
  json out = {{"is_private", v.is_private}, {"max_residual", v.max_residual}};
  out["rho0"] = v.rho0 ? matrix_to_json(*v.rho0) : json(nullptr);
  if (v.failure_witness) {
    out["failure_witness"] = {{"index", v.failure_witness->index + 1},
                              {"element", matrix_to_json(v.failure_witness->element)},
                              {"image", matrix_to_json(v.failure_witness->image)},
                              {"residual", v.failure_witness->residual}};
  } else {
    out["failure_witness"] = nullptr;
  }
  out["structural_private"] = v.structural_private ? json(*v.structural_private) : json(nullptr);
  return out;
}

json certificate_to_json(const PrivateCodeCertificate& c) {
  json transcript = json::array();
  for (const auto& r : c.transcript) {
    transcript.push_back({{"check", r.check}, {"pass", r.pass}, {"max_residual", r.max_residual}});
  }
  return {
      {"base_dim", c.base_dim},
      {"power", c.power},
      {"ambient_dim", c.ambient_dim},
      {"logical_qubits", c.logical_qubits},
      {"idle_qubit", c.idle_qubit},
      {"verified", c.verified},
      {"indices",
       {{"identity_natural", one_based(c.identity_indices.natural_order)},
        {"identity_block", one_based(c.identity_indices.block_order)},
        {"embedding_natural", one_based(c.embedding.natural_order)},
        {"embedding_block", one_based(c.embedding.block_order)}}},
      {"algebra", algebra_to_json(c.algebra.basis(), c.algebra.unital())},
      {"rho0", matrix_to_json(c.rho0)},
      {"transcript", std::move(transcript)},
      {"unital_extension",
       {{"description", "algebra plus scalar multiples of the identity on the complement"},
        {"complement_size", c.unital_complement_size},
        {"private", c.unital_extension_private}}},
  };
}

json report_to_json(const PrivacyReport& r) {
  json out = {
      {"n", r.n},
      {"graph", graph_to_json(r.graph)},
      {"unitary_graph", graph_to_json(r.unitary_graph)},
      {"components", components_one_based(r.components)},
      {"unitary_components", components_one_based(r.unitary_components)},
      {"complete_graph", r.complete_graph},
      {"disjoint_cliques", r.disjoint_cliques},
      {"necessary_algebra_blocks", r.necessary_blocks},
      {"sufficient_algebra_blocks", r.sufficient_blocks},
      {"characterization_complete", r.characterization_complete},
      {"fragile_entries", pairs_one_based(r.fragile_entries)},
      {"power", r.power},
      {"qubit_yield", r.qubit_yield},
      {"notes", r.notes},
  };
  if (r.alpha) {
    out["alpha"] = {{"size", r.alpha->size}, {"witness", one_based(r.alpha->witness)}};
  } else {
    out["alpha"] = nullptr;
  }
  if (r.shannon) {
    out["shannon_lower"] = {{"value", r.shannon->value},
                            {"best_power", r.shannon->best_power},
                            {"alphas", r.shannon->alphas}};
  } else {
    out["shannon_lower"] = nullptr;
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace schurpriv::io
