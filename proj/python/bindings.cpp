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


// Python bindings: matrices cross as complex numpy arrays, reports as JSON text.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "schurpriv/algebras.hpp"
#include "schurpriv/channels.hpp"
#include "schurpriv/codegen.hpp"
#include "schurpriv/correlation.hpp"
#include "schurpriv/errors.hpp"
#include "schurpriv/graphs.hpp"
#include "schurpriv/io.hpp"

namespace py = pybind11;
using namespace schurpriv;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<CMat> to_cmats(const std::vector<Eigen::MatrixXcd>& ms) {
  std::vector<CMat> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.emplace_back(m);
  return out;
}

std::vector<Eigen::MatrixXcd> to_arrays(const std::vector<CMat>& ms) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.eigen());
  return out;
}

Graph to_graph(std::size_t n, const Edges& edges) { return Graph(n, edges); }

PrivacyMode parse_mode(const std::string& mode) {
  if (mode == "general") return PrivacyMode::kGeneral;
  if (mode == "unit") return PrivacyMode::kUnit;
  throw ArgumentError("mode must be 'general' or 'unit'");
}

}  // namespace

PYBIND11_MODULE(_schurpriv, m) {
  m.doc() = "Schur product channels, correlation matrices and private algebras";

  py::register_exception<ObstructionError>(m, "ObstructionError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NormalizationError>(m, "NormalizationError", PyExc_ValueError);
  py::register_exception<DegenerateUnitError>(m, "DegenerateUnitError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);

  m.def(
      "validate_correlation",
      [](const Eigen::MatrixXcd& c, double tol) {
        return CorrelationMatrix::validate(CMat(c), tol).mat().eigen();
      },
      py::arg("c"), py::arg("tol") = kDefaultTol);

  m.def(
      "correlation_from_kraus",
      [](const std::vector<std::vector<Complex>>& diagonals, double tol) {
        return from_diagonal_kraus(diagonals, tol).mat().eigen();
      },
      py::arg("diagonals"), py::arg("tol") = kDefaultTol);

  m.def(
      "graph_of",
      [](const Eigen::MatrixXcd& c, double zero_tol) {
        return graph_of(CorrelationMatrix::validate(CMat(c)), zero_tol).edges();
      },
      py::arg("c"), py::arg("zero_tol") = kDefaultZeroTol);

  m.def(
      "unitary_graph_of",
      [](const Eigen::MatrixXcd& c, double tol) {
        return unitary_graph_of(CorrelationMatrix::validate(CMat(c)), tol).edges();
      },
      py::arg("c"), py::arg("tol") = kDefaultTol);

  m.def(
      "independence_number",
      [](std::size_t n, const Edges& edges, std::size_t cap) {
        const auto s = independence_number(to_graph(n, edges), cap);
        return py::make_tuple(s.size, s.witness);
      },
      py::arg("n"), py::arg("edges"), py::arg("cap") = kDefaultSearchCap);

  m.def(
      "strong_product",
      [](std::size_t n, const Edges& g, std::size_t k, const Edges& h) {
        return strong_product(to_graph(n, g), to_graph(k, h)).edges();
      },
      py::arg("n"), py::arg("g"), py::arg("k"), py::arg("h"));

  m.def(
      "private_check",
      [](const Eigen::MatrixXcd& c, const std::vector<Eigen::MatrixXcd>& basis,
         const std::string& mode, double tol) {
        const SchurChannel ch(CorrelationMatrix::validate(CMat(c)));
        PrivateCheckOptions opts;
        opts.mode = parse_mode(mode);
        opts.tol = tol;
        return io::verdict_to_json(private_check(ch, to_cmats(basis), opts)).dump();
      },
      py::arg("c"), py::arg("basis"), py::arg("mode") = "general", py::arg("tol") = kVerdictTol);

  m.def(
      "apply_channel",
      [](const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& rho) {
        return SchurChannel(CorrelationMatrix::validate(CMat(c))).apply(CMat(rho)).eigen();
      },
      py::arg("c"), py::arg("rho"));

  m.def(
      "generate",
      [](const std::vector<Eigen::MatrixXcd>& gens, bool adjoin_identity) {
        return to_arrays(generate(to_cmats(gens), adjoin_identity).basis());
      },
      py::arg("generators"), py::arg("adjoin_identity") = true);

  m.def(
      "quasiorthogonal",
      [](const std::vector<Eigen::MatrixXcd>& a, const std::vector<Eigen::MatrixXcd>& b,
         double tol) { return quasiorthogonal(to_cmats(a), to_cmats(b), tol); },
      py::arg("a"), py::arg("b"), py::arg("tol") = kAlgebraTol);

  m.def(
      "has_separating_vector",
      [](const std::vector<Eigen::MatrixXcd>& basis, unsigned trials, std::uint64_t seed) {
        return find_separating_vector(to_cmats(basis), trials, seed).has_value();
      },
      py::arg("basis"), py::arg("trials") = 5, py::arg("seed") = 0);

  m.def(
      "paired_pauli_algebra",
      [](std::size_t n_qubits) { return to_arrays(paired_pauli_algebra(n_qubits).basis()); },
      py::arg("n_qubits"));

  m.def(
      "identity_submatrix_indices",
      [](const std::vector<std::size_t>& sizes, std::size_t power) {
        const auto idx = identity_submatrix_indices(sizes, power);
        return py::make_tuple(idx.block_order, idx.natural_order);
      },
      py::arg("component_sizes"), py::arg("power"));

  m.def(
      "private_code",
      [](const Eigen::MatrixXcd& c, std::size_t power) {
        const auto cert = private_code_tensor_power(CorrelationMatrix::validate(CMat(c)), power);
        py::dict out;
        out["verified"] = cert.verified;
        out["logical_qubits"] = cert.logical_qubits;
        out["ambient_dim"] = cert.ambient_dim;
        out["block_order"] = cert.embedding.block_order;
        out["natural_order"] = cert.embedding.natural_order;
        out["rho0"] = cert.rho0.eigen();
        out["algebra"] = to_arrays(cert.algebra.basis());
        return out;
      },
      py::arg("c"), py::arg("power"));

  m.def(
      "privacy_report",
      [](const Eigen::MatrixXcd& c, std::size_t power) {
        ReportOptions opts;
        opts.power = power;
        return io::report_to_json(privacy_report(CorrelationMatrix::validate(CMat(c)), opts)).dump();
      },
      py::arg("c"), py::arg("power") = 2);
}
