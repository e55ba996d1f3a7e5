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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schurpriv/algebras.hpp"
#include "schurpriv/channels.hpp"
#include "schurpriv/correlation.hpp"
#include "schurpriv/graphs.hpp"

namespace schurpriv {

// Span of tensor products over qubit pairs (1,2), (3,4), ... of
// {I⊗I, I⊗X, Y⊗Y, Y⊗Z}, with a trailing idle I when n_qubits is odd. Every
// non-identity element has zero diagonal; the algebra is ≅ M_{2^⌊n/2⌋}.
MatrixAlgebra paired_pauli_algebra(std::size_t n_qubits);

// The m^N pairwise non-adjacent indices of C^{⊗N}, one per product component.
struct IdentityIndices {
  std::vector<std::size_t> block_order;    // 0-based, block-permuted C^{⊗N}
  std::vector<std::size_t> natural_order;  // 0-based, natural Kronecker order
};

// Components are given by their sizes and taken to be contiguous in C.
IdentityIndices identity_submatrix_indices(std::span<const std::size_t> component_sizes,
                                           std::size_t power,
                                           std::size_t max_dim = kDefaultMaxDim);

// Components as sorted vertex lists of G_C (least-vertex order) on n vertices.
IdentityIndices identity_submatrix_indices(const std::vector<std::vector<std::size_t>>& components,
                                           std::size_t n, std::size_t power,
                                           std::size_t max_dim = kDefaultMaxDim);

struct CheckRecord {
  std::string check;
  bool pass = false;
  double max_residual = 0.0;
};

struct PrivateCodeCertificate {
  std::size_t base_dim = 0;
  std::size_t power = 0;
  std::size_t ambient_dim = 0;  // base_dim^power
  MatrixAlgebra algebra;        // zero outside the embedding indices
  CMat rho0;
  IdentityIndices identity_indices;  // all m^N candidates
  IdentityIndices embedding;         // the 2^N used
  std::size_t logical_qubits = 0;    // ⌊N/2⌋
  bool idle_qubit = false;           // odd N leaves one tensor factor unused
  bool verified = false;
  std::vector<CheckRecord> transcript;
  // A ⊕ ℂ·I on the complement of the embedding, checked for reference only.
  std::size_t unital_complement_size = 0;
  bool unital_extension_private = false;
};

struct CodegenOptions {
  double tol = kVerdictTol;
  double zero_tol = kDefaultZeroTol;
  std::size_t max_dim = kDefaultMaxDim;
  // Bound on dim(algebra)·(n^N)² dense entries held by the certificate.
  std::size_t max_entries = std::size_t{1} << 25;
};

// Private algebra ≅ M_{2^⌊N/2⌋} for Φ^{⊗N}, with verification transcript.
// Throws ObstructionError when G_C is connected, ArgumentError for N < 2 and
// CapacityError when n^N exceeds max_dim or the dense basis exceeds
// max_entries.
PrivateCodeCertificate private_code_tensor_power(const CorrelationMatrix& c, std::size_t power,
                                                 const CodegenOptions& opts = {});

struct ReportOptions {
  std::size_t power = 2;
  std::size_t shannon_kmax = 3;
  std::size_t search_cap = kDefaultSearchCap;
  double tol = kDefaultTol;
  double zero_tol = kDefaultZeroTol;
};

struct PrivacyReport {
  std::size_t n = 0;
  Graph graph{0};
  Graph unitary_graph{0};
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::vector<std::size_t>> unitary_components;
  bool complete_graph = false;
  bool disjoint_cliques = false;
  std::optional<IndependentSet> alpha;  // absent when n exceeds the search cap
  std::optional<ShannonBound> shannon;
  // Any private algebra is quasiorthogonal to S_{UG_C}; quasiorthogonality to
  // S_{G_C*} suffices. Both are block algebras given by component sizes.
  std::vector<std::size_t> necessary_blocks;
  std::vector<std::size_t> sufficient_blocks;
  bool characterization_complete = false;
  std::vector<std::pair<std::size_t, std::size_t>> fragile_entries;
  std::size_t power = 0;
  std::size_t qubit_yield = 0;
  std::vector<std::string> notes;
};

PrivacyReport privacy_report(const CorrelationMatrix& c, const ReportOptions& opts = {});

}  // namespace schurpriv
