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
#include <utility>
#include <vector>

#include "schurpriv/cmatrix.hpp"
#include "schurpriv/graphs.hpp"

namespace schurpriv {

// Hermitian PSD matrix with unit diagonal. Only obtainable through validate()
// and the constructors below, so holding one is proof of validity.
class CorrelationMatrix {
 public:
  // Throws DimensionError (non-square) or ValidationError naming the first
  // violated property, checked in the order Hermitian, unit diagonal, PSD.
  static CorrelationMatrix validate(const CMat& m, double tol = kDefaultTol);

  const CMat& mat() const noexcept { return mat_; }
  std::size_t size() const noexcept { return mat_.rows(); }
  double tol() const noexcept { return tol_; }
  Complex operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

 private:
  CorrelationMatrix(CMat m, double tol) : mat_(std::move(m)), tol_(tol) {}

  friend CorrelationMatrix tensor_power(const CorrelationMatrix&, std::size_t, std::size_t);

  CMat mat_;
  double tol_;
};

// C_kl = Σ_i a^{(i)}_k · conj(a^{(i)}_l) for the diagonals of commuting
// Kraus operators written in their common eigenbasis. Throws
// NormalizationError when some C_kk differs from 1 by more than tol; otherwise
// the diagonal is set to exactly 1.
CorrelationMatrix from_diagonal_kraus(const std::vector<std::vector<Complex>>& diagonals,
                                      double tol = kDefaultTol);

// Edge (i, j) iff |C_ij| > zero_tol.
Graph graph_of(const CorrelationMatrix& c, double zero_tol = kDefaultZeroTol);

// Edge (i, j) iff | |C_ij|² − 1 | ≤ tol.
Graph unitary_graph_of(const CorrelationMatrix& c, double tol = kDefaultTol);

// Off-diagonal pairs (i < j) whose unitary-edge classification sits within two
// orders of magnitude of the tolerance boundary: tol/100 < ||C_ij|²−1| ≤ 100·tol.
std::vector<std::pair<std::size_t, std::size_t>> fragile_unitary_entries(
    const CorrelationMatrix& c, double tol = kDefaultTol);

struct BlockPermutation {
  Permutation perm;
  std::vector<std::size_t> block_sizes;
};

// Groups each component of graph_of(c) contiguously, components ordered by
// least vertex, members ascending.
BlockPermutation block_permutation(const CorrelationMatrix& c,
                                   double zero_tol = kDefaultZeroTol);

// C^{⊗N}. The Kronecker product of correlation matrices is again one, so only
// the diagonal is re-checked.
CorrelationMatrix tensor_power(const CorrelationMatrix& c, std::size_t power,
                               std::size_t max_dim = kDefaultMaxDim);

}  // namespace schurpriv
