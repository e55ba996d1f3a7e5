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


#include "schurpriv/correlation.hpp"

#include <cmath>
#include <string>

#include "schurpriv/errors.hpp"

namespace schurpriv {

const char* to_string(ValidationError::Violation v) noexcept {
  switch (v) {
    case ValidationError::Violation::kNotHermitian:
      return "not Hermitian";
    case ValidationError::Violation::kDiagonalNotOne:
      return "diagonal entry not 1";
    case ValidationError::Violation::kNotPsd:
      return "not PSD";
  }
  return "unknown";
}

CorrelationMatrix CorrelationMatrix::validate(const CMat& m, double tol) {
  using V = ValidationError::Violation;
  if (!m.square()) throw DimensionError("correlation matrix must be square");
  if (tol < 0.0) throw ArgumentError("tolerance must be non-negative");
  const std::size_t n = m.rows();
  const double scale = 1.0 + m.max_abs();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol * scale) {
        throw ValidationError(V::kNotHermitian, i, j,
                              "not Hermitian at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(m(k, k) - 1.0) > tol) {
      throw ValidationError(V::kDiagonalNotOne, k, k,
                            "diagonal entry " + std::to_string(k + 1) + " is not 1");
    }
  }
  if (!is_psd(m, tol)) throw ValidationError(V::kNotPsd, 0, 0, "not PSD");
  // Implied by PSD with unit diagonal (2x2 minors); kept as an explicit check.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(m(i, j)) > 1.0 + tol * scale) {
        throw ValidationError(V::kNotPsd, i, j, "not PSD: |C_ij| exceeds 1");
      }
    }
  }
  return CorrelationMatrix(m, tol);
}

CorrelationMatrix from_diagonal_kraus(const std::vector<std::vector<Complex>>& diagonals,
                                      double tol) {
  if (diagonals.empty()) throw ArgumentError("from_diagonal_kraus: no Kraus diagonals");
  const std::size_t n = diagonals.front().size();
  if (n == 0) throw DimensionError("from_diagonal_kraus: empty diagonal");
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(diagonals.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    if (diagonals[i].size() != n) {
      throw DimensionError("from_diagonal_kraus: diagonals of unequal length");
    }
    for (std::size_t k = 0; k < n; ++k) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = diagonals[i][k];
    }
  }
  // C = Aᵀ · conj(A), i.e. C_kl = Σ_i A_ik conj(A_il).
  Eigen::MatrixXcd c = a.transpose() * a.conjugate();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex ckk = c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    if (std::abs(ckk - 1.0) > tol) {
      throw NormalizationError(k, "Kraus family not trace preserving: C_kk = " +
                                      std::to_string(ckk.real()) + " at k=" +
                                      std::to_string(k + 1));
    }
    // Within tol of 1; pin it so the channel is exactly unital.
    c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
  }
  return CorrelationMatrix::validate(CMat(std::move(c)), tol);
}

Graph graph_of(const CorrelationMatrix& c, double zero_tol) {
  const std::size_t n = c.size();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(c(i, j)) > zero_tol) g.add_edge(i, j);
    }
  }
  return g;
}

Graph unitary_graph_of(const CorrelationMatrix& c, double tol) {
  const std::size_t n = c.size();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(std::norm(c(i, j)) - 1.0) <= tol) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> fragile_unitary_entries(
    const CorrelationMatrix& c, double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dev = std::abs(std::norm(c(i, j)) - 1.0);
      if (dev > tol / 100.0 && dev <= 100.0 * tol) out.emplace_back(i, j);
    }
  }
  return out;
}

BlockPermutation block_permutation(const CorrelationMatrix& c, double zero_tol) {
  std::vector<std::size_t> order;
  std::vector<std::size_t> sizes;
  order.reserve(c.size());
  for (const auto& comp : connected_components(graph_of(c, zero_tol))) {
    order.insert(order.end(), comp.begin(), comp.end());
    sizes.push_back(comp.size());
  }
  return {Permutation(std::move(order)), std::move(sizes)};
}

CorrelationMatrix tensor_power(const CorrelationMatrix& c, std::size_t power,
                               std::size_t max_dim) {
  if (power == 0) throw ArgumentError("tensor_power: power must be >= 1");
  // Check the final size before building anything.
  std::size_t dim = c.size();
  for (std::size_t p = 1; p < power; ++p) {
    if (dim > max_dim / c.size()) {
      throw CapacityError("tensor_power: C^{⊗" + std::to_string(power) +
                          "} exceeds dimension cap " + std::to_string(max_dim));
    }
    dim *= c.size();
  }
  CMat acc = c.mat();
  for (std::size_t p = 1; p < power; ++p) acc = kron(acc, c.mat(), max_dim);
  for (std::size_t k = 0; k < acc.rows(); ++k) {
    if (std::abs(acc(k, k) - 1.0) > c.tol()) {
      throw InternalError("tensor_power: diagonal drifted from 1");
    }
  }
  return CorrelationMatrix(std::move(acc), c.tol());
}

}  // namespace schurpriv
