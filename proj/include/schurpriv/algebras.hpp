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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schurpriv/cmatrix.hpp"
#include "schurpriv/graphs.hpp"

namespace schurpriv {

// Rank cut used for closure and span decisions. Closure squares entries, so it
// sits well above the kernel tolerance.
inline constexpr double kAlgebraTol = 1e-9;

// *-closed, multiplicatively closed subspace of M_n with a basis that is
// orthonormal under Tr(a^† b).
class MatrixAlgebra {
 public:
  // Orthonormalises `spanning` and, when asked, verifies *- and product
  // closure (ArgumentError if the span is not an algebra).
  static MatrixAlgebra from_basis(std::span<const CMat> spanning, bool verify_closure = true);

  std::size_t dim_space() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<CMat>& basis() const noexcept { return basis_; }
  bool unital() const noexcept { return unital_; }

  bool contains(const CMat& x, double tol = kAlgebraTol) const;
  // Same subspace (mutual containment).
  bool same_span(const MatrixAlgebra& other, double tol = kAlgebraTol) const;

 private:
  MatrixAlgebra(std::size_t n, std::vector<CMat> onb);

  friend MatrixAlgebra generate(std::span<const CMat>, bool);
  friend MatrixAlgebra diagonal_algebra(std::size_t);
  friend MatrixAlgebra full_algebra(std::size_t);
  friend MatrixAlgebra scalar_algebra(std::size_t);
  friend MatrixAlgebra opsystem_algebra(const Graph&);

  std::size_t n_;
  std::vector<CMat> basis_;
  bool unital_;
};

// Smallest *-algebra containing gens (and I when adjoin_identity).
MatrixAlgebra generate(std::span<const CMat> gens, bool adjoin_identity);

// Largest residual of the closure conditions over an orthonormal basis:
// distance of every q^† and q_k q_j from the span.
double closure_defect(std::span<const CMat> onb);

MatrixAlgebra diagonal_algebra(std::size_t n);
MatrixAlgebra full_algebra(std::size_t n);
MatrixAlgebra scalar_algebra(std::size_t n);

// n·Tr(s a) = Tr(s)·Tr(a) for all s, a. The span overload accepts any
// spanning lists (the test is bilinear, so it reduces to orthonormal bases).
bool quasiorthogonal(const MatrixAlgebra& a, const MatrixAlgebra& b, double tol = kAlgebraTol);
bool quasiorthogonal(std::span<const CMat> a, std::span<const CMat> b, double tol = kAlgebraTol);
// Largest |n·Tr(s a) − Tr(s)·Tr(a)| over orthonormal bases.
double quasiorthogonality_defect(std::span<const CMat> a, std::span<const CMat> b);

// Randomised search for v with {x : x v = 0} = {0}: draws complex Gaussian
// vectors from `seed` and accepts the first whose images {b_i v} have full
// rank. A hit is a certificate; a miss after `trials` draws is probabilistic.
std::optional<Eigen::VectorXcd> find_separating_vector(std::span<const CMat> span,
                                                       unsigned trials = 5,
                                                       std::uint64_t seed = 0);
bool has_separating_vector(const MatrixAlgebra& a, unsigned trials = 5, std::uint64_t seed = 0);

bool constant_diagonal(std::span<const CMat> span, double tol = kAlgebraTol);
bool constant_diagonal(const MatrixAlgebra& a, double tol = kAlgebraTol);

// S_{g*}: span of E_ij with i, j in the same connected component of g.
MatrixAlgebra opsystem_algebra(const Graph& g);

// dim {x ∈ a : x b = b x for all b ∈ a}. Requires a unital algebra.
std::size_t center_dimension(const MatrixAlgebra& a);

}  // namespace schurpriv
