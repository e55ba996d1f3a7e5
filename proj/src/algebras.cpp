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


#include "schurpriv/algebras.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "schurpriv/errors.hpp"

namespace schurpriv {
namespace {

// Columns are the column-major vectorisations of the matrices.
Eigen::MatrixXcd stack(std::span<const CMat> mats) {
  const auto nn = static_cast<Eigen::Index>(mats.front().rows() * mats.front().cols());
  Eigen::MatrixXcd out(nn, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = mats[k].eigen().reshaped();
  }
  return out;
}

void require_common_square(std::span<const CMat> mats, const char* op) {
  if (mats.empty()) throw ArgumentError(std::string(op) + ": empty list");
  const std::size_t n = mats.front().rows();
  for (const auto& m : mats) {
    if (!m.square() || m.rows() != n) {
      throw DimensionError(std::string(op) + ": matrices must be square of one size");
    }
  }
}

bool identity_in(std::span<const CMat> onb, std::size_t n) {
  return distance_to_span(onb, CMat::identity(n)) <= kAlgebraTol * std::sqrt(static_cast<double>(n));
}

}  // namespace

MatrixAlgebra::MatrixAlgebra(std::size_t n, std::vector<CMat> onb)
    : n_(n), basis_(std::move(onb)), unital_(identity_in(basis_, n)) {}

MatrixAlgebra MatrixAlgebra::from_basis(std::span<const CMat> spanning, bool verify_closure) {
  require_common_square(spanning, "MatrixAlgebra::from_basis");
  auto onb = orthonormalize(spanning, kAlgebraTol);
  if (onb.empty()) throw ArgumentError("MatrixAlgebra::from_basis: span is {0}");
  if (verify_closure) {
    const double defect = closure_defect(onb);
    if (defect > kAlgebraTol) {
      throw ArgumentError("MatrixAlgebra::from_basis: span is not a *-algebra (closure defect " +
                          std::to_string(defect) + ")");
    }
  }
  const std::size_t n = spanning.front().rows();
  return MatrixAlgebra(n, std::move(onb));
}

bool MatrixAlgebra::contains(const CMat& x, double tol) const {
  if (x.rows() != n_ || x.cols() != n_) throw DimensionError("MatrixAlgebra::contains");
  return distance_to_span(basis_, x) <= tol * std::max(1.0, x.frobenius_norm());
}

bool MatrixAlgebra::same_span(const MatrixAlgebra& other, double tol) const {
  if (other.n_ != n_ || other.dimension() != dimension()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const CMat& q) { return contains(q, tol); });
}

double closure_defect(std::span<const CMat> onb) {
  if (onb.empty()) return 0.0;
  const Eigen::MatrixXcd b = stack(onb);
  const Eigen::MatrixXcd bh = b.adjoint();
  const auto d = static_cast<Eigen::Index>(onb.size());
  const auto nn = b.rows();
  double defect = 0.0;
  Eigen::MatrixXcd adjoints(nn, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    adjoints.col(k) = onb[static_cast<std::size_t>(k)].eigen().adjoint().reshaped();
  }
  defect = (adjoints - b * (bh * adjoints)).colwise().norm().maxCoeff();
  Eigen::MatrixXcd prods(nn, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const auto& qk = onb[static_cast<std::size_t>(k)].eigen();
    for (Eigen::Index j = 0; j < d; ++j) {
      prods.col(j) = (qk * onb[static_cast<std::size_t>(j)].eigen()).reshaped();
    }
    defect = std::max(defect, (prods - b * (bh * prods)).colwise().norm().maxCoeff());
  }
  return defect;
}

MatrixAlgebra generate(std::span<const CMat> gens, bool adjoin_identity) {
  require_common_square(gens, "generate");
  const std::size_t n = gens.front().rows();
  std::vector<CMat> pool(gens.begin(), gens.end());
  for (const auto& g : gens) pool.push_back(g.adjoint());
  if (adjoin_identity) pool.push_back(CMat::identity(n));
  std::vector<CMat> onb = orthonormalize(pool, kAlgebraTol);
  if (onb.empty()) throw ArgumentError("generate: generators span {0}");

  auto try_add = [&](const Eigen::MatrixXcd& cand) {
    Eigen::MatrixXcd r = cand;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : onb) r -= (q.eigen().conjugate().cwiseProduct(r)).sum() * q.eigen();
    }
    const double norm = r.norm();
    if (norm > kAlgebraTol * std::max(1.0, cand.norm())) {
      onb.emplace_back(Eigen::MatrixXcd(r / norm));
      if (onb.size() > n * n) throw InternalError("generate: closure exceeded dimension n^2");
    }
  };

  // Element idx is multiplied against every element up to and including
  // itself; later arrivals pick up the remaining pairs when their turn comes.
  for (std::size_t idx = 0; idx < onb.size(); ++idx) {
    const Eigen::MatrixXcd e = onb[idx].eigen();
    try_add(e.adjoint());
    for (std::size_t j = 0; j <= idx; ++j) {
      const Eigen::MatrixXcd q = onb[j].eigen();
      try_add(e * q);
      try_add(q * e);
    }
  }
  return MatrixAlgebra(n, std::move(onb));
}

MatrixAlgebra diagonal_algebra(std::size_t n) {
  std::vector<CMat> onb;
  for (std::size_t i = 0; i < n; ++i) onb.push_back(CMat::unit(n, i, i));
  return MatrixAlgebra(n, std::move(onb));
}

MatrixAlgebra full_algebra(std::size_t n) {
  std::vector<CMat> onb;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) onb.push_back(CMat::unit(n, i, j));
  }
  return MatrixAlgebra(n, std::move(onb));
}

MatrixAlgebra scalar_algebra(std::size_t n) {
  std::vector<CMat> onb{Complex(1.0 / std::sqrt(static_cast<double>(n))) * CMat::identity(n)};
  return MatrixAlgebra(n, std::move(onb));
}

double quasiorthogonality_defect(std::span<const CMat> a, std::span<const CMat> b) {
  require_common_square(a, "quasiorthogonal");
  require_common_square(b, "quasiorthogonal");
  if (a.front().rows() != b.front().rows()) {
    throw DimensionError("quasiorthogonal: ambient dimensions differ");
  }
  const auto n = static_cast<double>(a.front().rows());
  // Tr(s x) = vec(s)ᵀ vec(xᵀ).
  const Eigen::MatrixXcd sa = stack(a);
  Eigen::MatrixXcd xt(sa.rows(), static_cast<Eigen::Index>(b.size()));
  Eigen::VectorXcd tr_b(static_cast<Eigen::Index>(b.size()));
  for (std::size_t k = 0; k < b.size(); ++k) {
    xt.col(static_cast<Eigen::Index>(k)) = b[k].eigen().transpose().reshaped();
    tr_b(static_cast<Eigen::Index>(k)) = b[k].trace();
  }
  Eigen::VectorXcd tr_a(static_cast<Eigen::Index>(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k) tr_a(static_cast<Eigen::Index>(k)) = a[k].trace();
  const Eigen::MatrixXcd lhs = n * (sa.transpose() * xt);
  const Eigen::MatrixXcd rhs = tr_a * tr_b.transpose();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

bool quasiorthogonal(std::span<const CMat> a, std::span<const CMat> b, double tol) {
  const auto oa = orthonormalize(a, kAlgebraTol);
  const auto ob = orthonormalize(b, kAlgebraTol);
  if (oa.empty() || ob.empty()) return true;
  return quasiorthogonality_defect(oa, ob) <= tol * static_cast<double>(a.front().rows());
}

bool quasiorthogonal(const MatrixAlgebra& a, const MatrixAlgebra& b, double tol) {
  if (a.dim_space() != b.dim_space()) {
    throw DimensionError("quasiorthogonal: ambient dimensions differ");
  }
  return quasiorthogonality_defect(a.basis(), b.basis()) <=
         tol * static_cast<double>(a.dim_space());
}

std::optional<Eigen::VectorXcd> find_separating_vector(std::span<const CMat> span,
                                                       unsigned trials, std::uint64_t seed) {
  require_common_square(span, "find_separating_vector");
  const auto onb = orthonormalize(span, kAlgebraTol);
  const auto n = static_cast<Eigen::Index>(span.front().rows());
  const auto d = static_cast<Eigen::Index>(onb.size());
  if (d == 0) return Eigen::VectorXcd::Ones(n);
  if (d > n) return std::nullopt;  // x ↦ x v cannot be injective
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (unsigned t = 0; t < trials; ++t) {
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    Eigen::MatrixXcd images(n, d);
    for (Eigen::Index k = 0; k < d; ++k) {
      images.col(k) = onb[static_cast<std::size_t>(k)].eigen() * v;
    }
    if (numerical_rank(images, kAlgebraTol) == static_cast<std::size_t>(d)) return v;
  }
  return std::nullopt;
}

bool has_separating_vector(const MatrixAlgebra& a, unsigned trials, std::uint64_t seed) {
  return find_separating_vector(a.basis(), trials, seed).has_value();
}

bool constant_diagonal(std::span<const CMat> span, double tol) {
  for (const auto& b : span) {
    if (!b.square()) throw DimensionError("constant_diagonal: non-square matrix");
    for (std::size_t i = 1; i < b.rows(); ++i) {
      if (std::abs(b(i, i) - b(0, 0)) > tol) return false;
    }
  }
  return true;
}

bool constant_diagonal(const MatrixAlgebra& a, double tol) {
  return constant_diagonal(a.basis(), tol);
}

MatrixAlgebra opsystem_algebra(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw ArgumentError("opsystem_algebra: empty graph");
  std::vector<CMat> onb;
  for (const auto& comp : connected_components(g)) {
    for (auto i : comp) {
      for (auto j : comp) onb.push_back(CMat::unit(n, i, j));
    }
  }
  return MatrixAlgebra(n, std::move(onb));
}

std::size_t center_dimension(const MatrixAlgebra& a) {
  if (!a.unital()) throw ArgumentError("center_dimension: algebra is not unital");
  const auto& basis = a.basis();
  const auto d = static_cast<Eigen::Index>(basis.size());
  const Eigen::MatrixXcd b = stack(basis);
  const Eigen::MatrixXcd bh = b.adjoint();
  // Column k holds the coordinates of [a_k, a_j] for every j, stacked.
  Eigen::MatrixXcd structure(d * d, d);
  Eigen::MatrixXcd comms(b.rows(), d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const auto& ak = basis[static_cast<std::size_t>(k)].eigen();
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto& aj = basis[static_cast<std::size_t>(j)].eigen();
      comms.col(j) = (ak * aj - aj * ak).reshaped();
    }
    structure.col(k) = (bh * comms).reshaped();
  }
  const std::size_t rank = numerical_rank(structure, kAlgebraTol, kAlgebraTol);
  return static_cast<std::size_t>(d) - rank;
}

}  // namespace schurpriv
