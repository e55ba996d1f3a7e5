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


#include "schurpriv/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schurpriv/errors.hpp"

namespace schurpriv {
namespace {

void require_same_shape(const CMat& a, const CMat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_square(const CMat& a, const char* op) {
  if (!a.square()) {
    throw DimensionError(std::string(op) + ": matrix is not square");
  }
}

}  // namespace

CMat::CMat(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw DimensionError("CMat: empty shape");
  m_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                              static_cast<Eigen::Index>(cols));
}

CMat::CMat(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw DimensionError("CMat: empty shape");
  if (!m_.allFinite()) throw ArgumentError("CMat: non-finite entry");
}

CMat::CMat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto r = rows.size();
  const auto c = r ? rows.begin()->size() : 0;
  if (r == 0 || c == 0) throw DimensionError("CMat: empty shape");
  m_.resize(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("CMat: ragged initializer");
    Eigen::Index j = 0;
    for (const auto& v : row) m_(i, j++) = v;
    ++i;
  }
  if (!m_.allFinite()) throw ArgumentError("CMat: non-finite entry");
}

CMat CMat::identity(std::size_t n) {
  if (n == 0) throw DimensionError("CMat: empty shape");
  return CMat(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n),
                                         static_cast<Eigen::Index>(n)));
}

CMat CMat::ones(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw DimensionError("CMat: empty shape");
  return CMat(Eigen::MatrixXcd::Ones(static_cast<Eigen::Index>(rows),
                                     static_cast<Eigen::Index>(cols)));
}

CMat CMat::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw ArgumentError("CMat::unit: index out of range");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return CMat(std::move(m));
}

CMat CMat::diagonal(std::span<const Complex> d) {
  if (d.empty()) throw DimensionError("CMat: empty shape");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d.size()),
                                              static_cast<Eigen::Index>(d.size()));
  for (std::size_t k = 0; k < d.size(); ++k) {
    m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = d[k];
  }
  return CMat(std::move(m));
}

Complex CMat::trace() const {
  require_square(*this, "trace");
  return m_.trace();
}

double CMat::max_abs() const { return m_.cwiseAbs().maxCoeff(); }

bool CMat::approx_equal(const CMat& other, double tol) const {
  if (rows() != other.rows() || cols() != other.cols()) return false;
  return max_abs_diff(other) <= tol;
}

double CMat::max_abs_diff(const CMat& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

CMat operator+(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "operator+");
  return CMat((a.m_ + b.m_).eval());
}

CMat operator-(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "operator-");
  return CMat((a.m_ - b.m_).eval());
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) throw DimensionError("operator*: inner dimension mismatch");
  return CMat((a.m_ * b.m_).eval());
}

CMat operator*(Complex s, const CMat& a) { return CMat((s * a.m_).eval()); }

CMat schur(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "schur");
  return CMat(a.eigen().cwiseProduct(b.eigen()).eval());
}

CMat kron(const CMat& a, const CMat& b, std::size_t max_dim) {
  const std::size_t r = a.rows() * b.rows();
  const std::size_t c = a.cols() * b.cols();
  if (r > max_dim || c > max_dim) {
    throw CapacityError("kron: result " + std::to_string(r) + "x" + std::to_string(c) +
                        " exceeds cap " + std::to_string(max_dim));
  }
  const auto& x = a.eigen();
  const auto& y = b.eigen();
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return CMat(std::move(out));
}

Complex trace_inner(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "trace_inner");
  require_square(a, "trace_inner");
  // Tr(a^† b) = Σ conj(a_ij) b_ij
  return (a.eigen().conjugate().cwiseProduct(b.eigen())).sum();
}

bool is_hermitian(const CMat& a, double tol) {
  require_square(a, "is_hermitian");
  const double scale = 1.0 + a.max_abs();
  return (a.eigen() - a.eigen().adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool is_psd(const CMat& a, double tol) {
  require_square(a, "is_psd");
  if (!is_hermitian(a, tol)) return false;
  const Eigen::MatrixXcd h = 0.5 * (a.eigen() + a.eigen().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return false;
  const auto& ev = es.eigenvalues();
  const double norm = ev.cwiseAbs().maxCoeff();
  return ev.minCoeff() >= -tol * (1.0 + norm);
}

CMat principal_submatrix(const CMat& a, std::span<const std::size_t> idx) {
  require_square(a, "principal_submatrix");
  if (idx.empty()) throw ArgumentError("principal_submatrix: empty index list");
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (idx[s] >= a.rows()) throw ArgumentError("principal_submatrix: index out of range");
    if (s > 0 && idx[s] <= idx[s - 1]) {
      throw ArgumentError("principal_submatrix: indices must be strictly increasing");
    }
  }
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXcd out(k, k);
  for (Eigen::Index s = 0; s < k; ++s) {
    for (Eigen::Index t = 0; t < k; ++t) {
      out(s, t) = a(idx[static_cast<std::size_t>(s)], idx[static_cast<std::size_t>(t)]);
    }
  }
  return CMat(std::move(out));
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw ArgumentError("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

CMat permute_sym(const CMat& a, const Permutation& perm) {
  require_square(a, "permute_sym");
  if (perm.size() != a.rows()) throw ArgumentError("permute_sym: permutation size mismatch");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
  }
  return CMat(std::move(out));
}

std::vector<CMat> orthonormalize(std::span<const CMat> mats, double rel_tol) {
  std::vector<CMat> onb;
  if (mats.empty()) return onb;
  double scale = 0.0;
  for (const auto& m : mats) {
    if (m.rows() != mats.front().rows() || m.cols() != mats.front().cols()) {
      throw DimensionError("orthonormalize: mixed shapes");
    }
    scale = std::max(scale, m.frobenius_norm());
  }
  if (scale == 0.0) return onb;
  std::vector<Eigen::MatrixXcd> kept;
  for (const auto& m : mats) {
    Eigen::MatrixXcd r = m.eigen();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : kept) {
        const Complex c = (q.conjugate().cwiseProduct(r)).sum();
        r -= c * q;
      }
    }
    const double norm = r.norm();
    if (norm > rel_tol * scale) kept.push_back(r / norm);
  }
  onb.reserve(kept.size());
  for (auto& q : kept) onb.emplace_back(std::move(q));
  return onb;
}

double distance_to_span(std::span<const CMat> onb, const CMat& x) {
  Eigen::MatrixXcd r = x.eigen();
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : onb) {
      if (q.rows() != x.rows() || q.cols() != x.cols()) {
        throw DimensionError("distance_to_span: shape mismatch");
      }
      const Complex c = (q.eigen().conjugate().cwiseProduct(r)).sum();
      r -= c * q.eigen();
    }
  }
  return r.norm();
}

std::size_t numerical_rank(const Eigen::MatrixXcd& m, double rel_tol, double abs_tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = std::max(rel_tol * sv(0), abs_tol);
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cut) ++rank;
  }
  return rank;
}

}  // namespace schurpriv
