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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace schurpriv {

using Complex = std::complex<double>;

// Default tolerances shared across the library.
inline constexpr double kDefaultTol = 1e-10;      // Hermiticity / PSD
inline constexpr double kDefaultZeroTol = 1e-12;  // zero-pattern decisions
inline constexpr std::size_t kDefaultMaxDim = 4096;

// Dense complex matrix. Always at least 1x1 with finite entries. Values are
// immutable once built; arithmetic returns new matrices.
class CMat {
 public:
  CMat(std::size_t rows, std::size_t cols);  // zero matrix
  explicit CMat(Eigen::MatrixXcd m);
  CMat(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMat zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMat identity(std::size_t n);
  static CMat ones(std::size_t rows, std::size_t cols);
  // Matrix unit E_ij in M_n (0-based).
  static CMat unit(std::size_t n, std::size_t i, std::size_t j);
  static CMat diagonal(std::span<const Complex> d);

  std::size_t rows() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(m_.cols()); }
  bool square() const noexcept { return m_.rows() == m_.cols(); }

  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXcd& eigen() const noexcept { return m_; }

  CMat adjoint() const { return CMat(m_.adjoint().eval()); }
  CMat conj() const { return CMat(m_.conjugate().eval()); }
  CMat transpose() const { return CMat(m_.transpose().eval()); }
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const { return m_.norm(); }

  // Entrywise equality within an absolute tolerance.
  bool approx_equal(const CMat& other, double tol) const;
  // max |a_ij - b_ij|; shapes must match.
  double max_abs_diff(const CMat& other) const;

  friend CMat operator+(const CMat& a, const CMat& b);
  friend CMat operator-(const CMat& a, const CMat& b);
  friend CMat operator*(const CMat& a, const CMat& b);
  friend CMat operator*(Complex s, const CMat& a);
  friend CMat operator*(const CMat& a, Complex s) { return s * a; }

 private:
  Eigen::MatrixXcd m_;
};

// Entrywise (Hadamard) product.
CMat schur(const CMat& a, const CMat& b);

// Kronecker product; row index of a⊗b is rows_b * i + k (row-major lexicographic).
CMat kron(const CMat& a, const CMat& b, std::size_t max_dim = kDefaultMaxDim);

// Hilbert-Schmidt inner product Tr(a^† b).
Complex trace_inner(const CMat& a, const CMat& b);

bool is_hermitian(const CMat& a, double tol = kDefaultTol);

// Hermitian within tol·(1+max|a_ij|) and λ_min ≥ −tol·(1+‖a‖₂).
bool is_psd(const CMat& a, double tol = kDefaultTol);

// Entries a[idx_s, idx_t]; idx strictly increasing and in range.
CMat principal_submatrix(const CMat& a, std::span<const std::size_t> idx);

// Bijection on {0..n-1}; maps a new position to the old index it reads.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator[](std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

// result_ij = a[perm(i), perm(j)].
CMat permute_sym(const CMat& a, const Permutation& perm);

// Orthonormal basis (under trace_inner) of span(mats), modified Gram-Schmidt
// with one re-orthogonalisation pass. A candidate is dropped when its residual
// norm is ≤ rel_tol times the largest input norm.
std::vector<CMat> orthonormalize(std::span<const CMat> mats, double rel_tol = 1e-9);

// Distance (Frobenius) from x to span(onb), given an orthonormal basis.
double distance_to_span(std::span<const CMat> onb, const CMat& x);

// Numerical rank: singular values above max(rel_tol·σ_max, abs_tol).
std::size_t numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-9,
                           double abs_tol = 0.0);

}  // namespace schurpriv
