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


#include "schurpriv/channels.hpp"

#include <cmath>
#include <string>

#include "schurpriv/errors.hpp"

namespace schurpriv {
namespace {

// Above this many complex entries the unit is not solved for; callers fall
// back to the element of largest trace or pass the unit explicitly.
constexpr std::size_t kUnitSolveMaxEntries = std::size_t{1} << 22;

void require_dim(const SchurChannel& ch, const CMat& x, const char* op) {
  if (x.rows() != ch.dim() || x.cols() != ch.dim()) {
    throw DimensionError(std::string(op) + ": expected " + std::to_string(ch.dim()) + "x" +
                         std::to_string(ch.dim()) + " operand");
  }
}

bool identity_in_span(std::span<const CMat> onb, std::size_t n) {
  return distance_to_span(onb, CMat::identity(n)) <= 1e-9 * std::sqrt(static_cast<double>(n));
}

// Element u of span(onb) with u·q = q·u = q for every q, when one exists.
std::optional<CMat> solve_unit(std::span<const CMat> onb) {
  const std::size_t d = onb.size();
  const std::size_t n = onb.front().rows();
  const std::size_t rows = 2 * d * n * n;
  if (rows * d > kUnitSolveMaxEntries) return std::nullopt;
  const auto nn = static_cast<Eigen::Index>(n * n);
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(d));
  Eigen::VectorXcd b(static_cast<Eigen::Index>(rows));
  for (std::size_t j = 0; j < d; ++j) {
    const auto& qj = onb[j].eigen();
    const Eigen::Index left = static_cast<Eigen::Index>(2 * j) * nn;
    const Eigen::Index right = left + nn;
    b.segment(left, nn) = qj.reshaped();
    b.segment(right, nn) = qj.reshaped();
    for (std::size_t k = 0; k < d; ++k) {
      const auto& qk = onb[k].eigen();
      a.col(static_cast<Eigen::Index>(k)).segment(left, nn) = (qk * qj).reshaped();
      a.col(static_cast<Eigen::Index>(k)).segment(right, nn) = (qj * qk).reshaped();
    }
  }
  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
  if ((a * x - b).norm() > 1e-9 * (1.0 + b.norm())) return std::nullopt;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < d; ++k) u += x(static_cast<Eigen::Index>(k)) * onb[k].eigen();
  return CMat(std::move(u));
}

CMat choose_unit(std::span<const CMat> basis, double tol) {
  const auto onb = orthonormalize(basis);
  if (onb.empty()) throw DegenerateUnitError("private_check: basis spans the zero space");
  const std::size_t n = basis.front().rows();
  if (identity_in_span(onb, n)) return CMat::identity(n);
  if (auto u = solve_unit(onb); u && std::abs(u->trace()) > tol) return *u;
  std::size_t best = 0;
  for (std::size_t k = 1; k < basis.size(); ++k) {
    if (std::abs(basis[k].trace()) > std::abs(basis[best].trace())) best = k;
  }
  if (std::abs(basis[best].trace()) <= tol) {
    throw DegenerateUnitError("private_check: every basis element is traceless; no unit to fix rho0");
  }
  return basis[best];
}

}  // namespace

CMat SchurChannel::apply(const CMat& rho) const {
  require_dim(*this, rho, "apply");
  return schur(corr_.mat(), rho);
}

CMat SchurChannel::adjoint_apply(const CMat& x) const {
  require_dim(*this, x, "adjoint_apply");
  return schur(corr_.mat().conj(), x);
}

SchurChannel SchurChannel::tensor_power(std::size_t power, std::size_t max_dim) const {
  return SchurChannel(schurpriv::tensor_power(corr_, power, max_dim));
}

bool structurally_private_to_unit(const SchurChannel& ch, std::span<const CMat> basis,
                                  double tol) {
  const auto& c = ch.corr();
  for (const auto& b : basis) {
    require_dim(ch, b, "structurally_private_to_unit");
    for (std::size_t i = 0; i < ch.dim(); ++i) {
      if (std::abs(b(i, i) - b(0, 0)) > tol) return false;
      for (std::size_t j = 0; j < ch.dim(); ++j) {
        if (i != j && std::abs(b(i, j) * c(i, j)) > tol) return false;
      }
    }
  }
  return true;
}

PrivacyVerdict private_check(const SchurChannel& ch, std::span<const CMat> basis,
                             const PrivateCheckOptions& opts) {
  if (basis.empty()) throw ArgumentError("private_check: empty basis");
  for (const auto& b : basis) require_dim(ch, b, "private_check");
  const std::size_t n = ch.dim();

  PrivacyVerdict verdict;
  CMat rho0 = CMat::identity(n);
  if (opts.mode == PrivacyMode::kUnit) {
    if (!identity_in_span(orthonormalize(basis), n)) {
      throw ArgumentError("private_check: unit mode requires the identity in the span");
    }
    rho0 = Complex(1.0 / static_cast<double>(n)) * rho0;
    verdict.structural_private = structurally_private_to_unit(ch, basis, opts.tol);
  } else {
    if (opts.unit) require_dim(ch, *opts.unit, "private_check");
    const CMat u = opts.unit ? *opts.unit : choose_unit(basis, opts.tol);
    const Complex tr = u.trace();
    if (std::abs(tr) <= opts.tol) {
      throw DegenerateUnitError("private_check: unit has zero trace");
    }
    rho0 = (1.0 / tr) * ch.apply(u);
  }

  for (std::size_t k = 0; k < basis.size(); ++k) {
    const CMat image = ch.apply(basis[k]);
    const double residual = image.max_abs_diff(basis[k].trace() * rho0);
    verdict.max_residual = std::max(verdict.max_residual, residual);
    if (residual > opts.tol && !verdict.failure_witness) {
      verdict.failure_witness = FailureWitness{k, basis[k], image, residual};
    }
  }
  const bool density = is_psd(rho0, opts.tol) && std::abs(rho0.trace() - 1.0) <= opts.tol;
  verdict.is_private = !verdict.failure_witness && density;
  verdict.rho0 = std::move(rho0);
  return verdict;
}

std::vector<CMat> range_opsystem(const SchurChannel& ch, double zero_tol) {
  const std::size_t n = ch.dim();
  std::vector<CMat> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(CMat::unit(n, i, i));
  for (const auto& [i, j] : graph_of(ch.corr(), zero_tol).edges()) {
    out.push_back(CMat::unit(n, i, j));
    out.push_back(CMat::unit(n, j, i));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> unitary_pattern(const SchurChannel& ch,
                                                                 double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& c = ch.corr();
  for (std::size_t i = 0; i < ch.dim(); ++i) {
    for (std::size_t j = 0; j < ch.dim(); ++j) {
      if (std::abs(std::norm(c(i, j)) - 1.0) <= tol) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace schurpriv
