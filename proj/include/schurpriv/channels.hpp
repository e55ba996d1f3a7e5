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
#include <utility>
#include <vector>

#include "schurpriv/cmatrix.hpp"
#include "schurpriv/correlation.hpp"

namespace schurpriv {

inline constexpr double kVerdictTol = 1e-9;

// ρ ↦ C ∘ ρ. Unital and trace preserving because C has unit diagonal.
class SchurChannel {
 public:
  explicit SchurChannel(CorrelationMatrix corr) : corr_(std::move(corr)) {}

  const CorrelationMatrix& corr() const noexcept { return corr_; }
  std::size_t dim() const noexcept { return corr_.size(); }

  CMat apply(const CMat& rho) const;
  // Φ†(X) = conj(C) ∘ X.
  CMat adjoint_apply(const CMat& x) const;

  // Φ^{⊗N}, itself the Schur channel of C^{⊗N}.
  SchurChannel tensor_power(std::size_t power, std::size_t max_dim = kDefaultMaxDim) const;

 private:
  CorrelationMatrix corr_;
};

enum class PrivacyMode {
  kGeneral,  // ρ₀ = Φ(u)/Tr(u) for the span's unit u
  kUnit,     // ρ₀ = I/n; identity must lie in the span
};

struct PrivateCheckOptions {
  PrivacyMode mode = PrivacyMode::kGeneral;
  double tol = kVerdictTol;
  double zero_tol = kDefaultZeroTol;
  // Overrides the unit used to fix ρ₀ in general mode.
  std::optional<CMat> unit;
};

struct FailureWitness {
  std::size_t index;  // position in the basis handed in
  CMat element;
  CMat image;
  double residual;
};

struct PrivacyVerdict {
  bool is_private = false;
  std::optional<CMat> rho0;
  std::optional<FailureWitness> failure_witness;
  double max_residual = 0.0;
  // Unit mode only: every element has constant diagonal and b_ij·C_ij = 0.
  std::optional<bool> structural_private;
};

// Decides whether Φ maps every density in span(basis) to one fixed state.
// Linearity reduces this to Φ(b) = Tr(b)·ρ₀ on each basis element.
PrivacyVerdict private_check(const SchurChannel& ch, std::span<const CMat> basis,
                             const PrivateCheckOptions& opts = {});

// The zero-pattern test on its own: constant diagonal and b_ij·C_ij = 0 (i≠j).
bool structurally_private_to_unit(const SchurChannel& ch, std::span<const CMat> basis,
                                  double tol = kVerdictTol);

// Basis of range(Φ†) = S_{G_C}: diagonal units plus E_ij on edges of G_C
// (both orientations).
std::vector<CMat> range_opsystem(const SchurChannel& ch, double zero_tol = kDefaultZeroTol);

// All (i, j), diagonal included, with | |C_ij|² − 1 | ≤ tol. Matrices supported
// here are fixed by Φ∘Φ†.
std::vector<std::pair<std::size_t, std::size_t>> unitary_pattern(const SchurChannel& ch,
                                                                 double tol = kDefaultTol);

}  // namespace schurpriv
