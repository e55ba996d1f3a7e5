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


#include "schurpriv/codegen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schurpriv/errors.hpp"

namespace schurpriv {
namespace {

const Complex kI(0.0, 1.0);

std::vector<CMat> pair_basis() {
  const CMat id = CMat::identity(2);
  const CMat x{{0.0, 1.0}, {1.0, 0.0}};
  const CMat y{{0.0, -kI}, {kI, 0.0}};
  const CMat z{{1.0, 0.0}, {0.0, -1.0}};
  return {kron(id, id), kron(id, x), kron(y, y), kron(y, z)};
}

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap, const char* what) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base != 0 && out > cap / base) {
      throw CapacityError(std::string(what) + ": " + std::to_string(base) + "^" +
                          std::to_string(exp) + " exceeds cap " + std::to_string(cap));
    }
    out *= base;
  }
  return out;
}

CMat embed(const CMat& local, std::span<const std::size_t> where, std::size_t n) {
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
  for (std::size_t s = 0; s < where.size(); ++s) {
    for (std::size_t t = 0; t < where.size(); ++t) {
      big(static_cast<Eigen::Index>(where[s]), static_cast<Eigen::Index>(where[t])) = local(s, t);
    }
  }
  return CMat(std::move(big));
}

std::vector<std::size_t> component_sizes(const std::vector<std::vector<std::size_t>>& comps) {
  std::vector<std::size_t> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(c.size());
  return out;
}

}  // namespace

MatrixAlgebra paired_pauli_algebra(std::size_t n_qubits) {
  if (n_qubits < 2) throw ArgumentError("paired_pauli_algebra: need at least 2 qubits");
  const auto pair = pair_basis();
  std::vector<CMat> basis = pair;
  for (std::size_t p = 1; p < n_qubits / 2; ++p) {
    std::vector<CMat> next;
    next.reserve(basis.size() * pair.size());
    for (const auto& b : basis) {
      for (const auto& q : pair) next.push_back(kron(b, q));
    }
    basis = std::move(next);
  }
  if (n_qubits % 2 == 1) {
    for (auto& b : basis) b = kron(b, CMat::identity(2));
  }
  return MatrixAlgebra::from_basis(basis, /*verify_closure=*/true);
}

IdentityIndices identity_submatrix_indices(const std::vector<std::vector<std::size_t>>& components,
                                           std::size_t n, std::size_t power,
                                           std::size_t max_dim) {
  if (components.empty()) throw ArgumentError("identity_submatrix_indices: no components");
  if (power == 0) throw ArgumentError("identity_submatrix_indices: power must be >= 1");
  const std::size_t m = components.size();
  const std::size_t count = checked_pow(m, power, max_dim, "identity_submatrix_indices");
  checked_pow(n, power, max_dim, "identity_submatrix_indices");

  IdentityIndices out;
  out.block_order.reserve(count);
  out.natural_order.reserve(count);
  std::vector<std::size_t> tuple(power, 0);
  std::size_t offset = 0;
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t natural = 0;
    std::size_t block = 1;
    for (std::size_t f = 0; f < power; ++f) {
      const auto& comp = components[tuple[f]];
      natural = natural * n + comp.front();
      block *= comp.size();
    }
    out.block_order.push_back(offset);
    out.natural_order.push_back(natural);
    offset += block;
    // Next tuple in lexicographic order.
    for (std::size_t f = power; f-- > 0;) {
      if (++tuple[f] < m) break;
      tuple[f] = 0;
    }
  }
  return out;
}

IdentityIndices identity_submatrix_indices(std::span<const std::size_t> component_sizes,
                                           std::size_t power, std::size_t max_dim) {
  std::vector<std::vector<std::size_t>> comps;
  std::size_t next = 0;
  for (auto k : component_sizes) {
    if (k == 0) throw ArgumentError("identity_submatrix_indices: empty component");
    std::vector<std::size_t> comp(k);
    for (auto& v : comp) v = next++;
    comps.push_back(std::move(comp));
  }
  return identity_submatrix_indices(comps, next, power, max_dim);
}

PrivateCodeCertificate private_code_tensor_power(const CorrelationMatrix& c, std::size_t power,
                                                 const CodegenOptions& opts) {
  if (power < 2) throw ArgumentError("private_code_tensor_power: power must be >= 2");
  const auto comps = connected_components(graph_of(c, opts.zero_tol));
  if (comps.size() < 2) {
    if (c.size() > 1 && graph_of(c, opts.zero_tol) == Graph::complete(c.size())) {
      throw ObstructionError(
          "graph of C is complete: neither the channel nor any tensor power privatises a "
          "non-scalar algebra");
    }
    throw ObstructionError(
        "graph of C is connected: the component construction needs at least two components");
  }
  const std::size_t n = c.size();
  const std::size_t ambient = checked_pow(n, power, opts.max_dim, "private_code_tensor_power");
  const std::size_t code_dim = std::size_t{1} << power;
  const std::size_t basis_dim = std::size_t{1} << (2 * (power / 2));
  if (basis_dim > opts.max_entries / ambient / ambient) {
    throw CapacityError("private_code_tensor_power: " + std::to_string(basis_dim) +
                        " dense " + std::to_string(ambient) + "x" + std::to_string(ambient) +
                        " basis matrices exceed the entry budget");
  }

  const IdentityIndices all = identity_submatrix_indices(comps, n, power, opts.max_dim);
  IdentityIndices used;
  used.block_order.assign(all.block_order.begin(), all.block_order.begin() + code_dim);
  used.natural_order.assign(all.natural_order.begin(), all.natural_order.begin() + code_dim);

  const MatrixAlgebra local = paired_pauli_algebra(power);
  std::vector<CMat> embedded;
  embedded.reserve(local.dimension());
  for (const auto& b : local.basis()) embedded.push_back(embed(b, used.natural_order, ambient));
  const double closure = closure_defect(embedded);
  MatrixAlgebra algebra = MatrixAlgebra::from_basis(embedded, /*verify_closure=*/false);

  const SchurChannel channel = SchurChannel(c).tensor_power(power, opts.max_dim);
  const CMat projector = embed(CMat::identity(code_dim), used.natural_order, ambient);
  const CMat expected_rho0 = Complex(1.0 / static_cast<double>(code_dim)) * projector;

  std::vector<CheckRecord> transcript;
  transcript.push_back({"algebra_dimension",
                        algebra.dimension() == basis_dim && closure <= kAlgebraTol, closure});
  const std::size_t center = center_dimension(local);
  transcript.push_back({"center_dimension", center == 1, 0.0});

  double diag_dev = 0.0;
  double pattern = 0.0;
  const auto& big_c = channel.corr();
  for (const auto& b : embedded) {
    const Complex d0 = b(used.natural_order.front(), used.natural_order.front());
    for (auto j : used.natural_order) diag_dev = std::max(diag_dev, std::abs(b(j, j) - d0));
    for (auto i : used.natural_order) {
      for (auto j : used.natural_order) {
        if (i != j) pattern = std::max(pattern, std::abs(b(i, j) * big_c(i, j)));
      }
    }
  }
  transcript.push_back({"constant_diagonal", diag_dev <= opts.tol, diag_dev});
  transcript.push_back({"zero_pattern", pattern <= opts.tol, pattern});

  PrivateCheckOptions check;
  check.tol = opts.tol;
  check.zero_tol = opts.zero_tol;
  check.unit = projector;
  const PrivacyVerdict verdict = private_check(channel, embedded, check);
  const double rho_gap = verdict.rho0 ? verdict.rho0->max_abs_diff(expected_rho0) : 1.0;
  transcript.push_back({"apply_image", verdict.is_private && rho_gap <= opts.tol,
                        std::max(verdict.max_residual, rho_gap)});

  std::vector<CMat> extended = embedded;
  extended.push_back(CMat::identity(ambient) - projector);
  PrivateCheckOptions unital;
  unital.tol = opts.tol;
  unital.unit = CMat::identity(ambient);
  const bool extension_private = private_check(channel, extended, unital).is_private;

  const bool verified = std::all_of(transcript.begin(), transcript.end(),
                                    [](const CheckRecord& r) { return r.pass; });
  return PrivateCodeCertificate{
      .base_dim = n,
      .power = power,
      .ambient_dim = ambient,
      .algebra = std::move(algebra),
      .rho0 = expected_rho0,
      .identity_indices = all,
      .embedding = used,
      .logical_qubits = power / 2,
      .idle_qubit = power % 2 == 1,
      .verified = verified,
      .transcript = std::move(transcript),
      .unital_complement_size = ambient - code_dim,
      .unital_extension_private = extension_private,
  };
}

PrivacyReport privacy_report(const CorrelationMatrix& c, const ReportOptions& opts) {
  PrivacyReport r;
  r.n = c.size();
  r.graph = graph_of(c, opts.zero_tol);
  r.unitary_graph = unitary_graph_of(c, opts.tol);
  r.components = connected_components(r.graph);
  r.unitary_components = connected_components(r.unitary_graph);
  r.complete_graph = r.graph == Graph::complete(r.n);
  r.disjoint_cliques = is_disjoint_cliques(r.graph);
  r.necessary_blocks = component_sizes(r.unitary_components);
  r.sufficient_blocks = component_sizes(r.components);
  // S_{UG_C} = S_{G_C*} exactly when the two graphs coincide.
  r.characterization_complete = r.unitary_graph == star_closure(r.graph);
  r.fragile_entries = fragile_unitary_entries(c, opts.tol);
  r.power = opts.power;
  r.qubit_yield = r.components.size() >= 2 ? opts.power / 2 : 0;

  if (r.n <= opts.search_cap) {
    r.alpha = independence_number(r.graph, opts.search_cap);
    std::size_t kmax = 0;
    std::size_t size = 1;
    while (kmax < opts.shannon_kmax && size <= opts.search_cap / r.n) {
      size *= r.n;
      ++kmax;
    }
    if (kmax >= 1) r.shannon = shannon_lower(r.graph, kmax, opts.search_cap);
    if (kmax < opts.shannon_kmax) {
      r.notes.push_back("Shannon bound limited to strong powers k <= " + std::to_string(kmax) +
                        " by the search cap");
    }
  } else {
    r.notes.push_back("independence number skipped: " + std::to_string(r.n) +
                      " vertices exceeds the exact-search cap");
  }

  if (r.complete_graph && r.n > 1) {
    r.notes.push_back(
        "complete graph; no privatisation at any tensor power (no non-scalar privatisation "
        "possible)");
  } else if (r.components.size() == 1) {
    r.notes.push_back("connected graph; no private code from the component construction");
  } else {
    r.notes.push_back(std::to_string(r.components.size()) + " components: the " +
                      std::to_string(r.power) + "-fold tensor power privatises " +
                      std::to_string(r.qubit_yield) + " qubit(s)");
  }
  r.notes.push_back(r.characterization_complete
                        ? "characterization complete: necessary and sufficient algebras coincide"
                        : "characterization incomplete: necessary and sufficient algebras differ");
  if (!r.fragile_entries.empty()) {
    r.notes.push_back(std::to_string(r.fragile_entries.size()) +
                      " entries lie near the unit-modulus tolerance boundary");
  }
  return r;
}

}  // namespace schurpriv
