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


#include <gtest/gtest.h>

#include <random>

#include "schurpriv/codegen.hpp"
#include "schurpriv/errors.hpp"
#include "test_support.hpp"

namespace schurpriv {
namespace {

using testing::pauli_x;
using testing::pauli_y;
using testing::pauli_z;

CorrelationMatrix corr(const CMat& m) { return CorrelationMatrix::validate(m); }

std::vector<CMat> two_qubit_code() {
  const CMat i2 = CMat::identity(2);
  return {kron(i2, i2), kron(i2, pauli_x()), kron(pauli_y(), pauli_y()),
          kron(pauli_y(), pauli_z())};
}

TEST(PairedPauli, TwoQubitsMatchesExplicitSpan) {
  const auto a = paired_pauli_algebra(2);
  EXPECT_EQ(a.dimension(), 4u);
  EXPECT_TRUE(a.same_span(MatrixAlgebra::from_basis(two_qubit_code())));
}

TEST(PairedPauli, ThreeQubitsHasIdleFactor) {
  const auto a = paired_pauli_algebra(3);
  EXPECT_EQ(a.dimension(), 4u);
  for (const auto& b : two_qubit_code()) {
    EXPECT_TRUE(a.contains(kron(b, CMat::identity(2))));
  }
  EXPECT_EQ(center_dimension(a), 1u);
  EXPECT_TRUE(constant_diagonal(a));
}

TEST(PairedPauli, NonIdentityElementsHaveZeroDiagonal) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto a = paired_pauli_algebra(n);
    const std::size_t dim = std::size_t{1} << n;
    EXPECT_EQ(a.dimension(), std::size_t{1} << (2 * (n / 2)));
    // The identity direction is I/√dim; every other basis direction is traceless
    // with zero diagonal, so the projection onto I accounts for the whole diagonal.
    for (const auto& b : a.basis()) {
      const Complex d0 = b(0, 0);
      for (std::size_t i = 0; i < dim; ++i) EXPECT_LT(std::abs(b(i, i) - d0), 1e-12);
    }
    const SchurChannel ch(corr(CMat::identity(dim)));
    PrivateCheckOptions unit;
    unit.mode = PrivacyMode::kUnit;
    const auto v = private_check(ch, a.basis(), unit);
    EXPECT_TRUE(v.is_private) << n;
    EXPECT_LE(v.max_residual, 1e-10);
  }
  EXPECT_THROW(paired_pauli_algebra(1), ArgumentError);
}

TEST(IdentityIndices, CnotSquare) {
  const std::vector<std::size_t> sizes{3, 1};
  const auto idx = identity_submatrix_indices(sizes, 2);
  EXPECT_EQ(idx.block_order, (std::vector<std::size_t>{0, 9, 12, 15}));
  EXPECT_EQ(idx.natural_order, (std::vector<std::size_t>{0, 3, 12, 15}));
}

TEST(IdentityIndices, AllSingletons) {
  const std::vector<std::size_t> sizes{1, 1};
  const auto idx = identity_submatrix_indices(sizes, 2);
  EXPECT_EQ(idx.block_order, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(idx.natural_order, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(IdentityIndices, Errors) {
  const std::vector<std::size_t> sizes{3, 1};
  EXPECT_THROW(identity_submatrix_indices(sizes, 7), CapacityError);
  EXPECT_THROW(identity_submatrix_indices(sizes, 0), ArgumentError);
  const std::vector<std::size_t> none;
  EXPECT_THROW(identity_submatrix_indices(none, 2), ArgumentError);
  const std::vector<std::size_t> empty_block{2, 0};
  EXPECT_THROW(identity_submatrix_indices(empty_block, 2), ArgumentError);
}

// On random C the natural indices pick out an identity submatrix of C^{⊗N},
// and the block indices do the same after the block permutation.
TEST(IdentityIndices, RandomCorrelationsBothOrderings) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    const std::size_t power = 2 + static_cast<std::size_t>(t % 2);
    const auto c = corr(testing::random_correlation(rng, n));
    const auto comps = connected_components(graph_of(c));
    const auto big = tensor_power(c, power);
    const auto idx = identity_submatrix_indices(comps, n, power);
    std::size_t count = 1;
    for (std::size_t p = 0; p < power; ++p) count *= comps.size();
    ASSERT_EQ(idx.natural_order.size(), count);

    std::vector<std::size_t> sorted = idx.natural_order;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_TRUE(principal_submatrix(big.mat(), sorted)
                    .approx_equal(CMat::identity(sorted.size()), 0.0));

    const auto bp = block_permutation(big);
    const CMat permuted = permute_sym(big.mat(), bp.perm);
    EXPECT_TRUE(principal_submatrix(permuted, idx.block_order)
                    .approx_equal(CMat::identity(count), 0.0));
    for (std::size_t k = 0; k < count; ++k) {
      EXPECT_EQ(bp.perm[idx.block_order[k]], idx.natural_order[k]);
    }
  }
}

TEST(Certificate, QubitIdentitySquareIsUnitPrivate) {
  const auto cert = private_code_tensor_power(corr(CMat::identity(2)), 2);
  EXPECT_TRUE(cert.verified);
  EXPECT_EQ(cert.ambient_dim, 4u);
  EXPECT_TRUE(cert.rho0.approx_equal(Complex(0.25) * CMat::identity(4), 0.0));
  EXPECT_TRUE(cert.algebra.same_span(MatrixAlgebra::from_basis(two_qubit_code())));
  EXPECT_EQ(cert.unital_complement_size, 0u);
  EXPECT_EQ(cert.logical_qubits, 1u);
  EXPECT_FALSE(cert.idle_qubit);
}

TEST(Certificate, CnotSquare) {
  const auto cert = private_code_tensor_power(corr(testing::cnot_correlation()), 2);
  EXPECT_TRUE(cert.verified);
  EXPECT_EQ(cert.ambient_dim, 16u);
  EXPECT_EQ(cert.embedding.natural_order, (std::vector<std::size_t>{0, 3, 12, 15}));
  EXPECT_EQ(cert.embedding.block_order, (std::vector<std::size_t>{0, 9, 12, 15}));
  const CMat expected = Complex(0.25) * (CMat::unit(16, 0, 0) + CMat::unit(16, 3, 3) +
                                         CMat::unit(16, 12, 12) + CMat::unit(16, 15, 15));
  EXPECT_TRUE(cert.rho0.approx_equal(expected, 0.0));
  for (const auto& r : cert.transcript) {
    EXPECT_TRUE(r.pass) << r.check;
    EXPECT_LE(r.max_residual, 1e-12) << r.check;
  }
  EXPECT_EQ(cert.unital_complement_size, 12u);
  EXPECT_FALSE(cert.unital_extension_private);
  // Independent recheck of the zero-padded algebra.
  const SchurChannel ch = SchurChannel(corr(testing::cnot_correlation())).tensor_power(2);
  const auto v = private_check(ch, cert.algebra.basis());
  EXPECT_TRUE(v.is_private);
  EXPECT_TRUE(v.rho0->approx_equal(expected, 1e-12));
}

TEST(Certificate, Obstructions) {
  EXPECT_THROW(private_code_tensor_power(corr(CMat::ones(3, 3)), 2), ObstructionError);
  EXPECT_THROW(private_code_tensor_power(corr(testing::coupled_triple()), 2), ObstructionError);
  EXPECT_THROW(private_code_tensor_power(corr(CMat::identity(2)), 1), ArgumentError);
  EXPECT_THROW(private_code_tensor_power(corr(testing::cnot_correlation()), 7), CapacityError);
  // 4^6 ambient fits the dimension cap but not the dense entry budget.
  EXPECT_THROW(private_code_tensor_power(corr(testing::cnot_correlation()), 6), CapacityError);
}

TEST(Certificate, YieldGrowsEveryTwoPowers) {
  const auto c = corr(testing::block_ones({2, 1}));
  std::vector<std::size_t> dims;
  for (std::size_t power = 2; power <= 5; ++power) {
    const auto cert = private_code_tensor_power(c, power);
    EXPECT_TRUE(cert.verified) << power;
    EXPECT_EQ(cert.idle_qubit, power % 2 == 1);
    dims.push_back(cert.algebra.dimension());
  }
  EXPECT_EQ(dims, (std::vector<std::size_t>{4, 4, 16, 16}));
}

// The zero-padded algebra is private with ρ₀ = P_J'/2^N rather than I/n^N.
// Compressed to J', where C^{⊗N} is the identity, the necessity chain holds
// exactly; on the full space the separating vector survives, but
// quasiorthogonality to the diagonal only holds when J' is everything.
TEST(Certificate, NecessityChainOnTheSupport) {
  std::mt19937_64 rng(91);
  for (const auto& c : {corr(CMat::identity(2)), corr(testing::cnot_correlation()),
                        corr(testing::block_ones({1, 2, 1})), corr(CMat::identity(3))}) {
    for (std::size_t power = 2; power <= 3; ++power) {
      const auto cert = private_code_tensor_power(c, power);
      ASSERT_TRUE(cert.verified);
      std::vector<std::size_t> support = cert.embedding.natural_order;
      std::sort(support.begin(), support.end());
      std::vector<CMat> local;
      for (const auto& b : cert.algebra.basis()) local.push_back(principal_submatrix(b, support));
      const std::size_t k = support.size();
      EXPECT_TRUE(quasiorthogonal(local, diagonal_algebra(k).basis()));
      const auto big = tensor_power(c, power);
      const auto local_c = corr(principal_submatrix(big.mat(), support));
      EXPECT_TRUE(quasiorthogonal(local, opsystem_algebra(unitary_graph_of(local_c)).basis()));
      EXPECT_TRUE(find_separating_vector(cert.algebra.basis(), 5, rng()).has_value());
      EXPECT_EQ(quasiorthogonal(cert.algebra.basis(), diagonal_algebra(cert.ambient_dim).basis()),
                cert.ambient_dim == k);
    }
  }
}

TEST(Report, AllOnes) {
  const auto r = privacy_report(corr(CMat::ones(3, 3)));
  ASSERT_TRUE(r.alpha.has_value());
  EXPECT_EQ(r.alpha->size, 1u);
  EXPECT_EQ(r.qubit_yield, 0u);
  EXPECT_TRUE(r.complete_graph);
  bool mentioned = false;
  for (const auto& note : r.notes) {
    mentioned = mentioned || note.find("no non-scalar privatisation possible") != std::string::npos;
  }
  EXPECT_TRUE(mentioned);
}

TEST(Report, Cnot) {
  const auto r = privacy_report(corr(testing::cnot_correlation()));
  EXPECT_EQ(r.alpha->size, 2u);
  EXPECT_EQ(r.alpha->witness, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.qubit_yield, 1u);
  EXPECT_TRUE(r.characterization_complete);
  EXPECT_EQ(r.shannon->alphas, (std::vector<std::size_t>{2, 4, 8}));
}

TEST(Report, CoupledTriple) {
  const auto r = privacy_report(corr(testing::coupled_triple()));
  EXPECT_EQ(r.necessary_blocks, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(r.sufficient_blocks, (std::vector<std::size_t>{3}));
  EXPECT_FALSE(r.characterization_complete);
  EXPECT_EQ(r.qubit_yield, 0u);
}

TEST(Report, CharacterizationCompleteIffRankOneBlocks) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const auto c = corr(testing::random_correlation(rng, 1 + static_cast<std::size_t>(t % 8)));
    const auto r = privacy_report(c);
    // Rank-one blocks: every component of G_C has rank one in C.
    bool rank_one = true;
    for (const auto& comp : r.components) {
      rank_one = rank_one && numerical_rank(principal_submatrix(c.mat(), comp).eigen()) == 1;
    }
    EXPECT_EQ(r.characterization_complete, rank_one) << "trial " << t;
  }
}

TEST(Report, LargeInputsSkipExactSearch) {
  const auto r = privacy_report(corr(CMat::identity(70)));
  EXPECT_FALSE(r.alpha.has_value());
  EXPECT_FALSE(r.shannon.has_value());
  ReportOptions opts;
  opts.search_cap = 100;
  opts.shannon_kmax = 1;
  const auto wide = privacy_report(corr(CMat::identity(70)), opts);
  EXPECT_EQ(wide.alpha->size, 70u);
}

}  // namespace
}  // namespace schurpriv
