#include "bqc/fock.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "bqc/error.hpp"
#include "oracles/oracles.hpp"

using namespace bqc;

namespace {

std::size_t argmax(const StateVector& s) {
  Eigen::Index i = 0;
  s.amplitudes().cwiseAbs().maxCoeff(&i);
  return static_cast<std::size_t>(i);
}

}  // namespace

TEST(fock, layout_rejects_degenerate_shapes) {
  EXPECT_THROW(ModeLayout(0, 2), Error);
  EXPECT_THROW(ModeLayout(2, 1), Error);
  EXPECT_THROW(ModeLayout(20, 6), Error);  // dimension cap
  const ModeLayout layout(3, 4);
  EXPECT_EQ(layout.dimension(), 64u);
  EXPECT_EQ(layout.n_max(), 3);
}

TEST(fock, flat_index_matches_ordering_convention) {
  const ModeLayout layout(4, 3);
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    const auto occ = layout.occupations_of(i);
    std::size_t expected = 0;
    for (int k = 0; k < 4; ++k) expected += static_cast<std::size_t>(occ[static_cast<std::size_t>(k)]) * static_cast<std::size_t>(std::pow(3, 3 - k));
    EXPECT_EQ(expected, i);
    EXPECT_EQ(layout.index_of(occ), i);
  }
}

TEST(fock, basis_state_examples) {
  const ModeLayout two(2, 2);
  EXPECT_EQ(argmax(basis_state(two, {0, 0})), 0u);
  EXPECT_EQ(argmax(basis_state(two, {1, 0})), 2u);
  EXPECT_EQ(argmax(basis_state(ModeLayout(3, 2), {1, 0, 1})), 5u);
  EXPECT_DOUBLE_EQ(norm(basis_state(two, {1, 1})), 1.0);
}

TEST(fock, basis_state_errors) {
  const ModeLayout two(2, 2);
  try {
    basis_state(two, {2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OccupationOutOfRange);
  }
  try {
    basis_state(two, {-1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OccupationOutOfRange);
  }
  try {
    basis_state(two, {0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(fock, basis_states_are_orthonormal) {
  const ModeLayout layout(3, 3);
  Matrix gram(static_cast<Eigen::Index>(layout.dimension()), static_cast<Eigen::Index>(layout.dimension()));
  std::vector<StateVector> states;
  for (std::size_t i = 0; i < layout.dimension(); ++i) states.push_back(basis_state(layout, layout.occupations_of(i)));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = inner_product(states[i], states[j]);
    }
  }
  EXPECT_EQ((gram - Matrix::Identity(gram.rows(), gram.cols())).norm(), 0.0);
}

TEST(fock, single_mode_annihilation_matrix) {
  const DenseOperator a = annihilation(ModeLayout(1, 3), 0);
  Matrix expected = Matrix::Zero(3, 3);
  expected(0, 1) = 1.0;
  expected(1, 2) = std::sqrt(2.0);
  EXPECT_EQ((a.matrix() - expected).norm(), 0.0);
}

TEST(fock, annihilation_action_on_basis_states) {
  const ModeLayout layout(2, 2);
  const DenseOperator a = annihilation(layout, 0);
  const StateVector lowered = apply(a, basis_state(layout, {1, 0}));
  EXPECT_EQ((lowered.amplitudes() - basis_state(layout, {0, 0}).amplitudes()).norm(), 0.0);
  EXPECT_EQ(norm(apply(a, basis_state(layout, {0, 1}))), 0.0);
}

TEST(fock, annihilation_matches_kronecker_oracle) {
  for (int modes = 1; modes <= 4; ++modes) {
    for (int cutoff = 2; cutoff <= 4; ++cutoff) {
      const ModeLayout layout(modes, cutoff);
      for (int m = 0; m < modes; ++m) {
        const Matrix expected = oracle::embedded_annihilation(modes, cutoff, m);
        EXPECT_EQ((annihilation(layout, m).matrix() - expected).norm(), 0.0) << modes << " " << cutoff << " " << m;
      }
    }
  }
}

TEST(fock, mode_out_of_range) {
  const ModeLayout layout(2, 3);
  try {
    annihilation(layout, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModeOutOfRange);
  }
  EXPECT_THROW(number_operator(layout, -1), Error);
}

TEST(fock, creation_matrix_elements) {
  const ModeLayout layout(2, 4);
  const DenseOperator a_dag = creation(layout, 1);
  for (int n = 0; n + 1 <= layout.n_max(); ++n) {
    const std::size_t from = layout.index_of({2, n});
    const std::size_t to = layout.index_of({2, n + 1});
    EXPECT_DOUBLE_EQ(a_dag(to, from).real(), std::sqrt(n + 1.0));
  }
  // |n_max> has no image.
  EXPECT_EQ(norm(apply(a_dag, basis_state(layout, {0, 3}))), 0.0);
}

TEST(fock, canonical_commutator_below_cutoff) {
  const ModeLayout layout(2, 5);
  for (int m = 0; m < 2; ++m) {
    const DenseOperator c = commutator(annihilation(layout, m), creation(layout, m));
    std::vector<std::size_t> safe;
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
      if (layout.occupation(i, m) < layout.n_max()) safe.push_back(i);
    }
    const Matrix block = c.restrict_to(safe);
    EXPECT_LE((block - Matrix::Identity(block.rows(), block.cols())).norm(), 1e-12);
  }
}

TEST(fock, number_operators) {
  const DenseOperator n = number_operator(ModeLayout(1, 3), 0);
  EXPECT_EQ((n.matrix().diagonal().real() - Eigen::Vector3d(0, 1, 2)).norm(), 0.0);
  const DenseOperator total = total_number(ModeLayout(2, 2));
  EXPECT_EQ((total.matrix().diagonal().real() - Eigen::Vector4d(0, 1, 1, 2)).norm(), 0.0);
  EXPECT_EQ(total.matrix().norm(), total.matrix().diagonal().norm());
}

TEST(fock, total_number_commutes_with_hopping_products) {
  const ModeLayout layout(3, 3);
  const DenseOperator total = total_number(layout);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const DenseOperator hop = adjoint(annihilation(layout, i)) * annihilation(layout, j);
      EXPECT_LE(commutator(total, hop).matrix().norm(), 1e-12);
      EXPECT_EQ(off_block_norm(hop), 0.0);
    }
  }
}

TEST(fock, excitation_block_examples) {
  const auto two = excitation_blocks(ModeLayout(2, 2));
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0].indices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(two[1].indices, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(two[2].indices, (std::vector<std::size_t>{3}));

  const auto three = excitation_blocks(ModeLayout(3, 2));
  EXPECT_EQ(three[1].indices, (std::vector<std::size_t>{1, 2, 4}));

  const ModeLayout big(3, 4);
  std::size_t total = 0;
  for (const auto& b : excitation_blocks(big)) {
    total += b.indices.size();
    EXPECT_TRUE(std::is_sorted(b.indices.begin(), b.indices.end()));
    for (std::size_t i : b.indices) EXPECT_EQ(big.total_occupation(i), b.total);
  }
  EXPECT_EQ(total, big.dimension());
}

TEST(fock, arithmetic_dimension_checks) {
  const DenseOperator a = identity(ModeLayout(2, 2));
  const DenseOperator b = identity(ModeLayout(2, 3));
  EXPECT_THROW(a * b, Error);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(apply(a, basis_state(ModeLayout(2, 3), {0, 0})), Error);
  EXPECT_THROW(DenseOperator(ModeLayout(2, 2), Matrix::Zero(3, 3)), Error);
  EXPECT_THROW(StateVector(ModeLayout(2, 2), Vector::Zero(3)), Error);
}
