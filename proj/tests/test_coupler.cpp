#include "bqc/coupler.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "bqc/error.hpp"
#include "bqc/matrix_engine.hpp"
#include "oracles/oracles.hpp"

using namespace bqc;

namespace {

constexpr double kPi = std::numbers::pi;

CouplerParams params_of(std::vector<double> g, double w, int n_max) {
  CouplerParams p;
  p.couplings = std::move(g);
  p.w = w;
  p.n_max = n_max;
  return p;
}

std::vector<std::size_t> block_indices(const ModeLayout& layout, int total) {
  return excitation_blocks(layout)[static_cast<std::size_t>(total)].indices;
}

}  // namespace

TEST(coupler_params, validation) {
  EXPECT_THROW(params_of({}, 1.0, 2).validate(), Error);
  EXPECT_THROW(params_of({1.0}, 1.0, 0).validate(), Error);
  EXPECT_THROW(params_of({NAN}, 1.0, 2).validate(), Error);
  EXPECT_NO_THROW(params_of({0.0}, 1.0, 2).validate());
  const auto p = CouplerParams::equal_couplings(3, 0.5, 1.0, 2);
  EXPECT_EQ(p.mode_count(), 4);
  EXPECT_TRUE(p.has_equal_couplings());
  EXPECT_NEAR(p.coupling_norm(), 0.5 * std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(p.gamma(2.0), 4.0 * 0.75, 1e-15);
  EXPECT_FALSE(params_of({0.3, 0.9}, 1.0, 2).has_equal_couplings());
}

TEST(build_hamiltonian, single_hopping_element) {
  const auto p = params_of({1.0}, 0.0, 1);
  const DenseOperator h = build_hamiltonian(p, p.layout());
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  EXPECT_EQ((h.matrix() - expected).norm(), 0.0);
}

TEST(build_hamiltonian, free_part_is_total_number) {
  const auto p = params_of({0.0}, 1.0, 1);
  const DenseOperator h = build_hamiltonian(p, p.layout());
  EXPECT_EQ((h.matrix() - total_number(p.layout()).matrix()).norm(), 0.0);
}

TEST(build_hamiltonian, single_excitation_spectrum_for_two_outer_modes) {
  const double g = 0.8;
  const double w = 1.3;
  const auto p = CouplerParams::equal_couplings(2, g, w, 2);
  const DenseOperator h = build_hamiltonian(p, p.layout());
  const Matrix block = h.restrict_to(block_indices(p.layout(), 1));
  ASSERT_EQ(block.rows(), 3);
  // Characteristic polynomial (w - x)((w - x)^2 - 2 g^2).
  Eigen::SelfAdjointEigenSolver<Matrix> solver(block);
  const Eigen::Vector3d expected(w - g * std::sqrt(2.0), w, w + g * std::sqrt(2.0));
  EXPECT_LE((solver.eigenvalues() - expected).norm(), 1e-14);
}

TEST(build_hamiltonian, hermitian_block_diagonal_and_resonant) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n_outer = 1; n_outer <= 3; ++n_outer) {
    std::vector<double> g;
    for (int j = 0; j < n_outer; ++j) g.push_back(u(rng));
    const auto p = params_of(g, u(rng), 3);
    const ModeLayout layout = p.layout();
    const DenseOperator h = build_hamiltonian(p, layout);
    EXPECT_LE((h.matrix() - h.matrix().adjoint()).norm(), 1e-12);
    EXPECT_EQ(off_block_norm(h), 0.0);
    const DenseOperator free = free_hamiltonian(p, layout);
    const DenseOperator interaction = interaction_hamiltonian(p, layout);
    EXPECT_LE(commutator(free, interaction).matrix().norm(), 1e-12);
  }
}

TEST(build_hamiltonian, layout_mismatch) {
  const auto p = CouplerParams::equal_couplings(2, 1.0, 1.0, 2);
  try {
    build_hamiltonian(p, ModeLayout(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LayoutMismatch);
  }
  EXPECT_THROW(build_hamiltonian(p, ModeLayout(3, 4)), Error);
}

TEST(exact_propagator, identity_at_zero_time) {
  const auto p = CouplerParams::equal_couplings(2, 0.7, 1.1, 2);
  const DenseOperator u = exact_propagator(p, p.layout(), 0.0);
  EXPECT_LE((u.matrix() - identity(p.layout()).matrix()).norm(), 1e-14);
}

TEST(exact_propagator, two_qubit_gate_time_rows) {
  const auto p = CouplerParams::equal_couplings(1, 1.0, 0.5, 2);
  const ModeLayout layout = p.layout();
  const DenseOperator u = exact_propagator(p, layout, 2.0 * kPi);
  const StateVector out10 = apply(u, basis_state(layout, {1, 0}));
  EXPECT_LE((out10.amplitudes() + basis_state(layout, {1, 0}).amplitudes()).norm(), 1e-12);
  const StateVector out11 = apply(u, basis_state(layout, {1, 1}));
  EXPECT_LE((out11.amplitudes() - basis_state(layout, {1, 1}).amplitudes()).norm(), 1e-12);
}

TEST(exact_propagator, matches_eigen_exponential) {
  const auto p = params_of({0.4, -0.9, 0.2}, 0.6, 2);
  const ModeLayout layout = p.layout();
  const double t = 1.7;
  const Matrix reference = oracle::eigen_expm(Complex(0.0, -t) * build_hamiltonian(p, layout).matrix());
  EXPECT_LE((exact_propagator(p, layout, t).matrix() - reference).norm(), 1e-11);
}

TEST(factor_coefficients, frozen_values) {
  // sqrt(gamma) = pi/2: f = tan(pi/4)/(pi/2) = 2/pi, h = sin(pi/2)/(pi/2) = 2/pi.
  const auto p = params_of({1.0}, 0.0, 1);
  const auto quarter = factor_coefficients(p, kPi / 2.0);
  EXPECT_NEAR(quarter.f, 0.6366197723675814, 1e-15);
  EXPECT_NEAR(quarter.h, 0.6366197723675814, 1e-15);
  EXPECT_NEAR(quarter.sqrt_gamma, kPi / 2.0, 1e-15);

  const auto full = factor_coefficients(p, 2.0 * kPi);
  EXPECT_LE(std::abs(full.f), 1e-15);
  EXPECT_LE(std::abs(full.h), 1e-15);

  const auto zero = factor_coefficients(p, 0.0);
  EXPECT_EQ(zero.f, 0.5);
  EXPECT_EQ(zero.h, 1.0);
}

TEST(factor_coefficients, collective_coupling_sets_gamma) {
  const auto p = params_of({0.3, 0.4}, 0.0, 1);  // sqrt(sum g^2) = 0.5
  EXPECT_NEAR(factor_coefficients(p, 2.0).sqrt_gamma, 1.0, 1e-15);
  EXPECT_NEAR(factor_coefficients(p, -2.0).sqrt_gamma, 1.0, 1e-15);
}

TEST(factor_coefficients, small_gamma_branch_is_continuous) {
  const auto p = params_of({1.0}, 0.0, 1);
  for (double x : {kSmallGammaCutoff * (1.0 - 1e-9), kSmallGammaCutoff * (1.0 + 1e-9), 1e-6, 1e-3}) {
    const auto c = factor_coefficients(p, x);
    EXPECT_NEAR(c.f, std::tan(x / 2.0) / x, 1e-15) << x;
    EXPECT_NEAR(c.h, std::sin(x) / x, 1e-15) << x;
  }
}

TEST(factor_coefficients, singularities_are_refused) {
  const auto p = params_of({1.0}, 0.0, 1);
  for (int m = 0; m < 4; ++m) {
    const double pole = (2.0 * m + 1.0) * kPi;
    try {
      factor_coefficients(p, pole);
      FAIL() << "pole " << pole;
    } catch (const NearSingularityError& e) {
      EXPECT_EQ(e.code(), ErrorCode::NearSingularity);
      EXPECT_LE(e.margin(), 1e-6);
    }
  }
  EXPECT_THROW(factor_coefficients(p, kPi + 5e-7), NearSingularityError);
  EXPECT_NO_THROW(factor_coefficients(p, kPi + 2e-6));
  EXPECT_THROW(factor_coefficients(p, kPi + 0.01, 0.05), NearSingularityError);
  EXPECT_NEAR(singularity_margin(0.0), kPi, 1e-15);
  EXPECT_NEAR(singularity_margin(2.0 * kPi), kPi, 1e-15);
  EXPECT_NEAR(singularity_margin(3.0 * kPi + 0.2), 0.2, 1e-12);
}

TEST(factorized_propagator, identity_at_zero_time) {
  const auto p = CouplerParams::equal_couplings(2, 0.9, 0.4, 2);
  EXPECT_LE((factorized_propagator(p, p.layout(), 0.0).matrix() - identity(p.layout()).matrix()).norm(), 1e-15);
}

TEST(factorized_propagator, free_phase_only_at_full_period) {
  const double w = 0.37;
  const auto p = CouplerParams::equal_couplings(1, 1.0, w, 3);
  const ModeLayout layout = p.layout();
  const double t = 2.0 * kPi;
  const DenseOperator u = factorized_propagator(p, layout, t);
  Vector expected(static_cast<Eigen::Index>(layout.dimension()));
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    expected(static_cast<Eigen::Index>(i)) = std::polar(1.0, -w * t * layout.total_occupation(i));
  }
  EXPECT_LE((u.matrix() - Matrix(expected.asDiagonal())).norm(), 1e-13);
}

TEST(factorized_propagator, single_excitation_closed_form) {
  // w = 0, g t = pi/2: tan(theta/2) = 1, sin(theta) = 1.
  const auto p = CouplerParams::equal_couplings(1, 1.0, 0.0, 2);
  const ModeLayout layout = p.layout();
  const Matrix block = factorized_propagator(p, layout, kPi / 2.0).restrict_to(block_indices(layout, 1));
  Matrix expected(2, 2);
  expected << 0.0, Complex(0.0, -1.0), Complex(0.0, -1.0), 0.0;
  EXPECT_LE((block - expected).norm(), 1e-14);

  // Generic angle against the 2x2 disentangling oracle. In the (|01>, |10>)
  // basis a^dag b is the lower shift, so the oracle's upper shift appears transposed.
  const double theta = 1.234;
  const Matrix generic = factorized_propagator(p, layout, theta).restrict_to(block_indices(layout, 1));
  const Matrix closed = oracle::su2_symmetric_product(Complex(0.0, -std::tan(theta / 2.0)),
                                                      Complex(0.0, -std::sin(theta)))
                            .transpose();
  EXPECT_LE((generic - closed).norm(), 1e-14);
  Matrix rotation(2, 2);
  rotation << std::cos(theta), Complex(0.0, -std::sin(theta)), Complex(0.0, -std::sin(theta)), std::cos(theta);
  EXPECT_LE((closed - rotation).norm(), 1e-14);
}

TEST(factorized_propagator, refuses_singular_time) {
  const auto p = CouplerParams::equal_couplings(1, 1.0, 0.3, 2);
  EXPECT_THROW(factorized_propagator(p, p.layout(), kPi), NearSingularityError);
}

TEST(verify_factorization, documented_examples) {
  const auto p1 = CouplerParams::equal_couplings(1, 1.0, 0.7, 3);
  const auto r1 = verify_factorization(p1, p1.layout(), 1.0, 1e-8);
  EXPECT_LE(r1.max_block_distance, 1e-8);
  EXPECT_TRUE(r1.passed);
  ASSERT_EQ(r1.blocks.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(r1.blocks[static_cast<std::size_t>(k)].total, k);
  EXPECT_NEAR(r1.sqrt_gamma, 1.0, 1e-15);
  EXPECT_NEAR(r1.singularity_margin, kPi - 1.0, 1e-15);

  const auto p3 = CouplerParams::equal_couplings(3, 0.5, 1.0, 2);
  const auto r3 = verify_factorization(p3, p3.layout(), 0.9, 1e-8);
  EXPECT_LE(r3.max_block_distance, 1e-8);
  EXPECT_EQ(r3.blocks.size(), 3u);

  const auto r0 = verify_factorization(p3, p3.layout(), 0.0, 0.0);
  EXPECT_EQ(r0.max_block_distance, 0.0);
  EXPECT_TRUE(r0.passed);
}

TEST(verify_factorization, random_unequal_couplings_and_signs) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> g(-1.2, 1.2);
  std::uniform_real_distribution<double> t(-3.0, 3.0);
  for (int trial = 0; trial < 12; ++trial) {
    const int n_outer = 1 + trial % 3;
    std::vector<double> couplings;
    for (int j = 0; j < n_outer; ++j) couplings.push_back(g(rng));
    const auto p = params_of(couplings, g(rng), 2);
    const double time = t(rng);
    if (singularity_margin(std::abs(time) * p.coupling_norm()) < 0.05) continue;
    EXPECT_LE(verify_factorization(p, p.layout(), time, 1e-8).max_block_distance, 1e-8);
  }
}

TEST(algebra_check, documented_examples) {
  const auto p1 = CouplerParams::equal_couplings(1, 1.0, 0.0, 4);
  const AlgebraReport r1 = algebra_check(p1, p1.layout(), 1.0);
  EXPECT_LE(r1.residual, 1e-12);
  EXPECT_EQ(r1.convention, SignConvention::Plus);
  EXPECT_GT(r1.rejected_residual, 0.1);

  const auto p2 = params_of({0.3, 0.9}, 0.5, 3);
  const AlgebraReport r2 = algebra_check(p2, p2.layout(), 1.0);
  EXPECT_LE(r2.residual, 1e-12);
  EXPECT_EQ(r2.convention, SignConvention::Plus);
}

TEST(algebra_check, relative_residual_over_time_range) {
  const auto p = params_of({0.3, 0.9}, 0.5, 3);
  for (double t : {-10.0, -2.5, 0.01, 0.5, 3.0, 10.0}) {
    const AlgebraReport r = algebra_check(p, p.layout(), t);
    EXPECT_LE(r.relative_residual, 1e-12) << t;
    EXPECT_EQ(r.convention, SignConvention::Plus) << t;
  }
}

TEST(coupler_invariants, small_time_generator) {
  const auto p = params_of({0.6, -0.4}, 0.9, 2);
  const ModeLayout layout = p.layout();
  const double dt = 1e-5;
  const Matrix exact_rate = (exact_propagator(p, layout, dt).matrix() - exact_propagator(p, layout, -dt).matrix()) / (2 * dt);
  const Matrix factor_rate =
      (factorized_propagator(p, layout, dt).matrix() - factorized_propagator(p, layout, -dt).matrix()) / (2 * dt);
  EXPECT_LE((exact_rate - factor_rate).norm(), 1e-6);
  const Matrix generator = Complex(0.0, -1.0) * build_hamiltonian(p, layout).matrix();
  EXPECT_LE((exact_rate - generator).norm(), 1e-6);
}

TEST(coupler_invariants, periodicity_of_interaction) {
  for (int n_outer = 1; n_outer <= 3; ++n_outer) {
    const double g = 0.75;
    const auto p = CouplerParams::equal_couplings(n_outer, g, 0.43, 2);
    const ModeLayout layout = p.layout();
    for (int k = 1; k <= 2; ++k) {
      const double t = 2.0 * kPi * k / (std::sqrt(static_cast<double>(n_outer)) * g);
      const DenseOperator exact = exact_propagator(p, layout, t);
      const DenseOperator free = expm_hermitian(free_hamiltonian(p, layout), t);
      for (const auto& block : excitation_blocks(layout)) {
        if (block.total > layout.n_max()) break;
        EXPECT_LE(phase_distance(exact.restrict_to(block.indices), free.restrict_to(block.indices)).distance, 1e-9);
      }
    }
  }
}

TEST(coupler_invariants, propagator_conserves_excitations) {
  const auto p = params_of({0.2, 1.1, -0.5}, 0.8, 2);
  const ModeLayout layout = p.layout();
  const DenseOperator total = total_number(layout);
  for (double t : {0.3, 1.9, 7.5}) {
    EXPECT_LE(commutator(exact_propagator(p, layout, t), total).matrix().norm(), 1e-10);
  }
}
