#pragma once

#include <vector>

#include "bqc/fock.hpp"

namespace bqc {

/// Default exclusion radius around the poles sqrt(gamma) = pi, 3pi, 5pi, ...
inline constexpr double kSingularityGuard = 1e-6;

/// Below this sqrt(gamma) the factor coefficients use their Taylor series.
inline constexpr double kSmallGammaCutoff = 1e-4;

/// Central mode of angular frequency w coupled to N outer modes of the same
/// frequency with real couplings g_1..g_N. Units have hbar = 1.
struct CouplerParams {
  std::vector<double> couplings;
  double w = 0.0;
  int n_max = 1;

  static CouplerParams equal_couplings(int n_outer, double g, double w, int n_max);

  int n_outer() const noexcept { return static_cast<int>(couplings.size()); }
  int mode_count() const noexcept { return n_outer() + 1; }

  /// sqrt(sum_j g_j^2), the collective coupling.
  double coupling_norm() const;

  /// gamma(t) = t^2 sum_j g_j^2.
  double gamma(double t) const;

  bool has_equal_couplings(double rel_tol = 1e-12) const;

  /// Layout with cutoff n_max + 1 on every mode.
  ModeLayout layout() const;

  /// Throws InvalidParams on empty couplings, non-finite values or n_max < 1.
  /// All-zero couplings are accepted (free evolution); gate_time rejects them.
  void validate() const;
};

struct FactorCoefficients {
  double f = 0.5;
  double h = 1.0;
  double sqrt_gamma = 0.0;
};

struct BlockDistance {
  int total = 0;
  double distance = 0.0;
};

struct FactorizationReport {
  std::vector<BlockDistance> blocks;  // exactly the blocks with K <= n_max
  double max_block_distance = 0.0;
  double sqrt_gamma = 0.0;
  double singularity_margin = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

enum class SignConvention { Plus, Minus };

/// Residuals of the su(2) relations satisfied by
///   L+ = eps sum_j g_j a^dag b_j,  L- = eps sum_j g_j a b_j^dag,
///   L3 = (eps^2 / 2) (sum_j g_j^2 a^dag a - sum_ij g_i g_j b_i^dag b_j),
/// with eps = -i t, measured on the excitation blocks K <= n_max - 1.
struct AlgebraReport {
  double ladder_residual = 0.0;  // ||[L+, L-] - 2 L3||
  double weight_residual = 0.0;  // max of ||[L3, L+/-] -/+ s eps^2 G^2 L+/-|| for the recorded s
  double residual = 0.0;         // max of the two above
  double relative_residual = 0.0;
  double rejected_residual = 0.0;  // weight residual under the other sign
  SignConvention convention = SignConvention::Plus;
};

/// Distance from sqrt_gamma to the nearest odd multiple of pi.
double singularity_margin(double sqrt_gamma);

DenseOperator free_hamiltonian(const CouplerParams& params, const ModeLayout& layout);
DenseOperator interaction_hamiltonian(const CouplerParams& params, const ModeLayout& layout);

/// sum_j g_j a^dag b_j (moves one quantum from the outer modes into the centre).
DenseOperator collective_raising(const CouplerParams& params, const ModeLayout& layout);

/// H = w a^dag a + w sum_j b_j^dag b_j + sum_j g_j (b_j a^dag + a b_j^dag).
DenseOperator build_hamiltonian(const CouplerParams& params, const ModeLayout& layout);

DenseOperator exact_propagator(const CouplerParams& params, const ModeLayout& layout, double t);

/// f = tan(sqrt(gamma)/2)/sqrt(gamma), h = sin(sqrt(gamma))/sqrt(gamma).
/// Throws NearSingularityError within `guard` of a pole.
FactorCoefficients factor_coefficients(const CouplerParams& params, double t, double guard = kSingularityGuard);

/// e^{eps w N} e^{eps f X} e^{eps h X^dag} e^{eps f X} with X = sum_j g_j a^dag b_j
/// and eps = -i t.
DenseOperator factorized_propagator(const CouplerParams& params, const ModeLayout& layout, double t);

FactorizationReport verify_factorization(const CouplerParams& params, const ModeLayout& layout, double t,
                                         double tol);

AlgebraReport algebra_check(const CouplerParams& params, const ModeLayout& layout, double t);

}  // namespace bqc
