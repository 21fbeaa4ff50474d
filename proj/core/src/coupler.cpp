#include "bqc/coupler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bqc/error.hpp"
#include "bqc/matrix_engine.hpp"

namespace bqc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_layout(const CouplerParams& params, const ModeLayout& layout) {
  params.validate();
  if (layout.mode_count() != params.mode_count() || layout.n_max() != params.n_max) {
    throw Error(ErrorCode::LayoutMismatch,
                "layout has " + std::to_string(layout.mode_count()) + " modes with n_max " +
                    std::to_string(layout.n_max()) + ", params need " + std::to_string(params.mode_count()) +
                    " modes with n_max " + std::to_string(params.n_max));
  }
}

DenseOperator zero(const ModeLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dimension());
  return DenseOperator(layout, Matrix::Zero(d, d));
}

// sum_ij g_i g_j b_i^dag b_j
DenseOperator outer_mode_bilinear(const CouplerParams& params, const ModeLayout& layout) {
  const int n = params.n_outer();
  std::vector<DenseOperator> lowering;
  lowering.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) lowering.push_back(annihilation(layout, j));
  DenseOperator out = zero(layout);
  for (int i = 0; i < n; ++i) {
    const DenseOperator raise_i = adjoint(lowering[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      const double weight = params.couplings[static_cast<std::size_t>(i)] * params.couplings[static_cast<std::size_t>(j)];
      if (weight == 0.0) continue;
      out = out + Complex(weight) * (raise_i * lowering[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace

CouplerParams CouplerParams::equal_couplings(int n_outer, double g, double w, int n_max) {
  if (n_outer < 1) {
    throw Error(ErrorCode::InvalidParams, "n_outer must be >= 1");
  }
  CouplerParams p;
  p.couplings.assign(static_cast<std::size_t>(n_outer), g);
  p.w = w;
  p.n_max = n_max;
  p.validate();
  return p;
}

double CouplerParams::coupling_norm() const {
  double sum = 0.0;
  for (double g : couplings) sum += g * g;
  return std::sqrt(sum);
}

double CouplerParams::gamma(double t) const {
  const double g = coupling_norm();
  return t * t * g * g;
}

bool CouplerParams::has_equal_couplings(double rel_tol) const {
  if (couplings.empty()) return false;
  const double ref = couplings.front();
  return std::all_of(couplings.begin(), couplings.end(),
                     [&](double g) { return std::abs(g - ref) <= rel_tol * std::max(1.0, std::abs(ref)); });
}

ModeLayout CouplerParams::layout() const {
  validate();
  return ModeLayout::with_truncation(mode_count(), n_max);
}

void CouplerParams::validate() const {
  if (couplings.empty()) {
    throw Error(ErrorCode::InvalidParams, "at least one outer mode is required");
  }
  if (!std::all_of(couplings.begin(), couplings.end(), [](double g) { return std::isfinite(g); })) {
    throw Error(ErrorCode::InvalidParams, "couplings must be finite");
  }
  if (!std::isfinite(w)) {
    throw Error(ErrorCode::InvalidParams, "w must be finite");
  }
  if (n_max < 1) {
    throw Error(ErrorCode::InvalidParams, "n_max must be >= 1");
  }
}

double singularity_margin(double sqrt_gamma) {
  const double x = std::abs(sqrt_gamma);
  // Nearest odd multiple (2m+1) pi with m >= 0.
  const double m = std::max(0.0, std::round((x / kPi - 1.0) / 2.0));
  return std::abs(x - (2.0 * m + 1.0) * kPi);
}

DenseOperator free_hamiltonian(const CouplerParams& params, const ModeLayout& layout) {
  require_layout(params, layout);
  return Complex(params.w) * total_number(layout);
}

DenseOperator collective_raising(const CouplerParams& params, const ModeLayout& layout) {
  require_layout(params, layout);
  const DenseOperator a_dag = creation(layout, 0);
  DenseOperator out = zero(layout);
  for (int j = 1; j <= params.n_outer(); ++j) {
    const double g = params.couplings[static_cast<std::size_t>(j - 1)];
    if (g == 0.0) continue;
    out = out + Complex(g) * (a_dag * annihilation(layout, j));
  }
  return out;
}

DenseOperator interaction_hamiltonian(const CouplerParams& params, const ModeLayout& layout) {
  const DenseOperator raising = collective_raising(params, layout);
  return raising + adjoint(raising);
}

DenseOperator build_hamiltonian(const CouplerParams& params, const ModeLayout& layout) {
  return free_hamiltonian(params, layout) + interaction_hamiltonian(params, layout);
}

DenseOperator exact_propagator(const CouplerParams& params, const ModeLayout& layout, double t) {
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::NonFinite, "time must be finite");
  }
  return expm_hermitian(build_hamiltonian(params, layout), t);
}

FactorCoefficients factor_coefficients(const CouplerParams& params, double t, double guard) {
  params.validate();
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::NonFinite, "time must be finite");
  }
  const double root = std::abs(t) * params.coupling_norm();
  const double margin = singularity_margin(root);
  if (margin <= guard) {
    throw NearSingularityError(margin, "sqrt(gamma) = " + std::to_string(root) +
                                           " lies within " + std::to_string(margin) +
                                           " of an odd multiple of pi; tan(sqrt(gamma)/2) diverges");
  }
  FactorCoefficients c;
  c.sqrt_gamma = root;
  if (root < kSmallGammaCutoff) {
    const double x2 = root * root;
    c.f = 0.5 + x2 / 24.0 + x2 * x2 / 240.0;
    c.h = 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  } else {
    c.f = std::tan(root / 2.0) / root;
    c.h = std::sin(root) / root;
  }
  return c;
}

DenseOperator factorized_propagator(const CouplerParams& params, const ModeLayout& layout, double t) {
  require_layout(params, layout);
  const FactorCoefficients c = factor_coefficients(params, t);
  const Complex eps(0.0, -t);
  const DenseOperator raising = collective_raising(params, layout);
  const DenseOperator lowering = adjoint(raising);

  const DenseOperator free_part = expm_hermitian(free_hamiltonian(params, layout), t);
  const DenseOperator outer = expm_general((eps * c.f) * raising);
  const DenseOperator middle = expm_general((eps * c.h) * lowering);
  return free_part * outer * middle * outer;
}

FactorizationReport verify_factorization(const CouplerParams& params, const ModeLayout& layout, double t,
                                         double tol) {
  const DenseOperator factorized = factorized_propagator(params, layout, t);
  const DenseOperator exact = exact_propagator(params, layout, t);
  const double root = std::abs(t) * params.coupling_norm();

  FactorizationReport report;
  report.sqrt_gamma = root;
  report.singularity_margin = singularity_margin(root);
  report.tolerance = tol;
  for (const auto& block : excitation_blocks(layout)) {
    if (block.total > layout.n_max()) break;
    const double d = (exact.restrict_to(block.indices) - factorized.restrict_to(block.indices)).norm();
    report.blocks.push_back({block.total, d});
    report.max_block_distance = std::max(report.max_block_distance, d);
  }
  report.passed = report.max_block_distance <= tol;
  return report;
}

AlgebraReport algebra_check(const CouplerParams& params, const ModeLayout& layout, double t) {
  require_layout(params, layout);
  const Complex eps(0.0, -t);
  const Complex eps2 = eps * eps;
  const double g2 = params.coupling_norm() * params.coupling_norm();

  const DenseOperator raising = collective_raising(params, layout);
  const DenseOperator l_plus = eps * raising;
  const DenseOperator l_minus = eps * adjoint(raising);
  const DenseOperator l3 =
      (0.5 * eps2) * (Complex(g2) * number_operator(layout, 0) - outer_mode_bilinear(params, layout));

  const int safe = layout.n_max() - 1;
  const DenseOperator ladder = commutator(l_plus, l_minus) - Complex(2.0) * l3;
  const DenseOperator weight_plus = commutator(l3, l_plus);
  const DenseOperator weight_minus = commutator(l3, l_minus);

  auto weight_residual = [&](double sign) {
    const double r_plus = max_block_norm(weight_plus - (sign * eps2 * g2) * l_plus, safe);
    const double r_minus = max_block_norm(weight_minus + (sign * eps2 * g2) * l_minus, safe);
    return std::max(r_plus, r_minus);
  };

  AlgebraReport report;
  report.ladder_residual = max_block_norm(ladder, safe);
  const double plus = weight_residual(1.0);
  const double minus = weight_residual(-1.0);
  report.convention = plus <= minus ? SignConvention::Plus : SignConvention::Minus;
  report.weight_residual = std::min(plus, minus);
  report.rejected_residual = std::max(plus, minus);
  report.residual = std::max(report.ladder_residual, report.weight_residual);

  const double scale = std::max({max_block_norm(l_plus, safe) * max_block_norm(l_minus, safe),
                                 max_block_norm(l3, safe) * max_block_norm(l_plus, safe),
                                 std::numeric_limits<double>::min()});
  report.relative_residual = report.residual / scale;
  return report;
}

}  // namespace bqc
