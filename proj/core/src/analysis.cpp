#include "bqc/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bqc/error.hpp"
#include "bqc/matrix_engine.hpp"

namespace bqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNormalizationTol = 1e-10;

void require_computational_room(const ModeLayout& layout) {
  if (layout.n_max() < layout.mode_count()) {
    throw Error(ErrorCode::TruncationTooSmall, "n_max = " + std::to_string(layout.n_max()) +
                                                   " must be >= mode count " +
                                                   std::to_string(layout.mode_count()) +
                                                   " so every computational state is represented exactly");
  }
}

std::vector<int> bits_of(std::size_t value, int width) {
  std::vector<int> bits(static_cast<std::size_t>(width));
  for (int k = 0; k < width; ++k) {
    bits[static_cast<std::size_t>(k)] = static_cast<int>((value >> (width - 1 - k)) & 1U);
  }
  return bits;
}

Matrix computational_restriction(const DenseOperator& propagator) {
  return propagator.restrict_to(computational_indices(propagator.layout()));
}

}  // namespace

GateTimeSpec gate_time(const CouplerParams& params, int k) {
  params.validate();
  if (k < 1) {
    throw Error(ErrorCode::InvalidArgument, "winding k must be >= 1");
  }
  if (!params.has_equal_couplings()) {
    throw Error(ErrorCode::UnequalCouplings, "gate times are defined for equal couplings only");
  }
  const double g = std::abs(params.couplings.front());
  if (g == 0.0) {
    throw Error(ErrorCode::InvalidParams, "gate times need a non-zero coupling");
  }
  const double collective = params.coupling_norm();
  GateTimeSpec spec;
  spec.k = k;
  spec.t = 2.0 * kPi * k / collective;
  spec.c_effective = 2.0 * kPi / (spec.t * g);

  const double free_phase = params.w * spec.t;
  const double m = std::round((free_phase / kPi - 1.0) / 2.0);
  const double mismatch = std::abs(free_phase - (2.0 * m + 1.0) * kPi);
  if (m < 0.0 || mismatch > kFreePhaseTol) {
    throw Error(ErrorCode::FreePhaseMismatch, "w t = " + std::to_string(free_phase) +
                                                  " is not a positive odd multiple of pi (off by " +
                                                  std::to_string(mismatch) + ")");
  }
  spec.m = static_cast<int>(m);
  return spec;
}

std::vector<std::size_t> computational_indices(const ModeLayout& layout) {
  const int modes = layout.mode_count();
  const std::size_t count = std::size_t{1} << modes;
  std::vector<std::size_t> indices;
  indices.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    indices.push_back(layout.index_of(bits_of(bits, modes)));
  }
  return indices;
}

TruthTable truth_table(const DenseOperator& propagator) {
  const ModeLayout& layout = propagator.layout();
  require_computational_room(layout);
  const std::vector<std::size_t> comp = computational_indices(layout);
  const int modes = layout.mode_count();

  std::vector<bool> is_comp(layout.dimension(), false);
  for (std::size_t idx : comp) is_comp[idx] = true;

  TruthTable table;
  for (std::size_t col = 0; col < comp.size(); ++col) {
    const std::size_t in = comp[col];
    const Complex amp = propagator(in, in);
    TruthRow row;
    row.input = bits_of(col, modes);
    row.fidelity = std::abs(amp);
    row.phase = row.fidelity > 0.0 ? amp / row.fidelity : Complex(0.0);
    table.rows.push_back(std::move(row));

    // Mass outside the computational set equals 1 - (mass inside) for a
    // unitary propagator; summing it directly avoids sqrt of a rounding residue.
    double outside = 0.0;
    double off_pattern = 0.0;
    for (std::size_t out = 0; out < layout.dimension(); ++out) {
      const double p = std::norm(propagator(out, in));
      if (!is_comp[out]) {
        outside += p;
      } else if (out != in) {
        off_pattern += p;
      }
    }
    const double escaped = std::sqrt(outside);
    table.leakage = std::max(table.leakage, escaped + std::sqrt(off_pattern));
  }
  return table;
}

TruthTable truth_table(const CouplerParams& params, const ModeLayout& layout, double t) {
  require_computational_room(layout);
  return truth_table(exact_propagator(params, layout, t));
}

ExtractedGate extract_gate(const DenseOperator& propagator) {
  require_computational_room(propagator.layout());
  Matrix r = computational_restriction(propagator);
  const double leakage = (r.adjoint() * r - Matrix::Identity(r.rows(), r.cols())).norm();
  return {QubitGate("extracted", std::move(r)), leakage};
}

ExtractedGate extract_gate(const CouplerParams& params, const ModeLayout& layout, double t) {
  require_computational_room(layout);
  return extract_gate(exact_propagator(params, layout, t));
}

std::vector<QubitGate> reference_gates(int qubit_count) {
  std::vector<QubitGate> out;
  out.push_back(identity_gate(qubit_count));
  if (qubit_count == 2) {
    out.push_back(relative_phase_2(kPi));
    out.push_back(control_c_phase());
    out.push_back(control_phase_shift());
    out.push_back(swap_gate());
  } else if (qubit_count == 3) {
    out.push_back(relative_phase_3());
  }
  return out;
}

std::vector<ScanHit> scan_times(const CouplerParams& params, const ModeLayout& layout, double t_min, double t_max,
                                int steps, double tol) {
  if (!(t_min < t_max)) {
    throw Error(ErrorCode::InvalidArgument, "scan needs t_min < t_max");
  }
  if (steps < 2) {
    throw Error(ErrorCode::InvalidArgument, "scan needs at least 2 steps");
  }
  require_computational_room(layout);
  const std::vector<QubitGate> family = reference_gates(layout.mode_count());

  // Diagonalize once; each grid point is then a phase rescaling.
  const DenseOperator hamiltonian = build_hamiltonian(params, layout);
  const Matrix h = 0.5 * (hamiltonian.matrix() + hamiltonian.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigenFailure, "Hermitian eigensolver did not converge");
  }
  const std::vector<std::size_t> comp = computational_indices(layout);
  Matrix basis_rows(static_cast<Eigen::Index>(comp.size()), solver.eigenvectors().cols());
  for (std::size_t i = 0; i < comp.size(); ++i) {
    basis_rows.row(static_cast<Eigen::Index>(i)) = solver.eigenvectors().row(static_cast<Eigen::Index>(comp[i]));
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();

  std::vector<ScanHit> hits;
  const double step = (t_max - t_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double t = (i == steps - 1) ? t_max : t_min + step * i;
    Vector phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) phases(k) = std::polar(1.0, -t * lambda(k));
    const Matrix r = basis_rows * phases.asDiagonal() * basis_rows.adjoint();
    const double leakage = (r.adjoint() * r - Matrix::Identity(r.rows(), r.cols())).norm();
    if (leakage > tol) continue;

    const QubitGate candidate("extracted", r);
    const QubitGate* best = nullptr;
    double best_distance = std::numeric_limits<double>::infinity();
    for (const QubitGate& ref : family) {
      const double d = equal_up_to_phase(candidate, ref, tol).distance;
      if (d < best_distance) {
        best_distance = d;
        best = &ref;
      }
    }
    if (best != nullptr && best_distance <= tol) {
      hits.push_back({t, best->label(), best_distance});
    }
  }
  return hits;
}

bool matches_relative_phase_pattern(const TruthTable& table, double tol) {
  if (table.leakage > tol) return false;
  for (const TruthRow& row : table.rows) {
    const int ones = static_cast<int>(std::count(row.input.begin(), row.input.end(), 1));
    const Complex expected = (ones % 2 == 0) ? 1.0 : -1.0;
    if (row.fidelity < 1.0 - tol) return false;
    if (std::abs(row.phase - expected) > tol) return false;
  }
  return true;
}

SchmidtResult schmidt(const StateVector& state, int cut) {
  const ModeLayout& layout = state.layout();
  if (cut < 1 || cut >= layout.mode_count()) {
    throw Error(ErrorCode::InvalidArgument, "cut " + std::to_string(cut) + " must lie in [1, " +
                                                std::to_string(layout.mode_count() - 1) + "]");
  }
  const double n = norm(state);
  if (std::abs(n - 1.0) > kNormalizationTol) {
    throw Error(ErrorCode::NotNormalized, "state norm is " + std::to_string(n));
  }
  Eigen::Index right = 1;
  for (int k = cut; k < layout.mode_count(); ++k) right *= layout.cutoff();
  const Eigen::Index left = static_cast<Eigen::Index>(layout.dimension()) / right;

  // Row-major reshape: row = leading modes, column = trailing modes.
  Matrix psi(left, right);
  for (Eigen::Index r = 0; r < left; ++r) {
    for (Eigen::Index c = 0; c < right; ++c) psi(r, c) = state.amplitudes()(r * right + c);
  }
  Eigen::JacobiSVD<Matrix> svd(psi);
  SchmidtResult result;
  const Eigen::VectorXd& sigma = svd.singularValues();
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    const double s = sigma(k);
    result.singular_values.push_back(s);
    const double p = s * s;
    if (p > 0.0) result.entropy_bits -= p * std::log2(p);
  }
  result.entropy_bits = std::max(0.0, result.entropy_bits);
  return result;
}

StateVector register_state(const Vector& amplitudes) {
  const auto n = static_cast<std::size_t>(amplitudes.size());
  if (n < 2 || !std::has_single_bit(n)) {
    throw Error(ErrorCode::DimensionMismatch, "register length must be 2^n");
  }
  return StateVector(ModeLayout(std::countr_zero(n), 2), amplitudes);
}

}  // namespace bqc
