#include "bqc/matrix_engine.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "bqc/error.hpp"

namespace bqc {

namespace {

constexpr double kHermitianTol = 1e-10;

// Below this |tr(V^dagger U)| the optimal phase is treated as undefined.
constexpr double kTraceFloor = 1e-300;

double one_norm(const Matrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

// Pade numerator/denominator coefficients b_0..b_m and the 1-norm bound
// theta_m below which degree m reaches double-precision backward error.
struct PadeDegree {
  int m;
  double theta;
};

constexpr std::array<PadeDegree, 4> kLowDegrees{{
    {3, 1.495585217958292e-2},
    {5, 2.539398330063230e-1},
    {7, 9.504178996162932e-1},
    {9, 2.097847961257068e0},
}};
constexpr double kTheta13 = 5.371920351148152e0;

constexpr std::array<double, 4> kB3{120., 60., 12., 1.};
constexpr std::array<double, 6> kB5{30240., 15120., 3360., 420., 30., 1.};
constexpr std::array<double, 8> kB7{17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
constexpr std::array<double, 10> kB9{17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                                     2162160.,     110880.,     3960.,       90.,        1.};
constexpr std::array<double, 14> kB13{64764752532480000., 32382376266240000., 7771770303897600.,
                                      1187353796428800.,  129060195264000.,   10559470521600.,
                                      670442572800.,      33522128640.,       1323241920.,
                                      40840800.,          960960.,            16380.,
                                      182.,               1.};

template <std::size_t N>
void pade_low(const Matrix& a, const std::array<double, N>& b, Matrix& u, Matrix& v) {
  const Eigen::Index n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  Matrix power = id;  // a^(2j)
  Matrix odd = Matrix::Zero(n, n);
  v = Matrix::Zero(n, n);
  for (std::size_t j = 0; 2 * j + 1 < N; ++j) {
    v += b[2 * j] * power;
    odd += b[2 * j + 1] * power;
    power = power * a2;
  }
  u = a * odd;
}

void pade_13(const Matrix& a, Matrix& u, Matrix& v) {
  const auto& b = kB13;
  const Eigen::Index n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  u = a * (inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const Matrix inner_v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  v = inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

Matrix solve_pade(const Matrix& u, const Matrix& v) {
  const Matrix q = v - u;
  const Matrix p = v + u;
  Eigen::PartialPivLU<Matrix> lu(q);
  Matrix r = lu.solve(p);
  if (!r.allFinite()) {
    throw Error(ErrorCode::ConvergenceFailure, "Pade denominator is singular");
  }
  return r;
}

}  // namespace

bool is_hermitian(const Matrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).norm() <= tol * std::max(1.0, h.norm());
}

Matrix expm_hermitian(const Matrix& hamiltonian, double t) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "expm_hermitian needs a square matrix");
  }
  if (!hamiltonian.allFinite() || !std::isfinite(t)) {
    throw Error(ErrorCode::NonFinite, "expm_hermitian input is not finite");
  }
  if (!is_hermitian(hamiltonian, kHermitianTol)) {
    throw Error(ErrorCode::NotHermitian,
                "||H - H^dagger||_F = " + std::to_string((hamiltonian - hamiltonian.adjoint()).norm()));
  }
  if (t == 0.0) return Matrix::Identity(hamiltonian.rows(), hamiltonian.cols());
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Matrix h = 0.5 * (hamiltonian + hamiltonian.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigenFailure, "Hermitian eigensolver did not converge");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  Vector phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k) = std::polar(1.0, -t * lambda(k));
  }
  const Matrix& basis = solver.eigenvectors();
  return basis * phases.asDiagonal() * basis.adjoint();
}

DenseOperator expm_hermitian(const DenseOperator& hamiltonian, double t) {
  return DenseOperator(hamiltonian.layout(), expm_hermitian(hamiltonian.matrix(), t));
}

Matrix expm_general(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "expm_general needs a square matrix");
  }
  if (!a.allFinite()) {
    throw Error(ErrorCode::NonFinite, "expm_general input has non-finite entries");
  }
  const Eigen::Index n = a.rows();
  if (n == 0) return a;

  const double norm1 = one_norm(a);
  Matrix u;
  Matrix v;
  for (const auto& degree : kLowDegrees) {
    if (norm1 <= degree.theta) {
      switch (degree.m) {
        case 3: pade_low(a, kB3, u, v); break;
        case 5: pade_low(a, kB5, u, v); break;
        case 7: pade_low(a, kB7, u, v); break;
        default: pade_low(a, kB9, u, v); break;
      }
      return solve_pade(u, v);
    }
  }

  int squarings = 0;
  if (norm1 > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  }
  if (squarings > 1000) {
    throw Error(ErrorCode::ConvergenceFailure, "norm too large for scaling and squaring");
  }
  const Matrix scaled = a * std::ldexp(1.0, -squarings);
  pade_13(scaled, u, v);
  Matrix r = solve_pade(u, v);
  for (int s = 0; s < squarings; ++s) {
    r = r * r;
  }
  if (!r.allFinite()) {
    throw Error(ErrorCode::ConvergenceFailure, "matrix exponential overflowed");
  }
  return r;
}

DenseOperator expm_general(const DenseOperator& a) { return DenseOperator(a.layout(), expm_general(a.matrix())); }

PhaseAlignedDistance phase_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "phase_distance operands differ in shape");
  }
  const Complex overlap = (v.adjoint() * u).trace();
  if (std::abs(overlap) <= kTraceFloor) {
    return {std::sqrt(u.squaredNorm() + v.squaredNorm()), 0.0};
  }
  double phase = std::arg(overlap);
  if (phase <= -std::numbers::pi) phase = std::numbers::pi;
  // Direct evaluation; the closed form ||U||^2 + ||V||^2 - 2|tr| cancels badly near zero.
  const double distance = (u - std::polar(1.0, phase) * v).norm();
  return {distance, phase};
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

}  // namespace bqc
