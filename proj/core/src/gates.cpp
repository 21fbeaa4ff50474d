#include "bqc/gates.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "bqc/error.hpp"
#include "bqc/matrix_engine.hpp"

namespace bqc {

namespace {

QubitGate diagonal_gate(std::string label, const Vector& diag) {
  return QubitGate(std::move(label), diag.asDiagonal().toDenseMatrix());
}

int parity(std::size_t bits) { return std::popcount(bits) & 1; }

// e^{i theta}, exact when theta is a multiple of pi/2.
Complex unit_phase(double theta) {
  const double quarter = theta / (std::numbers::pi / 2.0);
  const double nearest = std::round(quarter);
  if (std::abs(quarter - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(quarter))) {
    switch (((static_cast<long long>(nearest) % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, theta);
}

}  // namespace

QubitGate::QubitGate(std::string label, Matrix matrix) : qubit_count_(0), matrix_(std::move(matrix)), label_(std::move(label)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "gate matrix must be square");
  }
  const auto n = static_cast<std::size_t>(matrix_.rows());
  if (n < 2 || !std::has_single_bit(n)) {
    throw Error(ErrorCode::DimensionMismatch, "gate dimension " + std::to_string(n) + " is not 2^n with n >= 1");
  }
  qubit_count_ = std::countr_zero(n);
}

QubitGate QubitGate::checked(std::string label, Matrix matrix, double tol) {
  QubitGate gate(std::move(label), std::move(matrix));
  if (!gate.is_unitary(tol)) {
    throw Error(ErrorCode::NotUnitary, "gate '" + gate.label() + "' is not unitary");
  }
  return gate;
}

double QubitGate::off_diagonal_norm() const {
  Matrix off = matrix_;
  off.diagonal().setZero();
  return off.norm();
}

bool QubitGate::is_unitary(double tol) const { return bqc::is_unitary(matrix_, tol); }

Vector QubitGate::apply(const Vector& state) const {
  if (state.size() != matrix_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "state length does not match gate '" + label_ + "'");
  }
  return matrix_ * state;
}

QubitGate identity_gate(int qubit_count) {
  if (qubit_count < 1 || qubit_count > 12) {
    throw Error(ErrorCode::InvalidArgument, "qubit count must be in [1, 12]");
  }
  const Eigen::Index d = Eigen::Index{1} << qubit_count;
  return QubitGate("identity", Matrix::Identity(d, d));
}

QubitGate one_qubit_phase(double theta) {
  Vector d(2);
  d << 1.0, unit_phase(theta);
  return diagonal_gate("one_qubit_phase", d);
}

QubitGate control_c_phase() {
  Vector d(4);
  d << 1.0, 1.0, 1.0, -1.0;
  return diagonal_gate("control_c_phase", d);
}

QubitGate control_phase_shift() {
  Vector d(4);
  d << 1.0, 1.0, -1.0, -1.0;
  return diagonal_gate("control_phase_shift", d);
}

QubitGate swap_gate() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return QubitGate("swap", std::move(m));
}

QubitGate relative_phase_2(double theta) {
  const Complex p = unit_phase(theta);
  Vector d(4);
  d << 1.0, p, p, 1.0;
  return diagonal_gate("relative_phase_2", d);
}

QubitGate relative_phase_3() {
  Vector d(8);
  for (std::size_t bits = 0; bits < 8; ++bits) {
    const int j1 = static_cast<int>((bits >> 2) & 1U);
    const int j2 = static_cast<int>((bits >> 1) & 1U);
    const int j3 = static_cast<int>(bits & 1U);
    // e^{i pi (j1 - j2 - j3)} is +-1; evaluate the sign exactly.
    const int exponent = j1 - j2 - j3;
    d(static_cast<Eigen::Index>(bits)) = (exponent % 2 == 0) ? 1.0 : -1.0;
  }
  QubitGate gate = diagonal_gate("relative_phase_3", d);
  for (std::size_t bits = 0; bits < 8; ++bits) {
    const double expected = parity(bits) ? -1.0 : 1.0;
    if (gate.matrix()(static_cast<Eigen::Index>(bits), static_cast<Eigen::Index>(bits)) != Complex(expected)) {
      throw Error(ErrorCode::InvalidArgument, "relative_phase_3 parity self-test failed");
    }
  }
  return gate;
}

QubitGate compose(std::span<const QubitGate> gates) {
  if (gates.empty()) {
    throw Error(ErrorCode::InvalidArgument, "compose needs at least one gate");
  }
  Matrix product = gates.front().matrix();
  std::string label = gates.front().label();
  for (std::size_t i = 1; i < gates.size(); ++i) {
    if (gates[i].dimension() != gates.front().dimension()) {
      throw Error(ErrorCode::DimensionMismatch, "cannot compose '" + gates[i].label() + "' with '" +
                                                    gates.front().label() + "'");
    }
    product = product * gates[i].matrix();
    label += "*" + gates[i].label();
  }
  return QubitGate(std::move(label), std::move(product));
}

QubitGate compose(std::initializer_list<QubitGate> gates) {
  return compose(std::span<const QubitGate>(gates.begin(), gates.size()));
}

PhaseEquivalence equal_up_to_phase(const QubitGate& a, const QubitGate& b, double tol) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "gates act on different registers");
  }
  const PhaseAlignedDistance pd = phase_distance(a.matrix(), b.matrix());
  return {pd.distance <= tol, pd.phase, pd.distance};
}

double distance(const QubitGate& a, const QubitGate& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "gates act on different registers");
  }
  return (a.matrix() - b.matrix()).norm();
}

Vector qubit_state(Complex alpha, Complex beta) {
  Vector v(2);
  v << alpha, beta;
  return v;
}

Vector product_state(std::span<const Vector> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::InvalidArgument, "product_state needs at least one factor");
  }
  Vector out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const Vector& f = factors[i];
    Vector next(out.size() * f.size());
    for (Eigen::Index r = 0; r < out.size(); ++r) {
      next.segment(r * f.size(), f.size()) = out(r) * f;
    }
    out = std::move(next);
  }
  return out;
}

Vector product_state(std::initializer_list<Vector> factors) {
  return product_state(std::span<const Vector>(factors.begin(), factors.size()));
}

}  // namespace bqc
