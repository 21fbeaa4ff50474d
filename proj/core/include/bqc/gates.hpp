#pragma once

#include <span>
#include <string>
#include <vector>

#include "bqc/fock.hpp"

namespace bqc {

/// Linear map on an n-qubit register. Basis order |j1 j2 ... jn> with j1 the
/// most significant bit, which matches ModeLayout (j1 <-> central mode).
///
/// The named constructors below always yield unitaries. Gates extracted from
/// a propagator restriction need not be unitary; see QubitGate::checked.
class QubitGate {
 public:
  QubitGate(std::string label, Matrix matrix);

  /// As the constructor, but throws NotUnitary unless ||U^dag U - I||_F <= tol.
  static QubitGate checked(std::string label, Matrix matrix, double tol = 1e-12);

  int qubit_count() const noexcept { return qubit_count_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const noexcept { return matrix_; }
  const std::string& label() const noexcept { return label_; }

  Vector diagonal() const { return matrix_.diagonal(); }
  double off_diagonal_norm() const;
  bool is_diagonal(double tol = 0.0) const { return off_diagonal_norm() <= tol; }
  bool is_unitary(double tol = 1e-12) const;

  Vector apply(const Vector& state) const;

 private:
  int qubit_count_;
  Matrix matrix_;
  std::string label_;
};

QubitGate identity_gate(int qubit_count);

/// diag(1, e^{i theta}).
QubitGate one_qubit_phase(double theta);

/// |m n> -> e^{i m n pi} |m n>, i.e. diag(1, 1, 1, -1).
QubitGate control_c_phase();

/// |m n> -> e^{i m pi} |m n>, i.e. diag(1, 1, -1, -1).
QubitGate control_phase_shift();

QubitGate swap_gate();

/// Phase e^{i theta} on |01> and |10>, identity on |00> and |11>.
QubitGate relative_phase_2(double theta);

/// |j1 j2 j3> -> e^{i pi (j1 - j2 - j3)} |j1 j2 j3>: -1 on odd parity.
QubitGate relative_phase_3();

/// Matrix product gates[0] * gates[1] * ...; the last gate acts first.
QubitGate compose(std::span<const QubitGate> gates);
QubitGate compose(std::initializer_list<QubitGate> gates);

struct PhaseEquivalence {
  bool equal = false;
  double phase = 0.0;
  double distance = 0.0;
};

/// A ~ e^{i phase} B within tol (phase-aligned Frobenius distance).
PhaseEquivalence equal_up_to_phase(const QubitGate& a, const QubitGate& b, double tol);

/// Frobenius distance without phase alignment.
double distance(const QubitGate& a, const QubitGate& b);

/// alpha|0> + beta|1> for one qubit.
Vector qubit_state(Complex alpha, Complex beta);

/// Tensor product, first factor most significant.
Vector product_state(std::span<const Vector> factors);
Vector product_state(std::initializer_list<Vector> factors);

}  // namespace bqc
