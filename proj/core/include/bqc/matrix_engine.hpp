#pragma once

#include "bqc/fock.hpp"

namespace bqc {

/// Frobenius distance between U and e^{i phase} V at the optimal global phase.
struct PhaseAlignedDistance {
  double distance = 0.0;
  double phase = 0.0;  // in (-pi, pi]
};

/// e^{-i t H} for Hermitian H via eigendecomposition. Throws NotHermitian when
/// ||H - H^dagger||_F exceeds 1e-10 * max(1, ||H||_F).
Matrix expm_hermitian(const Matrix& hamiltonian, double t);
DenseOperator expm_hermitian(const DenseOperator& hamiltonian, double t);

/// General matrix exponential: scaling and squaring with a diagonal Pade
/// kernel of degree 3, 5, 7, 9 or 13 chosen from the 1-norm.
Matrix expm_general(const Matrix& a);
DenseOperator expm_general(const DenseOperator& a);

/// Minimizes ||U - e^{i phi} V||_F over phi. When tr(V^dagger U) vanishes the
/// minimizer is not unique; phi = 0 is reported with the raw distance.
PhaseAlignedDistance phase_distance(const Matrix& u, const Matrix& v);

bool is_unitary(const Matrix& u, double tol);

bool is_hermitian(const Matrix& h, double tol);

}  // namespace bqc
