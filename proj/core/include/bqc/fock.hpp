#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace bqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Mode set of a truncated multimode Fock space.
///
/// Mode 0 is the central mode (operator a) and the most significant tensor
/// factor; outer modes 1..M-1 (operators b_j) follow in index order. Each mode
/// keeps occupations 0..cutoff-1. The flat index of (n_0, ..., n_{M-1}) is
/// sum_k n_k * cutoff^(M-1-k).
class ModeLayout {
 public:
  ModeLayout(int mode_count, int cutoff);

  static ModeLayout with_truncation(int mode_count, int n_max) {
    return ModeLayout(mode_count, n_max + 1);
  }

  int mode_count() const noexcept { return mode_count_; }
  int cutoff() const noexcept { return cutoff_; }
  int n_max() const noexcept { return cutoff_ - 1; }
  std::size_t dimension() const noexcept { return dimension_; }

  /// Index distance between neighbouring occupations of `mode`.
  std::size_t stride(int mode) const;

  std::size_t index_of(const std::vector<int>& occupations) const;
  std::vector<int> occupations_of(std::size_t index) const;
  int occupation(std::size_t index, int mode) const;
  int total_occupation(std::size_t index) const;

  bool operator==(const ModeLayout&) const = default;

 private:
  void check_mode(int mode) const;

  int mode_count_;
  int cutoff_;
  std::size_t dimension_;
};

class StateVector {
 public:
  StateVector(ModeLayout layout, Vector amplitudes);

  const ModeLayout& layout() const noexcept { return layout_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  ModeLayout layout_;
  Vector amplitudes_;
};

class DenseOperator {
 public:
  DenseOperator(ModeLayout layout, Matrix entries);

  const ModeLayout& layout() const noexcept { return layout_; }
  const Matrix& matrix() const noexcept { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  /// Submatrix on the given (row and column) basis indices.
  Matrix restrict_to(const std::vector<std::size_t>& indices) const;

 private:
  ModeLayout layout_;
  Matrix entries_;
};

struct ExcitationBlock {
  int total = 0;
  std::vector<std::size_t> indices;
};

StateVector basis_state(const ModeLayout& layout, const std::vector<int>& occupations);

DenseOperator identity(const ModeLayout& layout);
DenseOperator annihilation(const ModeLayout& layout, int mode);
DenseOperator creation(const ModeLayout& layout, int mode);
DenseOperator number_operator(const ModeLayout& layout, int mode);
DenseOperator total_number(const ModeLayout& layout);

/// Basis indices grouped by total occupation K, ascending in K and in index.
std::vector<ExcitationBlock> excitation_blocks(const ModeLayout& layout);

StateVector apply(const DenseOperator& op, const StateVector& state);
DenseOperator adjoint(const DenseOperator& op);
DenseOperator matmul(const DenseOperator& lhs, const DenseOperator& rhs);
Complex inner_product(const StateVector& bra, const StateVector& ket);
double norm(const StateVector& state);

DenseOperator operator+(const DenseOperator& lhs, const DenseOperator& rhs);
DenseOperator operator-(const DenseOperator& lhs, const DenseOperator& rhs);
DenseOperator operator*(const DenseOperator& lhs, const DenseOperator& rhs);
DenseOperator operator*(Complex scale, const DenseOperator& op);
DenseOperator commutator(const DenseOperator& lhs, const DenseOperator& rhs);

/// Largest Frobenius norm over the diagonal blocks with total occupation <= max_total.
double max_block_norm(const DenseOperator& op, int max_total);

/// Frobenius mass of entries coupling different excitation blocks.
double off_block_norm(const DenseOperator& op);

}  // namespace bqc
