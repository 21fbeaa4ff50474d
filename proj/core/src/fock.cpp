#include "bqc/fock.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "bqc/error.hpp"

namespace bqc {

namespace {

// Dense D x D complex storage is the limiting resource.
constexpr std::size_t kMaxDimension = std::size_t{1} << 13;

void require_same_layout(const ModeLayout& a, const ModeLayout& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::LayoutMismatch, std::string(what) + ": operands live on different layouts");
  }
}

}  // namespace

ModeLayout::ModeLayout(int mode_count, int cutoff) : mode_count_(mode_count), cutoff_(cutoff), dimension_(1) {
  if (mode_count < 1) {
    throw Error(ErrorCode::InvalidLayout, "mode count must be >= 1, got " + std::to_string(mode_count));
  }
  if (cutoff < 2) {
    throw Error(ErrorCode::InvalidLayout, "cutoff must be >= 2, got " + std::to_string(cutoff));
  }
  for (int k = 0; k < mode_count; ++k) {
    dimension_ *= static_cast<std::size_t>(cutoff);
    if (dimension_ > kMaxDimension) {
      throw Error(ErrorCode::InvalidLayout, "dimension exceeds " + std::to_string(kMaxDimension));
    }
  }
}

void ModeLayout::check_mode(int mode) const {
  if (mode < 0 || mode >= mode_count_) {
    throw Error(ErrorCode::ModeOutOfRange,
                "mode " + std::to_string(mode) + " not in [0, " + std::to_string(mode_count_) + ")");
  }
}

std::size_t ModeLayout::stride(int mode) const {
  check_mode(mode);
  std::size_t s = 1;
  for (int k = mode + 1; k < mode_count_; ++k) s *= static_cast<std::size_t>(cutoff_);
  return s;
}

std::size_t ModeLayout::index_of(const std::vector<int>& occupations) const {
  if (occupations.size() != static_cast<std::size_t>(mode_count_)) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(mode_count_) + " occupations, got " +
                                               std::to_string(occupations.size()));
  }
  std::size_t index = 0;
  for (int n : occupations) {
    if (n < 0 || n >= cutoff_) {
      throw Error(ErrorCode::OccupationOutOfRange,
                  "occupation " + std::to_string(n) + " outside [0, " + std::to_string(n_max()) + "]");
    }
    index = index * static_cast<std::size_t>(cutoff_) + static_cast<std::size_t>(n);
  }
  return index;
}

std::vector<int> ModeLayout::occupations_of(std::size_t index) const {
  if (index >= dimension_) {
    throw Error(ErrorCode::OccupationOutOfRange, "flat index " + std::to_string(index) + " out of range");
  }
  std::vector<int> occ(static_cast<std::size_t>(mode_count_));
  for (int k = mode_count_ - 1; k >= 0; --k) {
    occ[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(cutoff_));
    index /= static_cast<std::size_t>(cutoff_);
  }
  return occ;
}

int ModeLayout::occupation(std::size_t index, int mode) const {
  return static_cast<int>((index / stride(mode)) % static_cast<std::size_t>(cutoff_));
}

int ModeLayout::total_occupation(std::size_t index) const {
  int total = 0;
  for (std::size_t rest = index; rest > 0; rest /= static_cast<std::size_t>(cutoff_)) {
    total += static_cast<int>(rest % static_cast<std::size_t>(cutoff_));
  }
  return total;
}

StateVector::StateVector(ModeLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != layout_.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "state length " + std::to_string(amplitudes_.size()) +
                                                  " does not match layout dimension " +
                                                  std::to_string(layout_.dimension()));
  }
}

DenseOperator::DenseOperator(ModeLayout layout, Matrix entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  const auto d = static_cast<Eigen::Index>(layout_.dimension());
  if (entries_.rows() != d || entries_.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "operator is " + std::to_string(entries_.rows()) + "x" +
                                                  std::to_string(entries_.cols()) + ", layout needs " +
                                                  std::to_string(d));
  }
}

Matrix DenseOperator::restrict_to(const std::vector<std::size_t>& indices) const {
  const auto n = static_cast<Eigen::Index>(indices.size());
  Matrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      out(r, c) = entries_(static_cast<Eigen::Index>(indices[static_cast<std::size_t>(r)]),
                           static_cast<Eigen::Index>(indices[static_cast<std::size_t>(c)]));
    }
  }
  return out;
}

StateVector basis_state(const ModeLayout& layout, const std::vector<int>& occupations) {
  const std::size_t index = layout.index_of(occupations);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.dimension()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(layout, std::move(v));
}

DenseOperator identity(const ModeLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dimension());
  return DenseOperator(layout, Matrix::Identity(d, d));
}

DenseOperator annihilation(const ModeLayout& layout, int mode) {
  const std::size_t stride = layout.stride(mode);
  const auto d = static_cast<Eigen::Index>(layout.dimension());
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    const int n = layout.occupation(i, mode);
    if (n > 0) {
      m(static_cast<Eigen::Index>(i - stride), static_cast<Eigen::Index>(i)) = std::sqrt(static_cast<double>(n));
    }
  }
  return DenseOperator(layout, std::move(m));
}

DenseOperator creation(const ModeLayout& layout, int mode) { return adjoint(annihilation(layout, mode)); }

DenseOperator number_operator(const ModeLayout& layout, int mode) {
  const auto d = static_cast<Eigen::Index>(layout.dimension());
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = layout.occupation(i, mode);
  }
  return DenseOperator(layout, std::move(m));
}

DenseOperator total_number(const ModeLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dimension());
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = layout.total_occupation(i);
  }
  return DenseOperator(layout, std::move(m));
}

std::vector<ExcitationBlock> excitation_blocks(const ModeLayout& layout) {
  const int max_total = layout.mode_count() * layout.n_max();
  std::vector<ExcitationBlock> blocks(static_cast<std::size_t>(max_total + 1));
  for (int k = 0; k <= max_total; ++k) blocks[static_cast<std::size_t>(k)].total = k;
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    blocks[static_cast<std::size_t>(layout.total_occupation(i))].indices.push_back(i);
  }
  return blocks;
}

StateVector apply(const DenseOperator& op, const StateVector& state) {
  require_same_layout(op.layout(), state.layout(), "apply");
  return StateVector(state.layout(), op.matrix() * state.amplitudes());
}

DenseOperator adjoint(const DenseOperator& op) { return DenseOperator(op.layout(), op.matrix().adjoint()); }

DenseOperator matmul(const DenseOperator& lhs, const DenseOperator& rhs) {
  require_same_layout(lhs.layout(), rhs.layout(), "matmul");
  return DenseOperator(lhs.layout(), lhs.matrix() * rhs.matrix());
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  require_same_layout(bra.layout(), ket.layout(), "inner_product");
  return bra.amplitudes().dot(ket.amplitudes());
}

double norm(const StateVector& state) { return state.amplitudes().norm(); }

DenseOperator operator+(const DenseOperator& lhs, const DenseOperator& rhs) {
  require_same_layout(lhs.layout(), rhs.layout(), "operator+");
  return DenseOperator(lhs.layout(), lhs.matrix() + rhs.matrix());
}

DenseOperator operator-(const DenseOperator& lhs, const DenseOperator& rhs) {
  require_same_layout(lhs.layout(), rhs.layout(), "operator-");
  return DenseOperator(lhs.layout(), lhs.matrix() - rhs.matrix());
}

DenseOperator operator*(const DenseOperator& lhs, const DenseOperator& rhs) { return matmul(lhs, rhs); }

DenseOperator operator*(Complex scale, const DenseOperator& op) {
  return DenseOperator(op.layout(), scale * op.matrix());
}

DenseOperator commutator(const DenseOperator& lhs, const DenseOperator& rhs) {
  return lhs * rhs - rhs * lhs;
}

double max_block_norm(const DenseOperator& op, int max_total) {
  double worst = 0.0;
  for (const auto& block : excitation_blocks(op.layout())) {
    if (block.total > max_total) break;
    worst = std::max(worst, op.restrict_to(block.indices).norm());
  }
  return worst;
}

double off_block_norm(const DenseOperator& op) {
  const ModeLayout& layout = op.layout();
  std::vector<int> totals(layout.dimension());
  for (std::size_t i = 0; i < layout.dimension(); ++i) totals[i] = layout.total_occupation(i);
  double sum = 0.0;
  for (std::size_t r = 0; r < layout.dimension(); ++r) {
    for (std::size_t c = 0; c < layout.dimension(); ++c) {
      if (totals[r] != totals[c]) sum += std::norm(op(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace bqc
