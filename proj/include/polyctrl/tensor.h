#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace polyctrl {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Multi-index (i_1, ..., i_k) into a k-mode tensor. Indices are 0-based in
// the C++ API; text formats and reports use 1-based indices.
using MultiIndex = std::vector<int>;

// Default limit on columns of an unfolding and on cells of a Kronecker power.
inline constexpr std::int64_t kDefaultCapacity = std::int64_t{1} << 26;

// Sparse k-mode, n-dimensional coefficient tensor of a homogeneous
// polynomial vector field f(x) = A x^{k-1}.
//
// Modes 1..k-1 are the tail (contracted) modes; mode k is the head mode, i.e.
// the coordinate of f that a coefficient contributes to. Stored coefficients
// are never exactly zero, so the stored support is the structural support.
class SparseTensor {
 public:
  using Entries = std::map<MultiIndex, double>;

  // Empty tensor of the given order and dimension.
  SparseTensor(int order, int dim);

  // Throws std::invalid_argument on out-of-range indices, wrong index length,
  // exact-zero coefficients or duplicate multi-indices.
  SparseTensor(int order, int dim,
               const std::vector<std::pair<MultiIndex, double>>& entries);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }

  // Entries in lexicographic multi-index order.
  const Entries& entries() const { return entries_; }

  double at(const MultiIndex& index) const;

  // Returns a copy with every coefficient multiplied by `factor` (non-zero).
  SparseTensor Scaled(double factor) const;

  friend bool operator==(const SparseTensor&, const SparseTensor&) = default;

 private:
  int order_;
  int dim_;
  Entries entries_;
};

// Column of the mode-k unfolding holding the coefficient at `index`: mode 1
// varies slowest and mode k-1 fastest.
std::int64_t UnfoldingColumn(const MultiIndex& index, int dim);

// Mode-k unfolding A_(k), n x n^{k-1}, with rows indexed by the head mode.
// Satisfies Unfold(T) * KronPower(x, k-1) == Contract(T, x).
DenseMatrix Unfold(const SparseTensor& tensor,
                   std::int64_t max_columns = kDefaultCapacity);

// Same unfolding in compressed sparse storage.
Eigen::SparseMatrix<double> UnfoldSparse(
    const SparseTensor& tensor, std::int64_t max_columns = kDefaultCapacity);

// f(x) = A x^{k-1}, computed on the stored entries.
Vector Contract(const SparseTensor& tensor, const Vector& x);

// Multilinear form A(v_1, ..., v_{k-1}); vector v_m binds tail mode m.
Vector ContractMulti(const SparseTensor& tensor, std::span<const Vector> vs);

// M (x) M (x) ... (x) M with r factors, first factor slowest-varying.
// Throws CapacityError when the result would exceed `max_cells` cells.
DenseMatrix KronPower(const DenseMatrix& m, int r,
                      std::int64_t max_cells = kDefaultCapacity);

// Averages coefficients over all orderings of the tail modes. The result
// defines the same polynomial (Contract is unchanged) but is symmetric in
// modes 1..k-1. Coefficients that cancel to exactly zero are dropped.
SparseTensor SymmetrizeTailModes(const SparseTensor& tensor);

}  // namespace polyctrl
