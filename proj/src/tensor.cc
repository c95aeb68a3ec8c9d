#include "polyctrl/tensor.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polyctrl/error.h"

namespace polyctrl {
namespace {

// n^e, or -1 once the value exceeds `limit`.
std::int64_t CappedPower(std::int64_t base, int exponent, std::int64_t limit) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > limit / base) return -1;
    result *= base;
  }
  return result > limit ? -1 : result;
}

std::int64_t UnfoldedColumns(const SparseTensor& tensor,
                             std::int64_t max_columns) {
  const std::int64_t cols =
      CappedPower(tensor.dim(), tensor.order() - 1, max_columns);
  if (cols < 0) {
    throw CapacityError("unfolding needs " + std::to_string(tensor.dim()) +
                        "^" + std::to_string(tensor.order() - 1) +
                        " columns, above the limit of " +
                        std::to_string(max_columns));
  }
  return cols;
}

}  // namespace

SparseTensor::SparseTensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 2) throw std::invalid_argument("tensor order must be >= 2");
  if (dim < 1) throw std::invalid_argument("tensor dimension must be >= 1");
}

SparseTensor::SparseTensor(
    int order, int dim,
    const std::vector<std::pair<MultiIndex, double>>& entries)
    : SparseTensor(order, dim) {
  for (const auto& [index, value] : entries) {
    if (static_cast<int>(index.size()) != order) {
      throw std::invalid_argument("multi-index has " +
                                  std::to_string(index.size()) +
                                  " entries, expected " + std::to_string(order));
    }
    for (int i : index) {
      if (i < 0 || i >= dim) {
        throw std::invalid_argument("tensor index " + std::to_string(i + 1) +
                                    " outside [1, " + std::to_string(dim) +
                                    "]");
      }
    }
    if (value == 0.0) {
      throw std::invalid_argument("tensor coefficient is exactly zero");
    }
    if (!entries_.emplace(index, value).second) {
      throw std::invalid_argument("duplicate tensor multi-index");
    }
  }
}

double SparseTensor::at(const MultiIndex& index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? 0.0 : it->second;
}

SparseTensor SparseTensor::Scaled(double factor) const {
  if (factor == 0.0) throw std::invalid_argument("scale factor is zero");
  SparseTensor out(order_, dim_);
  for (const auto& [index, value] : entries_) {
    out.entries_.emplace(index, value * factor);
  }
  return out;
}

std::int64_t UnfoldingColumn(const MultiIndex& index, int dim) {
  std::int64_t col = 0;
  for (std::size_t m = 0; m + 1 < index.size(); ++m) col = col * dim + index[m];
  return col;
}

DenseMatrix Unfold(const SparseTensor& tensor, std::int64_t max_columns) {
  const std::int64_t cols = UnfoldedColumns(tensor, max_columns);
  DenseMatrix out = DenseMatrix::Zero(tensor.dim(), cols);
  for (const auto& [index, value] : tensor.entries()) {
    out(index.back(), UnfoldingColumn(index, tensor.dim())) = value;
  }
  return out;
}

Eigen::SparseMatrix<double> UnfoldSparse(const SparseTensor& tensor,
                                         std::int64_t max_columns) {
  const std::int64_t cols = UnfoldedColumns(tensor, max_columns);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(tensor.nnz());
  for (const auto& [index, value] : tensor.entries()) {
    triplets.emplace_back(index.back(),
                          static_cast<int>(UnfoldingColumn(index, tensor.dim())),
                          value);
  }
  Eigen::SparseMatrix<double> out(tensor.dim(), static_cast<int>(cols));
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

Vector Contract(const SparseTensor& tensor, const Vector& x) {
  if (x.size() != tensor.dim()) {
    throw std::invalid_argument("contract: vector length " +
                                std::to_string(x.size()) + " != dimension " +
                                std::to_string(tensor.dim()));
  }
  Vector out = Vector::Zero(tensor.dim());
  for (const auto& [index, value] : tensor.entries()) {
    double term = value;
    for (std::size_t m = 0; m + 1 < index.size(); ++m) term *= x(index[m]);
    out(index.back()) += term;
  }
  return out;
}

Vector ContractMulti(const SparseTensor& tensor, std::span<const Vector> vs) {
  if (static_cast<int>(vs.size()) != tensor.order() - 1) {
    throw std::invalid_argument("contract_multi: expected " +
                                std::to_string(tensor.order() - 1) +
                                " vectors, got " + std::to_string(vs.size()));
  }
  for (const Vector& v : vs) {
    if (v.size() != tensor.dim()) {
      throw std::invalid_argument("contract_multi: vector length mismatch");
    }
  }
  Vector out = Vector::Zero(tensor.dim());
  for (const auto& [index, value] : tensor.entries()) {
    double term = value;
    for (std::size_t m = 0; m + 1 < index.size(); ++m) term *= vs[m](index[m]);
    out(index.back()) += term;
  }
  return out;
}

DenseMatrix KronPower(const DenseMatrix& m, int r, std::int64_t max_cells) {
  if (r < 1) throw std::invalid_argument("Kronecker power must be >= 1");
  const std::int64_t rows = CappedPower(m.rows(), r, max_cells);
  const std::int64_t cols = CappedPower(m.cols(), r, max_cells);
  if (rows < 0 || cols < 0 || (cols != 0 && rows > max_cells / cols)) {
    throw CapacityError("Kronecker power of a " + std::to_string(m.rows()) +
                        "x" + std::to_string(m.cols()) + " matrix to order " +
                        std::to_string(r) + " exceeds " +
                        std::to_string(max_cells) + " cells");
  }
  DenseMatrix acc = m;
  for (int i = 1; i < r; ++i) {
    DenseMatrix next(acc.rows() * m.rows(), acc.cols() * m.cols());
    for (Eigen::Index a = 0; a < acc.rows(); ++a) {
      for (Eigen::Index b = 0; b < acc.cols(); ++b) {
        next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) =
            acc(a, b) * m;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

SparseTensor SymmetrizeTailModes(const SparseTensor& tensor) {
  // Sum coefficients per (sorted tail, head) first so that exact cancellation
  // yields an exact zero.
  std::map<MultiIndex, double> grouped;
  for (const auto& [index, value] : tensor.entries()) {
    MultiIndex key = index;
    std::sort(key.begin(), key.end() - 1);
    grouped[key] += value;
  }
  std::vector<std::pair<MultiIndex, double>> out;
  for (auto& [key, total] : grouped) {
    if (total == 0.0) continue;
    MultiIndex tail(key.begin(), key.end() - 1);
    std::vector<MultiIndex> orderings;
    do {
      orderings.push_back(tail);
    } while (std::next_permutation(tail.begin(), tail.end()));
    const double share = total / static_cast<double>(orderings.size());
    for (MultiIndex& ordering : orderings) {
      ordering.push_back(key.back());
      out.emplace_back(std::move(ordering), share);
    }
  }
  return SparseTensor(tensor.order(), tensor.dim(), out);
}

}  // namespace polyctrl
