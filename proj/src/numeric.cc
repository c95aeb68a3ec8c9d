#include "polyctrl/numeric.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "polyctrl/error.h"

namespace polyctrl {
namespace {

struct Truncation {
  DenseMatrix basis;
  double tolerance;
};

Truncation TruncatedLeftBasis(const DenseMatrix& m, double tol) {
  const double rel =
      tol > 0.0 ? tol : AutomaticTolerance(m.rows(), m.cols());
  if (m.cols() == 0 || m.rows() == 0) {
    return {DenseMatrix::Zero(m.rows(), 0), rel};
  }
  Eigen::BDCSVD<DenseMatrix> svd(m, Eigen::ComputeThinU);
  const Vector& sigma = svd.singularValues();
  const double cutoff = rel * sigma(0);
  int rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  return {svd.matrixU().leftCols(rank), rel};
}

// L = A_(k) * (C (x) ... (x) C), assembled a block of Kronecker columns at a
// time so the dense n^{k-1} x s^{k-1} power is never formed whole.
DenseMatrix ExpandOnce(const Eigen::SparseMatrix<double>& unfolded,
                       const DenseMatrix& c, int factors,
                       std::int64_t capacity) {
  const Eigen::Index n = c.rows();
  const Eigen::Index s = c.cols();
  std::int64_t out_cols = 1;
  for (int i = 0; i < factors; ++i) {
    if (s != 0 && out_cols > capacity / s) {
      throw CapacityError("Kronecker expansion of " + std::to_string(s) +
                          " columns to order " + std::to_string(factors) +
                          " exceeds the capacity of " +
                          std::to_string(capacity));
    }
    out_cols *= s;
  }
  if (n != 0 && out_cols > capacity / n) {
    throw CapacityError("expansion block exceeds the capacity of " +
                        std::to_string(capacity));
  }
  const Eigen::Index kron_rows = unfolded.cols();
  DenseMatrix out(n, out_cols);
  if (out_cols == 0) return out;

  const std::int64_t block =
      std::clamp<std::int64_t>(capacity / std::max<Eigen::Index>(kron_rows, 1),
                               1, out_cols);
  DenseMatrix kron(kron_rows, block);
  std::vector<Eigen::Index> digits(factors, 0);  // factor 0 slowest
  for (std::int64_t start = 0; start < out_cols; start += block) {
    const std::int64_t width = std::min(block, out_cols - start);
    for (std::int64_t j = 0; j < width; ++j) {
      Vector column = c.col(digits[0]);
      for (int f = 1; f < factors; ++f) {
        Vector next(column.size() * n);
        for (Eigen::Index a = 0; a < column.size(); ++a) {
          next.segment(a * n, n) = column(a) * c.col(digits[f]);
        }
        column = std::move(next);
      }
      kron.col(j) = column;
      for (int f = factors - 1; f >= 0; --f) {
        if (++digits[f] < s) break;
        digits[f] = 0;
      }
    }
    out.middleCols(start, width) = unfolded * kron.leftCols(width);
  }
  return out;
}

}  // namespace

double AutomaticTolerance(Eigen::Index rows, Eigen::Index cols) {
  return static_cast<double>(std::max<Eigen::Index>({rows, cols, 1})) *
         std::numeric_limits<double>::epsilon();
}

int NumericalRank(const DenseMatrix& m, double tol) {
  return static_cast<int>(TruncatedLeftBasis(m, tol).basis.cols());
}

ReducedControllability ReducedControllabilityMatrix(
    const Polysystem& system, double tol, std::int64_t capacity,
    const IterationObserver& observer) {
  RequireValid(system);
  if (tol < 0.0) throw std::invalid_argument("tolerance must be >= 0");
  const int n = system.dim();
  const int factors = system.order() - 1;
  const Eigen::SparseMatrix<double> unfolded =
      UnfoldSparse(SymmetrizeTailModes(system.tensor), capacity);

  ReducedControllability result;
  // Start from an orthonormal basis of range(B) so that the scale of B does
  // not compete with the scale of the expansions under the relative cutoff.
  Truncation start = TruncatedLeftBasis(system.control, tol);
  DenseMatrix c = std::move(start.basis);
  result.tolerance = start.tolerance;
  int previous = -1;
  for (int j = 0; j < n; ++j) {
    const DenseMatrix l = ExpandOnce(unfolded, c, factors, capacity);
    DenseMatrix stacked(n, c.cols() + l.cols());
    stacked << c, l;
    Truncation t = TruncatedLeftBasis(stacked, tol);
    c = std::move(t.basis);
    result.tolerance = t.tolerance;
    result.iterations = j + 1;
    const int rank = static_cast<int>(c.cols());
    result.rank_history.push_back(rank);
    if (observer) observer(result.iterations, c);
    if (rank == n || rank == previous) break;
    previous = rank;
  }
  result.basis = std::move(c);
  return result;
}

RankReport StrongControllability(const Polysystem& system, double tol,
                                 std::int64_t capacity) {
  const ReducedControllability reduced =
      ReducedControllabilityMatrix(system, tol, capacity);
  RankReport report;
  report.rank = static_cast<int>(reduced.basis.cols());
  report.n = system.dim();
  report.strongly_controllable = report.rank == report.n;
  report.iterations = reduced.iterations;
  report.tolerance = reduced.tolerance;
  return report;
}

DenseMatrix ExplicitControllabilityMatrix(const Polysystem& system, int terms,
                                          std::int64_t capacity) {
  RequireValid(system);
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  const DenseMatrix unfolded =
      Unfold(SymmetrizeTailModes(system.tensor), capacity);
  const int factors = system.order() - 1;

  DenseMatrix out = system.control;
  for (int i = 1; i < terms; ++i) {
    const DenseMatrix block = unfolded * KronPower(out, factors, capacity);
    if (system.dim() != 0 &&
        out.cols() + block.cols() > capacity / system.dim()) {
      throw CapacityError("explicit controllability matrix exceeds " +
                          std::to_string(capacity) + " cells");
    }
    DenseMatrix grown(out.rows(), out.cols() + block.cols());
    grown << out, block;
    out = std::move(grown);
  }
  return out;
}

int ExplicitControllabilityRank(const Polysystem& system, int terms, double tol,
                                std::int64_t capacity) {
  RequireValid(system);
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  const DenseMatrix unfolded =
      Unfold(SymmetrizeTailModes(system.tensor), capacity);
  const int factors = system.order() - 1;
  const double a_norm = unfolded.norm();

  // bound(j) >= |column j|, and scales with the coefficients exactly as the
  // column does.
  DenseMatrix out = system.control;
  DenseMatrix bound = out.colwise().norm();
  for (int i = 1; i < terms; ++i) {
    const DenseMatrix block = unfolded * KronPower(out, factors, capacity);
    const DenseMatrix block_bound = a_norm * KronPower(bound, factors, capacity);
    if (system.dim() != 0 &&
        out.cols() + block.cols() > capacity / system.dim()) {
      throw CapacityError("explicit controllability matrix exceeds " +
                          std::to_string(capacity) + " cells");
    }
    DenseMatrix grown(out.rows(), out.cols() + block.cols());
    grown << out, block;
    out = std::move(grown);
    DenseMatrix grown_bound(1, bound.cols() + block_bound.cols());
    grown_bound << bound, block_bound;
    bound = std::move(grown_bound);
  }
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    if (bound(0, j) > 0.0) {
      out.col(j) /= bound(0, j);
    } else {
      out.col(j).setZero();
    }
  }
  return NumericalRank(out, tol);
}

}  // namespace polyctrl
