#include "polyctrl/polysystem.h"

#include <random>
#include <stdexcept>

namespace polyctrl {
namespace {

// Uniform on [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double UnitUniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double DrawCoefficient(std::mt19937_64& rng) {
  const bool negative = (rng() >> 63) != 0;
  const double magnitude = 0.5 + 1.5 * UnitUniform(rng);
  return negative ? -magnitude : magnitude;
}

void CheckOrderAndDims(int order, int dim, int inputs, long control_rows,
                       std::vector<Violation>& out) {
  if (order < 2) {
    out.push_back({Violation::Kind::kOrder,
                   "tensor order " + std::to_string(order) + " is below 2"});
  } else if (order % 2 != 0) {
    out.push_back({Violation::Kind::kParity,
                   "tensor order " + std::to_string(order) +
                       " is odd; the polynomial degree " +
                       std::to_string(order - 1) + " must be odd"});
  }
  if (control_rows != dim) {
    out.push_back({Violation::Kind::kDimension,
                   "control matrix has " + std::to_string(control_rows) +
                       " rows but the tensor dimension is " +
                       std::to_string(dim)});
  }
  if (inputs < 1) {
    out.push_back({Violation::Kind::kInputs, "system has no inputs"});
  }
}

void ThrowIfAny(const std::vector<Violation>& violations) {
  if (violations.empty()) return;
  std::string message;
  for (const Violation& v : violations) {
    if (!message.empty()) message += "; ";
    message += v.message;
  }
  throw std::invalid_argument(message);
}

}  // namespace

const char* ToString(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kOrder:
      return "order";
    case Violation::Kind::kParity:
      return "parity";
    case Violation::Kind::kDimension:
      return "dimension";
    case Violation::Kind::kInputs:
      return "inputs";
    case Violation::Kind::kIndexRange:
      return "index_range";
  }
  return "unknown";
}

SparsityPattern SparsityPatternOf(const Polysystem& system) {
  SparsityPattern pattern;
  pattern.order = system.order();
  pattern.dim = system.dim();
  pattern.inputs = system.inputs();
  for (const auto& [index, value] : system.tensor.entries()) {
    pattern.tensor_support.insert(index);
  }
  for (Eigen::Index i = 0; i < system.control.rows(); ++i) {
    for (Eigen::Index j = 0; j < system.control.cols(); ++j) {
      if (system.control(i, j) != 0.0) {
        pattern.control_support.emplace(static_cast<int>(i),
                                        static_cast<int>(j));
      }
    }
  }
  return pattern;
}

Polysystem SampleRealization(const SparsityPattern& pattern,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<MultiIndex, double>> entries;
  entries.reserve(pattern.tensor_support.size());
  for (const MultiIndex& index : pattern.tensor_support) {
    entries.emplace_back(index, DrawCoefficient(rng));
  }
  DenseMatrix control = DenseMatrix::Zero(pattern.dim, pattern.inputs);
  for (const auto& [row, col] : pattern.control_support) {
    control(row, col) = DrawCoefficient(rng);
  }
  return Polysystem{SparseTensor(pattern.order, pattern.dim, entries),
                    std::move(control)};
}

std::vector<Violation> Validate(const Polysystem& system) {
  std::vector<Violation> out;
  CheckOrderAndDims(system.order(), system.dim(), system.inputs(),
                    static_cast<long>(system.control.rows()), out);
  return out;
}

std::vector<Violation> Validate(const SparsityPattern& pattern) {
  std::vector<Violation> out;
  CheckOrderAndDims(pattern.order, pattern.dim, pattern.inputs, pattern.dim,
                    out);
  for (const MultiIndex& index : pattern.tensor_support) {
    bool ok = static_cast<int>(index.size()) == pattern.order;
    for (int i : index) ok = ok && i >= 0 && i < pattern.dim;
    if (!ok) {
      out.push_back({Violation::Kind::kIndexRange,
                     "tensor support entry outside the tensor shape"});
      break;
    }
  }
  for (const auto& [row, col] : pattern.control_support) {
    if (row < 0 || row >= pattern.dim || col < 0 || col >= pattern.inputs) {
      out.push_back({Violation::Kind::kIndexRange,
                     "control support entry (" + std::to_string(row + 1) +
                         ", " + std::to_string(col + 1) + ") out of range"});
      break;
    }
  }
  return out;
}

void RequireValid(const Polysystem& system) { ThrowIfAny(Validate(system)); }

void RequireValid(const SparsityPattern& pattern) {
  ThrowIfAny(Validate(pattern));
}

Polysystem Scaled(const Polysystem& system, double factor) {
  return Polysystem{system.tensor.Scaled(factor), system.control * factor};
}

}  // namespace polyctrl
