#include "polyctrl/lie.h"

#include <stdexcept>
#include <string>

#include "polyctrl/error.h"
#include "polyctrl/numeric.h"

namespace polyctrl::oracle {
namespace {

constexpr double kIndependenceTolerance = 1e-10;

void AddInto(Polynomial& p, const Exponents& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = p.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0.0) p.erase(it);
}

Polynomial Derivative(const Polynomial& p, int var) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    AddInto(out, d, c * e[var]);
  }
  return out;
}

// acc += sign * p * q
void AddProduct(Polynomial& acc, const Polynomial& p, const Polynomial& q,
                double sign) {
  for (const auto& [ep, cp] : p) {
    for (const auto& [eq, cq] : q) {
      Exponents e = ep;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eq[i];
      AddInto(acc, e, sign * cp * cq);
    }
  }
}

int DegreeOf(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Coordinates of homogeneous fields of degree <= max_degree: one slot per
// (component, monomial).
class MonomialIndex {
 public:
  MonomialIndex(int dim, int max_degree) : dim_(dim) {
    Exponents e(dim, 0);
    Enumerate(e, 0, max_degree);
    size_ = static_cast<int>(slots_.size()) * dim;
  }

  int size() const { return size_; }

  Vector Coordinates(const PolyVectorField& f) const {
    Vector v = Vector::Zero(size_);
    for (int i = 0; i < dim_; ++i) {
      for (const auto& [e, c] : f.component(i)) {
        v(slots_.at(e) * dim_ + i) = c;
      }
    }
    return v;
  }

 private:
  void Enumerate(Exponents& e, int var, int budget) {
    if (var == dim_) {
      slots_.emplace(e, static_cast<int>(slots_.size()));
      return;
    }
    for (int p = 0; p <= budget; ++p) {
      e[var] = p;
      Enumerate(e, var + 1, budget - p);
    }
    e[var] = 0;
  }

  int dim_;
  int size_ = 0;
  std::map<Exponents, int> slots_;
};

// Incremental orthonormal basis; Gram-Schmidt applied twice.
class SpanTracker {
 public:
  bool AddIfIndependent(const Vector& v) {
    const double norm = v.norm();
    if (norm == 0.0) return false;
    Vector r = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& q : basis_) r -= q.dot(r) * q;
    }
    const double residual = r.norm();
    if (residual <= kIndependenceTolerance * norm) return false;
    basis_.push_back(r / residual);
    return true;
  }

 private:
  std::vector<Vector> basis_;
};

}  // namespace

PolyVectorField::PolyVectorField(int dim) : components_(dim) {
  if (dim < 1) throw std::invalid_argument("vector field dimension must be >= 1");
}

void PolyVectorField::AddTerm(int i, const Exponents& exponents, double coeff) {
  if (i < 0 || i >= dim()) throw std::invalid_argument("component out of range");
  if (static_cast<int>(exponents.size()) != dim()) {
    throw std::invalid_argument("exponent vector has wrong length");
  }
  AddInto(components_[i], exponents, coeff);
}

bool PolyVectorField::is_zero() const {
  for (const Polynomial& p : components_) {
    if (!p.empty()) return false;
  }
  return true;
}

int PolyVectorField::homogeneous_degree() const {
  int degree = -1;
  for (const Polynomial& p : components_) {
    for (const auto& [e, c] : p) {
      const int d = DegreeOf(e);
      if (degree >= 0 && d != degree) return -1;
      degree = d;
    }
  }
  return degree;
}

Vector PolyVectorField::Evaluate(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("point has wrong dimension");
  Vector out = Vector::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    for (const auto& [e, c] : components_[i]) {
      double term = c;
      for (int v = 0; v < dim(); ++v) {
        for (int p = 0; p < e[v]; ++p) term *= x(v);
      }
      out(i) += term;
    }
  }
  return out;
}

Vector PolyVectorField::AtOrigin() const {
  Vector out = Vector::Zero(dim());
  const Exponents zero(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    auto it = components_[i].find(zero);
    if (it != components_[i].end()) out(i) = it->second;
  }
  return out;
}

PolyVectorField PolyVectorField::operator+(const PolyVectorField& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  PolyVectorField out = *this;
  for (int i = 0; i < dim(); ++i) {
    for (const auto& [e, c] : other.components_[i]) {
      AddInto(out.components_[i], e, c);
    }
  }
  return out;
}

PolyVectorField PolyVectorField::operator-(const PolyVectorField& other) const {
  return *this + other * -1.0;
}

PolyVectorField PolyVectorField::operator*(double scale) const {
  PolyVectorField out(dim());
  if (scale == 0.0) return out;
  for (int i = 0; i < dim(); ++i) {
    for (const auto& [e, c] : components_[i]) {
      out.components_[i].emplace(e, c * scale);
    }
  }
  return out;
}

PolyVectorField DriftField(const SparseTensor& tensor) {
  PolyVectorField f(tensor.dim());
  for (const auto& [index, value] : tensor.entries()) {
    Exponents e(tensor.dim(), 0);
    for (std::size_t m = 0; m + 1 < index.size(); ++m) ++e[index[m]];
    f.AddTerm(index.back(), e, value);
  }
  return f;
}

PolyVectorField ConstantField(const DenseMatrix& control, int column) {
  PolyVectorField b(static_cast<int>(control.rows()));
  const Exponents zero(control.rows(), 0);
  for (Eigen::Index i = 0; i < control.rows(); ++i) {
    b.AddTerm(static_cast<int>(i), zero, control(i, column));
  }
  return b;
}

PolyVectorField LieBracket(const PolyVectorField& f, const PolyVectorField& g) {
  if (f.dim() != g.dim()) {
    throw std::invalid_argument("Lie bracket of fields on R^" +
                                std::to_string(f.dim()) + " and R^" +
                                std::to_string(g.dim()));
  }
  const int n = f.dim();
  PolyVectorField out(n);
  for (int i = 0; i < n; ++i) {
    Polynomial acc;
    for (int j = 0; j < n; ++j) {
      AddProduct(acc, Derivative(g.component(i), j), f.component(j), 1.0);
      AddProduct(acc, Derivative(f.component(i), j), g.component(j), -1.0);
    }
    for (const auto& [e, c] : acc) out.AddTerm(i, e, c);
  }
  return out;
}

LieRankResult LieAlgebraRankAtOrigin(const Polysystem& system, int depth_cap) {
  RequireValid(system);
  const int n = system.dim();
  if (n > kLieMaxDim || system.order() > kLieMaxOrder) {
    throw CapacityError("Lie algebra oracle limited to n <= " +
                        std::to_string(kLieMaxDim) + " and k <= " +
                        std::to_string(kLieMaxOrder));
  }
  if (depth_cap < 0) throw std::invalid_argument("depth cap must be >= 0");
  const int max_degree = system.order() - 1;
  const MonomialIndex index(n, max_degree);
  if (depth_cap == 0) depth_cap = index.size();

  std::vector<PolyVectorField> generators;
  const PolyVectorField drift = DriftField(system.tensor);
  if (!drift.is_zero()) generators.push_back(drift);
  for (int j = 0; j < system.inputs(); ++j) {
    PolyVectorField b = ConstantField(system.control, j);
    if (!b.is_zero()) generators.push_back(std::move(b));
  }

  SpanTracker span;
  std::vector<PolyVectorField> basis;
  std::vector<PolyVectorField> frontier;
  auto consider = [&](PolyVectorField field) {
    if (field.is_zero()) return;
    const int degree = field.homogeneous_degree();
    if (degree < 0 || degree > max_degree) return;
    if (!span.AddIfIndependent(index.Coordinates(field))) return;
    basis.push_back(field);
    frontier.push_back(std::move(field));
  };
  for (const PolyVectorField& g : generators) consider(g);

  LieRankResult result;
  while (!frontier.empty() && result.depth < depth_cap) {
    std::vector<PolyVectorField> current = std::move(frontier);
    frontier.clear();
    // Pair with the whole basis, not only the generators: the degree cut
    // drops the intermediate brackets a generator-only expansion would need.
    for (const PolyVectorField& x : current) {
      const std::size_t known = basis.size();
      for (std::size_t i = 0; i < known; ++i) {
        consider(LieBracket(basis[i], x));
      }
    }
    ++result.depth;
  }
  result.saturated = frontier.empty();
  result.basis_size = static_cast<int>(basis.size());

  DenseMatrix values(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    values.col(static_cast<Eigen::Index>(i)) = basis[i].AtOrigin();
  }
  result.rank = NumericalRank(values, kIndependenceTolerance);
  return result;
}

}  // namespace polyctrl::oracle
