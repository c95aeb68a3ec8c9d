#pragma once

#include <map>
#include <vector>

#include "polyctrl/polysystem.h"

namespace polyctrl::oracle {

// Exponent vector of a monomial, one entry per state variable.
using Exponents = std::vector<int>;
using Polynomial = std::map<Exponents, double>;

// Polynomial vector field on R^n. Zero coefficients are never stored, so two
// fields compare equal iff they are the same polynomial map.
class PolyVectorField {
 public:
  explicit PolyVectorField(int dim);

  // Adds coeff * x^exponents to component `i`, merging like monomials.
  void AddTerm(int i, const Exponents& exponents, double coeff);

  int dim() const { return static_cast<int>(components_.size()); }
  const Polynomial& component(int i) const { return components_[i]; }
  bool is_zero() const;

  // Total degree when every monomial has the same degree; -1 for the zero
  // field or mixed degrees.
  int homogeneous_degree() const;

  Vector Evaluate(const Vector& x) const;
  Vector AtOrigin() const;

  PolyVectorField operator-(const PolyVectorField& other) const;
  PolyVectorField operator+(const PolyVectorField& other) const;
  PolyVectorField operator*(double scale) const;

  friend bool operator==(const PolyVectorField&,
                         const PolyVectorField&) = default;

 private:
  std::vector<Polynomial> components_;
};

// Drift f(x) = A x^{k-1} as an explicit polynomial field.
PolyVectorField DriftField(const SparseTensor& tensor);

// Constant field b(x) = column j of B.
PolyVectorField ConstantField(const DenseMatrix& control, int column);

// [f, g](x) = Dg(x) f(x) - Df(x) g(x). Throws std::invalid_argument on a
// dimension mismatch.
PolyVectorField LieBracket(const PolyVectorField& f, const PolyVectorField& g);

struct LieRankResult {
  int rank = 0;            // dim span{h(0) : h in the generated algebra}
  bool saturated = false;  // a bracketing round produced nothing new
  int basis_size = 0;
  int depth = 0;           // bracketing rounds performed
};

inline constexpr int kLieMaxDim = 4;
inline constexpr int kLieMaxOrder = 4;

// Rank at the origin of the Lie algebra generated by {f, b_1, ..., b_m}.
// Brackets are generated breadth-first: every newly independent field is
// bracketed with every field kept so far, until a round adds nothing (saturated) or
// `depth_cap` rounds have run. Only fields of degree <= k-1 are retained;
// bracketing with a constant field differentiates and lowers the degree by
// one, so the constants reachable from f and B all lie in that range. The
// retained space is finite and depth_cap == 0 selects its dimension, which
// always saturates. Requires n <= 4 and k <= 4, otherwise throws
// CapacityError.
LieRankResult LieAlgebraRankAtOrigin(const Polysystem& system,
                                     int depth_cap = 0);

}  // namespace polyctrl::oracle
