#pragma once

#include "quadnet/matrix.hpp"
#include "quadnet/polynomial.hpp"

#include <array>
#include <vector>

namespace quadnet {

/// Integer one-parameter subgroup weights summing to zero.
struct WeightVector {
  std::vector<int> weights;
  bool normalized = false;

  /// Validates the zero sum and sets `normalized` when nonincreasing.
  static WeightVector of(std::vector<int> w);

  std::size_t size() const { return weights.size(); }
  int operator[](std::size_t i) const { return weights[i]; }
  bool isZero() const;
  bool operator==(const WeightVector&) const = default;
};

/// The 21 quadratic monomials in 6 variables, lex-descending (x0^2 first).
const std::vector<Monomial>& quadraticMonomials();

/// Index of a degree-2 monomial in quadraticMonomials().
std::size_t quadraticIndex(const Monomial& m);

/// A net of quadrics: three quadratic forms in x0..x5 spanning a plane.
class Net {
public:
  /// Throws InvalidInput unless all three are quadratic forms in 6 variables
  /// with linearly independent coefficient vectors.
  Net(Polynomial q1, Polynomial q2, Polynomial q3);
  explicit Net(const RatMatrix& coefficients);

  const std::array<Polynomial, 3>& quadrics() const { return quadrics_; }
  const Polynomial& operator[](std::size_t i) const { return quadrics_[i]; }

  /// 3 x 21 coefficient matrix, columns in quadraticMonomials() order.
  const RatMatrix& coefficientMatrix() const { return coefficients_; }

  /// The net after the coordinate change x -> M x.
  Net transformed(const RatMatrix& m) const;

  bool operator==(const Net& rhs) const { return quadrics_ == rhs.quadrics_; }

private:
  std::array<Polynomial, 3> quadrics_;
  RatMatrix coefficients_;
};

/// Parses three quadrics given in the polynomial text form.
Net parseNet(const std::string& q1, const std::string& q2, const std::string& q3);

} // namespace quadnet
