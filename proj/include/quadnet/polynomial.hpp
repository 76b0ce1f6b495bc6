#pragma once

#include "quadnet/matrix.hpp"
#include "quadnet/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadnet {

inline constexpr int kMaxVars = 6;

/// Exponent vector. The arity lives on the owning polynomial; unused slots
/// stay zero. Ordering is lex with x0 most significant.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  static Monomial fromExponents(std::span<const int> e);

  int degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& rhs) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotientOf(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariant: no stored zero coefficients, and every monomial uses only the
/// first arity() slots. Equality is equality of the term maps.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(int arity = 1);

  static Polynomial constant(int arity, const Rational& c);
  static Polynomial variable(int arity, int index);
  static Polynomial term(int arity, const Monomial& m, const Rational& c);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// -1 for the zero polynomial.
  int totalDegree() const;
  /// Lowest total degree of a term; -1 for zero.
  int order() const;
  int degreeIn(int var) const;
  bool isHomogeneous() const;

  Rational coefficient(const Monomial& m) const;
  void addTerm(const Monomial& m, const Rational& c);

  /// Lex-greatest term. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leadingTerm() const;

  Polynomial homogeneousPart(int degree) const;
  Polynomial truncated(int maxDegree) const;

  Rational evaluate(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

  bool operator==(const Polynomial& rhs) const;

private:
  void checkArity(const Polynomial& rhs) const;

  int arity_;
  Terms terms_;
};

/// Multiplication keeping only terms of total degree <= maxDegree.
Polynomial multiplyTruncated(const Polynomial& a, const Polynomial& b, int maxDegree);

Polynomial power(const Polynomial& p, int e);

/// Substitute x_i -> images[i]; the result has the arity of the images.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// p composed with x -> M x, i.e. x_i -> sum_j M(i,j) x_j.
Polynomial substituteLinear(const Polynomial& p, const RatMatrix& m);

Polynomial partialDerivative(const Polynomial& p, int var);

/// Variable names: x,y,z for arity 3, u,v for arity 2, x0..x5 otherwise.
std::string variableName(int arity, int index);

/// Text form "c*x0^2*x1 + c*..." with every coefficient printed as p/q.
std::string toText(const Polynomial& p);

/// Parses the text form. Accepts both the short names above and x0..x5.
Polynomial parsePolynomial(std::string_view text, int arity);

} // namespace quadnet
