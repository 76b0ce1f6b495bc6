#pragma once

#include "quadnet/polynomial.hpp"

#include <optional>
#include <vector>

namespace quadnet {

/// a / b when b divides a exactly (lex division), otherwise nullopt.
std::optional<Polynomial> divideExact(const Polynomial& a, const Polynomial& b);

/// Same as divideExact but throws InvariantViolation on a remainder.
Polynomial quotient(const Polynomial& a, const Polynomial& b);

/// Associate normal form: integer coefficients with content 1 and a positive
/// lex-leading coefficient. Zero maps to zero.
Polynomial normalizeAssociate(const Polynomial& p);

/// Greatest common divisor over Q, in associate normal form. gcd(p, 0) is
/// the normalized p; gcd of two nonzero constants is 1.
Polynomial multivariateGcd(const Polynomial& p, const Polynomial& q);
Polynomial multivariateGcd(const std::vector<Polynomial>& ps);

/// Product of the distinct irreducible factors, normalized. Throws on zero.
Polynomial squarefreePart(const Polynomial& p);

/// factors[k] is the product of irreducible factors of multiplicity exactly
/// k+1 (possibly 1). p equals a constant times prod factors[k]^(k+1).
std::vector<Polynomial> squarefreeDecomposition(const Polynomial& p);

/// s with s*s == p and positive lex-leading coefficient, if one exists.
std::optional<Polynomial> perfectSquareRoot(const Polynomial& p);

/// Coefficients of p as a polynomial in `var` (index = power of var).
std::vector<Polynomial> coefficientsIn(const Polynomial& p, int var);

/// Sylvester resultant eliminating `var`, via fraction-free elimination.
Polynomial resultant(const Polynomial& p, const Polynomial& q, int var);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Polynomial bareissDeterminant(std::vector<std::vector<Polynomial>> m);

/// Rational roots of a univariate polynomial given by dense coefficients.
/// `complete` is true when the squarefree part splits into rational linear
/// factors, i.e. no irrational or complex root was left out.
struct RootSet {
  std::vector<Rational> roots;
  bool complete = true;
};
RootSet rationalRoots(const std::vector<Rational>& coeffs);

/// Dense coefficients of a polynomial that only involves `var`.
std::vector<Rational> denseUnivariate(const Polynomial& p, int var);

} // namespace quadnet
