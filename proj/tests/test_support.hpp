#pragma once

#include "quadnet/matrix.hpp"
#include "quadnet/polynomial.hpp"

#include <doctest.h>

#include <random>

namespace quadnet::testing {

inline Polynomial P(const char* text, int arity) { return parsePolynomial(text, arity); }

inline Rational smallRational(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 2);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random polynomial with up to `terms` terms of total degree <= maxDegree.
inline Polynomial randomPolynomial(std::mt19937_64& rng, int arity, int maxDegree, int terms) {
  Polynomial p(arity);
  std::uniform_int_distribution<int> deg(0, maxDegree);
  std::uniform_int_distribution<int> var(0, arity - 1);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m.exp[static_cast<std::size_t>(var(rng))];
    p.addTerm(m, smallRational(rng));
  }
  return p;
}

inline Polynomial randomHomogeneous(std::mt19937_64& rng, int arity, int degree, int terms) {
  Polynomial p(arity);
  std::uniform_int_distribution<int> var(0, arity - 1);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < degree; ++k) ++m.exp[static_cast<std::size_t>(var(rng))];
    p.addTerm(m, smallRational(rng));
  }
  return p;
}

inline RatMatrix randomInvertible(std::mt19937_64& rng, std::size_t n, int bound = 2) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  while (true) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    if (sgn(determinant(m)) != 0) return m;
  }
}

} // namespace quadnet::testing

namespace doctest {
template <> struct StringMaker<quadnet::Polynomial> {
  static String convert(const quadnet::Polynomial& p) { return quadnet::toText(p).c_str(); }
};
template <> struct StringMaker<quadnet::Rational> {
  static String convert(const quadnet::Rational& q) { return quadnet::toText(q).c_str(); }
};
} // namespace doctest

#include "quadnet/net.hpp"

namespace quadnet::testing {

inline Net segreNet() { return parseNet("x0*x3 - x1*x2", "x0*x5 - x1*x4", "x2*x5 - x3*x4"); }
inline Net example1Net() {
  return parseNet("2*x0*x4 + 2*x1*x3", "2*x0*x5 + 2*x1*x4 + 2*x2*x3", "2*x1*x5 - 2*x2*x4");
}
inline Net fermatNet() { return parseNet("x0^2 + x3^2", "x1^2 + x4^2", "x2^2 + x5^2"); }
inline Net diagonalNet() {
  return parseNet("x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2", "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2 + 5*x5^2",
                  "x1^2 + 4*x2^2 + 9*x3^2 + 16*x4^2 + 25*x5^2");
}
inline Net x5Net() { return parseNet("x0*x5", "x1*x5", "x2*x5"); }

/// Random net with coefficients in [-bound, bound]; each coefficient is
/// nonzero with probability density/10.
inline Net randomNet(std::mt19937_64& rng, int bound = 3, int density = 4) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::uniform_int_distribution<int> keep(0, 9);
  while (true) {
    RatMatrix m(3, 21);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 21; ++c)
        if (keep(rng) < density) m(r, c) = coeff(rng);
    if (rank(m) == 3) return Net(m);
  }
}

inline std::vector<int> randomWeights(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  while (true) {
    std::vector<int> w(6);
    int sum = 0;
    for (std::size_t i = 0; i < 5; ++i) sum += (w[i] = entry(rng));
    w[5] = -sum;
    bool nonzero = false;
    for (int x : w) nonzero = nonzero || x != 0;
    if (nonzero && std::abs(w[5]) <= 2 * bound) return w;
  }
}

} // namespace quadnet::testing
