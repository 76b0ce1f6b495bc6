#include "quadnet/error.hpp"
#include "quadnet/polyalg.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace quadnet;
using quadnet::testing::P;

TEST_CASE("rational parsing is canonical") {
  CHECK(toText(parseRational("6/4")) == "3/2");
  CHECK(toText(parseRational("-0/5")) == "0");
  CHECK(toText(parseRational("4/-2")) == "-2");
  CHECK_THROWS_AS(parseRational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parseRational("abc"), InvalidInput);
}

TEST_CASE("ring operations") {
  CHECK((P("x0+x1", 6) * P("x0-x1", 6)) == P("x0^2-x1^2", 6));
  const Polynomial p = P("3*x0*x2 - 1/2*x5^2 + 7", 6);
  CHECK((p + p * Rational(-1)).isZero());
  const Polynomial half = P("x0^2", 6) * Rational(1, 2);
  CHECK(half + half == P("x0^2", 6));
  CHECK_THROWS_AS(P("x", 3) + P("x0", 6), InvalidInput);
}

TEST_CASE("linear substitution") {
  RatMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(substituteLinear(P("x^2*y", 3), swap) == P("y^2*x", 3));
  CHECK(substituteLinear(P("x^2*y+z", 3), RatMatrix::identity(3)) == P("x^2*y+z", 3));
  RatMatrix shear{{1, 1}, {0, 1}};
  CHECK(substituteLinear(P("u^2", 2), shear) == P("u^2+2*u*v+v^2", 2));
  CHECK_THROWS_AS(substituteLinear(P("u^2", 2), RatMatrix::identity(3)), InvalidInput);
}

TEST_CASE("partial derivatives") {
  CHECK(partialDerivative(P("x^3*y", 3), 0) == P("3*x^2*y", 3));
  CHECK(partialDerivative(P("x^6", 3), 2).isZero());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = quadnet::testing::randomHomogeneous(rng, 3, 6, 8);
    Polynomial euler(3);
    for (int i = 0; i < 3; ++i) euler += Polynomial::variable(3, i) * partialDerivative(f, i);
    CHECK(euler == f * Rational(6));
  }
}

TEST_CASE("text form round trip") {
  std::mt19937_64 rng(5);
  for (int arity : {2, 3, 6}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Polynomial p = quadnet::testing::randomPolynomial(rng, arity, 5, 6);
      CHECK(parsePolynomial(toText(p), arity) == p);
    }
  }
  CHECK(toText(P("-y^6", 3)) == "-1*y^6");
  CHECK(toText(Polynomial(3)) == "0");
  CHECK_THROWS_AS(parsePolynomial("x0^", 6), InvalidInput);
  CHECK_THROWS_AS(parsePolynomial("w", 3), InvalidInput);
}

TEST_CASE("gcd examples") {
  CHECK(multivariateGcd(P("x^2-y^2", 3), P("x-y", 3)) == P("x-y", 3));
  CHECK(multivariateGcd(P("2*x^2+4*y", 3), Polynomial(3)) == P("x^2+2*y", 3));
  CHECK(multivariateGcd(P("y^6", 3), P("6*y^5", 3)) == P("y^5", 3));
  CHECK(multivariateGcd(P("3", 3), P("x", 3)) == P("1", 3));
  CHECK(multivariateGcd(P("x*y*z+x^2*z", 3), P("y*z^2+x*z^2", 3)) == P("x*z+y*z", 3));
}

TEST_CASE("gcd divides both inputs and recovers planted factors") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial g = quadnet::testing::randomPolynomial(rng, 3, 2, 3);
    const Polynomial a = quadnet::testing::randomPolynomial(rng, 3, 2, 3);
    const Polynomial b = quadnet::testing::randomPolynomial(rng, 3, 2, 3);
    if (g.isZero() || a.isZero() || b.isZero()) continue;
    const Polynomial p = g * a;
    const Polynomial q = g * b;
    const Polynomial d = multivariateGcd(p, q);
    CHECK(divideExact(p, d).has_value());
    CHECK(divideExact(q, d).has_value());
    if (!g.isConstant()) CHECK(divideExact(d, normalizeAssociate(g)).has_value());
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefreePart(P("y^6", 3)) == P("y", 3));
  const Polynomial sq = squarefreePart(P("(x-y)^2", 3) * P("x+y", 3));
  CHECK(sq == normalizeAssociate(P("x^2-y^2", 3)));
  const Polynomial fermat = P("x^6+y^6+z^6", 3);
  CHECK(squarefreePart(fermat) == fermat);
  CHECK_THROWS_AS(squarefreePart(Polynomial(3)), InvalidInput);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial a = quadnet::testing::randomHomogeneous(rng, 3, 1, 3);
    const Polynomial b = quadnet::testing::randomHomogeneous(rng, 3, 2, 4);
    if (a.isZero() || b.isZero()) continue;
    const Polynomial p = a * a * b;
    const Polynomial s = squarefreePart(p);
    CHECK(divideExact(p, s).has_value());
    for (int i = 0; i < 3; ++i) {
      const Polynomial di = partialDerivative(s, i);
      if (!di.isZero()) CHECK(multivariateGcd({s, di, partialDerivative(s, (i + 1) % 3), partialDerivative(s, (i + 2) % 3)}).isConstant());
    }
  }
}

TEST_CASE("squarefree decomposition reconstructs the input") {
  const Polynomial p = P("(x-y)^3*(x+2*z)^2*(y^2+z^2)", 3);
  const auto parts = squarefreeDecomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].totalDegree() == 2);
  CHECK(parts[1].totalDegree() == 1);
  CHECK(parts[2].totalDegree() == 1);
  Polynomial rebuilt = Polynomial::constant(3, 1);
  for (std::size_t k = 0; k < parts.size(); ++k) rebuilt = rebuilt * power(parts[k], static_cast<int>(k) + 1);
  CHECK(normalizeAssociate(rebuilt) == normalizeAssociate(p));
}

TEST_CASE("perfect square root") {
  CHECK(*perfectSquareRoot(P("x^2-2*x*y+y^2", 3)) == P("x-y", 3));
  CHECK_FALSE(perfectSquareRoot(P("x^2+y^2", 3)).has_value());
  CHECK(*perfectSquareRoot(P("(x*z-y^2)^2", 3)) == P("x*z-y^2", 3));
  CHECK_FALSE(perfectSquareRoot(P("2*x^2", 3)).has_value());
  CHECK_FALSE(perfectSquareRoot(P("-x^2", 3)).has_value());

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial s = quadnet::testing::randomHomogeneous(rng, 3, 3, 5);
    if (s.isZero()) continue;
    const auto root = perfectSquareRoot(s * s);
    REQUIRE(root.has_value());
    CHECK((*root == s || *root == -s));
    CHECK(sgn(root->leadingTerm().second) > 0);
  }
}

TEST_CASE("resultants") {
  // Res_x((x-a)(x-b), x-c) = (c-a)(c-b) computed from the roots.
  const Polynomial f = P("(x-y)*(x-2*z)", 3);
  const Polynomial g = P("x-3*y", 3);
  CHECK(resultant(f, g, 0) == P("(3*y-y)*(3*y-2*z)", 3));
  CHECK(resultant(P("x^2+1", 3), P("x^2-1", 3), 0) == P("4", 3));
  CHECK(resultant(P("x*y", 3), P("x*z", 3), 0).isZero());
  CHECK(resultant(P("y+1", 3), P("x^2+y", 3), 0) == P("(y+1)^2", 3));
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<Polynomial>> m(3, std::vector<Polynomial>(3, Polynomial(3)));
    for (auto& row : m)
      for (auto& e : row) e = quadnet::testing::randomPolynomial(rng, 3, 1, 2);
    const Polynomial expected = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                                m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(bareissDeterminant(m) == expected);
  }
}

TEST_CASE("rational roots") {
  auto roots = rationalRoots(denseUnivariate(P("(x-1/2)*(x+3)^2*(x^2-2)", 3), 0));
  CHECK(roots.roots == std::vector<Rational>{Rational(-3), Rational(1, 2)});
  CHECK_FALSE(roots.complete);
  roots = rationalRoots(denseUnivariate(P("x*(6*x-1)*(4*x+7)", 3), 0));
  CHECK(roots.roots == std::vector<Rational>{Rational(-7, 4), Rational(0), Rational(1, 6)});
  CHECK(roots.complete);
  roots = rationalRoots(denseUnivariate(P("x^2+1", 3), 0));
  CHECK(roots.roots.empty());
  CHECK_FALSE(roots.complete);
  CHECK(rationalRoots({Rational(5)}).complete);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> planted;
    Polynomial p = Polynomial::constant(3, 1);
    for (int k = 0; k < 4; ++k) {
      Rational r(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 5) + 1);
      r.canonicalize();
      p = p * (Polynomial::variable(3, 0) - Polynomial::constant(3, r));
      planted.push_back(r);
    }
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    const auto found = rationalRoots(denseUnivariate(p, 0));
    CHECK(found.roots == planted);
    CHECK(found.complete);
  }
}
