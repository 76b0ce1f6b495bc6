#include "quadnet/polyalg.hpp"

#include "quadnet/error.hpp"

#include <algorithm>
#include <functional>

namespace quadnet {

std::optional<Polynomial> divideExact(const Polynomial& a, const Polynomial& b) {
  if (b.isZero()) throw InvalidInput("division by zero polynomial");
  if (a.arity() != b.arity()) throw InvalidInput("polynomial arity mismatch");
  Polynomial q(a.arity());
  Polynomial r = a;
  const auto& [lmB, lcB] = b.leadingTerm();
  while (!r.isZero()) {
    const auto& [lmR, lcR] = r.leadingTerm();
    if (!lmB.divides(lmR)) return std::nullopt;
    Polynomial t = Polynomial::term(a.arity(), lmB.quotientOf(lmR), lcR / lcB);
    q += t;
    r -= t * b;
  }
  return q;
}

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divideExact(a, b);
  if (!q) throw InvariantViolation("expected exact polynomial division");
  return *q;
}

Polynomial normalizeAssociate(const Polynomial& p) {
  if (p.isZero()) return p;
  Integer lcm = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational scaled = c * lcm;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
  }
  Rational factor(lcm, g);
  factor.canonicalize();
  if (sgn(p.leadingTerm().second) < 0) factor = -factor;
  return p * factor;
}

std::vector<Polynomial> coefficientsIn(const Polynomial& p, int var) {
  const auto v = static_cast<std::size_t>(var);
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(p.degreeIn(var), 0)) + 1, Polynomial(p.arity()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.exp[v] = 0;
    out[m.exp[v]].addTerm(rest, c);
  }
  return out;
}

namespace {

Polynomial varPower(int arity, int var, int e) {
  Monomial m;
  m.exp[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
  return Polynomial::term(arity, m, 1);
}

Polynomial leadingCoefficientIn(const Polynomial& p, int var) { return coefficientsIn(p, var).back(); }

Polynomial pseudoRemainder(const Polynomial& a, const Polynomial& b, int var) {
  const int n = b.degreeIn(var);
  const Polynomial lcB = leadingCoefficientIn(b, var);
  Polynomial r = a;
  int e = a.degreeIn(var) - n + 1;
  while (!r.isZero() && r.degreeIn(var) >= n) {
    const int dr = r.degreeIn(var);
    Polynomial t = leadingCoefficientIn(r, var) * varPower(a.arity(), var, dr - n);
    r = lcB * r - t * b;
    --e;
  }
  return power(lcB, std::max(e, 0)) * r;
}

int firstVariable(const Polynomial& p, const Polynomial& q) {
  for (int v = 0; v < p.arity(); ++v)
    if (p.degreeIn(v) > 0 || q.degreeIn(v) > 0) return v;
  return -1;
}

Polynomial gcdImpl(const Polynomial& p, const Polynomial& q);

Polynomial contentIn(const Polynomial& p, int var) {
  Polynomial g(p.arity());
  for (const auto& c : coefficientsIn(p, var)) {
    g = gcdImpl(g, c);
    if (g.isConstant() && !g.isZero()) break;
  }
  return g;
}

// Last nonzero remainder of the subresultant PRS of a, b in `var`.
Polynomial subresultantLast(Polynomial a, Polynomial b, int var) {
  if (a.degreeIn(var) < b.degreeIn(var)) std::swap(a, b);
  Polynomial g = Polynomial::constant(a.arity(), 1);
  Polynomial h = Polynomial::constant(a.arity(), 1);
  while (true) {
    const int d = a.degreeIn(var) - b.degreeIn(var);
    Polynomial r = pseudoRemainder(a, b, var);
    if (r.isZero()) return b;
    if (r.degreeIn(var) == 0) return Polynomial::constant(a.arity(), 1);
    a = b;
    b = quotient(r, g * power(h, d));
    g = leadingCoefficientIn(a, var);
    if (d > 0) h = quotient(power(g, d), power(h, d - 1));
  }
}

Polynomial gcdImpl(const Polynomial& p, const Polynomial& q) {
  if (p.isZero()) return normalizeAssociate(q);
  if (q.isZero()) return normalizeAssociate(p);
  if (p.isConstant() || q.isConstant()) return Polynomial::constant(p.arity(), 1);
  const int v = firstVariable(p, q);
  if (p.degreeIn(v) == 0) return gcdImpl(p, contentIn(q, v));
  if (q.degreeIn(v) == 0) return gcdImpl(contentIn(p, v), q);
  const Polynomial cp = contentIn(p, v);
  const Polynomial cq = contentIn(q, v);
  const Polynomial c = gcdImpl(cp, cq);
  Polynomial last = subresultantLast(quotient(p, cp), quotient(q, cq), v);
  if (last.degreeIn(v) <= 0) return normalizeAssociate(c);
  last = quotient(last, contentIn(last, v));
  return normalizeAssociate(c * last);
}

} // namespace

Polynomial multivariateGcd(const Polynomial& p, const Polynomial& q) {
  if (p.arity() != q.arity()) throw InvalidInput("polynomial arity mismatch");
  return gcdImpl(p, q);
}

Polynomial multivariateGcd(const std::vector<Polynomial>& ps) {
  if (ps.empty()) throw InvalidInput("gcd of empty list");
  Polynomial g(ps.front().arity());
  for (const auto& p : ps) g = multivariateGcd(g, p);
  return g;
}

namespace {

// gcd of p with all of its partial derivatives: prod f_i^(e_i - 1).
Polynomial repeatedPart(const Polynomial& p) {
  std::vector<Polynomial> all{p};
  for (int v = 0; v < p.arity(); ++v) all.push_back(partialDerivative(p, v));
  return multivariateGcd(all);
}

} // namespace

Polynomial squarefreePart(const Polynomial& p) {
  if (p.isZero()) throw InvalidInput("squarefree part of zero");
  if (p.isConstant()) return Polynomial::constant(p.arity(), 1);
  return normalizeAssociate(quotient(p, repeatedPart(p)));
}

std::vector<Polynomial> squarefreeDecomposition(const Polynomial& p) {
  if (p.isZero()) throw InvalidInput("squarefree decomposition of zero");
  // atLeast[k] = product of factors with multiplicity >= k+1
  std::vector<Polynomial> atLeast;
  Polynomial current = p;
  while (!current.isConstant()) {
    atLeast.push_back(squarefreePart(current));
    current = repeatedPart(current);
  }
  std::vector<Polynomial> exact;
  for (std::size_t k = 0; k < atLeast.size(); ++k) {
    if (k + 1 < atLeast.size())
      exact.push_back(normalizeAssociate(quotient(atLeast[k], atLeast[k + 1])));
    else
      exact.push_back(atLeast[k]);
  }
  return exact;
}

std::optional<Polynomial> perfectSquareRoot(const Polynomial& p) {
  if (p.isZero()) return p;
  const auto& [lm, lc] = p.leadingTerm();
  Rational rootCoeff;
  if (!rationalSqrt(lc, rootCoeff)) return std::nullopt;
  Monomial half;
  for (int i = 0; i < kMaxVars; ++i) {
    if (lm.exp[static_cast<std::size_t>(i)] % 2 != 0) return std::nullopt;
    half.exp[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(lm.exp[static_cast<std::size_t>(i)] / 2);
  }
  const Monomial lead = half;
  const Rational twiceLead = 2 * rootCoeff;
  Polynomial s = Polynomial::term(p.arity(), lead, rootCoeff);
  Polynomial rem = p - s * s;
  // Each step fixes the next term of s in lex order; lex is a well-order so
  // the loop terminates, the cap only guards pathological inputs.
  for (int guard = 0; !rem.isZero(); ++guard) {
    if (guard > 100000) return std::nullopt;
    const auto& [rm, rc] = rem.leadingTerm();
    if (!lead.divides(rm)) return std::nullopt;
    const Monomial next = lead.quotientOf(rm);
    if (!(next < lead)) return std::nullopt;
    Polynomial t = Polynomial::term(p.arity(), next, rc / twiceLead);
    rem -= (s * 2 + t) * t;
    s += t;
  }
  return s;
}

Polynomial bareissDeterminant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw InvalidInput("determinant of empty matrix");
  const int arity = m[0][0].arity();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInput("determinant of non-square matrix");
  bool negate = false;
  Polynomial prev = Polynomial::constant(arity, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].isZero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].isZero()) ++piv;
      if (piv == n) return Polynomial(arity);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial(arity);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var) {
  if (p.arity() != q.arity()) throw InvalidInput("polynomial arity mismatch");
  const int arity = p.arity();
  if (p.isZero() || q.isZero()) return Polynomial(arity);
  const int m = p.degreeIn(var);
  const int n = q.degreeIn(var);
  if (m == 0) return power(p, n);
  if (n == 0) return power(q, m);
  const auto pc = coefficientsIn(p, var);
  const auto qc = coefficientsIn(q, var);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Polynomial>> syl(size, std::vector<Polynomial>(size, Polynomial(arity)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = pc[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = qc[static_cast<std::size_t>(n - k)];
  return bareissDeterminant(std::move(syl));
}

std::vector<Rational> denseUnivariate(const Polynomial& p, int var) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(p.totalDegree(), 0)) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.arity(); ++i)
      if (i != var && m.exp[static_cast<std::size_t>(i)] != 0) throw InvalidInput("polynomial is not univariate");
    out[m.exp[static_cast<std::size_t>(var)]] = c;
  }
  while (out.size() > 1 && sgn(out.back()) == 0) out.pop_back();
  return out;
}

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Rational evalDense(const Dense& a, const Rational& x) {
  Rational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Dense derivative(const Dense& a) {
  Dense d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

Dense remainder(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense gcdDense(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Dense divideDense(Dense a, const Dense& b) {
  trim(a);
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

int signChanges(const std::vector<Dense>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int v = sgn(evalDense(s, x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

Rational simplestBetween(const Rational& lo, const Rational& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplestBetween(-hi, -lo);
  const Integer fl = floorOf(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  return Rational(fl) + 1 / simplestBetween(1 / (hi - fl), 1 / (lo - fl));
}

} // namespace

RootSet rationalRoots(const std::vector<Rational>& coeffs) {
  Dense p = coeffs;
  trim(p);
  if (p.empty()) throw InvalidInput("roots of the zero polynomial");
  RootSet out;
  if (p.size() == 1) return out;
  Dense sq = divideDense(p, gcdDense(p, derivative(p)));
  trim(sq);
  const std::size_t degree = sq.size() - 1;

  // Scale to integers so that rational roots have denominators dividing lead.
  Integer lcm = 1;
  for (const auto& c : sq) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : sq) c *= lcm;
  const Rational lead = abs(sq.back());
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < sq.size(); ++i) bound = std::max(bound, Rational(abs(sq[i]) / lead));
  bound += 1;
  const Rational maxWidth = 1 / (2 * lead * lead);

  std::vector<Dense> sturm{sq, derivative(sq)};
  while (true) {
    Dense r = remainder(sturm[sturm.size() - 2], sturm.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    sturm.push_back(std::move(r));
  }
  auto count = [&](const Rational& a, const Rational& b) { return signChanges(sturm, a) - signChanges(sturm, b); };

  // roots in (a, b] via recursive bisection
  std::function<void(Rational, Rational, int)> isolate = [&](Rational a, Rational b, int n) {
    if (n == 0) return;
    if (n > 1) {
      const Rational mid = (a + b) / 2;
      const int left = count(a, mid);
      isolate(a, mid, left);
      isolate(mid, b, n - left);
      return;
    }
    while (b - a >= maxWidth) {
      const Rational mid = (a + b) / 2;
      if (sgn(evalDense(sq, mid)) == 0) {
        out.roots.push_back(mid);
        return;
      }
      if (count(a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    if (sgn(evalDense(sq, b)) == 0) {
      out.roots.push_back(b);
      return;
    }
    const Rational candidate = simplestBetween(a, b);
    if (Rational(candidate.get_den()) <= lead && sgn(evalDense(sq, candidate)) == 0) out.roots.push_back(candidate);
  };
  isolate(-bound, bound, count(-bound, bound));
  std::sort(out.roots.begin(), out.roots.end());
  out.complete = out.roots.size() == degree;
  return out;
}

} // namespace quadnet
