#include "quadnet/sextic.hpp"

#include "quadnet/cones.hpp"
#include "quadnet/error.hpp"
#include "quadnet/polyalg.hpp"

#include <algorithm>
#include <map>

namespace quadnet {

SexticCurve::SexticCurve(Polynomial poly) : poly_(std::move(poly)) {
  if (poly_.arity() != 3) throw InvalidInput("a plane sextic has 3 variables");
  if (!poly_.isZero() && (!poly_.isHomogeneous() || poly_.totalDegree() != 6))
    throw InvalidInput("a plane sextic must be homogeneous of degree 6");
}

SexticCurve parseSextic(std::string_view text) { return SexticCurve(parsePolynomial(text, 3)); }

SingularityClass SingularityClass::a(int k) {
  if (k < 1) throw InvalidInput("A(k) needs k >= 1");
  return {Kind::A, k, {}};
}

SingularityClass SingularityClass::d(int k) {
  if (k < 4) throw InvalidInput("D(k) needs k >= 4");
  return {Kind::D, k, {}};
}

SingularityClass SingularityClass::e(int k) {
  switch (k) {
  case 6: return {Kind::E6, 6, {}};
  case 7: return {Kind::E7, 7, {}};
  case 8: return {Kind::E8, 8, {}};
  }
  throw InvalidInput("E(k) needs k in {6, 7, 8}");
}

std::string toText(const SingularityClass& s) {
  using K = SingularityClass::Kind;
  switch (s.kind) {
  case K::smooth: return "smooth";
  case K::A: return "A" + std::to_string(s.index);
  case K::D: return "D" + std::to_string(s.index);
  case K::E6: return "E6";
  case K::E7: return "E7";
  case K::E8: return "E8";
  case K::not_simple: return "not-simple(" + s.reason + ")";
  case K::undetermined: return "undetermined(" + std::to_string(s.index) + ")";
  }
  return "?";
}

namespace {

void requireNonzero(const SexticCurve& f) {
  if (f.poly().isZero()) throw InvalidInput("zero sextic");
}

Rational chiWeight(const Monomial& m, const std::vector<Rational>& chi) {
  Rational w = 0;
  for (std::size_t i = 0; i < 3; ++i) w += chi[i] * m.exp[i];
  return w;
}

int maxWeight(const Polynomial& f, const std::vector<int>& chi) {
  int best = -1000;
  for (const auto& [m, c] : f.terms()) best = std::max(best, chi[0] * m.exp[0] + chi[1] * m.exp[1] + chi[2] * m.exp[2]);
  return best;
}

// Preferred witnesses, tried before the raw LP argmin.
const std::vector<WeightVector>& witnessCatalog() {
  static const std::vector<WeightVector> catalog = [] {
    std::vector<WeightVector> out;
    for (auto base : {std::vector<int>{2, -1, -1}, {1, 1, -2}, {1, 0, -1}}) {
      auto perms = distinctPermutations(WeightVector::of(base));
      out.insert(out.end(), perms.rbegin(), perms.rend());
    }
    return out;
  }();
  return catalog;
}

} // namespace

StabilityReport sexticTorusLP(const SexticCurve& f) {
  requireNonzero(f);
  std::vector<LinearForm> ineqs;
  for (const auto& [m, c] : f.poly().terms())
    ineqs.push_back(LinearForm{{Rational(m.exp[0]), Rational(m.exp[1]), Rational(m.exp[2]), Rational(-1)}, 0});
  const LinearForm sum{{1, 1, 1, 0}, 0};
  const LinearForm objective{{0, 0, 0, 1}, 0};

  Rational best;
  std::vector<Rational> argmin;
  for (std::size_t facet = 0; facet < 6; ++facet) {
    Box box{{-1, -1, -1, -6}, {1, 1, 1, 6}};
    box.lower[facet / 2] = box.upper[facet / 2] = facet % 2 == 0 ? -1 : 1;
    const auto lp = solveLP(objective, {sum}, ineqs, box);
    if (!lp.feasible) throw InvariantViolation("sextic facet LP infeasible");
    if (argmin.empty() || lp.optimum < best) {
      best = lp.optimum;
      argmin.assign(lp.argmin.begin(), lp.argmin.begin() + 3);
    }
  }

  StabilityReport out;
  out.scope = Scope::torus;
  out.evaluations = 6;
  out.minimumWeight = best;
  if (sgn(best) > 0) {
    out.verdict = Verdict::stable;
    out.weight = best;
    return out;
  }
  out.verdict = sgn(best) < 0 ? Verdict::unstable : Verdict::strictly_semistable;
  auto matches = [&](int w) { return sgn(best) < 0 ? w < 0 : w == 0; };

  std::optional<WeightVector> chi;
  for (const auto& c : witnessCatalog())
    if (matches(maxWeight(f.poly(), c.weights))) {
      chi = c;
      break;
    }
  if (!chi) {
    std::vector<int> w;
    for (const auto& z : primitiveIntegerVector(argmin)) w.push_back(static_cast<int>(toInt64(z)));
    chi = WeightVector::of(std::move(w));
  }
  const int w = maxWeight(f.poly(), chi->weights);
  if (!matches(w)) throw InvariantViolation("sextic LP witness does not reproduce the minimum");
  out.weight = Rational(w);
  out.witness = Witness{*chi, RatMatrix::identity(3)};
  return out;
}

const std::vector<Monomial>& patternMonomials(SupportPattern pattern) {
  static const std::vector<Monomial> xSquared = [] {
    std::vector<Monomial> out;
    for (int a = 2; a <= 6; ++a)
      for (int b = 0; a + b <= 6; ++b) out.push_back(Monomial::fromExponents(std::vector<int>{a, b, 6 - a - b}));
    return out;
  }();
  static const std::vector<Monomial> rho3 = [] {
    std::vector<Monomial> out;
    const int list[][3] = {{6, 0, 0}, {5, 1, 0}, {5, 0, 1}, {4, 2, 0}, {4, 1, 1}, {4, 0, 2}, {3, 3, 0}, {3, 2, 1},
                           {3, 1, 2}, {3, 0, 3}, {2, 4, 0}, {2, 3, 1}, {2, 2, 2}, {1, 5, 0}, {1, 4, 1}, {0, 6, 0}};
    for (const auto& e : list) out.push_back(Monomial::fromExponents(std::vector<int>{e[0], e[1], e[2]}));
    return out;
  }();
  return pattern == SupportPattern::x_squared ? xSquared : rho3;
}

bool supportPattern(const SexticCurve& f, SupportPattern pattern) {
  const auto& allowed = patternMonomials(pattern);
  return std::all_of(f.poly().terms().begin(), f.poly().terms().end(),
                     [&](const auto& t) { return std::find(allowed.begin(), allowed.end(), t.first) != allowed.end(); });
}

bool isReducedSextic(const SexticCurve& f) {
  requireNonzero(f);
  return squarefreePart(f.poly()).totalDegree() == 6;
}

namespace {

Polynomial restrictTo(const Polynomial& p, std::vector<Polynomial> images) { return substitute(p, images); }

Polynomial gcdOfNonzero(const std::vector<Polynomial>& ps) {
  std::vector<Polynomial> nz;
  for (const auto& p : ps)
    if (!p.isZero()) nz.push_back(p);
  if (nz.empty()) return Polynomial(ps.front().arity());
  return multivariateGcd(nz);
}

bool gradientVanishes(const std::array<Polynomial, 3>& grad, const ProjectivePoint& p) {
  return std::all_of(grad.begin(), grad.end(), [&](const Polynomial& g) { return sgn(g.evaluate(p)) == 0; });
}

} // namespace

SingularPoints rationalSingularPoints(const SexticCurve& f) {
  if (!isReducedSextic(f)) throw InvalidInput("rational singular points need a reduced sextic");
  const std::array<Polynomial, 3> grad{partialDerivative(f.poly(), 0), partialDerivative(f.poly(), 1),
                                       partialDerivative(f.poly(), 2)};
  SingularPoints out;
  auto accept = [&](const ProjectivePoint& p) {
    if (gradientVanishes(grad, p) && std::find(out.points.begin(), out.points.end(), p) == out.points.end()) out.points.push_back(p);
  };

  // affine chart z = 1, eliminating y
  const Polynomial u = Polynomial::variable(2, 0), v = Polynomial::variable(2, 1), one = Polynomial::constant(2, 1);
  std::vector<Polynomial> g;
  for (const auto& d : grad) g.push_back(restrictTo(d, {u, v, one}));
  std::vector<Polynomial> eliminants;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!g[i].isZero() && !g[j].isZero()) eliminants.push_back(resultant(g[i], g[j], 1));
  for (int a : {2, -3, 5}) {
    const Polynomial p = g[0] + g[1] * Rational(a) + g[2] * Rational(a * a);
    const Polynomial q = g[0] * Rational(a + 1) - g[1] + g[2] * Rational(7);
    if (!p.isZero() && !q.isZero()) eliminants.push_back(resultant(p, q, 1));
  }
  const Polynomial eliminant = gcdOfNonzero(eliminants);
  if (eliminant.isZero()) {
    out.complete = false;
  } else if (!eliminant.isConstant()) {
    const RootSet xs = rationalRoots(denseUnivariate(eliminant, 0));
    out.complete = out.complete && xs.complete;
    for (const auto& x0 : xs.roots) {
      std::vector<Polynomial> fibre;
      for (const auto& gi : g) fibre.push_back(restrictTo(gi, {Polynomial::constant(2, x0), v}));
      const Polynomial h = gcdOfNonzero(fibre);
      if (h.isZero()) {
        out.complete = false;
        continue;
      }
      if (h.isConstant()) continue;
      const RootSet ys = rationalRoots(denseUnivariate(h, 1));
      out.complete = out.complete && ys.complete;
      for (const auto& y0 : ys.roots) accept({x0, y0, Rational(1)});
    }
  }

  // line z = 0: points (x, 1, 0), then (1, 0, 0)
  const Polynomial t = Polynomial::variable(1, 0), unit = Polynomial::constant(1, 1), zero(1);
  std::vector<Polynomial> line;
  for (const auto& d : grad) line.push_back(restrictTo(d, {t, unit, zero}));
  const Polynomial h = gcdOfNonzero(line);
  if (h.isZero()) {
    out.complete = false;
  } else if (!h.isConstant()) {
    const RootSet xs = rationalRoots(denseUnivariate(h, 0));
    out.complete = out.complete && xs.complete;
    for (const auto& x0 : xs.roots) accept({x0, Rational(1), Rational(0)});
  }
  accept({Rational(1), Rational(0), Rational(0)});
  return out;
}

Germ germAt(const SexticCurve& f, const ProjectivePoint& p, int truncation) {
  std::size_t chart = 3;
  for (std::size_t i = 0; i < 3 && chart == 3; ++i)
    if (sgn(p[i]) != 0) chart = i;
  if (chart == 3) throw InvalidInput("(0,0,0) is not a point of P^2");
  if (truncation < 1) throw InvalidInput("truncation must be positive");
  std::vector<Polynomial> images;
  int local = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational c = p[i] / p[chart];
    if (i == chart) {
      images.push_back(Polynomial::constant(2, 1));
    } else {
      images.push_back(Polynomial::constant(2, c) + Polynomial::variable(2, local++));
    }
  }
  Germ g;
  g.series = substitute(f.poly(), images).truncated(truncation);
  g.truncation = truncation;
  g.exact = truncation >= 6;
  if (sgn(g.series.coefficient(Monomial{})) != 0) throw InvalidInput("point is not on the curve");
  return g;
}

namespace {

// Substitution of bivariate images, keeping total degree <= order.
Polynomial substituteTruncated(const Polynomial& p, const std::array<Polynomial, 2>& images, int order) {
  std::array<std::vector<Polynomial>, 2> powers;
  for (std::size_t k = 0; k < 2; ++k) powers[k].push_back(Polynomial::constant(2, 1));
  auto power = [&](std::size_t k, int e) -> const Polynomial& {
    while (static_cast<int>(powers[k].size()) <= e) powers[k].push_back(multiplyTruncated(powers[k].back(), images[k], order));
    return powers[k][static_cast<std::size_t>(e)];
  };
  Polynomial out(2);
  for (const auto& [m, c] : p.terms()) out += multiplyTruncated(power(0, m.exp[0]), power(1, m.exp[1]), order) * c;
  return out;
}

Rational coeff(const Polynomial& p, int a, int b) { return p.coefficient(Monomial::fromExponents(std::vector<int>{a, b})); }

// Linear change making the given forms the new coordinates (X, Y).
Polynomial inCoordinates(const Polynomial& f, const Polynomial& xForm, const Polynomial& yForm) {
  const RatMatrix t{{coeff(xForm, 1, 0), coeff(xForm, 0, 1)}, {coeff(yForm, 1, 0), coeff(yForm, 0, 1)}};
  const auto inv = inverse(t);
  if (!inv) throw InvariantViolation("dependent local coordinates");
  return substituteLinear(f, *inv);
}

Polynomial complementOf(const Polynomial& form) {
  return sgn(coeff(form, 0, 1)) != 0 ? Polynomial::variable(2, 0) : Polynomial::variable(2, 1);
}

// Solves df/dY (X, phi(X)) = 0 for phi of order >= 2 given df/dY = scale * Y + rest,
// where `scale` is a constant or a multiple of X and rest(X, phi) is divisible by scale.
Polynomial polarBranch(const Polynomial& f, const Polynomial& scale, int order) {
  const Polynomial fy = partialDerivative(f, 1);
  const Polynomial x = Polynomial::variable(2, 0);
  Polynomial phi(2);
  for (int it = 0; it <= order; ++it) {
    const Polynomial r = substituteTruncated(fy, {x, phi}, order);
    if (r.isZero()) break;
    const auto step = divideExact(r, scale);
    if (!step) throw InvariantViolation("polar branch is not divisible by its leading coefficient");
    const Polynomial next = (phi - *step).truncated(order);
    if (next == phi) break;
    phi = next;
  }
  return phi;
}

bool hasSingularComponent(const Germ& g) {
  const auto factors = squarefreeDecomposition(g.series);
  for (std::size_t k = 1; k < factors.size(); ++k)
    if (!factors[k].isConstant() && sgn(factors[k].coefficient(Monomial{})) == 0) return true;
  return false;
}

SingularityClass degenerateResidual(const Germ& g) {
  if (g.exact && hasSingularComponent(g)) return SingularityClass::notSimple("non-isolated");
  return SingularityClass::undetermined(g.truncation);
}

} // namespace

SingularityClass classifyADE(const Germ& g) {
  if (g.series.arity() != 2) throw InvalidInput("germs are bivariate");
  if (sgn(g.series.coefficient(Monomial{})) != 0) throw InvalidInput("germ has a nonzero constant term");
  if (g.truncation < 20) throw InvalidInput("germ truncation must be at least 20");
  const int n = g.truncation;
  const Polynomial f = g.series.truncated(n);
  if (f.isZero()) return degenerateResidual(g);

  const int mult = f.order();
  if (mult == 1) return SingularityClass::smooth();
  if (mult >= 4) return SingularityClass::notSimple("multiplicity " + std::to_string(mult));

  const Polynomial jet = f.homogeneousPart(mult);
  const auto factors = squarefreeDecomposition(jet);
  auto factor = [&](std::size_t k) { return k < factors.size() ? factors[k] : Polynomial::constant(2, 1); };
  const Polynomial x = Polynomial::variable(2, 0);

  if (mult == 2) {
    if (factor(1).isConstant()) return SingularityClass::a(1);
    const Polynomial& line = factor(1);
    const Polynomial h = inCoordinates(f, complementOf(line), line);
    const Rational lead = coeff(h, 0, 2);
    const Polynomial phi = polarBranch(h, Polynomial::constant(2, 2 * lead), n);
    const Polynomial residual = substituteTruncated(h, {x, phi}, n);
    if (residual.isZero()) return degenerateResidual(g);
    return SingularityClass::a(residual.order() - 1);
  }

  // cubic 3-jet
  if (factor(1).isConstant() && factor(2).isConstant()) return SingularityClass::d(4);
  if (!factor(1).isConstant()) {
    const Polynomial h = inCoordinates(f, factor(0), factor(1));
    const Rational lead = coeff(h, 1, 2);
    const Polynomial phi = polarBranch(h, x * Rational(2 * lead), n);
    const Polynomial residual = substituteTruncated(h, {x, phi}, n);
    if (residual.isZero()) return degenerateResidual(g);
    return SingularityClass::d(residual.order() + 1);
  }
  const Polynomial& line = factor(2);
  const Polynomial h = inCoordinates(f, complementOf(line), line);
  if (sgn(coeff(h, 4, 0)) != 0) return SingularityClass::e(6);
  if (sgn(coeff(h, 3, 1)) != 0) return SingularityClass::e(7);
  if (sgn(coeff(h, 5, 0)) != 0) return SingularityClass::e(8);
  return SingularityClass::notSimple("triple 3-jet beyond E8");
}

} // namespace quadnet
