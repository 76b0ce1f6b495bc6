#include "quadnet/cones.hpp"

#include "quadnet/error.hpp"
#include "quadnet/matrix.hpp"

#include <algorithm>

namespace quadnet {

Rational LinearForm::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != coefficients.size()) throw InvalidInput("linear form dimension mismatch");
  Rational acc = constant;
  for (std::size_t i = 0; i < x.size(); ++i) acc += coefficients[i] * x[i];
  return acc;
}

namespace {

// Dictionary: x_basic[r] = b[r] + sum_j d[r][j] x_nonbasic[j]; maximize
// z = z0 + sum_j c[j] x_nonbasic[j]. All variables are nonnegative.
struct Dictionary {
  std::vector<int> basic;
  std::vector<int> nonbasic;
  std::vector<Rational> b;
  std::vector<std::vector<Rational>> d;
  std::vector<Rational> c;
  Rational z0 = 0;

  void pivot(std::size_t r, std::size_t j) {
    const Rational a = d[r][j];
    auto& row = d[r];
    const Rational inv = 1 / a;
    b[r] = -b[r] * inv;
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = (k == j) ? inv : Rational(-row[k] * inv);
    auto substitute = [&](Rational& constant, std::vector<Rational>& coeffs) {
      const Rational f = coeffs[j];
      if (sgn(f) == 0) return;
      constant += f * b[r];
      for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = (k == j) ? Rational(f * row[k]) : Rational(coeffs[k] + f * row[k]);
    };
    for (std::size_t i = 0; i < d.size(); ++i)
      if (i != r) substitute(b[i], d[i]);
    substitute(z0, c);
    std::swap(basic[r], nonbasic[j]);
  }

  // Bland's rule. Returns false if unbounded.
  bool optimize() {
    while (true) {
      std::size_t enter = nonbasic.size();
      for (std::size_t j = 0; j < nonbasic.size(); ++j)
        if (sgn(c[j]) > 0 && (enter == nonbasic.size() || nonbasic[j] < nonbasic[enter])) enter = j;
      if (enter == nonbasic.size()) return true;
      std::size_t leave = basic.size();
      Rational best;
      for (std::size_t r = 0; r < basic.size(); ++r) {
        if (sgn(d[r][enter]) >= 0) continue;
        const Rational ratio = b[r] / -d[r][enter];
        if (leave == basic.size() || ratio < best || (ratio == best && basic[r] < basic[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == basic.size()) return false;
      pivot(leave, enter);
    }
  }
};

} // namespace

LPResult solveLP(const LinearForm& objective, const std::vector<LinearForm>& equalities,
                 const std::vector<LinearForm>& inequalities, const Box& box) {
  const std::size_t n = objective.coefficients.size();
  if (box.lower.size() != n || box.upper.size() != n) throw InvalidInput("LP box dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (box.lower[i] > box.upper[i]) return {};

  // Rows a.y <= rhs in shifted variables y = x - lower >= 0.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto addRow = [&](const std::vector<Rational>& a, const Rational& constant) {
    if (a.size() != n) throw InvalidInput("LP constraint dimension mismatch");
    Rational r = -constant;
    for (std::size_t i = 0; i < n; ++i) r -= a[i] * box.lower[i];
    rows.push_back(a);
    rhs.push_back(r);
  };
  for (const auto& f : inequalities) addRow(f.coefficients, f.constant);
  for (const auto& f : equalities) {
    addRow(f.coefficients, f.constant);
    std::vector<Rational> neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -f.coefficients[i];
    addRow(neg, -f.constant);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> unit(n, Rational(0));
    unit[i] = 1;
    rows.push_back(unit);
    rhs.push_back(box.upper[i] - box.lower[i]);
  }

  const std::size_t m = rows.size();
  const int aux = static_cast<int>(n + m);
  Dictionary dict;
  for (std::size_t r = 0; r < m; ++r) {
    dict.basic.push_back(static_cast<int>(n + r));
    dict.b.push_back(rhs[r]);
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t j = 0; j < n; ++j) coeffs[j] = -rows[r][j];
    coeffs[n] = 1;
    dict.d.push_back(std::move(coeffs));
  }
  for (std::size_t j = 0; j < n; ++j) dict.nonbasic.push_back(static_cast<int>(j));
  dict.nonbasic.push_back(aux);

  // Phase 1: maximize -aux.
  dict.c.assign(n + 1, Rational(0));
  dict.c[n] = -1;
  const auto worst = std::min_element(dict.b.begin(), dict.b.end());
  if (worst != dict.b.end() && sgn(*worst) < 0) {
    dict.pivot(static_cast<std::size_t>(worst - dict.b.begin()), n);
    if (!dict.optimize()) throw InvariantViolation("phase one LP unbounded");
    if (sgn(dict.z0) < 0) return {};
  }
  // Drive aux out of the basis if it stayed there at level zero.
  for (std::size_t r = 0; r < dict.basic.size(); ++r) {
    if (dict.basic[r] != aux) continue;
    std::size_t j = 0;
    while (j < dict.nonbasic.size() && sgn(dict.d[r][j]) == 0) ++j;
    if (j == dict.nonbasic.size()) throw InvariantViolation("degenerate auxiliary row");
    dict.pivot(r, j);
  }
  const auto auxCol = static_cast<std::size_t>(std::find(dict.nonbasic.begin(), dict.nonbasic.end(), aux) - dict.nonbasic.begin());
  dict.nonbasic.erase(dict.nonbasic.begin() + static_cast<std::ptrdiff_t>(auxCol));
  for (auto& row : dict.d) row.erase(row.begin() + static_cast<std::ptrdiff_t>(auxCol));

  // Phase 2: maximize -(objective . y).
  dict.c.assign(dict.nonbasic.size(), Rational(0));
  dict.z0 = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const Rational w = -objective.coefficients[v];
    if (sgn(w) == 0) continue;
    const auto nb = std::find(dict.nonbasic.begin(), dict.nonbasic.end(), static_cast<int>(v));
    if (nb != dict.nonbasic.end()) {
      dict.c[static_cast<std::size_t>(nb - dict.nonbasic.begin())] += w;
      continue;
    }
    const auto bs = std::find(dict.basic.begin(), dict.basic.end(), static_cast<int>(v));
    const auto r = static_cast<std::size_t>(bs - dict.basic.begin());
    dict.z0 += w * dict.b[r];
    for (std::size_t j = 0; j < dict.c.size(); ++j) dict.c[j] += w * dict.d[r][j];
  }
  if (!dict.optimize()) throw InvariantViolation("LP unbounded despite box");

  LPResult out;
  out.feasible = true;
  out.argmin = box.lower;
  for (std::size_t r = 0; r < dict.basic.size(); ++r)
    if (dict.basic[r] < static_cast<int>(n)) out.argmin[static_cast<std::size_t>(dict.basic[r])] += dict.b[r];
  out.optimum = objective.evaluate(out.argmin);
  return out;
}

namespace {

RatMatrix formsToMatrix(const std::vector<LinearForm>& forms, std::size_t n) {
  RatMatrix m(forms.size(), n);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].coefficients.size() != n) throw InvalidInput("cone constraint dimension mismatch");
    if (sgn(forms[r].constant) != 0) throw InvalidInput("cone constraints must be homogeneous");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = forms[r].coefficients[c];
  }
  return m;
}

RatMatrix rowsOf(const std::vector<std::vector<Rational>>& vs, std::size_t n) {
  RatMatrix m(vs.size(), n);
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = vs[r][c];
  return m;
}

std::vector<Rational> toRational(const IntVector& v) {
  return {v.begin(), v.end()};
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

struct DDRay {
  std::vector<Rational> z;
  std::vector<bool> active;  // over processed constraints
};

} // namespace

Cone extremeRays(Cone cone) {
  if (cone.dimension <= 0) throw InvalidInput("cone dimension must be positive");
  const auto n = static_cast<std::size_t>(cone.dimension);
  const RatMatrix e = formsToMatrix(cone.equalities, n);
  const RatMatrix g = formsToMatrix(cone.inequalities, n);
  cone.rays.clear();
  cone.lineality.clear();

  const auto lin = kernelBasis(vstack({e, g}));
  for (const auto& v : lin) cone.lineality.push_back(primitiveIntegerVector(v));

  // Pointed part lives in S = ker E intersected with the orthogonal complement of the lineality.
  const auto basisS = kernelBasis(vstack({e, rowsOf(lin, n)}));
  const std::size_t k = basisS.size();
  if (k == 0) return cone;

  // Constraints in z-coordinates (x = sum z_i basisS[i]).
  std::vector<std::vector<Rational>> h;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = dot(g.row(r), basisS[i]);
    if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return sgn(q) != 0; })) h.push_back(std::move(row));
  }
  const RatMatrix hm = rowsOf(h, k);
  const auto ech = rowEchelon(hm.transposed());
  if (ech.pivots.size() != k) throw InvariantViolation("pointed part has lineality");

  // Start with k independent constraints: rays are the columns of -H0^{-1}.
  std::vector<std::size_t> order = ech.pivots;
  std::vector<bool> used(h.size(), false);
  for (auto p : ech.pivots) used[p] = true;
  for (std::size_t r = 0; r < h.size(); ++r)
    if (!used[r]) order.push_back(r);

  RatMatrix h0(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h0(i, j) = h[order[i]][j];
  const RatMatrix h0inv = *inverse(h0);
  std::vector<DDRay> rays;
  for (std::size_t i = 0; i < k; ++i) {
    DDRay ray;
    for (std::size_t j = 0; j < k; ++j) ray.z.push_back(-h0inv(j, i));
    ray.active.assign(k, true);
    ray.active[i] = false;
    rays.push_back(std::move(ray));
  }

  for (std::size_t step = k; step < order.size(); ++step) {
    const auto& row = h[order[step]];
    std::vector<Rational> values;
    for (const auto& ray : rays) values.push_back(dot(row, ray.z));
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sgn(values[i]) > 0) continue;
      DDRay kept = rays[i];
      kept.active.push_back(sgn(values[i]) == 0);
      next.push_back(std::move(kept));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (sgn(values[p]) <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (sgn(values[q]) >= 0) continue;
        std::vector<std::vector<Rational>> common;
        for (std::size_t c = 0; c < step; ++c)
          if (rays[p].active[c] && rays[q].active[c]) common.push_back(h[order[c]]);
        if (k < 2 || rank(rowsOf(common, k)) != k - 2) continue;
        DDRay combined;
        combined.z.resize(k);
        for (std::size_t j = 0; j < k; ++j) combined.z[j] = values[p] * rays[q].z[j] - values[q] * rays[p].z[j];
        combined.z = toRational(primitiveIntegerVector(combined.z));
        for (std::size_t c = 0; c < step; ++c) combined.active.push_back(rays[p].active[c] && rays[q].active[c]);
        combined.active.push_back(true);
        next.push_back(std::move(combined));
      }
    }
    rays = std::move(next);
  }

  for (const auto& ray : rays) {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) x[j] += ray.z[i] * basisS[i][j];
    cone.rays.push_back(primitiveIntegerVector(x));
  }
  std::sort(cone.rays.begin(), cone.rays.end());
  cone.rays.erase(std::unique(cone.rays.begin(), cone.rays.end()), cone.rays.end());
  return cone;
}

} // namespace quadnet
