#include "quadnet/discr.hpp"

#include "quadnet/error.hpp"
#include "quadnet/polyalg.hpp"

#include <bit>

namespace quadnet {

SymMatrixPencil toPencil(const Net& net) {
  SymMatrixPencil out;
  for (std::size_t q = 0; q < 3; ++q) {
    RatMatrix a(6, 6);
    for (const auto& [m, c] : net[q].terms()) {
      std::size_t i = 6, j = 6;
      for (std::size_t v = 0; v < 6; ++v) {
        if (m.exp[v] == 2) i = j = v;
        if (m.exp[v] == 1) (i == 6 ? i : j) = v;
      }
      if (i == j) {
        a(i, i) = c;
      } else {
        a(i, j) = c / 2;
        a(j, i) = c / 2;
      }
    }
    out.matrices[q] = std::move(a);
  }
  return out;
}

namespace {

Polynomial quadricOf(const RatMatrix& a) {
  if (a.rows() != 6 || a.cols() != 6 || !a.isSymmetric()) throw InvalidInput("pencil matrices must be symmetric 6x6");
  Polynomial q(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) {
      Monomial m;
      ++m.exp[i];
      ++m.exp[j];
      q.addTerm(m, i == j ? a(i, i) : Rational(2 * a(i, j)));
    }
  return q;
}

} // namespace

Net fromPencil(const SymMatrixPencil& pencil) {
  return Net(quadricOf(pencil.matrices[0]), quadricOf(pencil.matrices[1]), quadricOf(pencil.matrices[2]));
}

PolyMatrix pencilMatrix(const Net& net) {
  const auto pencil = toPencil(net);
  PolyMatrix m(6, std::vector<Polynomial>(6, Polynomial(3)));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t q = 0; q < 3; ++q)
        if (sgn(pencil.matrices[q](i, j)) != 0) m[i][j] += Polynomial::variable(3, static_cast<int>(q)) * pencil.matrices[q](i, j);
  return m;
}

namespace {

// Laplace expansion along rows, memoized on the set of unused columns.
Polynomial laplaceDeterminant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  const int arity = m[0][0].arity();
  std::vector<std::optional<Polynomial>> memo(std::size_t{1} << n);
  memo[0] = Polynomial::constant(arity, 1);
  auto solve = [&](auto& self, unsigned cols) -> const Polynomial& {
    auto& slot = memo[cols];
    if (slot) return *slot;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(cols));
    Polynomial acc(arity);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (!m[row][c].isZero()) {
        const Polynomial& minor = self(self, cols & ~(1u << c));
        if (!minor.isZero()) {
          if (sign > 0) acc += m[row][c] * minor;
          else acc -= m[row][c] * minor;
        }
      }
      sign = -sign;
    }
    slot = std::move(acc);
    return *slot;
  };
  return solve(solve, (1u << n) - 1);
}

RatMatrix memberAt(const SymMatrixPencil& pencil, const ProjectivePoint& point) {
  return pencil.matrices[0].scaled(point[0]) + pencil.matrices[1].scaled(point[1]) + pencil.matrices[2].scaled(point[2]);
}

void checkPoint(const ProjectivePoint& point) {
  if (sgn(point[0]) == 0 && sgn(point[1]) == 0 && sgn(point[2]) == 0) throw InvalidInput("(0,0,0) is not a point of P^2");
}

} // namespace

Polynomial discriminantOf(const Net& net) { return laplaceDeterminant(pencilMatrix(net)); }

std::optional<std::vector<Rational>> commonSingularPoint(const Net& net) {
  const auto pencil = toPencil(net);
  const auto kernel = kernelBasis(vstack({pencil.matrices[0], pencil.matrices[1], pencil.matrices[2]}));
  if (kernel.empty()) return std::nullopt;
  const auto prim = primitiveIntegerVector(kernel.front());
  return std::vector<Rational>(prim.begin(), prim.end());
}

int corankAt(const Net& net, const ProjectivePoint& point) {
  checkPoint(point);
  return 6 - static_cast<int>(rank(memberAt(toPencil(net), point)));
}

namespace {

PolyMatrix constantMatrix(const RatMatrix& m, int arity) {
  PolyMatrix out(m.rows(), std::vector<Polynomial>(m.cols(), Polynomial(arity)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Polynomial::constant(arity, m(i, j));
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, int order) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  const int arity = a[0][0].arity();
  PolyMatrix out(n, std::vector<Polynomial>(m, Polynomial(arity)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (!a[i][l].isZero() && !b[l][j].isZero()) out[i][j] += multiplyTruncated(a[i][l], b[l][j], order);
  return out;
}

PolyMatrix transpose(const PolyMatrix& a) {
  PolyMatrix out(a[0].size(), std::vector<Polynomial>(a.size(), Polynomial(a[0][0].arity())));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

} // namespace

Polynomial truncatedDeterminant(const PolyMatrix& m, int order) {
  if (m.empty()) throw InvalidInput("determinant of empty matrix");
  return bareissDeterminant(m).truncated(order);
}

LocalForm schurLocalForm(const Net& net, const ProjectivePoint& point, int truncationOrder) {
  checkPoint(point);
  if (truncationOrder < 2) throw InvalidInput("truncation order must be at least 2");
  const auto pencil = toPencil(net);

  LocalForm out;
  out.truncationOrder = truncationOrder;
  out.netBasis = completeBasis({{point[0], point[1], point[2]}}, 3);
  std::array<RatMatrix, 3> members;
  for (std::size_t k = 0; k < 3; ++k) {
    const ProjectivePoint col{out.netBasis(0, k), out.netBasis(1, k), out.netBasis(2, k)};
    members[k] = memberAt(pencil, col);
  }

  const auto kernel = kernelBasis(members[0]);
  if (kernel.empty()) throw InvalidInput("the member at this point is nonsingular");
  const std::size_t r = kernel.size();
  const std::size_t s = 6 - r;
  out.corank = static_cast<int>(r);
  out.frame = completeBasis(kernel, 6);

  // P^T (M0 + u M1 + v M2) P as linear polynomials in (u, v).
  const RatMatrix pt = out.frame.transposed();
  std::array<RatMatrix, 3> moved;
  for (std::size_t k = 0; k < 3; ++k) moved[k] = pt * members[k] * out.frame;
  auto entry = [&](std::size_t i, std::size_t j) {
    Polynomial e = Polynomial::constant(2, moved[0](i, j));
    e += Polynomial::variable(2, 0) * moved[1](i, j);
    e += Polynomial::variable(2, 1) * moved[2](i, j);
    return e;
  };

  out.blockA.assign(r, std::vector<Polynomial>(r, Polynomial(2)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.blockA[i][j] = entry(i, j);
  if (s == 0) {
    out.blockU.assign(r, std::vector<Polynomial>(r, Polynomial(2)));
    out.detC = Polynomial::constant(2, 1);
    out.localDiscriminant = truncatedDeterminant(out.blockA, truncationOrder);
    return out;
  }

  PolyMatrix b(s, std::vector<Polynomial>(r, Polynomial(2)));
  PolyMatrix c(s, std::vector<Polynomial>(s, Polynomial(2)));
  RatMatrix c0(s, s);
  PolyMatrix cLin(s, std::vector<Polynomial>(s, Polynomial(2)));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < r; ++j) b[i][j] = entry(r + i, j);
    for (std::size_t j = 0; j < s; ++j) {
      c[i][j] = entry(r + i, r + j);
      c0(i, j) = moved[0](r + i, r + j);
      cLin[i][j] = c[i][j] - Polynomial::constant(2, c0(i, j));
    }
  }
  const auto c0inv = inverse(c0);
  if (!c0inv) throw InvalidInput("complementary block is singular at the point");

  // C^{-1} = sum_n (-C0^{-1} C_lin)^n C0^{-1}; U needs it to order N - 2.
  const int innerOrder = truncationOrder - 2;
  const PolyMatrix c0invP = constantMatrix(*c0inv, 2);
  PolyMatrix step = multiply(constantMatrix(c0inv->scaled(-1), 2), cLin, innerOrder);
  PolyMatrix term = constantMatrix(RatMatrix::identity(s), 2);
  PolyMatrix series = term;
  for (int n = 1; n <= innerOrder; ++n) {
    term = multiply(term, step, innerOrder);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) series[i][j] += term[i][j];
  }
  const PolyMatrix cInv = multiply(series, c0invP, innerOrder);
  out.blockU = multiply(multiply(transpose(b), cInv, truncationOrder - 1), b, truncationOrder);

  PolyMatrix aMinusU = out.blockA;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) aMinusU[i][j] -= out.blockU[i][j];
  out.detC = truncatedDeterminant(c, truncationOrder);
  out.localDiscriminant = truncatedDeterminant(aMinusU, truncationOrder);
  return out;
}

Polynomial tangentConeAt(const LocalForm& form) {
  if (form.localDiscriminant.isZero()) throw InvalidInput("local discriminant vanishes to the truncation order");
  const Polynomial cone = form.localDiscriminant.homogeneousPart(form.localDiscriminant.order());
  const Polynomial detA = truncatedDeterminant(form.blockA, form.truncationOrder);
  if (!detA.isZero() && detA != cone) throw InvariantViolation("tangent cone differs from det(A)");
  return cone;
}

const char* toText(Tameness t) {
  switch (t) {
  case Tameness::tame: return "tame";
  case Tameness::not_tame: return "not-tame";
  case Tameness::not_a_base_point: return "not-a-base-point";
  case Tameness::smooth_base_point: return "smooth-base-point";
  }
  return "?";
}

Tameness tameTest(const Net& net, const std::vector<Rational>& x) {
  if (x.size() != 6) throw InvalidInput("base point candidates have 6 coordinates");
  if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; })) throw InvalidInput("zero vector is not a point");
  for (std::size_t q = 0; q < 3; ++q)
    if (sgn(net[q].evaluate(x)) != 0) return Tameness::not_a_base_point;
  const auto pencil = toPencil(net);
  RatMatrix tangents(3, 6);
  for (std::size_t q = 0; q < 3; ++q) {
    const auto ax = pencil.matrices[q] * x;
    for (std::size_t j = 0; j < 6; ++j) tangents(q, j) = ax[j];
  }
  const std::size_t rk = rank(tangents);
  if (rk == 3) return Tameness::smooth_base_point;
  return rk == 2 ? Tameness::tame : Tameness::not_tame;
}

} // namespace quadnet
