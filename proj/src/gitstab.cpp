#include "quadnet/gitstab.hpp"

#include "quadnet/cones.hpp"
#include "quadnet/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace quadnet {

int weightOfMonomial(const Monomial& m, const WeightVector& rho) {
  if (rho.size() > static_cast<std::size_t>(kMaxVars)) throw InvalidInput("weight vector too long");
  for (std::size_t i = rho.size(); i < static_cast<std::size_t>(kMaxVars); ++i)
    if (m.exp[i] != 0) throw InvalidInput("monomial has more variables than the weight vector");
  int w = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) w += rho[i] * m.exp[i];
  return w;
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::rho) {
    const int wa = weightOfMonomial(a, rho);
    const int wb = weightOfMonomial(b, rho);
    if (wa != wb) return wa > wb;
  }
  return a > b;
}

namespace {

std::vector<std::size_t> columnOrder(const MonomialOrder& order) {
  std::vector<std::size_t> cols(21);
  std::iota(cols.begin(), cols.end(), 0);
  const auto& mons = quadraticMonomials();
  std::sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) { return order.greater(mons[a], mons[b]); });
  return cols;
}

RatMatrix permutedColumns(const RatMatrix& m, const std::vector<std::size_t>& cols) {
  RatMatrix out(m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(r, cols[c]);
  return out;
}

void checkNetWeight(const WeightVector& rho) {
  if (rho.size() != 6) throw InvalidInput("net weight vectors have 6 entries");
}

} // namespace

Net normalizedBasis(const Net& net, const MonomialOrder& order) {
  if (order.kind == MonomialOrder::Kind::rho) checkNetWeight(order.rho);
  const auto cols = columnOrder(order);
  const auto ech = rowEchelon(permutedColumns(net.coefficientMatrix(), cols));
  RatMatrix basis(3, 21);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 21; ++c) basis(r, cols[c]) = ech.reduced(r, c);
  return Net(basis);
}

std::array<Monomial, 3> initialMonomials(const Net& net, const MonomialOrder& order) {
  if (order.kind == MonomialOrder::Kind::rho) checkNetWeight(order.rho);
  const auto cols = columnOrder(order);
  const auto ech = rowEchelon(permutedColumns(net.coefficientMatrix(), cols));
  std::array<Monomial, 3> out;
  for (std::size_t r = 0; r < 3; ++r) out[r] = quadraticMonomials()[cols[ech.pivots[r]]];
  return out;
}

namespace {

// Greedy matroid basis over the 21 coefficient columns. The initial
// monomials of the rho-normalized basis are the greedy picks in rho-order.
class InitialWeightOracle {
public:
  explicit InitialWeightOracle(const Net& net) {
    const RatMatrix& m = net.coefficientMatrix();
    // Row scaling does not change column independence.
    std::array<Integer, 3> scale;
    for (std::size_t r = 0; r < 3; ++r) {
      scale[r] = 1;
      for (std::size_t c = 0; c < 21; ++c) mpz_lcm(scale[r].get_mpz_t(), scale[r].get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    small_ = true;
    for (std::size_t c = 0; c < 21; ++c)
      for (std::size_t r = 0; r < 3; ++r) {
        const Rational v = m(r, c) * scale[r];
        big_[c][r] = v.get_num();
        if (abs(big_[c][r]) >= (1L << 19)) small_ = false;
      }
    if (small_)
      for (std::size_t c = 0; c < 21; ++c)
        for (std::size_t r = 0; r < 3; ++r) small_cols_[c][r] = big_[c][r].get_si();
  }

  int weight(const WeightVector& rho) const {
    std::array<int, 21> w;
    std::array<std::size_t, 21> order;
    for (std::size_t c = 0; c < 21; ++c) {
      w[c] = weightOfMonomial(quadraticMonomials()[c], rho);
      order[c] = c;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] != w[b] ? w[a] > w[b] : a < b; });
    return small_ ? greedy(order, w, small_cols_) : greedy(order, w, big_);
  }

private:
  template <class T>
  static bool independent(const std::array<T, 3>* picked[], std::size_t n, const std::array<T, 3>& c) {
    if (n == 0) return c[0] != 0 || c[1] != 0 || c[2] != 0;
    const auto& p = *picked[0];
    if (n == 1) return p[1] * c[2] - p[2] * c[1] != 0 || p[2] * c[0] - p[0] * c[2] != 0 || p[0] * c[1] - p[1] * c[0] != 0;
    const auto& q = *picked[1];
    const T det = p[0] * (q[1] * c[2] - q[2] * c[1]) - p[1] * (q[0] * c[2] - q[2] * c[0]) + p[2] * (q[0] * c[1] - q[1] * c[0]);
    return det != 0;
  }

  template <class T>
  static int greedy(const std::array<std::size_t, 21>& order, const std::array<int, 21>& w, const std::array<std::array<T, 3>, 21>& cols) {
    const std::array<T, 3>* picked[3];
    std::size_t n = 0;
    int total = 0;
    for (std::size_t k = 0; k < 21 && n < 3; ++k) {
      const std::size_t c = order[k];
      if (!independent(picked, n, cols[c])) continue;
      picked[n++] = &cols[c];
      total += w[c];
    }
    if (n != 3) throw InvariantViolation("net coefficient matrix lost rank");
    return total;
  }

  bool small_ = true;
  std::array<std::array<Integer, 3>, 21> big_;
  std::array<std::array<std::int64_t, 3>, 21> small_cols_{};
};

int checkedWeight(const InitialWeightOracle& oracle, const WeightVector& rho) {
  checkNetWeight(rho);
  if (rho.isZero()) throw InvalidInput("weight vector must be nonzero");
  return oracle.weight(rho);
}

} // namespace

int hmWeight(const Net& net, const WeightVector& rho) { return checkedWeight(InitialWeightOracle(net), rho); }

Stability stableWrt(const Net& net, const WeightVector& rho) {
  const int w = hmWeight(net, rho);
  if (w > 0) return Stability::stable;
  return w == 0 ? Stability::semistable_not_stable : Stability::unstable;
}

const char* toText(Verdict v) {
  switch (v) {
  case Verdict::stable: return "stable";
  case Verdict::strictly_semistable: return "strictly-semistable";
  case Verdict::unstable: return "unstable";
  case Verdict::undecided: return "undecided";
  }
  return "?";
}

const char* toText(Scope s) {
  switch (s) {
  case Scope::single_1ps: return "single-1ps";
  case Scope::torus: return "torus";
  case Scope::search: return "search";
  }
  return "?";
}

const char* toText(KempfOutcome k) {
  switch (k) {
  case KempfOutcome::certified_semistable: return "certified-semistable";
  case KempfOutcome::not_applicable: return "not-applicable";
  case KempfOutcome::refuted: return "refuted";
  }
  return "?";
}

const std::vector<WeightVector>& theoremTypes() {
  static const std::vector<WeightVector> types = [] {
    const std::vector<std::vector<int>> raw = {
        {1, 1, 1, 1, 1, -5}, {1, 1, 1, 1, -2, -2}, {1, 1, 1, -1, -1, -1}, {2, 2, -1, -1, -1, -1},
        {5, -1, -1, -1, -1, -1}, {2, 2, 2, -1, -1, -4}, {7, 1, 1, 1, -5, -5}, {4, 1, 1, -2, -2, -2},
        {3, 1, 1, -1, -1, -3}, {2, 1, 0, 0, -1, -2}, {5, 5, -1, -1, -1, -7}, {1, 1, 0, 0, -1, -1},
        {5, 3, 1, -1, -3, -5}};
    std::vector<WeightVector> out;
    for (const auto& w : raw) out.push_back(WeightVector::of(w));
    return out;
  }();
  return types;
}

std::vector<WeightVector> distinctPermutations(const WeightVector& rho) {
  std::vector<int> w = rho.weights;
  std::sort(w.begin(), w.end());
  std::vector<WeightVector> out;
  do {
    out.push_back(WeightVector::of(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

const std::vector<ScanEntry>& scanFamily() {
  static const std::vector<ScanEntry> family = [] {
    std::vector<ScanEntry> out;
    for (std::size_t t = 0; t < theoremTypes().size(); ++t)
      for (auto& p : distinctPermutations(theoremTypes()[t])) out.push_back({std::move(p), static_cast<int>(t)});
    return out;
  }();
  return family;
}

StabilityReport torusScan13(const Net& net, Exec exec) {
  const auto& family = scanFamily();
  const auto n = static_cast<std::ptrdiff_t>(family.size());
  const InitialWeightOracle oracle(net);
  std::vector<int> weights(family.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) weights[static_cast<std::size_t>(i)] = checkedWeight(oracle, family[static_cast<std::size_t>(i)].rho);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) weights[static_cast<std::size_t>(i)] = checkedWeight(oracle, family[static_cast<std::size_t>(i)].rho);
  }
  const int minimum = *std::min_element(weights.begin(), weights.end());
  StabilityReport report;
  report.scope = Scope::torus;
  report.evaluations = family.size();
  report.minimumWeight = Rational(minimum);
  if (minimum > 0) {
    report.verdict = Verdict::stable;
    report.weight = Rational(minimum);
    return report;
  }
  auto qualifies = [&](int w) { return minimum < 0 ? w < 0 : w == 0; };
  std::size_t pick = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!qualifies(weights[i])) continue;
    if (pick == family.size()) {
      pick = i;
    } else if (family[i].typeIndex != family[pick].typeIndex) {
      break;
    } else if (weights[i] < weights[pick]) {
      pick = i;
    }
  }
  report.verdict = minimum < 0 ? Verdict::unstable : Verdict::strictly_semistable;
  report.weight = Rational(weights[pick]);
  report.witness = Witness{family[pick].rho, RatMatrix::identity(6), family[pick].typeIndex + 1};
  return report;
}

namespace {

Rational det3(const RatMatrix& m, std::size_t a, std::size_t b, std::size_t c) {
  return m(0, a) * (m(1, b) * m(2, c) - m(1, c) * m(2, b)) - m(0, b) * (m(1, a) * m(2, c) - m(1, c) * m(2, a)) +
         m(0, c) * (m(1, a) * m(2, b) - m(1, b) * m(2, a));
}

std::array<int, 6> exponentSum(std::size_t a, std::size_t b, std::size_t c) {
  std::array<int, 6> out{};
  for (auto idx : {a, b, c})
    for (std::size_t v = 0; v < 6; ++v) out[v] += quadraticMonomials()[idx].exp[v];
  return out;
}

} // namespace

std::vector<std::array<int, 6>> pluckerSupport(const Net& net, Exec exec) {
  const RatMatrix& m = net.coefficientMatrix();
  std::vector<std::vector<std::array<int, 6>>> perFirst(21);
  auto scanFirst = [&](std::size_t a) {
    for (std::size_t b = a + 1; b < 21; ++b)
      for (std::size_t c = b + 1; c < 21; ++c)
        if (sgn(det3(m, a, b, c)) != 0) perFirst[a].push_back(exponentSum(a, b, c));
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int a = 0; a < 21; ++a) scanFirst(static_cast<std::size_t>(a));
  } else {
    for (std::size_t a = 0; a < 21; ++a) scanFirst(a);
  }
  std::set<std::array<int, 6>> all;
  for (const auto& part : perFirst) all.insert(part.begin(), part.end());
  return {all.begin(), all.end()};
}

namespace {

struct FacetResult {
  Rational value;
  std::vector<Rational> argmin;
};

// min over the facet lambda_coord = side of max_v v . lambda
FacetResult solveFacet(const std::vector<std::array<int, 6>>& support, std::size_t coord, int side) {
  std::vector<LinearForm> ineqs;
  ineqs.reserve(support.size());
  for (const auto& v : support) {
    LinearForm f;
    f.coefficients.assign(v.begin(), v.end());
    f.coefficients.push_back(-1);
    ineqs.push_back(std::move(f));
  }
  LinearForm sum{std::vector<Rational>(7, Rational(1)), 0};
  sum.coefficients[6] = 0;
  LinearForm objective{std::vector<Rational>(7, Rational(0)), 0};
  objective.coefficients[6] = 1;
  Box box{std::vector<Rational>(7, Rational(-1)), std::vector<Rational>(7, Rational(1))};
  box.lower[6] = -6;
  box.upper[6] = 6;
  box.lower[coord] = box.upper[coord] = side;
  const auto lp = solveLP(objective, {sum}, ineqs, box);
  if (!lp.feasible) throw InvariantViolation("facet LP infeasible");
  return {lp.optimum, std::vector<Rational>(lp.argmin.begin(), lp.argmin.begin() + 6)};
}

WeightVector integerWeights(const std::vector<Rational>& lambda) {
  const auto prim = primitiveIntegerVector(lambda);
  std::vector<int> w;
  for (const auto& z : prim) w.push_back(static_cast<int>(toInt64(z)));
  return WeightVector::of(std::move(w));
}

} // namespace

TorusLP torusDestabilizerLP(const Net& net, Exec exec) {
  const auto support = pluckerSupport(net, exec);
  std::vector<FacetResult> facets(12);
  auto run = [&](int f) { facets[static_cast<std::size_t>(f)] = solveFacet(support, static_cast<std::size_t>(f / 2), f % 2 == 0 ? -1 : 1); };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int f = 0; f < 12; ++f) run(f);
  } else {
    for (int f = 0; f < 12; ++f) run(f);
  }
  std::size_t best = 0;
  for (std::size_t f = 1; f < facets.size(); ++f)
    if (facets[f].value < facets[best].value) best = f;

  TorusLP out;
  out.minimum = facets[best].value;
  out.argmin = facets[best].argmin;
  out.report.scope = Scope::torus;
  out.report.evaluations = 12;
  if (sgn(out.minimum) > 0) {
    out.report.verdict = Verdict::stable;
    out.report.weight = out.minimum;
    out.report.minimumWeight = out.minimum;
    return out;
  }
  out.report.verdict = sgn(out.minimum) < 0 ? Verdict::unstable : Verdict::strictly_semistable;
  const WeightVector chi = integerWeights(out.argmin);
  const int w = hmWeight(net, chi);
  if ((w < 0) != (sgn(out.minimum) < 0) || (sgn(out.minimum) == 0 && w != 0))
    throw InvariantViolation("LP witness does not reproduce the facet minimum");
  out.report.weight = Rational(w);
  out.report.minimumWeight = out.minimum;
  out.report.witness = Witness{chi, RatMatrix::identity(6)};
  return out;
}

namespace {

// dim of the net intersected with the span of the given monomial columns
std::size_t dimInside(const Net& net, const std::vector<bool>& inside) {
  std::vector<std::size_t> outside;
  for (std::size_t c = 0; c < 21; ++c)
    if (!inside[c]) outside.push_back(c);
  return 3 - rank(permutedColumns(net.coefficientMatrix(), outside));
}

// (x_k, ..., x_5) and its square, as monomial column masks
std::pair<std::vector<bool>, std::vector<bool>> tailIdeal(std::size_t k) {
  std::vector<bool> ideal(21), square(21);
  for (std::size_t c = 0; c < 21; ++c) {
    const Monomial& m = quadraticMonomials()[c];
    int inTail = 0;
    for (std::size_t v = k; v < 6; ++v) inTail += m.exp[v];
    ideal[c] = inTail >= 1;
    square[c] = inTail >= 2;
  }
  return {ideal, square};
}

} // namespace

bool lemmaPredicate(const Net& net, int i) {
  if (i < 1 || i > 5) throw InvalidInput("lemma condition index must be 1..5");
  const auto [ideal, square] = tailIdeal(static_cast<std::size_t>(6 - i));
  const std::size_t d1 = dimInside(net, ideal);
  const std::size_t d2 = dimInside(net, square);
  switch (i) {
  case 1: return d1 >= 1;
  case 2: return d1 >= 2 || d2 >= 1;
  case 3: return d1 == 3 || (d1 >= 2 && d2 >= 1);
  case 4: return d2 >= 2 || (d1 == 3 && d2 >= 1);
  default: return d1 == 3 && d2 >= 2;
  }
}

KempfResult kempfCertificate(const Net& net, const WeightVector& sigma, Exec exec) {
  checkNetWeight(sigma);
  KempfResult out;
  if (sigma.isZero()) return out;
  // sigma preserves the plane iff every weight component of every member
  // already lies in the plane.
  std::vector<RatMatrix> blocks{net.coefficientMatrix()};
  for (std::size_t r = 0; r < 3; ++r) {
    std::map<int, RatMatrix> parts;
    for (std::size_t c = 0; c < 21; ++c) {
      const Rational& coeff = net.coefficientMatrix()(r, c);
      if (sgn(coeff) == 0) continue;
      auto [it, fresh] = parts.try_emplace(weightOfMonomial(quadraticMonomials()[c], sigma), RatMatrix(1, 21));
      it->second(0, c) = coeff;
    }
    for (auto& [w, row] : parts) blocks.push_back(row);
  }
  if (rank(vstack(blocks)) != 3) return out;
  const TorusLP lp = torusDestabilizerLP(net, exec);
  out.lpMinimum = lp.minimum;
  out.outcome = sgn(lp.minimum) >= 0 ? KempfOutcome::certified_semistable : KempfOutcome::refuted;
  return out;
}

namespace {

std::int64_t integerDeterminant(std::array<std::array<std::int64_t, 6>, 6> a) {
  // Bareiss; entries stay bounded by Hadamard's bound (< 2^40 here).
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < 5; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < 6 && a[p][k] == 0) ++p;
      if (p == 6) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < 6; ++i)
      for (std::size_t j = k + 1; j < 6; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[5][5];
}

} // namespace

RatMatrix searchFrame(std::uint64_t seed, std::uint64_t iteration) {
  if (iteration <= 1) return RatMatrix::identity(6);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration), static_cast<std::uint32_t>(iteration >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    std::array<std::array<std::int64_t, 6>, 6> a{};
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    const std::int64_t d = integerDeterminant(a);
    if (d != 1 && d != -1) continue;
    RatMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = static_cast<long>(a[i][j]);
    return m;
  }
}

StabilityReport randomSearch(const Net& net, int iterations, std::uint64_t seed, Exec exec) {
  if (iterations < 1) throw InvalidInput("search needs at least one iteration");
  std::vector<StabilityReport> perFrame(static_cast<std::size_t>(iterations));
  auto run = [&](int it) {
    const RatMatrix frame = searchFrame(seed, static_cast<std::uint64_t>(it) + 1);
    StabilityReport r = torusScan13(net.transformed(frame), Exec::serial);
    if (r.witness) r.witness->frame = frame;
    perFrame[static_cast<std::size_t>(it)] = std::move(r);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int it = 0; it < iterations; ++it) run(it);
  } else {
    for (int it = 0; it < iterations; ++it) run(it);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < perFrame.size(); ++i)
    if (*perFrame[i].minimumWeight < *perFrame[best].minimumWeight) best = i;

  StabilityReport out;
  out.scope = Scope::search;
  out.weight = perFrame[best].weight;
  out.minimumWeight = perFrame[best].minimumWeight;
  out.iteration = best + 1;
  for (const auto& r : perFrame) out.evaluations += r.evaluations;
  if (sgn(*out.minimumWeight) < 0) {
    out.verdict = Verdict::unstable;
    out.witness = perFrame[best].witness;
  } else {
    out.verdict = Verdict::undecided;
    if (perFrame[best].witness) out.witness = perFrame[best].witness;
  }
  return out;
}

} // namespace quadnet
