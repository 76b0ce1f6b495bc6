#include "quadnet/verify.hpp"

#include "quadnet/discr.hpp"
#include "quadnet/error.hpp"
#include "quadnet/polyalg.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace quadnet {

extern const char* const kTheoremCaseCatalog;

std::vector<int> violatedConditions(const WeightVector& rho, const Triple& w) {
  const int a = rho[0], b = rho[1], c = rho[2], d = rho[3], e = rho[4], f = rho[5];
  std::vector<int> out;
  if (w[2] < 2 * e) out.push_back(1);
  if (w[1] < 2 * d || w[2] < d + f) out.push_back(2);
  if (w[0] < 2 * c || (w[1] < 2 * c && w[2] < c + f)) out.push_back(3);
  if (w[1] < b + f || (w[0] < 2 * b && w[2] < b + f)) out.push_back(4);
  if (w[0] != 2 * a && (w[0] < a + e || w[1] < a + f)) out.push_back(5);
  return out;
}

int earlierTypeObstruction(const WeightVector& rho, const Triple& w) {
  const auto& types = theoremTypes();
  const auto& monomials = quadraticMonomials();
  for (std::size_t j = 0; j < types.size() && types[j] != rho; ++j) {
    // Q_k lies in the span of monomials of rho-weight <= w[k], so the
    // rho_j weight of the net is at most the sum of the band maxima.
    int bound = 0;
    for (int k = 0; k < 3; ++k) {
      int best = std::numeric_limits<int>::min();
      for (const auto& m : monomials)
        if (weightOfMonomial(m, rho) <= w[static_cast<std::size_t>(k)]) best = std::max(best, weightOfMonomial(m, types[j]));
      bound += best;
    }
    if (bound <= 0) return static_cast<int>(j) + 1;
  }
  return 0;
}

TripleTable enumerateTriples(const WeightVector& rho) {
  const auto& types = theoremTypes();
  if (std::find(types.begin() + 5, types.end(), rho) == types.end())
    throw InvalidInput("triple tables exist for rho_6 .. rho_13 only");
  std::set<int, std::greater<>> weights;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) weights.insert(rho[i] + rho[j]);

  TripleTable out;
  out.rho = rho;
  for (int w1 : weights)
    for (int w2 : weights) {
      if (w2 > w1) continue;
      for (int w3 : weights) {
        if (w3 > w2 || w1 + w2 + w3 > 0) continue;
        const Triple t{w1, w2, w3};
        auto bad = violatedConditions(rho, t);
        if (!bad.empty()) {
          out.rejected.push_back({t, std::move(bad), 0});
        } else if (const int j = earlierTypeObstruction(rho, t); j != 0) {
          out.rejected.push_back({t, {}, j});
        } else {
          out.triples.push_back(t);
        }
      }
    }
  return out;
}

std::vector<Triple> statedTriples(int typeNumber) {
  switch (typeNumber) {
  case 6: return {{4, -2, -2}};
  case 7: return {{2, 2, -4}};
  case 8: return {{2, 2, -4}};
  case 9: return {{2, 0, -2}};
  case 10: return {{2, 0, -2}};
  case 11: return {{4, -2, -2}};
  case 12: return {{0, 0, 0}};
  case 13: return {{2, 0, -2}};
  default: throw InvalidInput("triple tables exist for rho_6 .. rho_13 only");
  }
}

IntVector parseBracketForm(std::string_view text) {
  IntVector v(6, Integer(0));
  std::size_t i = 0;
  bool expectTerm = true;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (!expectTerm) {
      if (ch != '+') throw InvalidInput("bracket form: expected '+' in '" + std::string(text) + "'");
      expectTerm = true;
      ++i;
      continue;
    }
    long mult = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) mult = mult * 10 + (text[i++] - '0');
    if (mult == 0) mult = 1;
    if (i >= text.size() || text[i] < 'a' || text[i] > 'f') throw InvalidInput("bracket form: expected a..f in '" + std::string(text) + "'");
    v[static_cast<std::size_t>(text[i] - 'a')] += mult;
    ++i;
    expectTerm = false;
  }
  if (expectTerm) throw InvalidInput("bracket form: empty or dangling '+' in '" + std::string(text) + "'");
  return v;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> splitOn(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

bool isPrimitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g == 1;
}

} // namespace

std::vector<CaseSpec> parseCaseCatalog(std::string_view text) {
  std::vector<CaseSpec> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineNo = 0;
  bool open = false, sawExpect = false, sawCounts = false;
  auto fail = [&](const std::string& why) { throw InvalidInput("case catalog line " + std::to_string(lineNo) + ": " + why); };
  auto close = [&] {
    if (!open) return;
    if (out.back().brackets.empty()) fail("case " + out.back().id + " has no brackets");
    if (!sawExpect) fail("case " + out.back().id + " has no expectation");
    if (!sawCounts) fail("case " + out.back().id + " has no alternative counts");
    open = false;
  };
  while (std::getline(in, line)) {
    ++lineNo;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream words(t);
    std::string key;
    words >> key;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);
    if (key == "case") {
      close();
      if (rest.empty()) fail("case without id");
      out.push_back(CaseSpec{rest, {}, {}, true, {}, 0});
      open = true;
      sawExpect = sawCounts = false;
      continue;
    }
    if (!open) fail("'" + key + "' outside a case");
    CaseSpec& spec = out.back();
    if (key == "bracket") {
      std::vector<IntVector> alts;
      for (const auto& alt : splitOn(rest, '|')) {
        IntVector v = parseBracketForm(alt);
        Integer total = 0;
        for (const auto& x : v) total += x;
        if (total != 2) fail("'" + alt + "' is not the weight of a quadratic monomial");
        alts.push_back(std::move(v));
      }
      spec.brackets.push_back(std::move(alts));
      spec.bracketText.push_back(rest);
    } else if (key == "expect") {
      std::istringstream e(rest);
      std::string kind;
      e >> kind;
      if (kind == "zero") {
        spec.expectZero = true;
      } else if (kind == "ray") {
        spec.expectZero = false;
        spec.expectedRay.assign(6, Integer(0));
        long x = 0;
        for (auto& r : spec.expectedRay) {
          if (!(e >> x)) fail("ray needs six integers");
          r = x;
        }
        std::string typeWord;
        if (!(e >> typeWord >> spec.claimedType) || typeWord != "type" || spec.claimedType < 1 || spec.claimedType > 13)
          fail("ray needs 'type N' with N in 1..13");
        Integer total = 0;
        for (const auto& r : spec.expectedRay) total += r;
        if (total != 0 || !isPrimitive(spec.expectedRay) || !std::is_sorted(spec.expectedRay.rbegin(), spec.expectedRay.rend()))
          fail("ray must be primitive, nonincreasing, with zero sum");
      } else {
        fail("expect 'zero' or 'ray'");
      }
      std::string extra;
      if (e >> extra) fail("trailing text after expectation");
      sawExpect = true;
    } else if (key == "alternatives") {
      std::istringstream c(rest);
      std::vector<std::size_t> counts;
      std::size_t n = 0;
      while (c >> n) counts.push_back(n);
      if (counts.size() != spec.brackets.size()) fail("case " + spec.id + ": bracket count differs from the recorded count");
      for (std::size_t k = 0; k < counts.size(); ++k)
        if (counts[k] != spec.brackets[k].size()) fail("case " + spec.id + ": bracket " + std::to_string(k + 1) + " alternative count differs");
      sawCounts = true;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  close();
  std::set<std::string> ids;
  for (const auto& s : out)
    if (!ids.insert(s.id).second) throw InvalidInput("case catalog: duplicate id " + s.id);
  return out;
}

const std::vector<CaseSpec>& bundledCases() {
  static const std::vector<CaseSpec> cases = parseCaseCatalog(kTheoremCaseCatalog);
  return cases;
}

const char* toText(TypeMatch m) {
  switch (m) {
  case TypeMatch::exact: return "exact";
  case TypeMatch::reordered: return "reordered";
  case TypeMatch::none: return "none";
  }
  return "?";
}

CaseOutcome caseCone(const CaseSpec& spec) {
  if (spec.brackets.empty()) throw InvalidInput("case " + spec.id + " has no brackets");
  Cone cone;
  cone.dimension = 6;
  cone.equalities.push_back(LinearForm{std::vector<Rational>(6, Rational(1)), 0});
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Rational> c(6, Rational(0));
    c[i] = -1;
    c[i + 1] = 1;
    cone.inequalities.push_back(LinearForm{c, 0});
  }
  // sum of maxima <= 0  <=>  every selection of alternatives sums to <= 0
  std::vector<std::size_t> sel(spec.brackets.size(), 0);
  while (true) {
    std::vector<Rational> sum(6, Rational(0));
    for (std::size_t b = 0; b < spec.brackets.size(); ++b) {
      if (spec.brackets[b].empty()) throw InvalidInput("case " + spec.id + " has an empty bracket");
      for (std::size_t i = 0; i < 6; ++i) sum[i] += spec.brackets[b][sel[b]][i];
    }
    cone.inequalities.push_back(LinearForm{sum, 0});
    std::size_t b = 0;
    while (b < spec.brackets.size() && ++sel[b] == spec.brackets[b].size()) sel[b++] = 0;
    if (b == spec.brackets.size()) break;
  }

  CaseOutcome out;
  out.cone = extremeRays(std::move(cone));
  if (spec.expectZero) {
    out.matches = out.cone.isZero();
    return out;
  }
  out.matches = out.cone.lineality.empty() && out.cone.rays.size() == 1 && out.cone.rays.front() == spec.expectedRay;
  const auto& type = theoremTypes()[static_cast<std::size_t>(spec.claimedType - 1)].weights;
  IntVector typeVec(type.begin(), type.end());
  if (typeVec == spec.expectedRay) {
    out.typeMatch = TypeMatch::exact;
  } else {
    IntVector a = typeVec, b = spec.expectedRay;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.typeMatch = a == b ? TypeMatch::reordered : TypeMatch::none;
  }
  return out;
}

std::vector<CaseOutcome> verifyCases(const std::vector<CaseSpec>& specs, Exec exec) {
  std::vector<CaseOutcome> out(specs.size());
  const auto n = static_cast<long>(specs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = caseCone(specs[static_cast<std::size_t>(i)]);
  } else {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = caseCone(specs[static_cast<std::size_t>(i)]);
  }
  return out;
}

namespace {

std::mt19937_64 sampleRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Monomial column indices allowed by a predicate on the exponent vector.
template <class Pred>
std::vector<std::size_t> columnsWhere(Pred pred) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < 21; ++c)
    if (pred(quadraticMonomials()[c])) out.push_back(c);
  return out;
}

// Random net whose k-th quadric only uses the columns allowed[k].
Net patternNet(std::mt19937_64& rng, const std::array<std::vector<std::size_t>, 3>& allowed, int density) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> keep(0, 9);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RatMatrix m(3, 21);
    for (std::size_t r = 0; r < 3; ++r)
      for (auto c : allowed[r])
        if (keep(rng) < density) m(r, c) = coeff(rng);
    if (rank(m) == 3) return Net(m);
  }
  throw InvariantViolation("could not sample a net with the requested pattern");
}

std::vector<std::size_t> allColumns() {
  return columnsWhere([](const Monomial&) { return true; });
}

int tailDegree(const Monomial& m, std::size_t from) {
  int d = 0;
  for (std::size_t v = from; v < 6; ++v) d += m.exp[v];
  return d;
}

// Net violating condition i by one of its disjuncts (variant 0 or 1).
Net adversarialNet(std::mt19937_64& rng, int i, int variant) {
  const std::size_t from = static_cast<std::size_t>(6 - i);
  const auto all = allColumns();
  const auto inI = columnsWhere([&](const Monomial& m) { return tailDegree(m, from) >= 1; });
  const auto inI2 = columnsWhere([&](const Monomial& m) { return tailDegree(m, from) >= 2; });
  std::array<std::vector<std::size_t>, 3> allowed{all, all, all};
  const bool first = variant == 0;
  switch (i) {
  case 1:
    allowed[2] = inI;
    break;
  case 2:
    if (first) allowed[1] = allowed[2] = inI;
    else allowed[2] = inI2;
    break;
  case 3:
    if (first) allowed = {inI, inI, inI};
    else allowed = {all, inI, inI2};
    break;
  case 4:
    if (first) allowed = {all, inI2, inI2};
    else allowed = {inI, inI, inI2};
    break;
  default:
    allowed = {inI, inI2, inI2};
    break;
  }
  return patternNet(rng, allowed, 6);
}

Net randomSampleNet(std::mt19937_64& rng) {
  const int density = std::uniform_int_distribution<int>(1, 6)(rng);
  const auto all = allColumns();
  return patternNet(rng, {all, all, all}, density);
}

struct LemmaSample {
  std::array<bool, 5> holds{};
  std::vector<LemmaCounterexample> bad;
};

LemmaSample checkLemma(const Net& net) {
  LemmaSample s;
  for (int i = 1; i <= 5; ++i) {
    const bool predicate = lemmaPredicate(net, i);
    const bool unstableish = stableWrt(net, theoremTypes()[static_cast<std::size_t>(i - 1)]) != Stability::stable;
    s.holds[static_cast<std::size_t>(i - 1)] = predicate;
    if (predicate != unstableish) s.bad.push_back({i, {toText(net[0]), toText(net[1]), toText(net[2])}});
  }
  return s;
}

template <class F>
void forEachIndex(long n, Exec exec, F&& f) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) f(i);
  } else {
    for (long i = 0; i < n; ++i) f(i);
  }
}

} // namespace

LemmaReport lemmaEquivalenceHarness(int samples, std::uint64_t seed, Exec exec) {
  if (samples < 1) throw InvalidInput("samples must be positive");
  constexpr int perCondition = 8;
  const long total = samples + 5 * perCondition;
  std::vector<LemmaSample> results(static_cast<std::size_t>(total));
  forEachIndex(total, exec, [&](long k) {
    if (k < samples) {
      auto rng = sampleRng(seed, 0, static_cast<std::uint64_t>(k));
      results[static_cast<std::size_t>(k)] = checkLemma(randomSampleNet(rng));
    } else {
      const long j = k - samples;
      auto rng = sampleRng(seed, 1, static_cast<std::uint64_t>(j));
      results[static_cast<std::size_t>(k)] = checkLemma(adversarialNet(rng, static_cast<int>(j / perCondition) + 1, static_cast<int>(j % 2)));
    }
  });
  LemmaReport report;
  report.randomNets = samples;
  report.adversarialNets = 5 * perCondition;
  for (const auto& r : results) {
    for (std::size_t i = 0; i < 5; ++i) report.predicateHolds[i] += r.holds[i];
    report.counterexamples.insert(report.counterexamples.end(), r.bad.begin(), r.bad.end());
  }
  return report;
}

bool isNegatedSquare(const Polynomial& delta) { return !delta.isZero() && perfectSquareRoot(-delta).has_value(); }

bool hasQuadraticSquareFactor(const Polynomial& delta) {
  if (delta.isZero()) return false;
  const auto factors = squarefreeDecomposition(delta);
  int squareRootDegree = 0;
  for (std::size_t k = 1; k < factors.size(); ++k) squareRootDegree += factors[k].totalDegree() * static_cast<int>((k + 1) / 2);
  return squareRootDegree >= 2;
}

Net rho3PatternNet(std::mt19937_64& rng) {
  // all quadrics vanish on x3 = x4 = x5 = 0; the second also omits x0x3,
  // the third x0x3 and x0x4
  auto outside = [](std::size_t i, std::size_t j) { return i <= 2 && j <= 2; };
  auto cols = [&](std::vector<std::pair<std::size_t, std::size_t>> extra) {
    return columnsWhere([&](const Monomial& m) {
      std::size_t i = 6, j = 6;
      for (std::size_t v = 0; v < 6; ++v) {
        if (m.exp[v] == 2) i = j = v;
        if (m.exp[v] == 1) (i == 6 ? i : j) = v;
      }
      if (outside(i, j)) return false;
      return std::find(extra.begin(), extra.end(), std::make_pair(i, j)) == extra.end();
    });
  };
  return patternNet(rng, {cols({}), cols({{0, 3}}), cols({{0, 3}, {0, 4}})}, 7);
}

Net rho12PatternNet(std::mt19937_64& rng) {
  const auto cols = columnsWhere([](const Monomial& m) {
    const int head = m.exp[0] + m.exp[1];
    if (head == 0) return true;
    return head == 1 && m.exp[4] + m.exp[5] == 1;
  });
  return patternNet(rng, {cols, cols, cols}, 7);
}

ShapeReport identityShapeChecks(int samples, std::uint64_t seed, Exec exec) {
  if (samples < 1) throw InvalidInput("samples must be positive");
  // 0 = degenerate, 1 = pass, 2 = fail
  std::vector<int> rho3(static_cast<std::size_t>(samples)), rho12(static_cast<std::size_t>(samples));
  forEachIndex(2L * samples, exec, [&](long k) {
    const bool first = k < samples;
    const auto idx = static_cast<std::size_t>(first ? k : k - samples);
    auto rng = sampleRng(seed, first ? 3 : 12, idx);
    const Net net = first ? rho3PatternNet(rng) : rho12PatternNet(rng);
    const Polynomial delta = discriminantOf(net);
    int verdict = 0;
    if (!delta.isZero()) verdict = (first ? isNegatedSquare(delta) : hasQuadraticSquareFactor(delta)) ? 1 : 2;
    (first ? rho3 : rho12)[idx] = verdict;
  });
  ShapeReport r;
  for (int v : rho3) (v == 0 ? r.rho3Degenerate : v == 1 ? r.rho3Passed : r.rho3Failed)++;
  for (int v : rho12) (v == 0 ? r.rho12Degenerate : v == 1 ? r.rho12Passed : r.rho12Failed)++;
  return r;
}

} // namespace quadnet
