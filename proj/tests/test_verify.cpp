#include "quadnet/discr.hpp"
#include "quadnet/error.hpp"
#include "quadnet/verify.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <map>

using namespace quadnet;
using namespace quadnet::testing;

namespace {

WeightVector type(int i) { return theoremTypes()[static_cast<std::size_t>(i - 1)]; }

// Oracle: the slice {a = 1} of the case cone, by per-coordinate LPs. An
// empty slice means the zero cone; a single point means one ray.
std::optional<std::vector<Rational>> slicePoint(const CaseSpec& spec, bool& empty) {
  std::vector<LinearForm> ineqs;
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Rational> c(6, Rational(0));
    c[i] = -1;
    c[i + 1] = 1;
    ineqs.push_back({c, 0});
  }
  std::vector<std::size_t> sel(spec.brackets.size(), 0);
  while (true) {
    std::vector<Rational> sum(6, Rational(0));
    for (std::size_t b = 0; b < spec.brackets.size(); ++b)
      for (std::size_t i = 0; i < 6; ++i) sum[i] += spec.brackets[b][sel[b]][i];
    ineqs.push_back({sum, 0});
    std::size_t b = 0;
    while (b < spec.brackets.size() && ++sel[b] == spec.brackets[b].size()) sel[b++] = 0;
    if (b == spec.brackets.size()) break;
  }
  const std::vector<LinearForm> eqs{{std::vector<Rational>(6, Rational(1)), 0}};
  Box box{std::vector<Rational>(6, Rational(-5)), std::vector<Rational>(6, Rational(1))};
  box.lower[0] = 1;
  std::vector<Rational> point(6);
  empty = false;
  for (std::size_t i = 0; i < 6; ++i) {
    std::vector<Rational> c(6, Rational(0));
    c[i] = 1;
    const auto lo = solveLP({c, 0}, eqs, ineqs, box);
    if (!lo.feasible) {
      empty = true;
      return std::nullopt;
    }
    c[i] = -1;
    const auto hi = solveLP({c, 0}, eqs, ineqs, box);
    if (lo.optimum != -hi.optimum) return std::nullopt;
    point[i] = lo.optimum;
  }
  return point;
}

} // namespace

TEST_CASE("triple tables for rho_6 .. rho_13") {
  const std::map<int, std::vector<Triple>> expected = {
      {6, {{4, -2, -2}}}, {7, {{2, 2, -4}}},  {8, {{2, 2, -4}}},  {9, {{2, 0, -2}}},
      {10, {{2, 0, -2}}}, {11, {{4, -2, -2}}}, {12, {{0, 0, 0}}}, {13, {{2, 0, -2}}},
  };
  for (const auto& [i, triples] : expected) {
    CAPTURE(i);
    const auto table = enumerateTriples(type(i));
    CHECK(table.triples == triples);
    for (const auto& r : table.rejected) {
      CHECK(r.triple[0] >= r.triple[1]);
      CHECK(r.triple[1] >= r.triple[2]);
      CHECK(r.triple[0] + r.triple[1] + r.triple[2] <= 0);
      CHECK((!r.violated.empty() || r.earlierType != 0));
    }
  }
  CHECK_THROWS_AS(enumerateTriples(type(3)), InvalidInput);
  CHECK_THROWS_AS(enumerateTriples(WeightVector::of({3, 2, 1, -1, -2, -3})), InvalidInput);
}

TEST_CASE("earlier types prune triples that conditions 1..5 admit") {
  // (1,0,-1) passes every condition for rho_10, yet every net with those
  // bands has rho_7 weight at most 2 + 2 - 4
  const auto table = enumerateTriples(type(10));
  const auto it = std::find_if(table.rejected.begin(), table.rejected.end(), [](const auto& r) { return r.triple == Triple{1, 0, -1}; });
  REQUIRE(it != table.rejected.end());
  CHECK(it->violated.empty());
  CHECK(it->earlierType == 7);
  CHECK(earlierTypeObstruction(type(10), {2, 0, -2}) == 0);
  for (int i = 6; i <= 13; ++i)
    for (const auto& r : enumerateTriples(type(i)).rejected) CHECK((r.violated.empty() == (r.earlierType != 0)));
}

TEST_CASE("rho_13 rejections carry the highest violated condition") {
  const auto table = enumerateTriples(type(13));
  const std::vector<std::pair<Triple, int>> listed = {
      {{6, 0, -6}, 3}, {{4, 2, -6}, 4}, {{4, 0, -6}, 4}, {{4, 0, -4}, 4},
      {{2, 2, -4}, 4}, {{2, 2, -6}, 4}, {{2, 0, -4}, 4}, {{2, 0, -6}, 4},
  };
  for (const auto& [t, tag] : listed) {
    const auto it = std::find_if(table.rejected.begin(), table.rejected.end(), [&](const auto& r) { return r.triple == t; });
    REQUIRE(it != table.rejected.end());
    CHECK(it->tag() == tag);
  }
  // the listed triples are exactly the rejections that pass conditions 1, 2 and 5
  std::vector<Triple> lateOnly;
  for (const auto& r : table.rejected)
    if (std::none_of(r.violated.begin(), r.violated.end(), [](int c) { return c == 1 || c == 2 || c == 5; })) lateOnly.push_back(r.triple);
  CHECK(lateOnly.size() == listed.size());
}

TEST_CASE("bracket forms and catalog parsing") {
  CHECK(parseBracketForm("a+e") == IntVector{1, 0, 0, 0, 1, 0});
  CHECK(parseBracketForm("2d") == IntVector{0, 0, 0, 2, 0, 0});
  CHECK(parseBracketForm(" b + f ") == IntVector{0, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS(parseBracketForm("a+g"), InvalidInput);
  CHECK_THROWS_AS(parseBracketForm("a+"), InvalidInput);
  CHECK_THROWS_AS(parseBracketForm("a-b"), InvalidInput);

  const auto specs = parseCaseCatalog("case X\n  bracket 2a\n  bracket b+f | 2c\n  expect zero\n  alternatives 1 2\n");
  REQUIRE(specs.size() == 1);
  CHECK(specs[0].brackets[1].size() == 2);
  CHECK_THROWS_AS(parseCaseCatalog("case X\n  bracket 2a\n  expect zero\n  alternatives 2\n"), InvalidInput);
  CHECK_THROWS_AS(parseCaseCatalog("case X\n  bracket a\n  expect zero\n  alternatives 1\n"), InvalidInput);
  CHECK_THROWS_AS(parseCaseCatalog("case X\n  bracket 2a\n  expect ray 2 2 2 -1 -1 -4\n  alternatives 1\n"), InvalidInput);
  CHECK_THROWS_AS(parseCaseCatalog("case X\n  bracket 2a\n  expect ray 4 4 4 -2 -2 -8 type 6\n  alternatives 1\n"), InvalidInput);
  CHECK_THROWS_AS(parseCaseCatalog("case X\n  bracket 2a\n  alternatives 1\n"), InvalidInput);
  CHECK_THROWS_AS(parseCaseCatalog("bracket 2a\n"), InvalidInput);
  CHECK_THROWS_AS(parseCaseCatalog("case X\n bracket 2a\n expect zero\n alternatives 1\ncase X\n bracket 2a\n expect zero\n alternatives 1\n"),
                  InvalidInput);
}

TEST_CASE("bundled catalog covers every displayed case") {
  const auto& cases = bundledCases();
  CHECK(cases.size() == 42);
  std::map<std::string, int> perCase;
  for (const auto& c : cases) {
    // sub-branches carry a trailing numeric component
    const auto dot = c.id.rfind('.');
    const bool branch = std::isdigit(static_cast<unsigned char>(c.id[dot + 1])) && std::count(c.id.begin(), c.id.end(), '.') == 3;
    ++perCase[branch ? c.id.substr(0, dot) : c.id];
  }
  CHECK(perCase.size() == 33);
  CHECK(perCase["II.2.d"] == 3);
  CHECK(perCase["III.2.a"] == 4);
  CHECK(perCase["III.2.b"] == 3);
  CHECK(perCase["III.1.a"] == 2);
  CHECK(perCase["III.2.d"] == 2);
}

TEST_CASE("every catalog case reaches its stated conclusion") {
  const auto& cases = bundledCases();
  const auto outcomes = verifyCases(cases, Exec::parallel);
  const auto serial = verifyCases(cases, Exec::serial);
  REQUIRE(outcomes.size() == cases.size());
  for (std::size_t k = 0; k < cases.size(); ++k) {
    CAPTURE(cases[k].id);
    CHECK(outcomes[k].cone.rays == serial[k].cone.rays);
    if (cases[k].id == "II.1.e") {
      // the stated ray has bracket maxima 2 + 2 - 1 > 0; the cone is {0}
      CHECK_FALSE(outcomes[k].matches);
      CHECK(outcomes[k].cone.isZero());
      bool empty = false;
      CHECK_FALSE(slicePoint(cases[k], empty).has_value());
      CHECK(empty);
      continue;
    }
    CHECK(outcomes[k].matches);
    if (!cases[k].expectZero) CHECK(outcomes[k].typeMatch == TypeMatch::exact);

    bool empty = false;
    const auto point = slicePoint(cases[k], empty);
    if (cases[k].expectZero) {
      CHECK(empty);
    } else {
      REQUIRE(point.has_value());
      const Rational scale = Rational(cases[k].expectedRay[0]);
      for (std::size_t i = 0; i < 6; ++i) CHECK((*point)[i] * scale == Rational(cases[k].expectedRay[i]));
    }
  }
}

TEST_CASE("reference cases") {
  auto find = [](const std::string& id) {
    const auto& cs = bundledCases();
    return *std::find_if(cs.begin(), cs.end(), [&](const CaseSpec& c) { return c.id == id; });
  };
  CHECK(caseCone(find("I.1")).cone.isZero());
  CHECK(caseCone(find("I.2")).cone.rays == std::vector<IntVector>{{2, 2, 2, -1, -1, -4}});
  CHECK(caseCone(find("III.1.b")).cone.rays == std::vector<IntVector>{{5, 5, -1, -1, -1, -7}});

  // a mistranscribed bracket is caught
  CaseSpec broken = find("I.2");
  broken.brackets[1] = {parseBracketForm("b+f")};
  CHECK_FALSE(caseCone(broken).matches);
  CaseSpec reordered = find("I.2");
  reordered.claimedType = 10;
  CHECK(caseCone(reordered).typeMatch == TypeMatch::none);
}

TEST_CASE("lemma equivalences hold on random and adversarial nets") {
  const auto report = lemmaEquivalenceHarness(200, 1, Exec::parallel);
  CHECK(report.randomNets == 200);
  CHECK(report.adversarialNets == 40);
  CHECK(report.counterexamples.empty());
  for (int i = 0; i < 5; ++i) CHECK(report.predicateHolds[static_cast<std::size_t>(i)] >= 8);

  const auto again = lemmaEquivalenceHarness(30, 7, Exec::serial);
  const auto par = lemmaEquivalenceHarness(30, 7, Exec::parallel);
  CHECK(again.predicateHolds == par.predicateHolds);
  CHECK_THROWS_AS(lemmaEquivalenceHarness(0, 1), InvalidInput);
}

TEST_CASE("constructed lemma nets") {
  const Net tail = parseNet("x0^2 + x1*x2", "x0*x4 + x2*x5", "x1*x5 + x4^2");
  CHECK(lemmaPredicate(tail, 2));
  CHECK(stableWrt(tail, type(2)) != Stability::stable);
  const Net allX5 = parseNet("x0*x5", "x1*x5 + x5^2", "x2*x5");
  CHECK(lemmaPredicate(allX5, 1));
  CHECK(stableWrt(allX5, type(1)) == Stability::unstable);
}

TEST_CASE("discriminant shapes of the destabilized patterns") {
  const auto r = identityShapeChecks(50, 1, Exec::parallel);
  CHECK(r.rho3Failed == 0);
  CHECK(r.rho12Failed == 0);
  CHECK(r.rho3Passed + r.rho3Degenerate == 50);
  CHECK(r.rho12Passed + r.rho12Degenerate == 50);
  CHECK(r.rho3Passed >= 40);
  CHECK(r.rho12Passed >= 40);
  for (std::uint64_t seed : {2, 3}) {
    const auto s = identityShapeChecks(20, seed, Exec::serial);
    CHECK(s.rho3Failed == 0);
    CHECK(s.rho12Failed == 0);
  }

  CHECK(isNegatedSquare(P("-(x*y*z + x^3)^2", 3)));
  CHECK_FALSE(isNegatedSquare(P("(x*y*z + x^3)^2", 3)));
  CHECK_FALSE(isNegatedSquare(Polynomial(3)));
  CHECK(hasQuadraticSquareFactor(P("-(x^2 + y*z)^2*(x*y - z^2)", 3)));
  CHECK(hasQuadraticSquareFactor(P("x^2*y^2*(x^2+y^2+z^2)", 3)));
  CHECK_FALSE(hasQuadraticSquareFactor(P("x^2*(x^4 + y^4 + z^4)", 3)));
  CHECK_FALSE(hasQuadraticSquareFactor(P("x^6 + y^6 + z^6", 3)));

  // a random pattern net really has the pattern, and generic nets do not pass
  std::mt19937_64 rng(31);
  const Net n3 = rho3PatternNet(rng);
  for (std::size_t q = 0; q < 3; ++q)
    for (const auto& [m, c] : n3[q].terms()) CHECK(m.exp[3] + m.exp[4] + m.exp[5] >= 1);
  int generic = 0;
  for (int k = 0; k < 10; ++k) generic += isNegatedSquare(discriminantOf(randomNet(rng, 3, 6)));
  CHECK(generic == 0);
}
