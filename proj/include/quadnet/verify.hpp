#pragma once

#include "quadnet/cones.hpp"
#include "quadnet/gitstab.hpp"
#include "quadnet/parallel.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace quadnet {

// Triple tables for the types rho_6 .. rho_13.

using Triple = std::array<int, 3>;

struct RejectedTriple {
  Triple triple;
  std::vector<int> violated;  // condition numbers 1..5, increasing
  int earlierType = 0;        // set when only an earlier rho_j rules it out
  int tag() const { return violated.empty() ? 0 : violated.back(); }
};

struct TripleTable {
  WeightVector rho;
  std::vector<Triple> triples;  // satisfy every condition
  std::vector<RejectedTriple> rejected;
};

/// Conditions 1..5 violated by a nonincreasing weight triple under rho.
std::vector<int> violatedConditions(const WeightVector& rho, const Triple& w);

/// Smallest j such that every net whose quadrics sit in the rho-weight bands
/// w[0], w[1], w[2] is rho_j-nonstable, or 0. Scans j below the index of rho.
int earlierTypeObstruction(const WeightVector& rho, const Triple& w);

/// Nonincreasing triples of quadratic-monomial weights with non-positive
/// sum, filtered by conditions 1..5 and then by earlierTypeObstruction. Throws InvalidInput unless rho is one of rho_6 .. rho_13.
TripleTable enumerateTriples(const WeightVector& rho);

/// The tables as listed in the source, for rho_6 .. rho_13 (typeNumber 6..13).
std::vector<Triple> statedTriples(int typeNumber);

// Case catalog.

struct CaseSpec {
  std::string id;
  std::vector<std::vector<IntVector>> brackets;  // alternatives per bracket
  std::vector<std::string> bracketText;
  bool expectZero = true;
  IntVector expectedRay;  // primitive, when !expectZero
  int claimedType = 0;    // 1..13, when !expectZero
};

/// Parses the catalog text format; throws InvalidInput with the line number.
std::vector<CaseSpec> parseCaseCatalog(std::string_view text);

/// The catalog compiled into the library.
const std::vector<CaseSpec>& bundledCases();

/// a, ..., f as integer coefficient vectors: "a+e" -> (1,0,0,0,1,0).
IntVector parseBracketForm(std::string_view text);

enum class TypeMatch { exact, reordered, none };
const char* toText(TypeMatch m);

struct CaseOutcome {
  Cone cone;
  bool matches = false;
  TypeMatch typeMatch = TypeMatch::none;  // ray vs the claimed type
};

CaseOutcome caseCone(const CaseSpec& spec);

std::vector<CaseOutcome> verifyCases(const std::vector<CaseSpec>& specs, Exec exec = Exec::parallel);

// Randomized checks.

struct LemmaCounterexample {
  int condition = 0;
  std::array<std::string, 3> quadrics;
};

struct LemmaReport {
  int randomNets = 0;
  int adversarialNets = 0;
  std::array<int, 5> predicateHolds{};  // per condition, over all nets
  std::vector<LemmaCounterexample> counterexamples;
};

/// lemmaPredicate(net, i) <=> not stable for rho_i, on `samples` random nets
/// plus 8 adversarial nets per condition.
LemmaReport lemmaEquivalenceHarness(int samples, std::uint64_t seed, Exec exec = Exec::parallel);

struct ShapeReport {
  int rho3Passed = 0, rho3Failed = 0, rho3Degenerate = 0;
  int rho12Passed = 0, rho12Failed = 0, rho12Degenerate = 0;
};

/// Nets with the zero patterns of the rho_3 and rho_12 destabilized forms:
/// -discriminant must be a perfect square, resp. have a quadratic square divisor.
ShapeReport identityShapeChecks(int samples, std::uint64_t seed, Exec exec = Exec::parallel);

/// Shape tests on a single discriminant.
bool isNegatedSquare(const Polynomial& delta);
bool hasQuadraticSquareFactor(const Polynomial& delta);

/// Random nets with the two zero patterns (coefficients in [-3, 3]).
Net rho3PatternNet(std::mt19937_64& rng);
Net rho12PatternNet(std::mt19937_64& rng);

} // namespace quadnet
