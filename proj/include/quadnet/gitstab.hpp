#pragma once

#include "quadnet/net.hpp"
#include "quadnet/parallel.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace quadnet {

/// rho-weight of a monomial: sum of rho_i * exponent_i.
int weightOfMonomial(const Monomial& m, const WeightVector& rho);

/// Total order on quadratic monomials used for initial terms.
struct MonomialOrder {
  enum class Kind { lex, rho } kind = Kind::lex;
  WeightVector rho;

  static MonomialOrder lex() { return {}; }
  static MonomialOrder byWeight(WeightVector w) { return {Kind::rho, std::move(w)}; }

  /// true when a is strictly greater than b.
  bool greater(const Monomial& a, const Monomial& b) const;
};

/// Basis of the same plane whose initial monomials strictly decrease.
Net normalizedBasis(const Net& net, const MonomialOrder& order);

/// Initial monomials of the normalized basis, in decreasing order.
std::array<Monomial, 3> initialMonomials(const Net& net, const MonomialOrder& order);

/// Maximal rho-weight of a nonvanishing Plücker coordinate.
int hmWeight(const Net& net, const WeightVector& rho);

enum class Stability { stable, semistable_not_stable, unstable };
Stability stableWrt(const Net& net, const WeightVector& rho);

enum class Verdict { stable, strictly_semistable, unstable, undecided };
enum class Scope { single_1ps, torus, search };

struct Witness {
  WeightVector rho;
  RatMatrix frame;  // coordinate change x -> frame * x applied before rho acts
  int type = 0;     // 1..13 for scan witnesses, 0 otherwise
};

struct StabilityReport {
  Verdict verdict = Verdict::undecided;
  Scope scope = Scope::torus;
  std::optional<Witness> witness;
  std::optional<Rational> weight;         // weight of the witness (or minimum when stable)
  std::optional<Rational> minimumWeight;  // smallest weight over everything evaluated
  std::uint64_t evaluations = 0;  // 1-PS or LP count
  std::uint64_t iteration = 0;    // search: iteration of the witness (1-based)
};

const char* toText(Verdict v);
const char* toText(Scope s);

/// The 13 normalized types rho_1 .. rho_13.
const std::vector<WeightVector>& theoremTypes();

/// Distinct rearrangements of a weight vector, lexicographically increasing.
std::vector<WeightVector> distinctPermutations(const WeightVector& rho);

/// Every distinct permutation of every type, with the type index (0-based).
struct ScanEntry {
  WeightVector rho;
  int typeIndex;
};
const std::vector<ScanEntry>& scanFamily();

/// Scan of all 1-PS in scanFamily(). Unless stable, the witness comes from
/// the lowest type index attaining the sign of the global minimum (negative
/// or zero), choosing the lowest weight within that type, then scan order.
StabilityReport torusScan13(const Net& net, Exec exec = Exec::parallel);

/// Exponent-sum vectors (length 6) of the monomial triples carrying a
/// nonzero Plücker coordinate, deduplicated and sorted.
std::vector<std::array<int, 6>> pluckerSupport(const Net& net, Exec exec = Exec::parallel);

/// Exact torus decision by one LP per boundary facet of [-1,1]^6.
struct TorusLP {
  StabilityReport report;
  Rational minimum;              // global facet minimum
  std::vector<Rational> argmin;  // a minimizing lambda on the boundary
};
TorusLP torusDestabilizerLP(const Net& net, Exec exec = Exec::parallel);

/// Coordinate conditions equivalent to non-stability w.r.t. rho_i, i = 1..5.
bool lemmaPredicate(const Net& net, int i);

enum class KempfOutcome { certified_semistable, not_applicable, refuted };
const char* toText(KempfOutcome k);

struct KempfResult {
  KempfOutcome outcome = KempfOutcome::not_applicable;
  std::optional<Rational> lpMinimum;
};

/// Checks that sigma preserves the net and, if so, decides diagonal
/// semistability with the torus LP.
KempfResult kempfCertificate(const Net& net, const WeightVector& sigma, Exec exec = Exec::parallel);

/// Unimodular 6x6 frame for a search iteration (iteration 1 is the identity).
RatMatrix searchFrame(std::uint64_t seed, std::uint64_t iteration);

/// Torus scans in pseudo-random frames. Reports unstable with a witness or
/// undecided with the minimum weight seen; never stable.
StabilityReport randomSearch(const Net& net, int iterations, std::uint64_t seed, Exec exec = Exec::parallel);

} // namespace quadnet
