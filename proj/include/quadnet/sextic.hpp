#pragma once

#include "quadnet/gitstab.hpp"
#include "quadnet/polynomial.hpp"

#include <string>
#include <vector>

namespace quadnet {

/// Homogeneous sextic in (x, y, z).
class SexticCurve {
public:
  explicit SexticCurve(Polynomial poly);
  const Polynomial& poly() const { return poly_; }

private:
  Polynomial poly_;
};

SexticCurve parseSextic(std::string_view text);

/// Bivariate power series in (u, v) known up to total degree `truncation`.
/// `exact` marks germs that are polynomials known in full.
struct Germ {
  Polynomial series{2};
  int truncation = 32;
  bool exact = false;
};

struct SingularityClass {
  enum class Kind { smooth, A, D, E6, E7, E8, not_simple, undetermined };
  Kind kind = Kind::undetermined;
  int index = 0;       // k for A(k), D(k); truncation for undetermined
  std::string reason;  // not_simple only

  static SingularityClass smooth() { return {Kind::smooth, 0, {}}; }
  static SingularityClass a(int k);
  static SingularityClass d(int k);
  static SingularityClass e(int k);
  static SingularityClass notSimple(std::string why) { return {Kind::not_simple, 0, std::move(why)}; }
  static SingularityClass undetermined(int n) { return {Kind::undetermined, n, {}}; }

  bool operator==(const SingularityClass&) const = default;
};

std::string toText(const SingularityClass& s);

constexpr int kDefaultTruncation = 32;

/// Torus weights (chi_x, chi_y, chi_z) with zero sum; stable iff every
/// boundary chi leaves a support monomial of positive weight.
StabilityReport sexticTorusLP(const SexticCurve& f);

enum class SupportPattern { x_squared, rho3_list };

/// Monomials allowed by a pattern, in the current coordinates.
const std::vector<Monomial>& patternMonomials(SupportPattern pattern);
bool supportPattern(const SexticCurve& f, SupportPattern pattern);

bool isReducedSextic(const SexticCurve& f);

struct SingularPoints {
  std::vector<ProjectivePoint> points;  // normalized: last nonzero coordinate is 1
  bool complete = true;
};

/// Rational zeros of the gradient. Throws InvalidInput when f is not reduced.
SingularPoints rationalSingularPoints(const SexticCurve& f);

/// Local expansion at p in the chart of its first nonzero coordinate.
Germ germAt(const SexticCurve& f, const ProjectivePoint& p, int truncation = kDefaultTruncation);

SingularityClass classifyADE(const Germ& g);

} // namespace quadnet
