#pragma once

#include "quadnet/rational.hpp"

#include <optional>
#include <vector>

namespace quadnet {

/// coefficients . x + constant
struct LinearForm {
  std::vector<Rational> coefficients;
  Rational constant = 0;

  Rational evaluate(const std::vector<Rational>& x) const;
};

struct Box {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
};

struct LPResult {
  bool feasible = false;
  Rational optimum = 0;
  std::vector<Rational> argmin;
};

/// Minimize objective subject to equalities (form = 0), inequalities
/// (form <= 0) and the box. Exact dictionary simplex with Bland's rule.
LPResult solveLP(const LinearForm& objective, const std::vector<LinearForm>& equalities,
                 const std::vector<LinearForm>& inequalities, const Box& box);

using IntVector = std::vector<Integer>;

/// Polyhedral cone {x : E x = 0, G x <= 0}. Rays and lineality are filled
/// by extremeRays.
struct Cone {
  int dimension = 0;
  std::vector<LinearForm> equalities;
  std::vector<LinearForm> inequalities;
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;

  bool isZero() const { return rays.empty() && lineality.empty(); }
};

/// Extreme rays (primitive integer vectors, sorted) and a lineality basis,
/// by double description on the pointed part.
Cone extremeRays(Cone cone);

} // namespace quadnet
