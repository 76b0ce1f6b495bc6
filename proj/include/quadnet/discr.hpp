#pragma once

#include "quadnet/net.hpp"

#include <array>
#include <optional>
#include <vector>

namespace quadnet {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Q(x) = x^T A x: diagonal entry = coefficient of x_i^2, off-diagonal
/// entry = half the coefficient of x_i x_j.
struct SymMatrixPencil {
  std::array<RatMatrix, 3> matrices;
};

SymMatrixPencil toPencil(const Net& net);
Net fromPencil(const SymMatrixPencil& pencil);

/// x A1 + y A2 + z A3 as a 6x6 matrix of linear forms in (x, y, z).
PolyMatrix pencilMatrix(const Net& net);

/// det(x A1 + y A2 + z A3): a sextic in x, y, z or zero.
Polynomial discriminantOf(const Net& net);

/// A nonzero vector in the common kernel of A1, A2, A3, if any.
std::optional<std::vector<Rational>> commonSingularPoint(const Net& net);

/// 6 - rank of the member at the given point of P^2.
int corankAt(const Net& net, const ProjectivePoint& point);

/// Block reduction of the pencil near a degenerate member. Local
/// coordinates (u, v) parametrize members point + u*e2 + v*e3, where
/// (point, e2, e3) is the net basis `netBasis`; the coordinate change x ->
/// P x moves the kernel of the member onto the first corank basis vectors.
struct LocalForm {
  int corank = 0;
  int truncationOrder = 0;
  PolyMatrix blockA;  // corank x corank, homogeneous linear in (u, v)
  PolyMatrix blockU;  // B^T C^{-1} B truncated, order >= 2
  Polynomial detC{2};
  Polynomial localDiscriminant{2};  // det(A - U) truncated
  RatMatrix netBasis;               // 3x3, first column is the point
  RatMatrix frame;                  // P
};

/// Throws InvalidInput when the member at the point is nonsingular.
LocalForm schurLocalForm(const Net& net, const ProjectivePoint& point, int truncationOrder);

/// Lowest-degree homogeneous part of det(A - U).
Polynomial tangentConeAt(const LocalForm& form);

/// Determinant of a polynomial matrix, truncated at total degree `order`.
Polynomial truncatedDeterminant(const PolyMatrix& m, int order);

enum class Tameness { tame, not_tame, not_a_base_point, smooth_base_point };
const char* toText(Tameness t);

Tameness tameTest(const Net& net, const std::vector<Rational>& x);

} // namespace quadnet
