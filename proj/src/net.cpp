#include "quadnet/net.hpp"

#include "quadnet/error.hpp"

#include <algorithm>
#include <numeric>

namespace quadnet {

WeightVector WeightVector::of(std::vector<int> w) {
  if (w.empty()) throw InvalidInput("empty weight vector");
  if (std::accumulate(w.begin(), w.end(), 0) != 0) throw InvalidInput("weights must sum to zero");
  WeightVector out;
  out.normalized = std::is_sorted(w.begin(), w.end(), std::greater<>());
  out.weights = std::move(w);
  return out;
}

bool WeightVector::isZero() const {
  return std::all_of(weights.begin(), weights.end(), [](int x) { return x == 0; });
}

const std::vector<Monomial>& quadraticMonomials() {
  static const std::vector<Monomial> list = [] {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i; j < 6; ++j) {
        Monomial m;
        ++m.exp[i];
        ++m.exp[j];
        out.push_back(m);
      }
    return out;
  }();
  return list;
}

std::size_t quadraticIndex(const Monomial& m) {
  const auto& list = quadraticMonomials();
  const auto it = std::find(list.begin(), list.end(), m);
  if (it == list.end()) throw InvalidInput("not a quadratic monomial in 6 variables");
  return static_cast<std::size_t>(it - list.begin());
}

Net::Net(Polynomial q1, Polynomial q2, Polynomial q3)
    : quadrics_{std::move(q1), std::move(q2), std::move(q3)}, coefficients_(3, 21) {
  for (std::size_t r = 0; r < 3; ++r) {
    const Polynomial& q = quadrics_[r];
    if (q.arity() != 6) throw InvalidInput("net quadrics must have 6 variables");
    for (const auto& [m, c] : q.terms()) {
      if (m.degree() != 2) throw InvalidInput("net members must be quadratic forms");
      coefficients_(r, quadraticIndex(m)) = c;
    }
  }
  if (rank(coefficients_) != 3) throw InvalidInput("net quadrics are linearly dependent");
}

namespace {

std::array<Polynomial, 3> rowsToQuadrics(const RatMatrix& coefficients) {
  if (coefficients.rows() != 3 || coefficients.cols() != 21) throw InvalidInput("net coefficient matrix must be 3 x 21");
  std::array<Polynomial, 3> out{Polynomial(6), Polynomial(6), Polynomial(6)};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 21; ++c) out[r].addTerm(quadraticMonomials()[c], coefficients(r, c));
  return out;
}

} // namespace

Net::Net(const RatMatrix& coefficients)
    : Net(rowsToQuadrics(coefficients)[0], rowsToQuadrics(coefficients)[1], rowsToQuadrics(coefficients)[2]) {}

Net Net::transformed(const RatMatrix& m) const {
  return Net(substituteLinear(quadrics_[0], m), substituteLinear(quadrics_[1], m), substituteLinear(quadrics_[2], m));
}

Net parseNet(const std::string& q1, const std::string& q2, const std::string& q3) {
  return Net(parsePolynomial(q1, 6), parsePolynomial(q2, 6), parsePolynomial(q3, 6));
}

} // namespace quadnet
