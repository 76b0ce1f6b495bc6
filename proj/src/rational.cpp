#include "quadnet/rational.hpp"

#include "quadnet/error.hpp"

#include <cctype>
#include <limits>

namespace quadnet {

Rational parseRational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InvalidInput("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-'))
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidInput("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string toText(const Rational& q) { return q.get_str(10); }

bool rationalSqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  Integer n = q.get_num();
  Integer d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn = sqrt(n);
  Integer rd = sqrt(d);
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

Integer floorOf(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceilOf(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t toInt64(const Integer& z) {
  if (!z.fits_slong_p()) throw InvariantViolation("integer does not fit in 64 bits");
  return z.get_si();
}

} // namespace quadnet
