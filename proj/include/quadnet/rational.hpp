#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace quadnet {

// mpq_class keeps values canonical (reduced, positive denominator) after
// every arithmetic operation; parseRational canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

/// Homogeneous coordinates of a point of P^2.
using ProjectivePoint = std::array<Rational, 3>;

Rational parseRational(std::string_view text);
std::string toText(const Rational& q);

inline bool isZero(const Rational& q) { return sgn(q) == 0; }
inline bool isInteger(const Rational& q) { return q.get_den() == 1; }

/// Exact square root of a nonnegative rational, if it has one.
bool rationalSqrt(const Rational& q, Rational& root);

/// floor and ceil as exact integers.
Integer floorOf(const Rational& q);
Integer ceilOf(const Rational& q);

std::int64_t toInt64(const Integer& z);

} // namespace quadnet
