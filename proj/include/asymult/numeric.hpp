#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace asymult {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

std::int64_t to_int64(const Integer& v);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// "p/q" (or "p" when q == 1); stable textual form used in CSV and golden files.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Parses an integer or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Fixed 12-significant-digit rendering for report columns.
std::string format_decimal(const Rational& q);

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

IntVector to_int_vector(const std::vector<std::int64_t>& v);
RatVector to_rat_vector(const IntVector& v);

}  // namespace asymult
