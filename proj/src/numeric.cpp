#include "asymult/numeric.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace asymult {

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw std::invalid_argument("not an exact rational: '" + text + "' (use rational approximation explicitly)");
    return Rational(Integer(strip_plus(text)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw std::invalid_argument("not an exact rational: '" + text + "' (use rational approximation explicitly)");
  Integer d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(Integer(strip_plus(num)), d);
}

std::string format_decimal(const Rational& q) {
  // mpf keeps enough bits that the 12-digit rounding is a function of q alone.
  mpf_class f(q, 256);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.12Fg", f.get_mpf_t());
  return buf;
}

IntVector to_int_vector(const std::vector<std::int64_t>& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(to_integer(x));
  return out;
}

RatVector to_rat_vector(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace asymult
