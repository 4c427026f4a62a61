#pragma once

// Monomial ideals in k[x_1..x_d] and square-zero extensions (A, yB) in
// k[x_1..x_d, y]/(y^2).
//
// Ideals are stored by their minimal generators in lexicographic order, so
// structural equality is ideal equality. The zero ideal has no generators;
// the unit ideal is generated by the zero exponent vector.

#include "asymult/lattice.hpp"
#include "asymult/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asymult {

using Exponent = std::vector<std::int64_t>;

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Generators may be redundant; they are minimalized.
  MonomialIdeal(std::size_t num_vars, std::vector<Exponent> generators);

  static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars, {}); }
  static MonomialIdeal unit(std::size_t num_vars);
  // (x_1, ..., x_d)
  static MonomialIdeal maximal(std::size_t num_vars);
  // (x_1, ..., x_d)^n, built directly from the degree-n monomials.
  static MonomialIdeal maximal_power(std::size_t num_vars, std::int64_t n);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  // Whether x^a lies in the ideal.
  bool contains(const Exponent& a) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Exponent> generators_;
};

// Minimal elements under divisibility, lexicographically sorted.
std::vector<Exponent> minimalize(std::size_t num_vars, std::vector<Exponent> generators);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::int64_t n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Exponent& u);
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
// I : J^infinity
MonomialIdeal saturate_by(const MonomialIdeal& i, const MonomialIdeal& j);
// I : m^infinity
MonomialIdeal saturate(const MonomialIdeal& i);
// I^n : J^infinity
MonomialIdeal symbolic_core(const MonomialIdeal& i, const MonomialIdeal& j, std::int64_t n);

// First generator of `inner` not in `outer`, if any.
std::optional<Exponent> containment_witness(const MonomialIdeal& inner, const MonomialIdeal& outer);
inline bool is_subset(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  return !containment_witness(inner, outer).has_value();
}

bool is_m_primary(const MonomialIdeal& i);

// Number of monomials outside I. Throws std::domain_error("infinite colength")
// unless I is m-primary.
Integer colength(const MonomialIdeal& i);

// length of J / I for I contained in J: the number of monomials in J \ I.
// Throws std::domain_error("infinite quotient length") when it is not finite.
Integer relative_length(const MonomialIdeal& j, const MonomialIdeal& i);

class NilPairIdeal {
 public:
  NilPairIdeal() = default;
  // The ideal A + yB; requires A contained in B.
  NilPairIdeal(MonomialIdeal base, MonomialIdeal socle);

  static NilPairIdeal unit(std::size_t num_vars);
  // m_R = (x_1, ..., x_d, y)
  static NilPairIdeal maximal(std::size_t num_vars);

  std::size_t num_vars() const { return base_.num_vars(); }
  const MonomialIdeal& base() const { return base_; }
  const MonomialIdeal& socle() const { return socle_; }

  bool operator==(const NilPairIdeal&) const = default;

 private:
  MonomialIdeal base_;
  MonomialIdeal socle_;
};

Integer nilpair_length(const NilPairIdeal& p);
NilPairIdeal nilpair_sum(const NilPairIdeal& a, const NilPairIdeal& b);
NilPairIdeal nilpair_product(const NilPairIdeal& a, const NilPairIdeal& b);
NilPairIdeal nilpair_power(const NilPairIdeal& a, std::int64_t n);
// y * (A, yB) = (0, yA)
NilPairIdeal nilpair_times_y(const NilPairIdeal& a);

// A monomial of k[x, y]/(y^2): x^exponent, times y when `nil` is set.
struct NilMonomial {
  bool nil = false;
  Exponent exponent;
  bool operator==(const NilMonomial&) const = default;
};
std::optional<NilMonomial> containment_witness(const NilPairIdeal& inner, const NilPairIdeal& outer);
std::string to_string(const NilMonomial& m);

struct NewtonRegion {
  MonomialIdeal ideal;
  std::int64_t clip_bound = 0;
  RationalPolytope polytope;
  Rational covolume;
};

// NP(I) clipped to [0, clip]^d. Requires I m-primary and clip at least d times
// the largest generator coordinate; throws std::domain_error otherwise.
NewtonRegion newton_region(const MonomialIdeal& i, std::int64_t clip);
// d! times the covolume of the Newton polyhedron.
Rational multiplicity_oracle(const MonomialIdeal& i);
// colength(I^k) * d! / k^d for k = 1..k_max.
std::vector<Rational> multiplicity_limit(const MonomialIdeal& i, std::int64_t k_max);

// Text format: one generator per line as whitespace-separated exponents;
// '#' starts a comment. An empty generator list needs `num_vars`.
MonomialIdeal parse_ideal(const std::string& text, std::optional<std::size_t> num_vars = std::nullopt);
MonomialIdeal read_ideal_file(const std::string& path, std::optional<std::size_t> num_vars = std::nullopt);
std::string format_ideal(const MonomialIdeal& i);
// Compact one-line form such as "(x1^2, x1*x2)".
std::string to_string(const MonomialIdeal& i);
std::string monomial_string(const Exponent& a);

}  // namespace asymult
