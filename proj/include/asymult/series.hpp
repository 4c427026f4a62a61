#pragma once

// Monomial graded linear series.
//
// The ambient ring is k[z_0..z_r, x] with weights deg z_i = w_i (w_0 = 1),
// deg x = e, and x^h = 0 for a nilpotency order h (h = 2: square zero).
// Variables flagged as "killing" annihilate x. A level L_n is a union of
// disjoint blocks; a block is
//     x^nil * z^prefix * {all monomials of weighted degree free_degree in z_0..z_{free_vars-1}}
// and free_vars = 0 denotes the single monomial x^nil z^prefix.

#include "asymult/family.hpp"
#include "asymult/monomial.hpp"
#include "asymult/semigroup.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace asymult {

struct WeightedAmbient {
  std::vector<std::int64_t> weights{1};
  std::int64_t nil_degree = 0;  // 0: no nilpotent generator
  std::int64_t nil_order = 2;
  std::vector<bool> killing;    // empty or one flag per z variable

  std::size_t num_z() const { return weights.size(); }
  bool kills(std::size_t i) const { return i < killing.size() && killing[i]; }
  void validate() const;
};

struct SeriesMonomial {
  std::int64_t nil = 0;
  Exponent z;
  auto operator<=>(const SeriesMonomial&) const = default;
};

struct SeriesBlock {
  std::int64_t nil = 0;
  Exponent prefix;
  std::size_t free_vars = 0;
  std::int64_t free_degree = 0;
  bool operator==(const SeriesBlock&) const = default;
};

// Number of monomials of weighted degree `degree` in variables of the given weights.
Integer count_weighted_monomials(const std::vector<std::int64_t>& weights, std::int64_t degree);
// All exponent vectors of weighted degree `degree`, lexicographically sorted.
std::vector<Exponent> weighted_monomials(const std::vector<std::int64_t>& weights, std::int64_t degree);

// Smallest k >= 0 with n <= e^k, i.e. ceil(ln n) for n >= 1, decided exactly.
std::int64_t ceil_log(std::int64_t n);
// ceil(ln(n) / 2).
std::int64_t ceil_half_log(std::int64_t n);

// Subsets T of the positive integers.
class TSet {
 public:
  static TSet residues(std::int64_t modulus, std::set<std::int64_t> classes);
  static TSet explicit_set(std::set<std::int64_t> members);
  static TSet predicate(std::function<bool(std::int64_t)> member, std::string label);

  bool contains(std::int64_t n) const;
  const std::string& label() const { return label_; }
  // For residue sets: gcd of the members (the index of example2_series).
  std::optional<std::int64_t> known_gcd() const;

 private:
  std::function<bool(std::int64_t)> member_;
  std::string label_;
  std::optional<std::int64_t> gcd_;
};

struct Kappa {
  // nullopt encodes -infinity.
  std::optional<std::int64_t> value;
  bool operator==(const Kappa&) const = default;
};
std::string to_string(const Kappa& k);

class MonomialLinearSeries {
 public:
  using Provider = std::function<std::vector<SeriesBlock>(std::int64_t)>;

  struct Info {
    std::string name;
    WeightedAmbient ambient;
    std::int64_t twist = 1;
    std::optional<std::int64_t> known_index;
    std::optional<Kappa> known_kappa;
  };

  MonomialLinearSeries(Info info, Provider provider);

  const Info& info() const { return info_; }
  const std::string& name() const { return info_.name; }
  const WeightedAmbient& ambient() const { return info_.ambient; }
  std::int64_t twist() const { return info_.twist; }

  // Blocks of L_n (L_0 = k). Memoized and validated; safe to call concurrently.
  std::vector<SeriesBlock> level(std::int64_t n) const;
  Integer dim(std::int64_t n) const;
  bool contains(std::int64_t n, const SeriesMonomial& m) const;
  std::vector<SeriesMonomial> monomials(std::int64_t n) const;

 private:
  struct Cache;
  Info info_;
  Provider provider_;
  std::shared_ptr<Cache> cache_;
};

// dim L_n for n = 0..horizon.
std::vector<Integer> dims(const MonomialLinearSeries& l, std::int64_t horizon);

struct SeriesInvariants {
  Kappa kappa;
  std::int64_t horizon = 0;
  // The exponent lattice rank grew in the last quarter of the horizon.
  bool horizon_dependent = false;
  std::int64_t last_growth = 0;
};
SeriesInvariants kodaira_iitaka(const MonomialLinearSeries& l, std::int64_t horizon);

// gcd of {1 <= n <= horizon : L_n != 0}. Throws std::domain_error when all vanish.
std::int64_t index_estimate(const MonomialLinearSeries& l, std::int64_t horizon);

struct SeriesViolation {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string witness;
};
struct SeriesClosureReport {
  std::int64_t horizon = 0;
  std::size_t violation_count = 0;
  std::vector<SeriesViolation> violations;  // first 20
  bool passed() const { return violation_count == 0; }
};
// L_a L_b inside L_{a+b} for 1 <= a <= b, a + b <= horizon.
SeriesClosureReport check_closure(const MonomialLinearSeries& l, std::int64_t horizon);

std::string to_string(const SeriesMonomial& m, const WeightedAmbient& ambient);

// Builders.

// All monomials of weighted degree twist * n.
MonomialLinearSeries full_series(const std::vector<std::int64_t>& weights, std::int64_t twist = 1);
// Double line in P^2: L_n spanned by x1 x0^(n-1) x0^i x2^j (i + j = n) for n in T.
MonomialLinearSeries example2_series(const TSet& t);
// L_n spanned by x1 x0^(n-1-j) x2^j for j < lambda(n), lambda = ceil(ln n) on T
// and ceil(ln(n)/2) off T.
MonomialLinearSeries theorem21_series(const TSet& t);

struct ThmN1Params {
  std::optional<std::int64_t> s;  // nullopt: s = -infinity
  std::int64_t r = 1;
  std::vector<std::int64_t> weights{1, 1};
  std::int64_t e = 1;
  BlockSchedule schedule;
};
// r >= 1: L_n = z0^(nf) M^s_(nf) + x z0^((n - sigma(n)) f - e) M^r_((n + sigma(n)) f), twist 2f.
// r == 0: L_n = k h^n (+ k x z0^(n e - e) when tau(n) = 1) with h x = 0, twist e.
MonomialLinearSeries thmN1_series(const ThmN1Params& p);
// Same construction as thmN1_series with s > r allowed; z_{r+1}..z_s then annihilate x.
MonomialLinearSeries theorem8_series(const ThmN1Params& p);
// Q_s(n) + Q_r(n + sigma(n)) (with Q_{-infinity} = 0), the closed form for thmN1_series;
// the second term is absent while (n - sigma(n)) f < e.
Integer thmN1_expected_dim(const ThmN1Params& p, std::int64_t n);

// L_n = m^(t + tau(n)) in k[y]/(y^(t+1)), carried by a unit section z0.
MonomialLinearSeries artin_series(std::int64_t t, const BlockSchedule& schedule = {});

// Levels n -> L_{e n}.
MonomialLinearSeries veronese(const MonomialLinearSeries& l, std::int64_t e);

struct SeriesSemigroup {
  GradedSemigroup semigroup;
  bool has_nilpotent_part = false;
  bool fully_nilpotent = false;
};
// Level oracle {z-exponent a : x^0 z^a in L_n}; nil monomials are dropped
// (flags are evaluated up to `horizon`).
SeriesSemigroup series_to_semigroup(const MonomialLinearSeries& l, std::int64_t horizon);

}  // namespace asymult
