#pragma once

// Graded families n -> I_n of monomial-type ideals, the block schedules that
// drive the non-convergent constructions, and the bridge from a family to a
// graded semigroup.

#include "asymult/monomial.hpp"
#include "asymult/semigroup.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace asymult {

// Breakpoints i_1 = 2 < i_2 < ... with every i_j even and i_{j+1} > 2^j i_j.
// A finite prefix may be given; it is continued by i_{j+1} = 2^j i_j + 2
// for as long as the values fit in 64 bits.
class BlockSchedule {
 public:
  BlockSchedule();  // 2, 6, 26, 210, 3362, ...
  explicit BlockSchedule(std::vector<std::int64_t> prefix);

  // The breakpoints that were supplied (or the default first four).
  const std::vector<std::int64_t>& prefix() const { return prefix_; }
  const std::vector<std::int64_t>& breakpoints() const { return all_; }

  // j with i_j <= n < i_{j+1}; 0 when n < i_1.
  std::int64_t block(std::int64_t n) const;
  // sigma(0) = 0, sigma(1) = 1, sigma(n) = i_j / 2 on block j.
  std::int64_t sigma(std::int64_t n) const;
  // tau(n) = j mod 2 on block j, and 0 for n < i_1.
  std::int64_t tau(std::int64_t n) const;

  bool operator==(const BlockSchedule& other) const { return prefix_ == other.prefix_; }

 private:
  std::vector<std::int64_t> prefix_;
  std::vector<std::int64_t> all_;
};

enum class RingKind { polynomial, nilpair, artin };
std::string to_string(RingKind kind);

// Artin level: I_n = (y)^exponent in k[y]/(y^(t+1)).
struct ArtinPower {
  std::int64_t exponent = 0;
  bool operator==(const ArtinPower&) const = default;
};

using FamilyLevel = std::variant<MonomialIdeal, NilPairIdeal, ArtinPower>;

class GradedFamily {
 public:
  using Provider = std::function<FamilyLevel(std::int64_t)>;

  struct Info {
    std::string name;
    RingKind kind = RingKind::polynomial;
    std::size_t dim = 0;            // Krull dimension of the ambient ring
    std::size_t num_vars = 0;       // x-variables of the monomial model
    std::int64_t artin_t = 0;       // artin models only
    std::int64_t c = 0;             // m^c inside I_1 (0 when no such c exists)
    std::optional<RatVector> lambda;  // valuation families only
  };

  GradedFamily(Info info, Provider provider);

  const Info& info() const { return info_; }
  const std::string& name() const { return info_.name; }
  RingKind kind() const { return info_.kind; }
  std::size_t dim() const { return info_.dim; }

  // I_n, memoized; safe to call concurrently.
  FamilyLevel level(std::int64_t n) const;
  const MonomialIdeal& monomial_level(std::int64_t n) const;

  // length(R / I_n). Throws std::domain_error naming the level when infinite.
  Integer length(std::int64_t n) const;

 private:
  struct Cache;

  Info info_;
  Provider provider_;
  std::shared_ptr<Cache> cache_;
};

GradedFamily power_family(const MonomialIdeal& i);
GradedFamily valuation_family(const RatVector& lambda);
GradedFamily saturation_family(const MonomialIdeal& i);
GradedFamily symbolic_family(const MonomialIdeal& i, const MonomialIdeal& j);
GradedFamily example1_family(std::size_t d, const BlockSchedule& schedule = {});
GradedFamily dao_smirnov_family(std::size_t d, const BlockSchedule& schedule = {});
GradedFamily artin_tau_family(std::int64_t t, const BlockSchedule& schedule = {});
// (m^n, y m^(n - g(n))) with g(n) = n for n <= 3 and g(n) = 1 afterwards;
// graded containment first fails at a + b = 4 (for instance at a = b = 2).
GradedFamily corrupted_family(std::size_t d);

// Smallest c with m^c inside I (requires I m-primary).
std::int64_t maximal_power_exponent(const MonomialIdeal& i);

// Valuation ideal {a : <lambda, a> >= n}.
MonomialIdeal valuation_ideal(const RatVector& lambda, std::int64_t n);

struct GradedViolation {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string witness;
};

struct GradedReport {
  std::int64_t horizon = 0;
  bool unit_at_zero = true;
  std::size_t violation_count = 0;
  // At most the first 20 violations, in (a + b, a) order.
  std::vector<GradedViolation> violations;
  bool passed() const { return unit_at_zero && violation_count == 0; }
};

// I_a I_b inside I_{a+b} for all 1 <= a <= b with a + b <= horizon.
GradedReport check_graded(const GradedFamily& f, std::int64_t horizon);

struct IdentityRow {
  std::int64_t n = 0;
  Integer colength;
  Integer box_count;
  Integer semigroup_count;
  bool holds = false;
};

struct FamilySemigroup {
  GradedSemigroup semigroup;
  Rational beta;
  std::vector<IdentityRow> rows;
  bool identity_holds = true;
};

// S_n = {a : x^a in I_n, |a| <= beta n}. The report checks
// colength(I_n) == #{a : |a| <= beta n} - #S_n for 1 <= n <= horizon.
// beta defaults to c * ceil(max lambda) for valuation families and c * d otherwise.
FamilySemigroup family_to_semigroup(const GradedFamily& f, std::int64_t horizon,
                                    std::optional<Rational> beta = std::nullopt);

}  // namespace asymult
