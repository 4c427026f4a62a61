#pragma once

// Graded sub-semigroups of Z^d x N and their asymptotic invariants.
//
// A semigroup is given either by finitely many generators (vector, degree)
// or by a level oracle n -> S_n (used for semigroups derived from ideal
// families and linear series). Levels are canonical: sorted, duplicate-free
// vectors of points.

#include "asymult/lattice.hpp"
#include "asymult/numeric.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace asymult {

using Point = std::vector<std::int64_t>;
using Level = std::vector<Point>;
// levels[n] = S_n for 0 <= n <= N.
using Levels = std::vector<Level>;

struct SemigroupGenerator {
  Point vector;
  std::int64_t degree = 0;

  bool operator==(const SemigroupGenerator&) const = default;
  auto operator<=>(const SemigroupGenerator&) const = default;
};

struct EnumerationOptions {
  // Total number of stored points across all levels before enumeration
  // gives up with std::length_error.
  std::size_t memory_cap = 10'000'000;
};

class GradedSemigroup {
 public:
  using LevelOracle = std::function<Level(std::int64_t)>;

  // Generator form. Degree-0 generators are accepted so that non strongly
  // nonnegative inputs can be inspected, but level enumeration and the
  // invariants refuse them. The default label lists the generators as
  // (vector, degree) tuples.
  GradedSemigroup(std::size_t point_dim, std::vector<SemigroupGenerator> generators, std::string label = {});

  static GradedSemigroup from_oracle(std::size_t point_dim, LevelOracle oracle, std::string label = {});

  std::size_t point_dim() const { return point_dim_; }
  bool has_generators() const { return !oracle_; }
  const std::vector<SemigroupGenerator>& generators() const { return generators_; }
  const std::string& label() const { return label_; }

  // S_0..S_N. Results are memoized; concurrent callers are safe.
  Levels enumerate_levels(std::int64_t horizon, const EnumerationOptions& options = {}) const;

 private:
  GradedSemigroup() = default;

  struct Cache;

  std::size_t point_dim_ = 0;
  std::vector<SemigroupGenerator> generators_;
  LevelOracle oracle_;
  std::string label_;
  std::shared_ptr<Cache> cache_;
};

struct OkounkovBody {
  std::int64_t slice_height = 0;
  RationalPolytope polytope;
  IntegerLattice boundary_lattice = IntegerLattice::zero(0);
  Rational volume;
};

struct SemigroupInvariants {
  std::int64_t m = 0;
  std::int64_t q = 0;
  Integer ind;
  // Full group G(S) in Z^{d+1}, stored with the degree as the last coordinate.
  IntegerLattice group = IntegerLattice::zero(0);
  OkounkovBody body;
};

SemigroupInvariants invariants(const GradedSemigroup& s);

// vol_q(Delta(S)) / ind(S), with the body sliced at height m(S).
Rational predicted_limit(const GradedSemigroup& s);
Rational predicted_limit(const SemigroupInvariants& inv);

struct EmpiricalPoint {
  std::int64_t k = 0;
  std::int64_t count = 0;  // #S_{m k}
  Rational value;          // count / k^q
};

// #S_{mk} / k^q for all k >= 1 with m k <= horizon.
std::vector<EmpiricalPoint> empirical_limit(const GradedSemigroup& s, std::int64_t horizon);

// Semigroup generated by the points of level p * m(S).
GradedSemigroup truncate(const GradedSemigroup& s, std::int64_t p);

bool strongly_nonnegative(const GradedSemigroup& s);

// First (a, b, witness) with S_a + S_b not contained in S_{a+b}, scanning
// a <= b, a + b <= levels.size() - 1, a >= 1.
struct ClosureViolation {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Point witness;
};
std::optional<ClosureViolation> closure_violation(const Levels& levels);

std::string to_string(const Point& p);

}  // namespace asymult
