#include "asymult/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asymult {

struct GradedSemigroup::Cache {
  std::mutex mutex;
  Levels levels;
  std::size_t stored_points = 0;
};

GradedSemigroup::GradedSemigroup(std::size_t point_dim, std::vector<SemigroupGenerator> generators, std::string label)
    : point_dim_(point_dim), generators_(std::move(generators)), label_(std::move(label)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.vector.size() != point_dim_) throw std::invalid_argument("generator has wrong dimension");
    if (g.degree < 0) throw std::invalid_argument("generator degree must be nonnegative");
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  if (label_.empty()) {
    label_ = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      auto p = generators_[i].vector;
      p.push_back(generators_[i].degree);
      label_ += (i ? "," : "") + to_string(p);
    }
    label_ += ">";
  }
}

GradedSemigroup GradedSemigroup::from_oracle(std::size_t point_dim, LevelOracle oracle, std::string label) {
  if (!oracle) throw std::invalid_argument("empty level oracle");
  GradedSemigroup s;
  s.point_dim_ = point_dim;
  s.oracle_ = std::move(oracle);
  s.label_ = std::move(label);
  s.cache_ = std::make_shared<Cache>();
  return s;
}

namespace {

void canonicalize(Level& level) {
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());
}

}  // namespace

Levels GradedSemigroup::enumerate_levels(std::int64_t horizon, const EnumerationOptions& options) const {
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  if (!oracle_) {
    for (const auto& g : generators_)
      if (g.degree == 0 && std::any_of(g.vector.begin(), g.vector.end(), [](auto x) { return x != 0; }))
        throw std::domain_error("semigroup is not strongly nonnegative: levels are infinite");
  }
  std::lock_guard lock(cache_->mutex);
  auto& levels = cache_->levels;
  const auto target = static_cast<std::size_t>(horizon) + 1;
  while (levels.size() < target) {
    const auto n = static_cast<std::int64_t>(levels.size());
    Level level;
    if (oracle_) {
      level = oracle_(n);
      for (const auto& p : level)
        if (p.size() != point_dim_) throw std::invalid_argument("level oracle returned a point of wrong dimension");
    } else if (n == 0) {
      level.push_back(Point(point_dim_, 0));
    } else {
      for (const auto& g : generators_) {
        if (g.degree == 0 || g.degree > n) continue;
        for (const auto& p : levels[static_cast<std::size_t>(n - g.degree)]) {
          Point sum = p;
          for (std::size_t i = 0; i < point_dim_; ++i) sum[i] += g.vector[i];
          level.push_back(std::move(sum));
        }
      }
    }
    canonicalize(level);
    cache_->stored_points += level.size();
    if (cache_->stored_points > options.memory_cap)
      throw std::length_error("level enumeration exceeded the memory cap at level " + std::to_string(n));
    levels.push_back(std::move(level));
  }
  return Levels(levels.begin(), levels.begin() + static_cast<std::ptrdiff_t>(target));
}

bool strongly_nonnegative(const GradedSemigroup& s) {
  if (!s.has_generators()) {
    const auto zero = s.enumerate_levels(0).front();
    return std::all_of(zero.begin(), zero.end(),
                       [](const Point& p) { return std::all_of(p.begin(), p.end(), [](auto x) { return x == 0; }); });
  }
  for (const auto& g : s.generators())
    if (g.degree == 0 && std::any_of(g.vector.begin(), g.vector.end(), [](auto x) { return x != 0; })) return false;
  return true;
}

SemigroupInvariants invariants(const GradedSemigroup& s) {
  if (!s.has_generators()) throw std::domain_error("invariants require generators");
  if (!strongly_nonnegative(s)) throw std::domain_error("semigroup is not strongly nonnegative");
  const std::size_t d = s.point_dim();

  std::vector<IntVector> degree_first, degree_last;
  std::int64_t m = 0;
  for (const auto& g : s.generators()) {
    if (g.degree == 0) continue;
    m = gcd64(m, g.degree);
    IntVector a{to_integer(g.degree)}, b;
    for (auto x : g.vector) {
      a.push_back(to_integer(x));
      b.push_back(to_integer(x));
    }
    b.push_back(to_integer(g.degree));
    degree_first.push_back(std::move(a));
    degree_last.push_back(std::move(b));
  }
  if (m == 0) throw std::domain_error("semigroup has no generator of positive degree");

  // In the echelon form with the degree column first, the first pivot is
  // [Z : pi(G)] and the remaining rows span G's degree-0 part.
  const auto echelon = hermite_basis(d + 1, degree_first);
  std::vector<IntVector> degree_zero;
  for (std::size_t i = 1; i < echelon.rank(); ++i)
    degree_zero.emplace_back(echelon.basis()[i].begin() + 1, echelon.basis()[i].end());

  SemigroupInvariants inv;
  inv.m = to_int64(echelon.basis().front().front());
  inv.q = static_cast<std::int64_t>(echelon.rank()) - 1;
  inv.group = hermite_basis(d + 1, degree_last);
  const auto sub = hermite_basis(d, degree_zero);
  const auto boundary = saturation(sub);
  inv.ind = sublattice_index(boundary, sub);

  std::vector<RatVector> slice;
  for (const auto& g : s.generators()) {
    if (g.degree == 0) continue;
    RatVector p;
    const Rational scale = make_rational(inv.m, g.degree);
    for (auto x : g.vector) p.push_back(scale * x);
    slice.push_back(std::move(p));
  }
  inv.body.slice_height = inv.m;
  inv.body.polytope = convex_hull(d, slice);
  inv.body.boundary_lattice = boundary;
  inv.body.volume = lattice_volume(inv.body.polytope, boundary);
  return inv;
}

Rational predicted_limit(const SemigroupInvariants& inv) { return inv.body.volume / Rational(inv.ind); }

Rational predicted_limit(const GradedSemigroup& s) { return predicted_limit(invariants(s)); }

std::vector<EmpiricalPoint> empirical_limit(const GradedSemigroup& s, std::int64_t horizon) {
  const auto inv = invariants(s);
  const auto levels = s.enumerate_levels(horizon);
  std::vector<EmpiricalPoint> out;
  for (std::int64_t k = 1; inv.m * k <= horizon; ++k) {
    EmpiricalPoint e;
    e.k = k;
    e.count = static_cast<std::int64_t>(levels[static_cast<std::size_t>(inv.m * k)].size());
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(inv.q));
    e.value = make_rational(to_integer(e.count), denom);
    out.push_back(std::move(e));
  }
  return out;
}

GradedSemigroup truncate(const GradedSemigroup& s, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("truncation level must be positive");
  const auto inv = invariants(s);
  const std::int64_t height = p * inv.m;
  const auto levels = s.enumerate_levels(height);
  const auto& top = levels[static_cast<std::size_t>(height)];
  if (top.empty()) throw std::domain_error("level " + std::to_string(height) + " is empty");
  std::vector<SemigroupGenerator> gens;
  for (const auto& pt : top) gens.push_back({pt, height});
  return GradedSemigroup(s.point_dim(), std::move(gens), "truncate(" + s.label() + "," + std::to_string(p) + ")");
}

std::optional<ClosureViolation> closure_violation(const Levels& levels) {
  const auto horizon = static_cast<std::int64_t>(levels.size()) - 1;
  for (std::int64_t total = 2; total <= horizon; ++total) {
    const auto& target = levels[static_cast<std::size_t>(total)];
    for (std::int64_t a = 1; 2 * a <= total; ++a) {
      const std::int64_t b = total - a;
      for (const auto& u : levels[static_cast<std::size_t>(a)])
        for (const auto& v : levels[static_cast<std::size_t>(b)]) {
          Point w = u;
          for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
          if (!std::binary_search(target.begin(), target.end(), w)) return ClosureViolation{a, b, std::move(w)};
        }
    }
  }
  return std::nullopt;
}

std::string to_string(const Point& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
  out << ')';
  return out.str();
}

}  // namespace asymult
