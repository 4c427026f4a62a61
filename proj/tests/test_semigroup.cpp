#include "asymult/semigroup.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace asymult;

namespace {

using Gen1 = std::pair<std::int64_t, std::int64_t>;

GradedSemigroup line(std::vector<Gen1> gens) {
  std::vector<SemigroupGenerator> g;
  for (auto [v, deg] : gens) g.push_back({{v}, deg});
  return GradedSemigroup(1, g);
}

struct Fixture {
  std::vector<Gen1> gens;
  Rational limit;
};

std::vector<Fixture> fixtures() {
  return {{{{0, 1}, {1, 1}}, 1},
          {{{0, 1}, {3, 1}}, 1},
          {{{0, 2}, {2, 2}}, 1},
          {{{0, 1}, {1, 2}}, make_rational(1, 2)},
          {{{0, 2}}, 1}};
}

Level level_of(std::initializer_list<std::int64_t> xs) {
  Level l;
  for (auto x : xs) l.push_back({x});
  return l;
}

}  // namespace

TEST(EnumerateLevels, Examples) {
  EXPECT_EQ(line({{0, 1}, {1, 1}}).enumerate_levels(2)[2], level_of({0, 1, 2}));
  EXPECT_TRUE(line({{0, 2}}).enumerate_levels(3)[3].empty());
  EXPECT_EQ(line({{0, 1}, {1, 2}}).enumerate_levels(5)[5], level_of({0, 1, 2}));
}

TEST(EnumerateLevels, MatchesMultisetOracle) {
  for (const auto& f : fixtures()) {
    const auto levels = line(f.gens).enumerate_levels(60);
    const auto expected = oracle::semigroup_level_counts_1d(f.gens, 60);
    for (std::size_t n = 0; n <= 60; ++n) EXPECT_EQ(static_cast<std::int64_t>(levels[n].size()), expected[n]) << n;
  }
  const auto odd = line({{0, 3}, {1, 2}, {5, 5}});
  const auto levels = odd.enumerate_levels(40);
  const auto expected = oracle::semigroup_level_counts_1d({{0, 3}, {1, 2}, {5, 5}}, 40);
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(static_cast<std::int64_t>(levels[n].size()), expected[n]);
}

TEST(EnumerateLevels, MemoryCap) {
  EnumerationOptions tight;
  tight.memory_cap = 50;
  EXPECT_THROW(line({{0, 1}, {1, 1}}).enumerate_levels(100, tight), std::length_error);
}

TEST(EnumerateLevels, OracleForm) {
  const auto s = GradedSemigroup::from_oracle(1, [](std::int64_t n) {
    Level l;
    for (std::int64_t a = n; a >= 0; --a) l.push_back({a});
    return l;
  });
  EXPECT_FALSE(s.has_generators());
  EXPECT_EQ(s.enumerate_levels(3)[3], level_of({0, 1, 2, 3}));
  try {
    invariants(s);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "invariants require generators");
  }
}

TEST(Invariants, Examples) {
  const auto a = invariants(line({{0, 1}, {3, 1}}));
  EXPECT_EQ(a.m, 1);
  EXPECT_EQ(a.q, 1);
  EXPECT_EQ(a.ind, 3);
  EXPECT_EQ(a.body.volume, 3);

  const auto b = invariants(line({{0, 2}, {2, 2}}));
  EXPECT_EQ(b.m, 2);
  EXPECT_EQ(b.q, 1);
  EXPECT_EQ(b.ind, 2);
  EXPECT_EQ(b.body.slice_height, 2);
  EXPECT_EQ(b.body.volume, 2);

  const auto c = invariants(line({{0, 1}}));
  EXPECT_EQ(c.m, 1);
  EXPECT_EQ(c.q, 0);
  EXPECT_EQ(c.ind, 1);
  EXPECT_EQ(c.body.volume, 1);
}

TEST(Invariants, FullGroupHasTrivialIndex) {
  const std::vector<std::vector<Gen1>> full = {{{0, 1}, {1, 1}}, {{0, 1}, {1, 2}}, {{2, 3}, {1, 1}, {-1, 1}}};
  for (const auto& gens : full) {
    const auto inv = invariants(line(gens));
    EXPECT_EQ(inv.group, IntegerLattice::standard(2));
    EXPECT_EQ(inv.m, 1);
    EXPECT_EQ(inv.ind, 1);
  }
}

TEST(PredictedLimit, Fixtures) {
  for (const auto& f : fixtures()) EXPECT_EQ(predicted_limit(line(f.gens)), f.limit);
}

TEST(PredictedLimit, PlaneFixtures) {
  const GradedSemigroup p2(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
  EXPECT_EQ(predicted_limit(p2), make_rational(1, 2));
  const GradedSemigroup even(2, {{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}});
  const auto inv = invariants(even);
  EXPECT_EQ(inv.ind, 4);
  EXPECT_EQ(inv.body.volume, 2);
  EXPECT_EQ(predicted_limit(inv), make_rational(1, 2));
}

TEST(EmpiricalLimit, Examples) {
  const auto a = empirical_limit(line({{0, 1}, {1, 1}}), 100);
  EXPECT_EQ(a.back().value, make_rational(101, 100));
  const auto b = empirical_limit(line({{0, 1}, {3, 1}}), 99);
  EXPECT_EQ(b.back().value, make_rational(100, 99));
  for (const auto& e : empirical_limit(line({{0, 2}}), 10)) EXPECT_EQ(e.value, 1);
  EXPECT_EQ(empirical_limit(line({{0, 2}}), 10).size(), 5u);
}

TEST(EmpiricalLimit, DeviationShrinksAcrossDyadicWindows) {
  const std::int64_t n = 256;
  for (const auto& f : fixtures()) {
    const auto s = line(f.gens);
    const auto seq = empirical_limit(s, n);
    const auto kmax = static_cast<std::int64_t>(seq.size());
    Rational early = 0, late = 0;
    for (const auto& e : seq) {
      const Rational dev = abs_value(e.value - f.limit);
      if (e.k >= kmax / 4 && e.k < kmax / 2) early = std::max(early, dev);
      if (e.k >= kmax / 2) late = std::max(late, dev);
    }
    if (early == 0) {
      EXPECT_EQ(late, 0);
    } else {
      EXPECT_LT(late, early);
    }
  }
}

TEST(Truncate, Examples) {
  const auto s = line({{0, 1}, {1, 2}});
  const auto t2 = truncate(s, 2);
  EXPECT_EQ(t2.generators(), (std::vector<SemigroupGenerator>{{{0}, 2}, {{1}, 2}}));
  const auto inv2 = invariants(t2);
  EXPECT_EQ(inv2.m, 2);
  EXPECT_EQ(inv2.q, 1);
  EXPECT_EQ(predicted_limit(inv2), 1);

  const auto p1 = line({{0, 1}, {1, 1}});
  EXPECT_EQ(truncate(p1, 1).generators(), p1.generators());

  const auto ray = truncate(s, 1);
  EXPECT_EQ(ray.generators(), (std::vector<SemigroupGenerator>{{{0}, 1}}));
  EXPECT_EQ(invariants(ray).q, 0);
}

TEST(Truncate, RescaledLimitApproachesOriginal) {
  for (const auto& f : fixtures()) {
    const auto s = line(f.gens);
    const auto q = invariants(s).q;
    std::vector<Rational> eps;
    for (std::int64_t p : {2, 8}) {
      const auto t = truncate(s, p);
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
      eps.push_back(abs_value(predicted_limit(t) / Rational(scale) - f.limit));
    }
    EXPECT_LE(eps[1], eps[0]);
  }
}

TEST(Truncate, EmptyLevelIsAnError) {
  // m(S) = 1 but level 1 is empty.
  EXPECT_THROW(truncate(line({{0, 2}, {0, 3}}), 1), std::domain_error);
}

TEST(StronglyNonnegative, Examples) {
  EXPECT_TRUE(strongly_nonnegative(line({{0, 1}, {1, 1}})));
  EXPECT_FALSE(strongly_nonnegative(line({{0, 1}, {1, 0}})));
  EXPECT_TRUE(strongly_nonnegative(GradedSemigroup(1, {})));
  EXPECT_THROW(line({{0, 1}, {1, 0}}).enumerate_levels(2), std::domain_error);
}

TEST(SemigroupProperties, ClosureAndNonemptiness) {
  for (const auto& f : fixtures()) {
    const auto s = line(f.gens);
    const auto levels = s.enumerate_levels(40);
    EXPECT_FALSE(closure_violation(levels).has_value());
    const auto m = invariants(s).m;
    for (std::int64_t n = 1; n <= 40; ++n) {
      if (n % m != 0) EXPECT_TRUE(levels[static_cast<std::size_t>(n)].empty());
    }
    EXPECT_FALSE(levels[static_cast<std::size_t>(40 - 40 % m)].empty());
  }
}

TEST(SemigroupProperties, LevelsFitInDilatedBody) {
  for (const auto& f : fixtures()) {
    const auto s = line(f.gens);
    const auto inv = invariants(s);
    const auto& verts = inv.body.polytope.vertices();
    const Rational lo = verts.front()[0], hi = verts.back()[0];
    const auto levels = s.enumerate_levels(80);
    for (std::int64_t n = 1; n <= 80; ++n) {
      const Rational a = lo * n / inv.m, b = hi * n / inv.m;
      Integer first, last;
      mpz_cdiv_q(first.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
      mpz_fdiv_q(last.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
      const Integer box = last >= first ? Integer(last - first + 1) : Integer(0);
      EXPECT_LE(Integer(static_cast<long>(levels[static_cast<std::size_t>(n)].size())), box);
    }
  }
}

TEST(SemigroupProperties, UnimodularInvariance) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coord(-2, 3), deg(1, 3), shear(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SemigroupGenerator> gens;
    const int count = 2 + trial % 3;
    for (int i = 0; i < count; ++i) gens.push_back({{coord(rng), coord(rng)}, deg(rng)});
    const GradedSemigroup s(2, gens);
    const auto inv = invariants(s);
    // (x, y) -> (x + f y, y) followed by (x, y) -> (x, y + g x).
    const int f = shear(rng), g = shear(rng);
    for (auto& gen : gens) {
      const auto x = gen.vector[0] + f * gen.vector[1];
      gen.vector = {x, gen.vector[1] + g * x};
    }
    const GradedSemigroup moved(2, gens);
    const auto inv2 = invariants(moved);
    EXPECT_EQ(inv.m, inv2.m);
    EXPECT_EQ(inv.q, inv2.q);
    EXPECT_EQ(inv.ind, inv2.ind);
    EXPECT_EQ(predicted_limit(inv), predicted_limit(inv2));
  }
}

TEST(ClosureViolation, ReportsWitness) {
  Levels bad = {level_of({0}), level_of({0, 1}), level_of({0})};
  const auto v = closure_violation(bad);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->a, 1);
  EXPECT_EQ(v->b, 1);
  EXPECT_EQ(v->witness, Point{1});
}
