#include "asymult/monomial.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace asymult;

namespace {

MonomialIdeal ideal(std::size_t d, std::vector<Exponent> gens) { return MonomialIdeal(d, std::move(gens)); }

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t d, int max_exp, bool m_primary) {
  std::uniform_int_distribution<int> e(0, max_exp), count(1, 5), pure(1, max_exp);
  std::vector<Exponent> gens;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Exponent g(d);
    for (auto& x : g) x = e(rng);
    gens.push_back(g);
  }
  if (m_primary)
    for (std::size_t k = 0; k < d; ++k) {
      Exponent g(d, 0);
      g[k] = pure(rng);
      gens.push_back(g);
    }
  return MonomialIdeal(d, gens);
}

// Iterates I <- I : J until it stops changing.
MonomialIdeal colon_fixpoint(MonomialIdeal i, const MonomialIdeal& j) {
  while (true) {
    auto next = colon(i, j);
    if (next == i) return i;
    i = std::move(next);
  }
}

std::int64_t box_count_between(const MonomialIdeal& j, const MonomialIdeal& i, std::int64_t side) {
  std::int64_t count = 0;
  const std::size_t d = i.num_vars();
  Exponent a(d, 0);
  while (true) {
    if (j.contains(a) && !i.contains(a)) ++count;
    std::size_t k = 0;
    while (k < d && ++a[k] == side) a[k++] = 0;
    if (k == d) break;
  }
  return count;
}

}  // namespace

TEST(Minimalize, MatchesQuadraticFilter) {
  std::mt19937 rng(23);
  for (std::size_t d = 1; d <= 4; ++d) {
    std::uniform_int_distribution<int> e(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Exponent> gens(12, Exponent(d));
      for (auto& g : gens)
        for (auto& x : g) x = e(rng) + 1;
      std::vector<Exponent> expected;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
          if (gens[j] == gens[i]) {
            redundant = j < i;
            continue;
          }
          bool div = true;
          for (std::size_t k = 0; k < d; ++k) div = div && gens[j][k] <= gens[i][k];
          redundant = div;
        }
        if (!redundant) expected.push_back(gens[i]);
      }
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(minimalize(d, gens), expected);
    }
  }
}

TEST(IdealOps, Examples) {
  const auto m = MonomialIdeal::maximal(2);
  EXPECT_EQ(power(m, 2), ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})), ideal(2, {{1, 1}}));
  EXPECT_EQ(colon(ideal(2, {{2, 0}, {1, 1}}), ideal(2, {{1, 0}})), m);
  EXPECT_EQ(sum(ideal(2, {{2, 0}}), ideal(2, {{1, 1}, {3, 0}})), ideal(2, {{2, 0}, {1, 1}}));
  EXPECT_EQ(MonomialIdeal::maximal_power(3, 4), power(MonomialIdeal::maximal(3), 4));
  EXPECT_THROW(sum(m, MonomialIdeal::maximal(3)), std::invalid_argument);
}

TEST(IdealOps, UnitAndZero) {
  const auto u = MonomialIdeal::unit(2);
  const auto z = MonomialIdeal::zero(2);
  EXPECT_TRUE(u.is_unit());
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(ideal(2, {{0, 0}, {3, 1}}), u);
  EXPECT_EQ(product(u, MonomialIdeal::maximal(2)), MonomialIdeal::maximal(2));
  EXPECT_EQ(product(z, MonomialIdeal::maximal(2)), z);
  EXPECT_EQ(power(MonomialIdeal::maximal(2), 0), u);
  EXPECT_EQ(colon(MonomialIdeal::maximal(2), z), u);
}

TEST(IdealOps, ColonProductAdjunction) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> e(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto i = random_ideal(rng, 3, 5, false);
    const Exponent v = {e(rng), e(rng), e(rng)};
    const auto q = colon(i, v);
    for (int s = 0; s < 20; ++s) {
      const Exponent u = {e(rng), e(rng), e(rng)};
      const Exponent uv = {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
      EXPECT_EQ(q.contains(u), i.contains(uv));
    }
  }
}

TEST(IdealOps, ContainsTwoVariableFastPath) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto i = random_ideal(rng, 2, 6, false);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        bool expected = false;
        for (const auto& g : i.generators()) expected = expected || (g[0] <= a && g[1] <= b);
        EXPECT_EQ(i.contains({a, b}), expected);
      }
  }
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate(ideal(2, {{2, 0}, {1, 1}})), ideal(2, {{1, 0}}));
  EXPECT_TRUE(saturate(ideal(2, {{2, 0}, {0, 3}})).is_unit());
  EXPECT_EQ(saturate(ideal(2, {{1, 0}})), ideal(2, {{1, 0}}));
}

TEST(Saturate, AgreesWithColonIteration) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const auto i = random_ideal(rng, d, 5, false);
    const auto j = random_ideal(rng, d, 2, false);
    EXPECT_EQ(saturate(i), colon_fixpoint(i, MonomialIdeal::maximal(d)));
    EXPECT_EQ(saturate_by(i, j), colon_fixpoint(i, j));
    const auto s = saturate(i);
    EXPECT_EQ(saturate(s), s);
    EXPECT_TRUE(is_subset(i, s));
  }
}

TEST(SymbolicCore, Examples) {
  EXPECT_EQ(symbolic_core(ideal(2, {{2, 0}, {1, 1}}), MonomialIdeal::maximal(2), 2), ideal(2, {{2, 0}}));
  EXPECT_EQ(symbolic_core(ideal(2, {{1, 0}}), ideal(2, {{0, 1}}), 3), ideal(2, {{3, 0}}));
  EXPECT_EQ(symbolic_core(ideal(2, {{1, 1}}), ideal(2, {{1, 0}}), 1), ideal(2, {{0, 1}}));
}

TEST(MPrimary, Examples) {
  EXPECT_TRUE(is_m_primary(ideal(2, {{2, 0}, {0, 3}})));
  EXPECT_FALSE(is_m_primary(ideal(2, {{1, 0}})));
  EXPECT_TRUE(is_m_primary(MonomialIdeal::unit(2)));
  EXPECT_FALSE(is_m_primary(MonomialIdeal::zero(2)));
}

TEST(Colength, Examples) {
  EXPECT_EQ(colength(ideal(2, {{2, 0}, {0, 3}})), 6);
  EXPECT_EQ(colength(MonomialIdeal::unit(3)), 0);
  try {
    colength(ideal(2, {{1, 0}}));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "infinite colength");
  }
  EXPECT_THROW(colength(MonomialIdeal::zero(2)), std::domain_error);
}

TEST(Colength, PowersOfMaximalIdeal) {
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::int64_t n = 0; n <= 15; ++n)
      EXPECT_EQ(colength(MonomialIdeal::maximal_power(d, n)), binomial(n + static_cast<std::int64_t>(d) - 1, d))
          << "d=" << d << " n=" << n;
}

TEST(Colength, MatchesBoxOracle) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const auto i = random_ideal(rng, d, 6, true);
    EXPECT_EQ(colength(i), oracle::box_colength(i.generators(), d)) << to_string(i);
  }
}

TEST(Colength, FourVariablesMatchBoxOracle) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto i = random_ideal(rng, 4, 4, true);
    EXPECT_EQ(colength(i), oracle::box_colength(i.generators(), 4)) << to_string(i);
  }
}

TEST(Colength, MonotoneUnderContainment) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const auto i = random_ideal(rng, d, 6, true);
    const auto j = sum(i, random_ideal(rng, d, 6, false));
    EXPECT_GE(colength(i), colength(j));
  }
}

TEST(RelativeLength, SaturationQuotient) {
  const auto i = ideal(2, {{2, 0}, {1, 1}});
  for (std::int64_t n = 1; n <= 20; ++n) {
    const auto in = power(i, n);
    EXPECT_EQ(relative_length(saturate(in), in), binomial(n + 1, 2));
  }
  EXPECT_EQ(relative_length(MonomialIdeal::unit(2), ideal(2, {{2, 0}, {0, 3}})), 6);
  try {
    relative_length(MonomialIdeal::unit(2), ideal(2, {{1, 0}}));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "infinite quotient length");
  }
}

TEST(RelativeLength, MatchesBoxCount) {
  std::mt19937 rng(53);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const auto i = random_ideal(rng, 2, 4, false);
    const auto j = saturate(i);
    const auto len = relative_length(j, i);
    EXPECT_EQ(len, box_count_between(j, i, 30)) << to_string(i);
    ++checked;
  }
}

TEST(NilPair, LengthAndProduct) {
  const auto m1 = [](std::int64_t k) { return MonomialIdeal::maximal_power(1, k); };
  EXPECT_EQ(nilpair_length(NilPairIdeal(m1(2), m1(1))), 3);
  EXPECT_EQ(nilpair_length(NilPairIdeal::unit(2)), 0);
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t a2 = 0; a2 <= a; ++a2)
      for (std::int64_t b = 1; b <= 4; ++b)
        for (std::int64_t b2 = 0; b2 <= b; ++b2) {
          const auto p = nilpair_product(NilPairIdeal(m1(a), m1(a2)), NilPairIdeal(m1(b), m1(b2)));
          EXPECT_EQ(p, NilPairIdeal(m1(a + b), m1(std::min(a + b2, a2 + b))));
        }
  EXPECT_THROW(NilPairIdeal(m1(1), m1(2)), std::domain_error);
}

TEST(NilPair, ProductsAreAssociative) {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> e(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<NilPairIdeal> p;
    for (int k = 0; k < 3; ++k) {
      const auto b = MonomialIdeal::maximal_power(2, e(rng));
      const auto a = product(b, MonomialIdeal::maximal_power(2, e(rng)));
      p.emplace_back(a, b);
    }
    EXPECT_EQ(nilpair_product(nilpair_product(p[0], p[1]), p[2]), nilpair_product(p[0], nilpair_product(p[1], p[2])));
  }
}

TEST(NilPair, MaximalPowersAndWitness) {
  const auto m = NilPairIdeal::maximal(1);
  const auto m3 = nilpair_power(m, 3);
  EXPECT_EQ(m3, NilPairIdeal(MonomialIdeal::maximal_power(1, 3), MonomialIdeal::maximal_power(1, 2)));
  EXPECT_EQ(nilpair_times_y(m3), NilPairIdeal(MonomialIdeal::zero(1), MonomialIdeal::maximal_power(1, 3)));
  const auto w = containment_witness(nilpair_power(m, 2), m3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(to_string(*w), "x1^2");
  EXPECT_FALSE(containment_witness(m3, nilpair_power(m, 2)).has_value());
}

TEST(Newton, Examples) {
  const auto i = ideal(2, {{2, 0}, {0, 3}});
  const auto region = newton_region(i, 6);
  EXPECT_EQ(region.covolume, 3);
  EXPECT_EQ(multiplicity_oracle(i), 6);
  for (std::size_t d = 1; d <= 3; ++d) EXPECT_EQ(multiplicity_oracle(MonomialIdeal::maximal(d)), 1);
  EXPECT_THROW(multiplicity_oracle(ideal(2, {{3, 0}})), std::domain_error);
  EXPECT_THROW(newton_region(i, 5), std::domain_error);
  EXPECT_EQ(newton_region(i, 40).covolume, 3);
}

TEST(Newton, ScalesWithPowers) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const auto i = random_ideal(rng, d, 3, true);
    const auto e = multiplicity_oracle(i);
    for (std::int64_t n = 2; n <= 4; ++n) {
      Integer nd;
      mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d));
      EXPECT_EQ(multiplicity_oracle(power(i, n)), e * Rational(nd));
    }
  }
}

TEST(MultiplicityLimit, Examples) {
  const auto seq = multiplicity_limit(MonomialIdeal::maximal(2), 10);
  EXPECT_EQ(seq.back(), make_rational(11, 10));
  EXPECT_EQ(multiplicity_limit(ideal(2, {{2, 0}, {0, 3}}), 1).front(), 12);
  for (const auto& v : multiplicity_limit(MonomialIdeal::unit(2), 5)) EXPECT_EQ(v, 0);
}

TEST(IdealText, RoundTrip) {
  const auto i = parse_ideal("# staircase\n2 0\n1 1  # mixed\n\n0 3\n");
  EXPECT_EQ(i, ideal(2, {{2, 0}, {1, 1}, {0, 3}}));
  EXPECT_EQ(parse_ideal(format_ideal(i)), i);
  EXPECT_EQ(to_string(i), "(x2^3, x1*x2, x1^2)");
  EXPECT_EQ(parse_ideal("# nothing\n", 3), MonomialIdeal::zero(3));
  EXPECT_THROW(parse_ideal("1 2\n3\n"), std::invalid_argument);
  EXPECT_THROW(parse_ideal("1 -2\n"), std::invalid_argument);
  EXPECT_THROW(parse_ideal("1 x\n"), std::invalid_argument);
  EXPECT_THROW(parse_ideal(""), std::invalid_argument);
}
