#include "asymult/spec_file.hpp"

#include <gtest/gtest.h>

using namespace asymult;

TEST(SpecFile, ParsesKeyValueLines) {
  const auto spec = SpecFile::parse("# comment\ntype = family   # trailing\n\nbuilder=power\n  vars = 2\n");
  EXPECT_EQ(spec.type(), "family");
  EXPECT_EQ(spec.get("builder"), "power");
  EXPECT_EQ(spec.get_int("vars"), 2);
  EXPECT_EQ(spec.get_or("horizon", "7"), "7");
  EXPECT_EQ(spec.entries().size(), 3u);
}

TEST(SpecFile, RoundTrip) {
  const auto spec = SpecFile::parse("type = series\nbuilder = full\nweights = 1, 1, 1\n");
  const auto again = SpecFile::parse(spec.format());
  EXPECT_EQ(spec.entries(), again.entries());
  EXPECT_EQ(spec.format(), "type = series\nbuilder = full\nweights = 1, 1, 1\n");
}

TEST(SpecFile, Errors) {
  EXPECT_THROW(SpecFile::parse("builder = power\n"), SpecError);
  EXPECT_THROW(SpecFile::parse("type = family\ntype = series\n"), SpecError);
  EXPECT_THROW(SpecFile::parse("type = family\njust words\n"), SpecError);
  EXPECT_THROW(SpecFile::parse("type = family\n = 3\n"), SpecError);
  const auto spec = SpecFile::parse("type = family\nvars = two\n");
  EXPECT_THROW(spec.get_int("vars"), SpecError);
  EXPECT_THROW(spec.get("missing"), SpecError);
  EXPECT_THROW(SpecFile::read("/nonexistent/file.spec"), SpecError);
}

TEST(SpecFile, SetOverwritesOrAppends) {
  auto spec = SpecFile::parse("type = ideal\nvars = 2\n");
  spec.set("vars", "3");
  spec.set("horizon", "9");
  EXPECT_EQ(spec.format(), "type = ideal\nvars = 3\nhorizon = 9\n");
}

TEST(Numbers, ExactDecimals) {
  EXPECT_EQ(parse_exact_number("0.02"), make_rational(1, 50));
  EXPECT_EQ(parse_exact_number("-1.5"), make_rational(-3, 2));
  EXPECT_EQ(parse_exact_number(".25"), make_rational(1, 4));
  EXPECT_EQ(parse_exact_number("3/4"), make_rational(3, 4));
  EXPECT_EQ(parse_exact_number("7"), 7);
  EXPECT_THROW(parse_exact_number("1e-3"), std::invalid_argument);
  EXPECT_THROW(parse_exact_number("1."), SpecError);
  EXPECT_EQ(parse_int_list("1, 2 3,4"), (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_THROW(parse_int_list(" , "), SpecError);
}

TEST(Parsers, TSetsGeneratorsIdeals) {
  const auto t = parse_tset("residue:3:0");
  EXPECT_TRUE(t.contains(9));
  EXPECT_FALSE(t.contains(10));
  EXPECT_TRUE(parse_tset("explicit:2,5").contains(5));
  EXPECT_FALSE(parse_tset("explicit:").contains(1));
  EXPECT_THROW(parse_tset("odd"), SpecError);

  const auto gens = parse_generators("(0,1) (1,2)");
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[1].vector, (Point{1}));
  EXPECT_EQ(gens[1].degree, 2);
  EXPECT_THROW(parse_generators("(0,1) (1,2,3)"), SpecError);
  EXPECT_THROW(parse_generators("(0,1"), SpecError);
  EXPECT_THROW(parse_generators(""), SpecError);

  EXPECT_EQ(parse_ideal_rows("2 0; 1 1", 2), MonomialIdeal(2, {{2, 0}, {1, 1}}));
  EXPECT_THROW(parse_ideal_rows("2 0 1", 2), SpecError);
}

TEST(Builders, Semigroup) {
  const auto s = semigroup_from_spec(SpecFile::parse("type = semigroup\nname = half\ngenerators = (0,1) (1,2)\n"));
  EXPECT_EQ(s.label(), "half");
  EXPECT_EQ(predicted_limit(s), make_rational(1, 2));
  EXPECT_THROW(semigroup_from_spec(SpecFile::parse("type = semigroup\ngenerators = (0,1)\nfoo = 1\n")), SpecError);
  EXPECT_THROW(semigroup_from_spec(SpecFile::parse("type = family\n")), SpecError);
}

TEST(Builders, Families) {
  const auto power = family_from_spec(SpecFile::parse("type = family\nbuilder = power\nvars = 2\nideal = 2 0; 0 3\n"));
  EXPECT_EQ(power.length(1), 6);
  const auto val = family_from_spec(SpecFile::parse("type = family\nbuilder = valuation\nlambda = 1, 3/2\n"));
  EXPECT_EQ(val.info().lambda->at(1), make_rational(3, 2));
  const auto ex = family_from_spec(SpecFile::parse("type = family\nbuilder = example1\nd = 1\nschedule = 2,6,26,210\n"));
  EXPECT_EQ(ex.length(26), 39);
  const auto artin = family_from_spec(SpecFile::parse("type = family\nbuilder = artin_tau\nt = 2\n"));
  EXPECT_EQ(artin.length(2), 3);
  EXPECT_THROW(family_from_spec(SpecFile::parse("type = family\nbuilder = nope\n")), SpecError);
  EXPECT_THROW(family_from_spec(SpecFile::parse("type = family\nbuilder = example1\nd = 1\nschedule = 4\n")),
               SpecError);
  EXPECT_THROW(family_from_spec(SpecFile::parse("type = family\nbuilder = artin_tau\nt = 0\n")), SpecError);
}

TEST(Builders, Series) {
  const auto p2 = series_from_spec(SpecFile::parse("type = series\nbuilder = full\nweights = 1,1,1\n"));
  EXPECT_EQ(p2.dim(2), 6);
  const auto ex2 = series_from_spec(SpecFile::parse("type = series\nbuilder = example2\nT = residue:3:0\n"));
  EXPECT_EQ(ex2.dim(3), 4);
  const auto spec = SpecFile::parse("type = series\nbuilder = thmN1\ns = -inf\nr = 1\n");
  EXPECT_FALSE(thmN1_params_from_spec(spec).s.has_value());
  const auto l = series_from_spec(spec);
  EXPECT_EQ(l.dim(6), thmN1_expected_dim(thmN1_params_from_spec(spec), 6));
  EXPECT_THROW(series_from_spec(SpecFile::parse("type = series\nbuilder = thmN1\ns = 2\nr = 1\n")), SpecError);
}

TEST(Builders, Ideal) {
  const auto i = ideal_from_spec(SpecFile::parse("type = ideal\nvars = 2\nideal = 2 0; 1 1\n"));
  EXPECT_EQ(i, MonomialIdeal(2, {{2, 0}, {1, 1}}));
  EXPECT_THROW(ideal_from_spec(SpecFile::parse("type = ideal\nvars = 0\nideal = 1\n")), SpecError);
}
