#include "asymult/lattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace asymult;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

Rational q(long a, long b) { return make_rational(a, b); }

}  // namespace

TEST(HermiteBasis, Identity) {
  const auto lat = hermite_basis({iv({1, 0}), iv({0, 1})});
  EXPECT_EQ(lat.rank(), 2u);
  EXPECT_EQ(lat.basis(), (std::vector<IntVector>{iv({1, 0}), iv({0, 1})}));
}

TEST(HermiteBasis, ReducesToDiagonal) {
  const auto lat = hermite_basis({iv({0, 2}), iv({2, 2})});
  EXPECT_EQ(lat.rank(), 2u);
  EXPECT_EQ(lat.basis(), (std::vector<IntVector>{iv({2, 0}), iv({0, 2})}));
  EXPECT_TRUE(lat.contains(iv({2, 4})));
  EXPECT_TRUE(lat.contains(iv({-2, 6})));
  EXPECT_FALSE(lat.contains(iv({1, 0})));
  EXPECT_FALSE(lat.contains(iv({0, 3})));
}

TEST(HermiteBasis, SingleVectorAndEmpty) {
  const auto lat = hermite_basis({iv({3, 1})});
  EXPECT_EQ(lat.rank(), 1u);
  EXPECT_EQ(lat.basis().front(), iv({3, 1}));
  EXPECT_EQ(hermite_basis(3, {}).rank(), 0u);
}

TEST(HermiteBasis, Idempotent) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVector> gens;
    const int count = 1 + trial % 4;
    for (int i = 0; i < count; ++i) gens.push_back(iv({coef(rng), coef(rng), coef(rng)}));
    const auto once = hermite_basis(3, gens);
    const auto twice = hermite_basis(3, once.basis());
    EXPECT_EQ(once, twice);
    for (const auto& g : gens) EXPECT_TRUE(once.contains(g));
  }
}

TEST(SublatticeIndex, Examples) {
  const auto z2 = IntegerLattice::standard(2);
  EXPECT_EQ(sublattice_index(z2, hermite_basis({iv({2, 0}), iv({0, 1})})), 2);
  EXPECT_EQ(sublattice_index(z2, z2), 1);
  const auto axis = hermite_basis({iv({1, 0})});
  EXPECT_EQ(sublattice_index(axis, hermite_basis({iv({3, 0})})), 3);
}

TEST(SublatticeIndex, Errors) {
  const auto z2 = IntegerLattice::standard(2);
  const auto axis = hermite_basis({iv({1, 0})});
  EXPECT_THROW(sublattice_index(z2, axis), std::domain_error);
  const auto other_axis = hermite_basis({iv({0, 1})});
  EXPECT_THROW(sublattice_index(axis, other_axis), std::domain_error);
  try {
    sublattice_index(axis, hermite_basis({iv({1, 1})}));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "not a sublattice");
  }
}

TEST(SublatticeIndex, Multiplicative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  const auto z3 = IntegerLattice::standard(3);
  int checked = 0;
  while (checked < 60) {
    std::vector<IntVector> b;
    for (int i = 0; i < 3; ++i) b.push_back(iv({coef(rng), coef(rng), coef(rng)}));
    const auto mid = hermite_basis(3, b);
    if (mid.rank() != 3) continue;
    std::vector<IntVector> c;
    for (int i = 0; i < 3; ++i) {
      IntVector v(3, 0);
      for (const auto& row : mid.basis()) {
        const int k = coef(rng);
        for (int j = 0; j < 3; ++j) v[j] += k * row[j];
      }
      c.push_back(v);
    }
    const auto low = hermite_basis(3, c);
    if (low.rank() != 3) continue;
    EXPECT_EQ(sublattice_index(z3, mid) * sublattice_index(mid, low), sublattice_index(z3, low));
    ++checked;
  }
}

TEST(Saturation, FillsRationalSpan) {
  const auto sat = saturation(hermite_basis({iv({2, -2, 0})}));
  EXPECT_EQ(sat.basis(), (std::vector<IntVector>{iv({1, -1, 0})}));
  EXPECT_EQ(saturation(hermite_basis({iv({2, 0}), iv({0, 2})})), IntegerLattice::standard(2));
  EXPECT_EQ(saturation(IntegerLattice::zero(2)).rank(), 0u);
}

TEST(IntegerKernel, Orthogonality) {
  const auto ker = integer_kernel(3, {iv({1, 2, 3})});
  EXPECT_EQ(ker.rank(), 2u);
  for (const auto& b : ker.basis()) EXPECT_EQ(b[0] + 2 * b[1] + 3 * b[2], 0);
  EXPECT_TRUE(ker.contains(iv({3, 0, -1})));
  EXPECT_TRUE(ker.contains(iv({2, -1, 0})));
}

TEST(ConvexHull, DropsInteriorPoint) {
  const auto p = convex_hull({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({q(1, 2), q(1, 4)})});
  EXPECT_EQ(p.affine_dim(), 2);
  EXPECT_EQ(p.vertices(), (std::vector<RatVector>{rv({0, 0}), rv({0, 1}), rv({1, 0})}));
}

TEST(ConvexHull, SegmentAndSquare) {
  const auto seg = convex_hull({rv({0}), rv({3})});
  EXPECT_EQ(seg.affine_dim(), 1);
  EXPECT_EQ(seg.vertices().size(), 2u);
  const auto sq = convex_hull({rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({2, 2}), rv({1, 0}), rv({1, 1})});
  EXPECT_EQ(sq.affine_dim(), 2);
  EXPECT_EQ(sq.vertices().size(), 4u);
  EXPECT_EQ(euclidean_volume(sq), 4);
}

TEST(ConvexHull, DegenerateCubeFaces) {
  std::vector<RatVector> pts;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z <= 2; ++z) pts.push_back(rv({x, y, z}));
  const auto cube = convex_hull(pts);
  EXPECT_EQ(cube.vertices().size(), 8u);
  EXPECT_EQ(euclidean_volume(cube), 8);
  EXPECT_TRUE(contains(cube, rv({1, 1, 1})));
  EXPECT_TRUE(contains(cube, rv({2, 2, 2})));
  EXPECT_FALSE(contains(cube, rv({q(5, 2), 1, 1})));
}

TEST(ConvexHull, LowerDimensionalInSpace) {
  const auto tri = convex_hull({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({q(1, 3), q(1, 3), q(1, 3)})});
  EXPECT_EQ(tri.affine_dim(), 2);
  EXPECT_EQ(tri.vertices().size(), 3u);
}

TEST(LatticeVolume, Examples) {
  const auto seg = convex_hull({rv({0, 1}), rv({3, 1})});
  EXPECT_EQ(lattice_volume(seg, hermite_basis({iv({1, 0})})), 3);
  EXPECT_EQ(lattice_volume(seg, hermite_basis({iv({3, 0})})), 1);
  const auto tri = convex_hull({rv({0, 0}), rv({1, 0}), rv({0, 1})});
  EXPECT_EQ(lattice_volume(tri, IntegerLattice::standard(2)), q(1, 2));
}

TEST(LatticeVolume, Conventions) {
  const auto point = convex_hull({rv({2, 5})});
  EXPECT_EQ(lattice_volume(point, IntegerLattice::zero(2)), 1);
  EXPECT_EQ(lattice_volume(point, IntegerLattice::standard(2)), 0);
  const auto seg = convex_hull({rv({0, 0}), rv({1, 1})});
  EXPECT_EQ(lattice_volume(seg, IntegerLattice::standard(2)), 0);
  EXPECT_THROW(lattice_volume(seg, hermite_basis({iv({1, 0})})), std::domain_error);
}

TEST(LatticeVolume, MatchesBruteForceTriangulation) {
  std::mt19937 rng(3);
  for (std::size_t k = 1; k <= 3; ++k) {
    std::uniform_int_distribution<int> coord(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<RatVector> pts;
      const int n = static_cast<int>(k) + 2 + trial % 6;
      for (int i = 0; i < n; ++i) {
        RatVector p;
        for (std::size_t j = 0; j < k; ++j) p.push_back(q(coord(rng), den(rng)));
        pts.push_back(p);
      }
      const auto poly = convex_hull(k, pts);
      const Rational expected = oracle::hull_volume(pts);
      EXPECT_EQ(lattice_volume(poly, IntegerLattice::standard(k)), expected) << "k=" << k << " trial=" << trial;
    }
  }
}

TEST(LatticeVolume, UnimodularInvariance) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> shear(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    // Product of random elementary shears: an element of SL_3(Z).
    std::vector<std::vector<long>> u = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int s = 0; s < 4; ++s) {
      const int i = s % 3, j = (s + 1 + trial) % 3;
      if (i == j) continue;
      const int f = shear(rng);
      for (int c = 0; c < 3; ++c) u[i][c] += f * u[j][c];
    }
    auto apply = [&](const RatVector& p) {
      RatVector q(3, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[i] += Rational(u[i][j]) * p[j];
      return q;
    };
    auto apply_int = [&](const IntVector& p) {
      IntVector q(3, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[i] += u[i][j] * p[j];
      return q;
    };
    // A triangle inside the plane spanned by a rank-2 lattice.
    const std::vector<IntVector> lat_gens = {iv({1, 1, 0}), iv({0, 2, 1})};
    const auto lat = hermite_basis(lat_gens);
    std::vector<RatVector> pts;
    for (int i = 0; i < 4; ++i) {
      const Rational a = q(coord(rng), 2), b = q(coord(rng), 3);
      pts.push_back(rv({a, a + 2 * b, b}));
    }
    const auto poly = convex_hull(pts);
    if (poly.affine_dim() != 2) continue;
    std::vector<RatVector> moved;
    for (const auto& p : pts) moved.push_back(apply(p));
    std::vector<IntVector> moved_gens;
    for (const auto& g : lat_gens) moved_gens.push_back(apply_int(g));
    EXPECT_EQ(lattice_volume(poly, lat), lattice_volume(convex_hull(moved), hermite_basis(moved_gens)));
  }
}
