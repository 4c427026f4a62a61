#include "asymult/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace asymult {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

void axpy_row(IntVector& target, const Integer& q, const IntVector& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Unimodular row reduction of the first `ncols` columns. Rows stay full length;
// on return rows[0..rank) carry the pivots (positive, with reduced entries
// above them) and the remaining rows vanish on the reduced columns.
std::size_t echelonize(std::vector<IntVector>& rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    bool found = false;
    while (true) {
      std::size_t best = npos;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == npos || abs_int(rows[i][col]) < abs_int(rows[best][col])) best = i;
      }
      if (best == npos) break;
      found = true;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        axpy_row(rows[i], q, rows[r]);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      if (q != 0) axpy_row(rows[i], q, rows[r]);
    }
    ++r;
  }
  return r;
}

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows, std::size_t n) {
  const std::size_t rank = echelonize(rows, n);
  rows.resize(rank);
  return rows;
}

std::size_t pivot_column(const IntVector& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return npos;
}

// Row echelon form over Q; returns pivot columns of the row space.
std::vector<std::size_t> rational_pivots(std::vector<RatVector> rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t p = npos;
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        p = i;
        break;
      }
    if (p == npos) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t ncols) {
  return rational_pivots(rows, ncols).size();
}

Rational determinant(std::vector<RatVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = npos;
    for (std::size_t i = col; i < n; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p == npos) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntVector clear_denominators(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (den / x.get_den()));
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Double description on the homogenized points.

using Bits = std::vector<std::uint64_t>;

struct Ray {
  IntVector normal;
  Bits zero;
};

bool bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

Bits intersect_bits(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

bool subset_bits(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if ((a[w] & ~b[w]) != 0) return false;
  return true;
}

std::size_t popcount_bits(const Bits& a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

struct HullData {
  int dim = -1;
  std::vector<std::size_t> vertices;               // indices into the input
  std::vector<std::vector<std::size_t>> facets;    // incident input indices
};

// Facets of a full-dimensional point set in Q^k (k >= 1).
HullData full_dimensional_hull(const std::vector<RatVector>& pts, std::size_t k) {
  const std::size_t n = pts.size();
  const std::size_t dim = k + 1;
  std::vector<IntVector> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector h;
    h.reserve(dim);
    h.emplace_back(1);
    h.insert(h.end(), pts[i].begin(), pts[i].end());
    w[i] = clear_denominators(h);
  }

  // Greedy choice of dim linearly independent constraints.
  std::vector<std::size_t> basis;
  std::vector<RatVector> basis_rows;
  for (std::size_t i = 0; i < n && basis.size() < dim; ++i) {
    basis_rows.push_back(to_rat_vector(w[i]));
    if (rational_rank(basis_rows, dim) == basis_rows.size()) {
      basis.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }
  if (basis.size() != dim) throw std::logic_error("point set is not full dimensional");

  // Initial rays: columns of the inverse of the basis matrix.
  std::vector<RatVector> aug(dim, RatVector(2 * dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = basis_rows[i][j];
    aug[i][dim + i] = 1;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t p = col;
    while (aug[p][col] == 0) ++p;
    std::swap(aug[p], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t j = 0; j < 2 * dim; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  const std::size_t words = (n + 63) / 64;
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = aug[i][dim + j];
    Ray ray{primitive(clear_denominators(col)), Bits(words, 0)};
    for (std::size_t b = 0; b < dim; ++b)
      if (b != j) set_bit(ray.zero, basis[b]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(n, false);
  for (auto b : basis) in_basis[b] = true;

  for (std::size_t c = 0; c < n; ++c) {
    if (in_basis[c]) continue;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(rays[r].normal, w[c]);
      const int s = sgn(value[r]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(r);
    }
    if (neg.empty()) {
      for (auto r : zer) set_bit(rays[r].zero, c);
      continue;
    }
    std::vector<Ray> next;
    next.reserve(pos.size() + zer.size());
    for (auto r : pos) next.push_back(rays[r]);
    for (auto r : zer) {
      next.push_back(rays[r]);
      set_bit(next.back().zero, c);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = intersect_bits(rays[p].zero, rays[q].zero);
        if (popcount_bits(common) + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (subset_bits(common, rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector combo(dim);
        for (std::size_t j = 0; j < dim; ++j) combo[j] = value[p] * rays[q].normal[j] - value[q] * rays[p].normal[j];
        set_bit(common, c);
        next.push_back(Ray{primitive(std::move(combo)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  HullData out;
  out.dim = static_cast<int>(k);
  std::vector<std::vector<std::size_t>> facets_of_point(n);
  for (std::size_t r = 0; r < rays.size(); ++r) {
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < n; ++i)
      if (bit(rays[r].zero, i)) {
        incident.push_back(i);
        facets_of_point[i].push_back(r);
      }
    out.facets.push_back(std::move(incident));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (facets_of_point[i].size() < k) continue;
    std::vector<RatVector> normals;
    for (auto r : facets_of_point[i]) normals.push_back(to_rat_vector(rays[r].normal));
    if (rational_rank(normals, dim) == k) out.vertices.push_back(i);
  }
  return out;
}

// Hull of arbitrary distinct points: projects onto coordinates that are
// injective on the affine span and runs the full-dimensional routine there.
HullData hull_data(const std::vector<RatVector>& pts) {
  HullData out;
  if (pts.empty()) return out;
  if (pts.size() == 1) {
    out.dim = 0;
    out.vertices = {0};
    return out;
  }
  const std::size_t ambient = pts[0].size();
  std::vector<RatVector> diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVector d(ambient);
    for (std::size_t j = 0; j < ambient; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  const auto pivots = rational_pivots(diffs, ambient);
  if (pivots.empty()) {
    out.dim = 0;
    out.vertices = {0};
    return out;
  }
  std::vector<RatVector> projected(pts.size(), RatVector(pivots.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pivots.size(); ++j) projected[i][j] = pts[i][pivots[j]];
  return full_dimensional_hull(projected, pivots.size());
}

std::vector<RatVector> unique_sorted(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void triangulate_into(const std::vector<RatVector>& pts, std::vector<std::vector<RatVector>>& out) {
  const HullData hull = hull_data(pts);
  if (hull.dim < 0) return;
  if (hull.dim == 0) {
    out.push_back({pts[hull.vertices.front()]});
    return;
  }
  // pts are sorted, so the smallest vertex index is the lexicographic minimum.
  const std::size_t apex = *std::min_element(hull.vertices.begin(), hull.vertices.end());
  for (const auto& facet : hull.facets) {
    if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
    std::vector<RatVector> face;
    face.reserve(facet.size());
    for (auto i : facet) face.push_back(pts[i]);
    std::vector<std::vector<RatVector>> sub;
    triangulate_into(face, sub);
    for (auto& simplex : sub) {
      simplex.insert(simplex.begin(), pts[apex]);
      out.push_back(std::move(simplex));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

IntegerLattice::IntegerLattice(std::size_t ambient_dim, const std::vector<IntVector>& generators)
    : ambient_dim_(ambient_dim) {
  for (const auto& g : generators)
    if (g.size() != ambient_dim) throw std::invalid_argument("lattice generator has wrong dimension");
  basis_ = hermite_rows(generators, ambient_dim);
}

IntegerLattice IntegerLattice::standard(std::size_t dim) {
  std::vector<IntVector> e(dim, IntVector(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) e[i][i] = 1;
  return IntegerLattice(dim, e);
}

std::optional<IntVector> IntegerLattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector has wrong dimension");
  IntVector rest = v;
  IntVector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivot_column(basis_[i]);
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_[i][p].get_mpz_t())) return std::nullopt;
    coords[i] = rest[p] / basis_[i][p];
    axpy_row(rest, coords[i], basis_[i]);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

std::optional<RatVector> IntegerLattice::rational_coordinates(const RatVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector has wrong dimension");
  RatVector rest = v;
  RatVector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivot_column(basis_[i]);
    coords[i] = rest[p] / Rational(basis_[i][p]);
    for (std::size_t j = 0; j < ambient_dim_; ++j) rest[j] -= coords[i] * basis_[i][j];
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

IntegerLattice hermite_basis(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("hermite_basis: empty input needs an explicit dimension");
  return IntegerLattice(vectors.front().size(), vectors);
}

IntegerLattice hermite_basis(std::size_t ambient_dim, const std::vector<IntVector>& vectors) {
  return IntegerLattice(ambient_dim, vectors);
}

Integer sublattice_index(const IntegerLattice& sup, const IntegerLattice& sub) {
  if (sup.ambient_dim() != sub.ambient_dim()) throw std::invalid_argument("lattices live in different dimensions");
  if (sup.rank() != sub.rank()) throw std::domain_error("infinite index");
  std::vector<IntVector> coords;
  coords.reserve(sub.rank());
  for (const auto& b : sub.basis()) {
    auto c = sup.coordinates(b);
    if (!c) throw std::domain_error("not a sublattice");
    coords.push_back(std::move(*c));
  }
  // |det| of the coordinate matrix equals the product of its Hermite pivots.
  const auto h = hermite_rows(coords, sup.rank());
  Integer index = 1;
  for (std::size_t i = 0; i < h.size(); ++i) index *= h[i][i];
  return index;
}

IntegerLattice integer_kernel(std::size_t n, const std::vector<IntVector>& rows) {
  const std::size_t r = rows.size();
  std::vector<IntVector> m(n, IntVector(r + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != n) throw std::invalid_argument("kernel: row has wrong dimension");
      m[j][i] = rows[i][j];
    }
    m[j][r + j] = 1;
  }
  const std::size_t rank = echelonize(m, r);
  std::vector<IntVector> kernel;
  for (std::size_t j = rank; j < n; ++j) kernel.emplace_back(m[j].begin() + static_cast<std::ptrdiff_t>(r), m[j].end());
  return IntegerLattice(n, kernel);
}

IntegerLattice saturation(const IntegerLattice& lattice) {
  const std::size_t n = lattice.ambient_dim();
  if (lattice.rank() == 0) return IntegerLattice::zero(n);
  const IntegerLattice perp = integer_kernel(n, lattice.basis());
  if (perp.rank() == 0) return IntegerLattice::standard(n);
  return integer_kernel(n, perp.basis());
}

int affine_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  const std::size_t ambient = points[0].size();
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(ambient);
    for (std::size_t j = 0; j < ambient; ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rational_rank(diffs, ambient));
}

RationalPolytope convex_hull(std::size_t ambient_dim, const std::vector<RatVector>& points) {
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw std::invalid_argument("convex_hull: points have mixed dimensions");
  RationalPolytope out;
  out.ambient_dim_ = ambient_dim;
  const auto pts = unique_sorted(points);
  const HullData hull = hull_data(pts);
  out.affine_dim_ = hull.dim;
  for (auto i : hull.vertices) out.vertices_.push_back(pts[i]);
  std::sort(out.vertices_.begin(), out.vertices_.end(), lex_less);
  return out;
}

RationalPolytope convex_hull(const std::vector<RatVector>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point list needs an explicit dimension");
  return convex_hull(points.front().size(), points);
}

bool contains(const RationalPolytope& polytope, const RatVector& point) {
  if (polytope.empty()) return false;
  auto pts = polytope.vertices();
  pts.push_back(point);
  const RationalPolytope grown = convex_hull(polytope.ambient_dim(), pts);
  return grown.affine_dim() == polytope.affine_dim() && grown.vertices() == polytope.vertices();
}

std::vector<std::vector<RatVector>> fan_triangulation(const RationalPolytope& polytope) {
  std::vector<std::vector<RatVector>> out;
  triangulate_into(polytope.vertices(), out);
  return out;
}

Rational euclidean_volume(const RationalPolytope& polytope) {
  const int k = polytope.affine_dim();
  if (k < 0) return 0;
  if (static_cast<std::size_t>(k) < polytope.ambient_dim()) return 0;
  if (k == 0) return 1;
  Rational total = 0;
  for (const auto& simplex : fan_triangulation(polytope)) {
    std::vector<RatVector> m;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      RatVector row(static_cast<std::size_t>(k));
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = simplex[i][j] - simplex[0][j];
      m.push_back(std::move(row));
    }
    total += abs_value(determinant(std::move(m)));
  }
  return total / Rational(factorial(k));
}

Rational lattice_volume(const RationalPolytope& polytope, const IntegerLattice& lattice) {
  if (polytope.empty()) return 0;
  if (polytope.ambient_dim() != lattice.ambient_dim())
    throw std::invalid_argument("lattice_volume: polytope and lattice live in different dimensions");
  const auto& verts = polytope.vertices();
  std::vector<RatVector> coords;
  coords.reserve(verts.size());
  for (const auto& v : verts) {
    RatVector d(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) d[j] = v[j] - verts[0][j];
    auto c = lattice.rational_coordinates(d);
    if (!c) throw std::domain_error("lattice_volume: affine span of the polytope is not parallel to the lattice span");
    coords.push_back(std::move(*c));
  }
  if (static_cast<std::size_t>(polytope.affine_dim()) < lattice.rank()) return 0;
  if (lattice.rank() == 0) return 1;
  return euclidean_volume(convex_hull(lattice.rank(), coords));
}

}  // namespace asymult
