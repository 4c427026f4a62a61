#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace asymult::oracle {

namespace {

Rational laplace_det(const std::vector<RatVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<RatVector> minor;
    for (std::size_t i = 1; i < n; ++i) {
      RatVector row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// Rank by brute force: largest square minor with nonzero determinant.
std::size_t minor_rank(const std::vector<RatVector>& rows, std::size_t ncols) {
  const std::size_t max_r = std::min(rows.size(), ncols);
  for (std::size_t r = max_r; r > 0; --r) {
    std::vector<std::size_t> ri(rows.size()), ci(ncols);
    std::vector<bool> rsel(rows.size(), false), csel(ncols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(r), true);
      do {
        std::vector<RatVector> sq;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (!rsel[i]) continue;
          RatVector row;
          for (std::size_t c = 0; c < ncols; ++c)
            if (csel[c]) row.push_back(rows[i][c]);
          sq.push_back(std::move(row));
        }
        if (laplace_det(sq) != 0) return r;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

std::vector<RatVector> differences(const std::vector<RatVector>& pts, const std::vector<std::size_t>& idx) {
  std::vector<RatVector> out;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    RatVector d(pts[idx[0]].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[idx[i]][j] - pts[idx[0]][j];
    out.push_back(std::move(d));
  }
  return out;
}

void brute_triangulate(const std::vector<RatVector>& pts, const std::vector<std::size_t>& subset, std::size_t k,
                       std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back({subset[0]});
    return;
  }
  const std::size_t m = pts[0].size();
  // Coordinates on which the affine span projects injectively: first
  // coordinate subset (in combination order) with full rank.
  const auto diffs = differences(pts, subset);
  std::vector<std::size_t> chosen;
  std::vector<bool> sel(m, false);
  std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<RatVector> proj;
    for (const auto& d : diffs) {
      RatVector row;
      for (std::size_t c = 0; c < m; ++c)
        if (sel[c]) row.push_back(d[c]);
      proj.push_back(std::move(row));
    }
    if (minor_rank(proj, k) == k) {
      for (std::size_t c = 0; c < m; ++c)
        if (sel[c]) chosen.push_back(c);
      break;
    }
  } while (std::prev_permutation(sel.begin(), sel.end()));
  if (chosen.size() != k) throw std::logic_error("oracle: wrong affine dimension");

  auto project = [&](std::size_t i) {
    RatVector q;
    for (auto c : chosen) q.push_back(pts[i][c]);
    return q;
  };

  std::set<std::vector<std::size_t>> facets;
  std::vector<bool> pick(subset.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<RatVector> q;
    for (std::size_t i = 0; i < subset.size(); ++i)
      if (pick[i]) q.push_back(project(subset[i]));
    // Normal by cofactors of the (k-1) x k difference matrix.
    std::vector<RatVector> rows;
    for (std::size_t i = 1; i < q.size(); ++i) {
      RatVector d(k);
      for (std::size_t j = 0; j < k; ++j) d[j] = q[i][j] - q[0][j];
      rows.push_back(std::move(d));
    }
    RatVector normal(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<RatVector> minor;
      for (const auto& r : rows) {
        RatVector row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != j) row.push_back(r[c]);
        minor.push_back(std::move(row));
      }
      normal[j] = laplace_det(minor);
      if (j % 2 == 1) normal[j] = -normal[j];
      if (normal[j] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    Rational offset = 0;
    for (std::size_t j = 0; j < k; ++j) offset += normal[j] * q[0][j];
    bool above = false, below = false;
    std::vector<std::size_t> incident;
    for (auto i : subset) {
      const auto p = project(i);
      Rational v = 0;
      for (std::size_t j = 0; j < k; ++j) v += normal[j] * p[j];
      if (v > offset) above = true;
      if (v < offset) below = true;
      if (v == offset) incident.push_back(i);
    }
    if (above && below) continue;
    facets.insert(incident);
  } while (std::prev_permutation(pick.begin(), pick.end()));

  const std::size_t apex = *std::min_element(subset.begin(), subset.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(pts[a].begin(), pts[a].end(), pts[b].begin(), pts[b].end());
  });
  for (const auto& f : facets) {
    if (std::find(f.begin(), f.end(), apex) != f.end()) continue;
    std::vector<std::vector<std::size_t>> sub;
    brute_triangulate(pts, f, k - 1, sub);
    for (auto& s : sub) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

Rational hull_volume(const std::vector<RatVector>& points) {
  std::vector<RatVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t k = pts[0].size();
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = i;
  if (minor_rank(differences(pts, all), k) < k) return 0;
  std::vector<std::vector<std::size_t>> simplices;
  brute_triangulate(pts, all, k, simplices);
  Rational total = 0;
  Rational fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<long>(i);
  for (const auto& s : simplices) {
    std::vector<RatVector> m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      RatVector d(k);
      for (std::size_t j = 0; j < k; ++j) d[j] = pts[s[i]][j] - pts[s[0]][j];
      m.push_back(std::move(d));
    }
    total += abs_value(laplace_det(m));
  }
  return total / fact;
}

std::int64_t box_colength(const std::vector<std::vector<std::int64_t>>& gens, std::size_t num_vars) {
  std::vector<std::int64_t> bound(num_vars, -1);
  for (const auto& g : gens) {
    std::size_t support = 0, where = 0;
    for (std::size_t i = 0; i < num_vars; ++i)
      if (g[i] > 0) {
        ++support;
        where = i;
      }
    if (support == 0) return 0;
    if (support == 1 && (bound[where] < 0 || g[where] < bound[where])) bound[where] = g[where];
  }
  for (auto b : bound)
    if (b < 0) throw std::domain_error("oracle: ideal is not m-primary");
  std::int64_t count = 0;
  std::vector<std::int64_t> a(num_vars, 0);
  while (true) {
    bool member = false;
    for (const auto& g : gens) {
      bool divides = true;
      for (std::size_t i = 0; i < num_vars && divides; ++i) divides = g[i] <= a[i];
      if (divides) {
        member = true;
        break;
      }
    }
    if (!member) ++count;
    std::size_t i = 0;
    while (i < num_vars && ++a[i] == bound[i]) a[i++] = 0;
    if (i == num_vars) break;
  }
  return count;
}

std::int64_t weighted_staircase_count(const Rational& la, const Rational& lb, std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t b = 0; lb * b < n; ++b) {
    const Rational room = (Rational(n) - lb * b) / la;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), room.get_num_mpz_t(), room.get_den_mpz_t());
    count += c.get_si();
  }
  return count;
}

std::vector<std::int64_t> semigroup_level_counts_1d(const std::vector<std::pair<std::int64_t, std::int64_t>>& gens,
                                                    std::int64_t horizon) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::function<void(std::size_t, std::int64_t, std::int64_t)> walk = [&](std::size_t g, std::int64_t pos,
                                                                           std::int64_t deg) {
    if (g == gens.size()) {
      seen.insert({deg, pos});
      return;
    }
    for (std::int64_t c = 0; deg + c * gens[g].second <= horizon; ++c) {
      walk(g + 1, pos + c * gens[g].first, deg + c * gens[g].second);
      if (gens[g].second == 0) break;
    }
  };
  walk(0, 0, 0);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(horizon) + 1, 0);
  for (const auto& [deg, pos] : seen) ++counts[static_cast<std::size_t>(deg)];
  return counts;
}

}  // namespace asymult::oracle
