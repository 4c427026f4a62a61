#include "asymult/series.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace asymult {

void WeightedAmbient::validate() const {
  if (weights.empty() || weights.front() != 1) throw std::invalid_argument("ambient weights must start with deg z0 = 1");
  for (auto w : weights)
    if (w < 1) throw std::invalid_argument("ambient weights must be positive");
  if (nil_degree < 0) throw std::invalid_argument("nilpotent degree must be nonnegative");
  if (nil_degree > 0 && nil_order < 2) throw std::invalid_argument("nilpotency order must be at least 2");
  if (!killing.empty() && killing.size() != weights.size())
    throw std::invalid_argument("killing flags must match the number of variables");
}

Integer count_weighted_monomials(const std::vector<std::int64_t>& weights, std::int64_t degree) {
  if (degree < 0) return 0;
  std::vector<Integer> ways(static_cast<std::size_t>(degree) + 1, 0);
  ways[0] = 1;
  for (auto w : weights) {
    if (w < 1) throw std::invalid_argument("weights must be positive");
    for (std::int64_t t = w; t <= degree; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - w)];
  }
  return ways.back();
}

std::vector<Exponent> weighted_monomials(const std::vector<std::int64_t>& weights, std::int64_t degree) {
  std::vector<Exponent> out;
  if (degree < 0 || weights.empty()) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent a(weights.size(), 0);
  auto walk = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == weights.size()) {
      if (left % weights[i] == 0) {
        a[i] = left / weights[i];
        out.push_back(a);
      }
      return;
    }
    for (std::int64_t v = 0; v * weights[i] <= left; ++v) {
      a[i] = v;
      self(self, i + 1, left - v * weights[i]);
    }
    a[i] = 0;
  };
  walk(walk, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// floor(e^k) for k = 0..kMaxExp, from rational Taylor bounds.
constexpr std::int64_t kMaxExp = 46;

const std::vector<Integer>& exp_floor_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> out;
    for (std::int64_t k = 0; k <= kMaxExp; ++k) {
      if (k == 0) {
        out.emplace_back(1);
        continue;
      }
      Rational sum = 0, term = 1;
      for (std::int64_t i = 0;; ++i) {
        if (i > 0) term = term * k / i;
        sum += term;
        // Remainder after index i is below next_term / (1 - k / (i + 2)) <= 2 * next_term once i + 2 >= 2k.
        const Rational next_term = term * k / (i + 1);
        if (i + 2 < 2 * k) continue;
        const Rational upper = sum + 2 * next_term;
        Integer lo, hi;
        mpz_fdiv_q(lo.get_mpz_t(), sum.get_num_mpz_t(), sum.get_den_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), upper.get_num_mpz_t(), upper.get_den_mpz_t());
        if (lo == hi) {
          out.push_back(lo);
          break;
        }
      }
    }
    return out;
  }();
  return table;
}

std::int64_t smallest_exponent_covering(std::int64_t n, std::int64_t step) {
  if (n < 1) throw std::invalid_argument("logarithm of a nonpositive integer");
  const auto& table = exp_floor_table();
  const Integer target(static_cast<long>(n));
  for (std::int64_t k = 0; k * step <= kMaxExp; ++k)
    if (target <= table[static_cast<std::size_t>(k * step)]) return k;
  throw std::out_of_range("logarithm table exhausted");
}

}  // namespace

std::int64_t ceil_log(std::int64_t n) { return smallest_exponent_covering(n, 1); }
std::int64_t ceil_half_log(std::int64_t n) { return smallest_exponent_covering(n, 2); }

TSet TSet::residues(std::int64_t modulus, std::set<std::int64_t> classes) {
  if (modulus < 1 || classes.empty()) throw std::invalid_argument("residue set needs a positive modulus and a class");
  std::set<std::int64_t> norm;
  for (auto c : classes) norm.insert(((c % modulus) + modulus) % modulus);
  TSet t;
  t.member_ = [modulus, norm](std::int64_t n) { return n >= 1 && norm.count(n % modulus) > 0; };
  t.label_ = "residue:" + std::to_string(modulus) + ":";
  std::int64_t g = modulus;
  bool first = true;
  for (auto c : norm) {
    t.label_ += (first ? "" : ",") + std::to_string(c);
    first = false;
    g = gcd64(g, c == 0 ? modulus : c);
  }
  t.gcd_ = g;
  return t;
}

TSet TSet::explicit_set(std::set<std::int64_t> members) {
  for (auto m : members)
    if (m < 1) throw std::invalid_argument("T sets contain positive integers only");
  TSet t;
  t.label_ = "explicit:";
  std::int64_t g = 0;
  bool first = true;
  for (auto m : members) {
    t.label_ += (first ? "" : ",") + std::to_string(m);
    first = false;
    g = gcd64(g, m);
  }
  if (g > 0) t.gcd_ = g;
  t.member_ = [members = std::move(members)](std::int64_t n) { return members.count(n) > 0; };
  return t;
}

TSet TSet::predicate(std::function<bool(std::int64_t)> member, std::string label) {
  TSet t;
  t.member_ = std::move(member);
  t.label_ = std::move(label);
  return t;
}

bool TSet::contains(std::int64_t n) const { return member_(n); }
std::optional<std::int64_t> TSet::known_gcd() const { return gcd_; }

std::string to_string(const Kappa& k) { return k.value ? std::to_string(*k.value) : "-inf"; }

struct MonomialLinearSeries::Cache {
  std::mutex mutex;
  std::map<std::int64_t, std::vector<SeriesBlock>> levels;
};

MonomialLinearSeries::MonomialLinearSeries(Info info, Provider provider)
    : info_(std::move(info)), provider_(std::move(provider)), cache_(std::make_shared<Cache>()) {
  info_.ambient.validate();
  if (info_.twist < 1) throw std::invalid_argument("twist must be positive");
}

namespace {

std::int64_t z_degree(const std::vector<std::int64_t>& w, const Exponent& a) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += w[i] * a[i];
  return d;
}

std::vector<std::int64_t> head(const std::vector<std::int64_t>& w, std::size_t k) {
  return std::vector<std::int64_t>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
}

Integer block_size(const SeriesBlock& b, const WeightedAmbient& amb) {
  if (b.free_vars == 0) return 1;
  return count_weighted_monomials(head(amb.weights, b.free_vars), b.free_degree);
}

void validate_block(const SeriesBlock& b, const WeightedAmbient& amb, std::int64_t degree) {
  const auto fail = [](const std::string& why) { throw std::logic_error("invalid series block: " + why); };
  if (b.prefix.size() != amb.num_z()) fail("prefix has wrong length");
  for (auto e : b.prefix)
    if (e < 0) fail("negative exponent");
  if (b.free_vars > amb.num_z()) fail("too many free variables");
  if (b.free_vars == 0 && b.free_degree != 0) fail("single monomial with free degree");
  if (b.free_degree < 0) fail("negative free degree");
  if (b.nil < 0 || (b.nil > 0 && (amb.nil_degree == 0 || b.nil >= amb.nil_order))) fail("bad nilpotent exponent");
  if (z_degree(amb.weights, b.prefix) + b.free_degree + b.nil * amb.nil_degree != degree) fail("degree mismatch");
  if (b.nil > 0)
    for (std::size_t i = 0; i < amb.num_z(); ++i)
      if (amb.kills(i) && (b.prefix[i] > 0 || (i < b.free_vars && amb.weights[i] <= b.free_degree)))
        fail("nilpotent monomial meets a killing variable");
}

bool block_contains(const SeriesBlock& b, const WeightedAmbient& amb, const SeriesMonomial& m) {
  if (b.nil != m.nil) return false;
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < m.z.size(); ++i) {
    const auto d = m.z[i] - b.prefix[i];
    if (d < 0) return false;
    if (i >= b.free_vars && d != 0) return false;
    deg += amb.weights[i] * d;
  }
  return deg == b.free_degree;
}

std::vector<SeriesMonomial> block_monomials(const SeriesBlock& b, const WeightedAmbient& amb) {
  std::vector<SeriesMonomial> out;
  if (b.free_vars == 0) {
    out.push_back({b.nil, b.prefix});
    return out;
  }
  for (const auto& free : weighted_monomials(head(amb.weights, b.free_vars), b.free_degree)) {
    SeriesMonomial m{b.nil, b.prefix};
    for (std::size_t i = 0; i < free.size(); ++i) m.z[i] += free[i];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<SeriesBlock> MonomialLinearSeries::level(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("series level index must be nonnegative");
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->levels.find(n); it != cache_->levels.end()) return it->second;
  }
  std::vector<SeriesBlock> blocks;
  if (n == 0) {
    blocks.push_back({0, Exponent(info_.ambient.num_z(), 0), 0, 0});
  } else {
    blocks = provider_(n);
    for (const auto& b : blocks) validate_block(b, info_.ambient, info_.twist * n);
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [&](const SeriesBlock& b) { return block_size(b, info_.ambient) == 0; }),
                 blocks.end());
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->levels.emplace(n, std::move(blocks)).first->second;
}

Integer MonomialLinearSeries::dim(std::int64_t n) const {
  Integer total = 0;
  for (const auto& b : level(n)) total += block_size(b, info_.ambient);
  return total;
}

bool MonomialLinearSeries::contains(std::int64_t n, const SeriesMonomial& m) const {
  const auto blocks = level(n);
  return std::any_of(blocks.begin(), blocks.end(),
                     [&](const SeriesBlock& b) { return block_contains(b, info_.ambient, m); });
}

std::vector<SeriesMonomial> MonomialLinearSeries::monomials(std::int64_t n) const {
  std::vector<SeriesMonomial> out;
  for (const auto& b : level(n)) {
    auto part = block_monomials(b, info_.ambient);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> dims(const MonomialLinearSeries& l, std::int64_t horizon) {
  std::vector<Integer> out;
  for (std::int64_t n = 0; n <= horizon; ++n) out.push_back(l.dim(n));
  return out;
}

SeriesInvariants kodaira_iitaka(const MonomialLinearSeries& l, std::int64_t horizon) {
  const auto& amb = l.ambient();
  const std::size_t width = amb.num_z() + 1;
  // Rational row echelon form of the witnesses seen so far.
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
  SeriesInvariants inv;
  inv.horizon = horizon;
  auto insert = [&](RatVector v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      const Rational f = v[pivots[r]] / rows[r][pivots[r]];
      for (std::size_t c = 0; c < width; ++c) v[c] -= f * rows[r][c];
    }
    for (std::size_t c = 0; c < width; ++c)
      if (v[c] != 0) {
        rows.push_back(std::move(v));
        pivots.push_back(c);
        return true;
      }
    return false;
  };
  for (std::int64_t n = 1; n <= horizon; ++n) {
    for (const auto& b : l.level(n)) {
      if (b.nil != 0) continue;
      std::vector<Exponent> witnesses;
      if (b.free_vars == 0) {
        witnesses.push_back(b.prefix);
      } else {
        Exponent base = b.prefix;
        base[0] += b.free_degree;
        witnesses.push_back(base);
        for (std::size_t i = 1; i < b.free_vars; ++i) {
          if (amb.weights[i] > b.free_degree) continue;
          Exponent w = b.prefix;
          w[0] += b.free_degree - amb.weights[i];
          w[i] += 1;
          witnesses.push_back(std::move(w));
        }
      }
      for (const auto& w : witnesses) {
        RatVector v;
        for (auto x : w) v.emplace_back(static_cast<long>(x));
        v.emplace_back(static_cast<long>(n));
        if (insert(std::move(v))) inv.last_growth = n;
      }
    }
  }
  if (!rows.empty()) inv.kappa.value = static_cast<std::int64_t>(rows.size()) - 1;
  inv.horizon_dependent = inv.last_growth > horizon - horizon / 4;
  return inv;
}

std::int64_t index_estimate(const MonomialLinearSeries& l, std::int64_t horizon) {
  std::int64_t g = 0;
  for (std::int64_t n = 1; n <= horizon; ++n)
    if (l.dim(n) != 0) g = gcd64(g, n);
  if (g == 0) throw std::domain_error("all levels vanish up to the horizon");
  return g;
}

namespace {

// Largest value <= t that is a nonnegative combination of the weights.
std::int64_t max_reachable(const std::vector<std::int64_t>& weights, std::int64_t t) {
  std::vector<char> reach(static_cast<std::size_t>(t) + 1, 0);
  reach[0] = 1;
  for (auto w : weights)
    for (std::int64_t v = w; v <= t; ++v)
      if (reach[static_cast<std::size_t>(v - w)]) reach[static_cast<std::size_t>(v)] = 1;
  for (std::int64_t v = t; v > 0; --v)
    if (reach[static_cast<std::size_t>(v)]) return v;
  return 0;
}

std::int64_t min_z0(const SeriesBlock& b, const WeightedAmbient& amb) {
  if (b.free_vars == 0) return 0;
  const std::vector<std::int64_t> rest(amb.weights.begin() + 1,
                                       amb.weights.begin() + static_cast<std::ptrdiff_t>(b.free_vars));
  return b.free_degree - max_reachable(rest, b.free_degree);
}

bool may_be_positive(const SeriesBlock& b, const WeightedAmbient& amb, std::size_t i) {
  if (b.prefix[i] > 0) return true;
  return i < b.free_vars && amb.weights[i] <= b.free_degree && b.free_degree > 0;
}

bool free_may_be_positive(const SeriesBlock& b, const WeightedAmbient& amb, std::size_t i) {
  return i < b.free_vars && amb.weights[i] <= b.free_degree && b.free_degree > 0;
}

// Whether every product of a monomial in x with a monomial in y lies in c.
bool product_inside(const SeriesBlock& x, const SeriesBlock& y, const SeriesBlock& c, const WeightedAmbient& amb) {
  if (c.nil != x.nil + y.nil) return false;
  for (std::size_t i = 0; i < amb.num_z(); ++i) {
    const auto diff = x.prefix[i] + y.prefix[i] - c.prefix[i];
    if (i >= c.free_vars) {
      if (diff != 0 || free_may_be_positive(x, amb, i) || free_may_be_positive(y, amb, i)) return false;
    } else if (i == 0) {
      if (diff + min_z0(x, amb) + min_z0(y, amb) < 0) return false;
    } else if (diff < 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(const SeriesMonomial& m, const WeightedAmbient&) {
  std::string out;
  auto add = [&](const std::string& var, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  add("x", m.nil);
  for (std::size_t i = 0; i < m.z.size(); ++i) add("z" + std::to_string(i), m.z[i]);
  return out.empty() ? "1" : out;
}

SeriesClosureReport check_closure(const MonomialLinearSeries& l, std::int64_t horizon) {
  const auto& amb = l.ambient();
  SeriesClosureReport report;
  report.horizon = horizon;
  auto record = [&](std::int64_t a, std::int64_t b, const SeriesMonomial& w) {
    ++report.violation_count;
    if (report.violations.size() < 20) report.violations.push_back({a, b, to_string(w, amb)});
  };
  for (std::int64_t total = 2; total <= horizon; ++total) {
    const auto target = l.level(total);
    for (std::int64_t a = 1; 2 * a <= total; ++a) {
      const std::int64_t b = total - a;
      bool failed = false;
      for (const auto& x : l.level(a)) {
        for (const auto& y : l.level(b)) {
          const auto nil = x.nil + y.nil;
          if (nil > 0 && nil >= amb.nil_order) continue;
          bool killed_possible = false;
          if (nil > 0)
            for (std::size_t i = 0; i < amb.num_z(); ++i)
              if (amb.kills(i) && (may_be_positive(x, amb, i) || may_be_positive(y, amb, i))) killed_possible = true;
          if (!killed_possible && std::any_of(target.begin(), target.end(), [&](const SeriesBlock& c) {
                return product_inside(x, y, c, amb);
              }))
            continue;
          // Slow path: multiply out and test each nonzero product.
          for (const auto& u : block_monomials(x, amb)) {
            for (const auto& v : block_monomials(y, amb)) {
              SeriesMonomial p{nil, u.z};
              bool zero = false;
              for (std::size_t i = 0; i < p.z.size(); ++i) {
                p.z[i] += v.z[i];
                if (nil > 0 && amb.kills(i) && p.z[i] > 0) zero = true;
              }
              if (zero) continue;
              if (!std::any_of(target.begin(), target.end(),
                               [&](const SeriesBlock& c) { return block_contains(c, amb, p); })) {
                record(a, b, p);
                failed = true;
                break;
              }
            }
            if (failed) break;
          }
          if (failed) break;
        }
        if (failed) break;
      }
    }
  }
  return report;
}

MonomialLinearSeries full_series(const std::vector<std::int64_t>& weights, std::int64_t twist) {
  MonomialLinearSeries::Info info;
  info.name = "full";
  info.ambient.weights = weights;
  info.twist = twist;
  info.known_kappa = Kappa{static_cast<std::int64_t>(weights.size()) - 1};
  const auto r = weights.size();
  return MonomialLinearSeries(info, [r, twist](std::int64_t n) {
    return std::vector<SeriesBlock>{{0, Exponent(r, 0), r, twist * n}};
  });
}

MonomialLinearSeries example2_series(const TSet& t) {
  MonomialLinearSeries::Info info;
  info.name = "example2(" + t.label() + ")";
  info.ambient.weights = {1, 1};
  info.ambient.nil_degree = 1;
  info.twist = 2;
  info.known_index = t.known_gcd();
  info.known_kappa = Kappa{};
  return MonomialLinearSeries(info, [t](std::int64_t n) {
    std::vector<SeriesBlock> out;
    if (t.contains(n)) out.push_back({1, {n - 1, 0}, 2, n});
    return out;
  });
}

MonomialLinearSeries theorem21_series(const TSet& t) {
  MonomialLinearSeries::Info info;
  info.name = "theorem21(" + t.label() + ")";
  info.ambient.weights = {1, 1};
  info.ambient.nil_degree = 1;
  info.twist = 1;
  info.known_kappa = Kappa{};
  return MonomialLinearSeries(info, [t](std::int64_t n) {
    const auto lambda = t.contains(n) ? ceil_log(n) : ceil_half_log(n);
    std::vector<SeriesBlock> out;
    for (std::int64_t j = 0; j < lambda; ++j) out.push_back({1, {n - 1 - j, j}, 0, 0});
    return out;
  });
}

namespace {

std::int64_t construction_lcm(const ThmN1Params& p) {
  std::int64_t f = p.e;
  for (auto w : p.weights) f = lcm64(f, w);
  return f;
}

MonomialLinearSeries build_thmN1(const ThmN1Params& p, bool allow_large_s, const std::string& label) {
  if (p.weights.empty() || p.weights.front() != 1) throw std::invalid_argument("weights must start with deg z0 = 1");
  if (p.e < 1) throw std::invalid_argument("nilpotent degree must be positive");
  if (p.r < 0) throw std::invalid_argument("r must be nonnegative");
  if (static_cast<std::size_t>(p.r) + 1 > p.weights.size()) throw std::invalid_argument("r exceeds the number of variables");
  if (p.s) {
    if (*p.s < 0) throw std::invalid_argument("s must be nonnegative or -inf");
    if (static_cast<std::size_t>(*p.s) + 1 > p.weights.size())
      throw std::invalid_argument("s exceeds the number of variables");
    if (!allow_large_s && *p.s > p.r) throw std::invalid_argument("s must not exceed r");
  }
  MonomialLinearSeries::Info info;
  info.name = label + "(s=" + (p.s ? std::to_string(*p.s) : std::string("-inf")) + ",r=" + std::to_string(p.r) + ")";
  info.ambient.nil_degree = p.e;
  info.known_kappa = Kappa{p.s};
  const auto schedule = p.schedule;
  const auto s = p.s;

  if (p.r == 0) {
    // z0 and h (deg h = e, h x = 0).
    info.ambient.weights = {1, p.e};
    info.ambient.killing = {false, true};
    info.twist = p.e;
    const auto e = p.e;
    return MonomialLinearSeries(info, [s, e, schedule](std::int64_t n) {
      std::vector<SeriesBlock> out;
      if (s) out.push_back({0, {0, n}, 0, 0});
      if (schedule.tau(n) == 1) out.push_back({1, {n * e - e, 0}, 0, 0});
      return out;
    });
  }

  info.ambient.weights = p.weights;
  if (p.s && *p.s > p.r) {
    info.ambient.killing.assign(p.weights.size(), false);
    for (auto i = p.r + 1; i <= *p.s; ++i) info.ambient.killing[static_cast<std::size_t>(i)] = true;
  }
  const auto f = construction_lcm(p);
  info.twist = 2 * f;
  const auto nz = p.weights.size();
  const auto r = static_cast<std::size_t>(p.r);
  const auto e = p.e;
  return MonomialLinearSeries(info, [s, r, e, f, nz, schedule](std::int64_t n) {
    std::vector<SeriesBlock> out;
    if (s) {
      Exponent pre(nz, 0);
      pre[0] = n * f;
      out.push_back({0, pre, static_cast<std::size_t>(*s) + 1, n * f});
    }
    const auto sigma = schedule.sigma(n);
    const auto lead = (n - sigma) * f - e;
    if (lead >= 0) {
      Exponent pre(nz, 0);
      pre[0] = lead;
      out.push_back({1, pre, r + 1, (n + sigma) * f});
    }
    return out;
  });
}

}  // namespace

MonomialLinearSeries thmN1_series(const ThmN1Params& p) { return build_thmN1(p, false, "thmN1"); }

MonomialLinearSeries theorem8_series(const ThmN1Params& p) {
  if (p.r < 1) throw std::invalid_argument("theorem8_series needs r >= 1");
  return build_thmN1(p, true, "theorem8");
}

Integer thmN1_expected_dim(const ThmN1Params& p, std::int64_t n) {
  if (p.r == 0) return Integer(p.s ? 1 : 0) + Integer(static_cast<long>(p.schedule.tau(n)));
  const auto f = construction_lcm(p);
  auto q = [&](std::int64_t alpha, std::int64_t m) { return count_weighted_monomials(head(p.weights, alpha + 1), m * f); };
  Integer total = p.s ? q(*p.s, n) : Integer(0);
  const auto sigma = p.schedule.sigma(n);
  if ((n - sigma) * f - p.e >= 0) total += q(p.r, n + sigma);
  return total;
}

MonomialLinearSeries artin_series(std::int64_t t, const BlockSchedule& schedule) {
  if (t < 1) throw std::invalid_argument("the Artin series needs t >= 1");
  MonomialLinearSeries::Info info;
  info.name = "artin(t=" + std::to_string(t) + ")";
  info.ambient.weights = {1};
  info.ambient.nil_degree = 1;
  info.ambient.nil_order = t + 1;
  info.twist = t + 1;
  info.known_kappa = Kappa{};
  return MonomialLinearSeries(info, [t, schedule](std::int64_t n) {
    std::vector<SeriesBlock> out;
    for (std::int64_t k = t + schedule.tau(n); k <= t; ++k) out.push_back({k, {n * (t + 1) - k}, 0, 0});
    return out;
  });
}

MonomialLinearSeries veronese(const MonomialLinearSeries& l, std::int64_t e) {
  if (e < 1) throw std::invalid_argument("Veronese degree must be positive");
  auto info = l.info();
  info.name = l.name() + "^(" + std::to_string(e) + ")";
  info.twist = l.twist() * e;
  info.known_index.reset();
  return MonomialLinearSeries(info, [l, e](std::int64_t n) { return l.level(e * n); });
}

SeriesSemigroup series_to_semigroup(const MonomialLinearSeries& l, std::int64_t horizon) {
  SeriesSemigroup out{GradedSemigroup::from_oracle(
                          l.ambient().num_z(),
                          [l](std::int64_t n) {
                            Level level;
                            for (const auto& m : l.monomials(n))
                              if (m.nil == 0) level.push_back(m.z);
                            return level;
                          },
                          l.name()),
                      false, true};
  for (std::int64_t n = 1; n <= horizon; ++n)
    for (const auto& b : l.level(n)) {
      if (b.nil > 0) out.has_nilpotent_part = true;
      if (b.nil == 0) out.fully_nilpotent = false;
    }
  return out;
}

}  // namespace asymult
