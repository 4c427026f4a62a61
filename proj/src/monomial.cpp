#include "asymult/monomial.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asymult {

namespace {

bool divides(const Exponent& g, const Exponent& a) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > a[i]) return false;
  return true;
}

std::int64_t total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

void check_vars(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("ideals live in rings with different numbers of variables");
}

std::vector<Exponent> minimal_2(std::vector<Exponent> gens) {
  std::vector<Exponent> out;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (auto& g : gens)
    if (g[1] < best) {
      best = g[1];
      out.push_back(std::move(g));
    }
  return out;
}

// Sweep in lexicographic order, keeping the (x2, x3) staircase of the kept
// generators: a map x2 -> x3 with x3 strictly decreasing.
std::vector<Exponent> minimal_3(std::vector<Exponent> gens) {
  std::vector<Exponent> out;
  std::map<std::int64_t, std::int64_t> stairs;
  for (auto& g : gens) {
    auto it = stairs.upper_bound(g[1]);
    if (it != stairs.begin() && std::prev(it)->second <= g[2]) continue;
    it = stairs.lower_bound(g[1]);
    while (it != stairs.end() && it->second >= g[2]) it = stairs.erase(it);
    stairs.emplace(g[1], g[2]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Exponent> minimal_general(std::vector<Exponent> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Exponent& x, const Exponent& y) { return total_degree(x) < total_degree(y); });
  std::vector<Exponent> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Colength of an m-primary ideal given by its minimal, lexicographically
// sorted generators, by slicing along the last variable.
std::int64_t colength_rec(const std::vector<Exponent>& gens, std::size_t k) {
  if (k == 1) return gens.front()[0];
  if (k == 2) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) total += (gens[i + 1][0] - gens[i][0]) * gens[i][1];
    return total;
  }
  std::map<std::int64_t, std::vector<Exponent>> buckets;
  for (const auto& g : gens) buckets[g[k - 1]].emplace_back(g.begin(), g.end() - 1);
  std::int64_t total = 0;
  std::vector<Exponent> slice;
  for (auto it = buckets.begin(); it != buckets.end(); ++it) {
    auto next = std::next(it);
    if (next == buckets.end()) break;
    slice.insert(slice.end(), it->second.begin(), it->second.end());
    slice = minimalize(k - 1, std::move(slice));
    total += (next->first - it->first) * colength_rec(slice, k - 1);
  }
  return total;
}

}  // namespace

std::vector<Exponent> minimalize(std::size_t num_vars, std::vector<Exponent> gens) {
  for (const auto& g : gens) {
    if (g.size() != num_vars) throw std::invalid_argument("generator has wrong number of variables");
    for (auto e : g)
      if (e < 0) throw std::invalid_argument("negative exponent in generator");
  }
  if (gens.empty()) return gens;
  if (std::any_of(gens.begin(), gens.end(), [](const Exponent& g) { return total_degree(g) == 0; }))
    return {Exponent(num_vars, 0)};
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  switch (num_vars) {
    case 1:
      gens.resize(1);
      return gens;
    case 2:
      return minimal_2(std::move(gens));
    case 3:
      return minimal_3(std::move(gens));
    default:
      return minimal_general(std::move(gens));
  }
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Exponent> generators)
    : num_vars_(num_vars), generators_(minimalize(num_vars, std::move(generators))) {}

MonomialIdeal MonomialIdeal::unit(std::size_t num_vars) { return MonomialIdeal(num_vars, {Exponent(num_vars, 0)}); }

MonomialIdeal MonomialIdeal::maximal(std::size_t num_vars) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < num_vars; ++i) {
    Exponent e(num_vars, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(num_vars, std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal_power(std::size_t num_vars, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative power");
  MonomialIdeal out;
  out.num_vars_ = num_vars;
  if (num_vars == 0) {
    out.generators_.push_back({});
    return out;
  }
  Exponent e(num_vars, 0);
  auto fill = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == num_vars) {
      e[i] = left;
      out.generators_.push_back(e);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  fill(fill, 0, n);
  return out;
}

bool MonomialIdeal::is_unit() const { return generators_.size() == 1 && total_degree(generators_.front()) == 0; }

bool MonomialIdeal::contains(const Exponent& a) const {
  if (a.size() != num_vars_) throw std::invalid_argument("monomial has wrong number of variables");
  if (num_vars_ == 2) {
    // Minimal generators sorted by x1 ascending have x2 descending: the only
    // candidate is the last generator with x1 <= a1.
    auto it = std::upper_bound(generators_.begin(), generators_.end(), a[0],
                               [](std::int64_t v, const Exponent& g) { return v < g[0]; });
    return it != generators_.begin() && std::prev(it)->at(1) <= a[1];
  }
  return std::any_of(generators_.begin(), generators_.end(), [&](const Exponent& g) { return divides(g, a); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_vars(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_vars(a, b);
  std::vector<Exponent> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) {
      Exponent e(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) e[i] = g[i] + h[i];
      gens.push_back(std::move(e));
    }
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative power");
  MonomialIdeal result = MonomialIdeal::unit(a.num_vars());
  MonomialIdeal base = a;
  while (n > 0) {
    if (n & 1) result = product(result, base);
    n >>= 1;
    if (n > 0) base = product(base, base);
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_vars(a, b);
  std::vector<Exponent> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) {
      Exponent e(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) e[i] = std::max(g[i], h[i]);
      gens.push_back(std::move(e));
    }
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Exponent& u) {
  if (u.size() != a.num_vars()) throw std::invalid_argument("monomial has wrong number of variables");
  std::vector<Exponent> gens;
  for (const auto& g : a.generators()) {
    Exponent e(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) e[i] = std::max<std::int64_t>(g[i] - u[i], 0);
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_vars(a, b);
  MonomialIdeal result = MonomialIdeal::unit(a.num_vars());
  for (const auto& u : b.generators()) result = intersect(result, colon(a, u));
  return result;
}

MonomialIdeal saturate_by(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_vars(i, j);
  // I : u^infinity is generated by the generators of I with the variables
  // dividing u deleted; I : J^infinity is the intersection over J's generators.
  MonomialIdeal result = MonomialIdeal::unit(i.num_vars());
  for (const auto& u : j.generators()) {
    std::vector<Exponent> gens = i.generators();
    for (auto& g : gens)
      for (std::size_t k = 0; k < g.size(); ++k)
        if (u[k] > 0) g[k] = 0;
    result = intersect(result, MonomialIdeal(i.num_vars(), std::move(gens)));
  }
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& i) { return saturate_by(i, MonomialIdeal::maximal(i.num_vars())); }

MonomialIdeal symbolic_core(const MonomialIdeal& i, const MonomialIdeal& j, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("symbolic power index must be positive");
  return saturate_by(power(i, n), j);
}

std::optional<Exponent> containment_witness(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  check_vars(inner, outer);
  for (const auto& g : inner.generators())
    if (!outer.contains(g)) return g;
  return std::nullopt;
}

bool is_m_primary(const MonomialIdeal& i) {
  if (i.is_unit()) return true;
  std::vector<bool> axis(i.num_vars(), false);
  for (const auto& g : i.generators()) {
    std::size_t support = 0, where = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k] > 0) {
        ++support;
        where = k;
      }
    if (support == 1) axis[where] = true;
  }
  return i.num_vars() > 0 && std::all_of(axis.begin(), axis.end(), [](bool b) { return b; });
}

Integer colength(const MonomialIdeal& i) {
  if (!is_m_primary(i)) throw std::domain_error("infinite colength");
  if (i.is_unit()) return 0;
  return to_integer(colength_rec(i.generators(), i.num_vars()));
}

Integer relative_length(const MonomialIdeal& j, const MonomialIdeal& i) {
  check_vars(i, j);
  if (!is_subset(i, j)) throw std::invalid_argument("relative length needs the smaller ideal inside the larger one");
  const std::size_t d = i.num_vars();
  // Every monomial of J \ I is g * c with g a generator of J and c outside
  // the m-primary ideal I : g, so a box of side K contains all of them.
  std::int64_t bound = 1;
  for (const auto& g : j.generators()) {
    const auto quotient = colon(i, g);
    if (quotient.is_unit()) continue;
    if (!is_m_primary(quotient)) throw std::domain_error("infinite quotient length");
    for (std::size_t k = 0; k < d; ++k) {
      std::int64_t pure = std::numeric_limits<std::int64_t>::max();
      for (const auto& h : quotient.generators()) {
        bool on_axis = true;
        for (std::size_t l = 0; l < d; ++l)
          if (l != k && h[l] != 0) on_axis = false;
        if (on_axis) pure = std::min(pure, h[k]);
      }
      bound = std::max(bound, g[k] + pure);
    }
  }
  std::vector<Exponent> box;
  for (std::size_t k = 0; k < d; ++k) {
    Exponent e(d, 0);
    e[k] = bound;
    box.push_back(std::move(e));
  }
  const MonomialIdeal p(d, box);
  return colength(sum(i, p)) - colength(sum(j, p));
}

NilPairIdeal::NilPairIdeal(MonomialIdeal base, MonomialIdeal socle) : base_(std::move(base)), socle_(std::move(socle)) {
  check_vars(base_, socle_);
  if (!is_subset(base_, socle_)) throw std::domain_error("nil pair requires the base ideal inside the socle ideal");
}

NilPairIdeal NilPairIdeal::unit(std::size_t num_vars) {
  return NilPairIdeal(MonomialIdeal::unit(num_vars), MonomialIdeal::unit(num_vars));
}

NilPairIdeal NilPairIdeal::maximal(std::size_t num_vars) {
  return NilPairIdeal(MonomialIdeal::maximal(num_vars), MonomialIdeal::unit(num_vars));
}

Integer nilpair_length(const NilPairIdeal& p) { return colength(p.base()) + colength(p.socle()); }

NilPairIdeal nilpair_sum(const NilPairIdeal& a, const NilPairIdeal& b) {
  return NilPairIdeal(sum(a.base(), b.base()), sum(a.socle(), b.socle()));
}

NilPairIdeal nilpair_product(const NilPairIdeal& a, const NilPairIdeal& b) {
  return NilPairIdeal(product(a.base(), b.base()),
                      sum(product(a.base(), b.socle()), product(b.base(), a.socle())));
}

NilPairIdeal nilpair_power(const NilPairIdeal& a, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative power");
  NilPairIdeal result = NilPairIdeal::unit(a.num_vars());
  NilPairIdeal base = a;
  while (n > 0) {
    if (n & 1) result = nilpair_product(result, base);
    n >>= 1;
    if (n > 0) base = nilpair_product(base, base);
  }
  return result;
}

NilPairIdeal nilpair_times_y(const NilPairIdeal& a) {
  return NilPairIdeal(MonomialIdeal::zero(a.num_vars()), a.base());
}

std::optional<NilMonomial> containment_witness(const NilPairIdeal& inner, const NilPairIdeal& outer) {
  if (auto w = containment_witness(inner.base(), outer.base())) return NilMonomial{false, *w};
  if (auto w = containment_witness(inner.socle(), outer.socle())) return NilMonomial{true, *w};
  return std::nullopt;
}

std::string to_string(const NilMonomial& m) {
  const auto body = monomial_string(m.exponent);
  if (!m.nil) return body;
  return body == "1" ? "y" : "y*" + body;
}

NewtonRegion newton_region(const MonomialIdeal& i, std::int64_t clip) {
  if (!is_m_primary(i)) throw std::domain_error("newton region requires an m-primary ideal");
  const std::size_t d = i.num_vars();
  std::int64_t largest = 0;
  for (const auto& g : i.generators())
    for (auto e : g) largest = std::max(largest, e);
  if (clip < 1 || clip < static_cast<std::int64_t>(d) * largest) throw std::domain_error("clip bound too small");
  std::vector<RatVector> points;
  for (const auto& g : i.generators())
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      RatVector p(d);
      for (std::size_t k = 0; k < d; ++k) p[k] = ((mask >> k) & 1) ? clip : g[k];
      points.push_back(std::move(p));
    }
  NewtonRegion region;
  region.ideal = i;
  region.clip_bound = clip;
  region.polytope = convex_hull(d, points);
  Integer box;
  mpz_ui_pow_ui(box.get_mpz_t(), static_cast<unsigned long>(clip), static_cast<unsigned long>(d));
  const Rational inside = region.polytope.affine_dim() == static_cast<int>(d) ? euclidean_volume(region.polytope) : 0;
  region.covolume = Rational(box) - inside;
  return region;
}

Rational multiplicity_oracle(const MonomialIdeal& i) {
  std::int64_t largest = 0;
  for (const auto& g : i.generators())
    for (auto e : g) largest = std::max(largest, e);
  const auto d = static_cast<std::int64_t>(i.num_vars());
  const auto region = newton_region(i, std::max<std::int64_t>(1, d * largest));
  return region.covolume * Rational(factorial(d));
}

std::vector<Rational> multiplicity_limit(const MonomialIdeal& i, std::int64_t k_max) {
  if (!is_m_primary(i)) throw std::domain_error("infinite colength");
  const auto d = static_cast<std::int64_t>(i.num_vars());
  const Rational scale(factorial(d));
  std::vector<Rational> out;
  MonomialIdeal current = MonomialIdeal::unit(i.num_vars());
  for (std::int64_t k = 1; k <= k_max; ++k) {
    current = product(current, i);
    Integer kd;
    mpz_ui_pow_ui(kd.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(d));
    out.push_back(Rational(colength(current)) * scale / Rational(kd));
  }
  return out;
}

MonomialIdeal parse_ideal(const std::string& text, std::optional<std::size_t> num_vars) {
  std::istringstream in(text);
  std::string line;
  std::vector<Exponent> gens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Exponent e;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad exponent '" + tok + "'");
      e.push_back(v);
    }
    if (e.empty()) continue;
    if (!num_vars) num_vars = e.size();
    if (e.size() != *num_vars)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " + std::to_string(*num_vars) +
                                  " exponents");
    gens.push_back(std::move(e));
  }
  if (!num_vars) throw std::invalid_argument("ideal text has no generators and no variable count");
  return MonomialIdeal(*num_vars, std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path, std::optional<std::size_t> num_vars) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_ideal(text, num_vars);
}

std::string format_ideal(const MonomialIdeal& i) {
  std::ostringstream out;
  for (const auto& g : i.generators()) {
    for (std::size_t k = 0; k < g.size(); ++k) out << (k ? " " : "") << g[k];
    out << '\n';
  }
  return out.str();
}

std::string monomial_string(const Exponent& a) {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(k + 1);
    if (a[k] > 1) out += "^" + std::to_string(a[k]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal& i) {
  if (i.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < i.generators().size(); ++k) {
    if (k) out += ", ";
    out += monomial_string(i.generators()[k]);
  }
  return out + ")";
}

}  // namespace asymult
