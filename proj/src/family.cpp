#include "asymult/family.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace asymult {

namespace {

constexpr std::int64_t kMaxBreakpoint = std::int64_t{1} << 60;

void validate_prefix(const std::vector<std::int64_t>& b) {
  if (b.empty()) throw std::invalid_argument("schedule needs at least one breakpoint");
  if (b.front() != 2) throw std::invalid_argument("schedule must start at i_1 = 2");
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] % 2 != 0) throw std::invalid_argument("schedule breakpoints must be even");
    if (j > 0) {
      const auto bound = static_cast<__int128>(b[j - 1]) << j;
      if (static_cast<__int128>(b[j]) <= bound)
        throw std::invalid_argument("schedule breakpoint i_" + std::to_string(j + 1) + " must exceed 2^" +
                                    std::to_string(j) + " * i_" + std::to_string(j));
    }
  }
}

}  // namespace

BlockSchedule::BlockSchedule() : BlockSchedule(std::vector<std::int64_t>{2, 6, 26, 210}) {}

BlockSchedule::BlockSchedule(std::vector<std::int64_t> prefix) : prefix_(std::move(prefix)) {
  validate_prefix(prefix_);
  all_ = prefix_;
  while (true) {
    const auto j = all_.size();
    const auto next = (static_cast<__int128>(all_.back()) << j) + 2;
    if (next > kMaxBreakpoint) break;
    all_.push_back(static_cast<std::int64_t>(next));
  }
}

std::int64_t BlockSchedule::block(std::int64_t n) const {
  return std::upper_bound(all_.begin(), all_.end(), n) - all_.begin();
}

std::int64_t BlockSchedule::sigma(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("sigma of a negative index");
  if (n <= 1) return n;
  const auto j = block(n);
  return all_[static_cast<std::size_t>(j - 1)] / 2;
}

std::int64_t BlockSchedule::tau(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("tau of a negative index");
  return block(n) % 2;
}

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::polynomial:
      return "polynomial";
    case RingKind::nilpair:
      return "nilpair";
    case RingKind::artin:
      return "artin";
  }
  return "unknown";
}

struct GradedFamily::Cache {
  std::mutex mutex;
  std::map<std::int64_t, FamilyLevel> levels;
};

GradedFamily::GradedFamily(Info info, Provider provider)
    : info_(std::move(info)), provider_(std::move(provider)), cache_(std::make_shared<Cache>()) {}

FamilyLevel GradedFamily::level(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("family level index must be nonnegative");
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->levels.find(n); it != cache_->levels.end()) return it->second;
  }
  FamilyLevel value = provider_(n);
  std::lock_guard lock(cache_->mutex);
  return cache_->levels.emplace(n, std::move(value)).first->second;
}

const MonomialIdeal& GradedFamily::monomial_level(std::int64_t n) const {
  if (info_.kind != RingKind::polynomial) throw std::invalid_argument("family " + info_.name + " is not monomial");
  level(n);
  std::lock_guard lock(cache_->mutex);
  return std::get<MonomialIdeal>(cache_->levels.at(n));
}

Integer GradedFamily::length(std::int64_t n) const {
  const auto value = level(n);
  const auto infinite = [&] { return std::domain_error("infinite length at level " + std::to_string(n)); };
  if (const auto* i = std::get_if<MonomialIdeal>(&value)) {
    if (!is_m_primary(*i)) throw infinite();
    return colength(*i);
  }
  if (const auto* p = std::get_if<NilPairIdeal>(&value)) {
    if (!is_m_primary(p->base())) throw infinite();
    return nilpair_length(*p);
  }
  const auto e = std::get<ArtinPower>(value).exponent;
  return to_integer(std::min(e, info_.artin_t + 1));
}

std::int64_t maximal_power_exponent(const MonomialIdeal& i) {
  if (!is_m_primary(i)) throw std::domain_error("ideal is not m-primary");
  for (std::int64_t c = 0;; ++c)
    if (is_subset(MonomialIdeal::maximal_power(i.num_vars(), c), i)) return c;
}

MonomialIdeal valuation_ideal(const RatVector& lambda, std::int64_t n) {
  const std::size_t d = lambda.size();
  if (d == 0) throw std::invalid_argument("valuation needs at least one weight");
  if (n <= 0) return MonomialIdeal::unit(d);
  // Clear denominators: sum w_i a_i >= n * D.
  Integer den = 1;
  for (const auto& l : lambda) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_den_mpz_t());
  std::vector<std::int64_t> w;
  for (const auto& l : lambda) w.push_back(to_int64(Integer(l * Rational(den))));
  const std::int64_t target = n * to_int64(den);

  std::vector<Exponent> gens;
  Exponent a(d, 0);
  auto walk = [&](auto&& self, std::size_t i, std::int64_t reached) -> void {
    if (i + 1 == d) {
      const std::int64_t need = target - reached;
      a[i] = need <= 0 ? 0 : (need + w[i] - 1) / w[i];
      gens.push_back(a);
      a[i] = 0;
      return;
    }
    for (std::int64_t v = 0;; ++v) {
      a[i] = v;
      const std::int64_t now = reached + v * w[i];
      if (now >= target) {
        gens.push_back(a);
        break;
      }
      self(self, i + 1, now);
    }
    a[i] = 0;
  };
  walk(walk, 0, 0);
  return MonomialIdeal(d, std::move(gens));
}

GradedFamily power_family(const MonomialIdeal& i) {
  GradedFamily::Info info;
  info.name = "power" + to_string(i);
  info.kind = RingKind::polynomial;
  info.dim = info.num_vars = i.num_vars();
  info.c = is_m_primary(i) ? maximal_power_exponent(i) : 0;
  return GradedFamily(info, [i](std::int64_t n) -> FamilyLevel { return power(i, n); });
}

GradedFamily valuation_family(const RatVector& lambda) {
  if (lambda.empty()) throw std::invalid_argument("valuation needs at least one weight");
  for (const auto& l : lambda)
    if (l < 1) throw std::invalid_argument("valuation weights must be at least 1");
  GradedFamily::Info info;
  info.name = "valuation(";
  for (std::size_t k = 0; k < lambda.size(); ++k) info.name += (k ? "," : "") + to_string(lambda[k]);
  info.name += ")";
  info.kind = RingKind::polynomial;
  info.dim = info.num_vars = lambda.size();
  info.c = 1;
  info.lambda = lambda;
  return GradedFamily(info, [lambda](std::int64_t n) -> FamilyLevel { return valuation_ideal(lambda, n); });
}

GradedFamily saturation_family(const MonomialIdeal& i) {
  GradedFamily::Info info;
  info.name = "saturation" + to_string(i);
  info.kind = RingKind::polynomial;
  info.dim = info.num_vars = i.num_vars();
  const auto first = saturate(i);
  info.c = is_m_primary(first) ? maximal_power_exponent(first) : 0;
  return GradedFamily(info, [i](std::int64_t n) -> FamilyLevel { return saturate(power(i, n)); });
}

GradedFamily symbolic_family(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.num_vars() != j.num_vars()) throw std::invalid_argument("ideals live in rings with different numbers of variables");
  GradedFamily::Info info;
  info.name = "symbolic" + to_string(i) + ":" + to_string(j);
  info.kind = RingKind::polynomial;
  info.dim = info.num_vars = i.num_vars();
  const auto first = saturate_by(i, j);
  info.c = is_m_primary(first) ? maximal_power_exponent(first) : 0;
  return GradedFamily(info, [i, j](std::int64_t n) -> FamilyLevel {
    if (n == 0) return MonomialIdeal::unit(i.num_vars());
    return symbolic_core(i, j, n);
  });
}

GradedFamily example1_family(std::size_t d, const BlockSchedule& schedule) {
  if (d == 0) throw std::invalid_argument("example1_family needs d >= 1");
  GradedFamily::Info info;
  info.name = "example1(d=" + std::to_string(d) + ")";
  info.kind = RingKind::nilpair;
  info.dim = info.num_vars = d;
  info.c = 1;
  return GradedFamily(info, [d, schedule](std::int64_t n) -> FamilyLevel {
    if (n == 0) return NilPairIdeal::unit(d);
    return NilPairIdeal(MonomialIdeal::maximal_power(d, n), MonomialIdeal::maximal_power(d, n - schedule.sigma(n)));
  });
}

GradedFamily dao_smirnov_family(std::size_t d, const BlockSchedule& schedule) {
  if (d == 0) throw std::invalid_argument("the Dao-Smirnov family needs d >= 1");
  GradedFamily::Info info;
  info.name = "dao_smirnov(d=" + std::to_string(d) + ")";
  info.kind = RingKind::nilpair;
  info.dim = info.num_vars = d;
  info.c = 1;
  return GradedFamily(info, [d, schedule](std::int64_t n) -> FamilyLevel {
    if (n == 0) return NilPairIdeal::unit(d);
    const auto m = NilPairIdeal::maximal(d);
    return nilpair_sum(nilpair_power(m, n), nilpair_times_y(nilpair_power(m, n - schedule.sigma(n))));
  });
}

GradedFamily artin_tau_family(std::int64_t t, const BlockSchedule& schedule) {
  if (t < 1) throw std::invalid_argument("the Artin family needs t >= 1");
  GradedFamily::Info info;
  info.name = "artin_tau(t=" + std::to_string(t) + ")";
  info.kind = RingKind::artin;
  info.dim = 0;
  info.num_vars = 1;
  info.artin_t = t;
  info.c = t + 1;
  return GradedFamily(info, [t, schedule](std::int64_t n) -> FamilyLevel {
    if (n == 0) return ArtinPower{0};
    return ArtinPower{t + schedule.tau(n)};
  });
}

GradedFamily corrupted_family(std::size_t d) {
  GradedFamily::Info info;
  info.name = "corrupted(d=" + std::to_string(d) + ")";
  info.kind = RingKind::nilpair;
  info.dim = info.num_vars = d;
  info.c = 1;
  return GradedFamily(info, [d](std::int64_t n) -> FamilyLevel {
    if (n == 0) return NilPairIdeal::unit(d);
    const std::int64_t g = n <= 3 ? n : 1;
    return NilPairIdeal(MonomialIdeal::maximal_power(d, n), MonomialIdeal::maximal_power(d, n - g));
  });
}

namespace {

std::optional<Exponent> product_witness(const MonomialIdeal& x, const MonomialIdeal& y, const MonomialIdeal& target) {
  for (const auto& g : x.generators())
    for (const auto& h : y.generators()) {
      Exponent s(g.size());
      for (std::size_t k = 0; k < g.size(); ++k) s[k] = g[k] + h[k];
      if (!target.contains(s)) return s;
    }
  return std::nullopt;
}

std::optional<std::string> violation(const GradedFamily& f, std::int64_t a, std::int64_t b) {
  const auto la = f.level(a), lb = f.level(b), lab = f.level(a + b);
  if (const auto* ia = std::get_if<MonomialIdeal>(&la)) {
    if (auto w = product_witness(*ia, std::get<MonomialIdeal>(lb), std::get<MonomialIdeal>(lab)))
      return monomial_string(*w);
    return std::nullopt;
  }
  if (const auto* pa = std::get_if<NilPairIdeal>(&la)) {
    const auto& pb = std::get<NilPairIdeal>(lb);
    const auto& pab = std::get<NilPairIdeal>(lab);
    if (auto w = product_witness(pa->base(), pb.base(), pab.base())) return to_string(NilMonomial{false, *w});
    if (auto w = product_witness(pa->base(), pb.socle(), pab.socle())) return to_string(NilMonomial{true, *w});
    if (auto w = product_witness(pb.base(), pa->socle(), pab.socle())) return to_string(NilMonomial{true, *w});
    return std::nullopt;
  }
  const auto cap = f.info().artin_t + 1;
  const auto have = std::min(std::get<ArtinPower>(la).exponent + std::get<ArtinPower>(lb).exponent, cap);
  const auto need = std::min(std::get<ArtinPower>(lab).exponent, cap);
  if (have < need) return "y^" + std::to_string(have);
  return std::nullopt;
}

bool is_unit_level(const FamilyLevel& l) {
  if (const auto* i = std::get_if<MonomialIdeal>(&l)) return i->is_unit();
  if (const auto* p = std::get_if<NilPairIdeal>(&l)) return p->base().is_unit();
  return std::get<ArtinPower>(l).exponent == 0;
}

}  // namespace

GradedReport check_graded(const GradedFamily& f, std::int64_t horizon) {
  GradedReport report;
  report.horizon = horizon;
  report.unit_at_zero = is_unit_level(f.level(0));
  for (std::int64_t total = 2; total <= horizon; ++total)
    for (std::int64_t a = 1; 2 * a <= total; ++a)
      if (auto w = violation(f, a, total - a)) {
        ++report.violation_count;
        if (report.violations.size() < 20) report.violations.push_back({a, total - a, *w});
      }
  return report;
}

FamilySemigroup family_to_semigroup(const GradedFamily& f, std::int64_t horizon, std::optional<Rational> beta) {
  if (f.kind() != RingKind::polynomial) throw std::invalid_argument("family_to_semigroup needs a polynomial family");
  const std::size_t d = f.info().num_vars;
  if (!beta) {
    if (f.info().c <= 0) throw std::domain_error("family has no constant c with m^c inside I_1");
    Rational b = f.info().c;
    if (f.info().lambda) {
      Rational top = 0;
      for (const auto& l : *f.info().lambda) top = std::max(top, l);
      Integer ceil_top;
      mpz_cdiv_q(ceil_top.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
      b *= Rational(ceil_top);
    } else {
      b *= static_cast<long>(d);
    }
    beta = b;
  }
  if (*beta <= 0) throw std::invalid_argument("box slope must be positive");
  for (std::int64_t n = 1; n <= horizon; ++n)
    if (!is_m_primary(f.monomial_level(n)))
      throw std::domain_error("level " + std::to_string(n) + " is not m-primary");

  const Rational slope = *beta;
  auto radius = [slope](std::int64_t n) {
    const Rational r = slope * n;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return to_int64(fl);
  };
  auto oracle = [f, d, radius](std::int64_t n) {
    Level level;
    const auto& ideal = f.monomial_level(n);
    Point a(d, 0);
    auto walk = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
      if (i == d) {
        if (ideal.contains(a)) level.push_back(a);
        return;
      }
      for (std::int64_t v = 0; v <= left; ++v) {
        a[i] = v;
        self(self, i + 1, left - v);
      }
      a[i] = 0;
    };
    walk(walk, 0, radius(n));
    return level;
  };

  FamilySemigroup out{GradedSemigroup::from_oracle(d, oracle, f.name()), slope, {}, true};
  const auto levels = out.semigroup.enumerate_levels(horizon);
  for (std::int64_t n = 1; n <= horizon; ++n) {
    IdentityRow row;
    row.n = n;
    row.colength = colength(f.monomial_level(n));
    row.box_count = binomial(radius(n) + static_cast<std::int64_t>(d), static_cast<std::int64_t>(d));
    row.semigroup_count = static_cast<long>(levels[static_cast<std::size_t>(n)].size());
    row.holds = row.colength == row.box_count - row.semigroup_count;
    out.identity_holds = out.identity_holds && row.holds;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace asymult
