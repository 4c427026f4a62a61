#include "asymult/experiments.hpp"

#include "asymult/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace asymult {

namespace {

Integer power_of(std::int64_t base, std::int64_t exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), to_integer(base).get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace

ScaledSequence make_scaled(const std::vector<Integer>& raw, std::int64_t exponent, const Integer& multiplier,
                           std::string normalization) {
  if (exponent < 0) throw std::invalid_argument("scaling exponent must be nonnegative");
  ScaledSequence seq;
  seq.normalization = std::move(normalization);
  seq.exponent = exponent;
  seq.multiplier = multiplier;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    seq.n.push_back(n);
    seq.raw.push_back(raw[i]);
    seq.values.push_back(make_rational(raw[i] * multiplier, power_of(n, exponent)));
  }
  return seq;
}

ScaledSequence restrict_to_class(const ScaledSequence& seq, std::int64_t a, std::int64_t r) {
  if (r < 1 || a < 0 || a >= r) throw std::invalid_argument("residue class needs 0 <= a < r");
  ScaledSequence out = seq;
  out.n.clear();
  out.raw.clear();
  out.values.clear();
  out.residue = {a, r};
  for (std::size_t i = 0; i < seq.n.size(); ++i)
    if (seq.n[i] % r == a) {
      out.n.push_back(seq.n[i]);
      out.raw.push_back(seq.raw[i]);
      out.values.push_back(seq.values[i]);
    }
  return out;
}

ScaledSequence length_sequence(const GradedFamily& f, std::int64_t horizon, unsigned threads) {
  const auto raw = parallel_map(horizon, threads, [&](std::int64_t i) { return f.length(i + 1); });
  if (f.kind() == RingKind::artin) return make_scaled(raw, 0, 1, "length");
  const auto d = static_cast<std::int64_t>(f.dim());
  return make_scaled(raw, d, 1, "length/n^" + std::to_string(d));
}

ScaledSequence dimension_sequence(const MonomialLinearSeries& l, std::int64_t horizon, std::int64_t exponent,
                                  unsigned threads) {
  const auto raw = parallel_map(horizon, threads, [&](std::int64_t i) { return l.dim(i + 1); });
  return make_scaled(raw, exponent, 1, "dim/n^" + std::to_string(exponent));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::converges: return "converges";
    case Verdict::oscillates: return "oscillates";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(const std::string& text) {
  for (auto v : {Verdict::converges, Verdict::oscillates, Verdict::inconclusive})
    if (to_string(v) == text) return v;
  return std::nullopt;
}

bool ConvergenceReport::all(Verdict v) const {
  return !classes.empty() && std::all_of(classes.begin(), classes.end(), [v](const auto& c) { return c.verdict == v; });
}

bool ConvergenceReport::none(Verdict v) const {
  return std::none_of(classes.begin(), classes.end(), [v](const auto& c) { return c.verdict == v; });
}

namespace {

struct Window {
  std::size_t count = 0;
  Rational min, max, sum, abs_sum;

  void add(const Rational& v) {
    if (count == 0 || v < min) min = v;
    if (count == 0 || v > max) max = v;
    sum += v;
    abs_sum += abs_value(v);
    ++count;
  }
  Rational range() const { return max - min; }
  Rational mean() const { return sum / static_cast<long>(count); }
};

}  // namespace

ConvergenceReport convergence_report(const ScaledSequence& seq, std::int64_t r_max, const Rational& tol) {
  if (r_max < 1) throw std::invalid_argument("r_max must be positive");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  ConvergenceReport report;
  report.tol = tol;
  report.horizon = seq.n.empty() ? 0 : seq.n.back();
  const auto big_n = report.horizon;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    for (std::int64_t a = 0; a < r; ++a) {
      Window previous, last;
      for (std::size_t i = 0; i < seq.n.size(); ++i) {
        const auto n = seq.n[i];
        if (n % r != a) continue;
        if (4 * n >= big_n && 2 * n < big_n) previous.add(seq.values[i]);
        if (2 * n >= big_n) last.add(seq.values[i]);
      }
      ClassVerdict c;
      c.modulus = r;
      c.residue = a;
      c.samples = previous.count + last.count;
      if (previous.count < 2 || last.count < 2 || big_n < 16) {
        report.classes.push_back(std::move(c));
        continue;
      }
      c.liminf_est = last.min;
      c.limsup_est = last.max;
      c.limit_estimate = last.mean();
      c.previous_range = previous.range();
      c.last_range = last.range();
      Rational scale = last.abs_sum / static_cast<long>(last.count);
      if (scale == 0) scale = 1;
      c.tol_abs = tol * scale;
      if (c.previous_range <= c.tol_abs && c.last_range <= c.tol_abs &&
          abs_value(previous.mean() - last.mean()) <= c.tol_abs)
        c.verdict = Verdict::converges;
      else if (c.last_range > 2 * c.tol_abs && 4 * c.last_range >= 3 * c.previous_range)
        c.verdict = Verdict::oscillates;
      report.classes.push_back(std::move(c));
    }
  }
  return report;
}

VolMultReport volume_equals_multiplicity(const GradedFamily& f, const std::vector<std::int64_t>& ps,
                                         std::int64_t horizon, unsigned threads) {
  if (f.kind() != RingKind::polynomial) throw std::invalid_argument("volume = multiplicity needs a polynomial model");
  if (ps.empty()) throw std::invalid_argument("empty p list");
  VolMultReport report;
  report.d = static_cast<std::int64_t>(f.dim());
  const Integer dfact = factorial(report.d);
  const auto mults = parallel_map(static_cast<std::int64_t>(ps.size()), threads, [&](std::int64_t i) {
    const auto p = ps[static_cast<std::size_t>(i)];
    if (p < 1) throw std::invalid_argument("p must be positive");
    return multiplicity_oracle(f.monomial_level(p));
  });
  for (std::size_t i = 0; i < ps.size(); ++i)
    report.rows.push_back({ps[i], mults[i], mults[i] / Rational(power_of(ps[i], report.d))});
  const auto raw = parallel_map(horizon, threads, [&](std::int64_t i) { return f.length(i + 1); });
  report.lhs_sequence = make_scaled(raw, report.d, dfact,
                                    "length*" + std::to_string(report.d) + "!/n^" + std::to_string(report.d));
  if (!report.lhs_sequence.values.empty()) {
    report.lhs = report.lhs_sequence.values.back();
    report.gap = report.lhs - report.rows.back().rhs;
  }
  return report;
}

EpsilonReport epsilon_multiplicity(const MonomialIdeal& i, std::int64_t horizon, unsigned threads,
                                   const Rational& tol) {
  const auto d = static_cast<std::int64_t>(i.num_vars());
  const auto raw = parallel_map(horizon, threads, [&](std::int64_t k) {
    const auto p = power(i, k + 1);
    return relative_length(saturate(p), p);
  });
  EpsilonReport report{i, make_scaled(raw, d, factorial(d),
                                      "saturation_length*" + std::to_string(d) + "!/n^" + std::to_string(d)),
                       {}};
  report.convergence = convergence_report(report.sequence, 1, tol);
  return report;
}

ConeRow cone_theorem_row(const GradedSemigroup& s, std::int64_t horizon, const Rational& tol,
                         const std::vector<std::int64_t>& ps) {
  ConeRow row;
  row.label = s.label();
  row.invariants = invariants(s);
  row.predicted = predicted_limit(row.invariants);
  const auto points = empirical_limit(s, horizon);
  if (!points.empty()) {
    row.k = points.back().k;
    row.empirical = points.back().value;
    row.relative_error = abs_value(row.empirical - row.predicted) / row.predicted;
    row.within_tol = row.relative_error <= tol;
  }
  for (auto p : ps) {
    const auto t = truncate(s, p);
    const auto inv = invariants(t);
    TruncationRow tr;
    tr.p = p;
    tr.q = inv.q;
    tr.predicted = predicted_limit(inv);
    tr.rescaled = tr.predicted / Rational(power_of(p, row.invariants.q));
    tr.dimension_drop = inv.q < row.invariants.q;
    row.truncations.push_back(std::move(tr));
  }
  std::vector<const TruncationRow*> full;
  for (const auto& tr : row.truncations)
    if (!tr.dimension_drop) full.push_back(&tr);
  std::sort(full.begin(), full.end(), [](auto* x, auto* y) { return x->p < y->p; });
  if (full.size() >= 2)
    row.trend_ok = abs_value(full.back()->rescaled - row.predicted) <= abs_value(full.front()->rescaled - row.predicted);
  return row;
}

bool ConeSuiteReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConeRow& r) { return r.within_tol && r.trend_ok; });
}

ConeSuiteReport cone_theorem_suite(const std::vector<GradedSemigroup>& fixtures, std::int64_t horizon,
                                   const Rational& tol, unsigned threads, const std::vector<std::int64_t>& ps) {
  ConeSuiteReport report;
  report.rows = parallel_map(static_cast<std::int64_t>(fixtures.size()), threads, [&](std::int64_t i) {
    return cone_theorem_row(fixtures[static_cast<std::size_t>(i)], horizon, tol, ps);
  });
  return report;
}

}  // namespace asymult
