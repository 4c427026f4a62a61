#pragma once

// Length and dimension sequences, convergence diagnostics along residue
// classes, and the volume / multiplicity / epsilon-multiplicity experiments.

#include "asymult/family.hpp"
#include "asymult/monomial.hpp"
#include "asymult/semigroup.hpp"
#include "asymult/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace asymult {

// values[i] = raw[i] * multiplier / n[i]^exponent, exactly.
struct ScaledSequence {
  std::string normalization;  // e.g. "length/n^2" or "length*2!/n^2"
  std::int64_t exponent = 0;
  Integer multiplier = 1;
  std::vector<std::int64_t> n;
  std::vector<Integer> raw;
  std::vector<Rational> values;
  std::optional<std::pair<std::int64_t, std::int64_t>> residue;  // (a, r): n = a mod r
};

// raw[0] belongs to n = 1.
ScaledSequence make_scaled(const std::vector<Integer>& raw, std::int64_t exponent, const Integer& multiplier,
                           std::string normalization);
ScaledSequence restrict_to_class(const ScaledSequence& seq, std::int64_t a, std::int64_t r);

// length(R/I_n) / n^d for n = 1..horizon (unscaled for Artin models).
ScaledSequence length_sequence(const GradedFamily& f, std::int64_t horizon, unsigned threads = 1);
// dim L_n / n^exponent for n = 1..horizon.
ScaledSequence dimension_sequence(const MonomialLinearSeries& l, std::int64_t horizon, std::int64_t exponent,
                                  unsigned threads = 1);

enum class Verdict { converges, oscillates, inconclusive };
std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& text);

struct ClassVerdict {
  std::int64_t modulus = 1;
  std::int64_t residue = 0;
  Verdict verdict = Verdict::inconclusive;
  std::size_t samples = 0;        // points of the class in the two windows
  Rational liminf_est, limsup_est;  // min and max over the last window
  Rational limit_estimate;          // mean over the last window
  Rational previous_range, last_range;
  Rational tol_abs;
};

// Windows [N/4, N/2) and [N/2, N] with N the last index of the sequence.
// The tolerance is relative to the mean absolute value on the last window.
//   converges:   both ranges <= tol and the window means differ by <= tol
//   oscillates:  last range > 2 tol and last range >= 3/4 of the previous one
//   otherwise inconclusive (also when a window holds fewer than two points).
struct ConvergenceReport {
  Rational tol;
  std::int64_t horizon = 0;
  std::vector<ClassVerdict> classes;  // r = 1..r_max, a = 0..r-1
  bool all(Verdict v) const;
  bool none(Verdict v) const;
};

ConvergenceReport convergence_report(const ScaledSequence& seq, std::int64_t r_max,
                                     const Rational& tol = make_rational(1, 50));

struct VolMultRow {
  std::int64_t p = 0;
  Rational multiplicity;  // e(I_p)
  Rational rhs;           // e(I_p) / p^d
};

struct VolMultReport {
  std::int64_t d = 0;
  std::vector<VolMultRow> rows;
  ScaledSequence lhs_sequence;  // length * d! / n^d
  Rational lhs;                 // value at the horizon
  Rational gap;                 // lhs - rhs of the largest p
};

VolMultReport volume_equals_multiplicity(const GradedFamily& f, const std::vector<std::int64_t>& ps,
                                         std::int64_t horizon, unsigned threads = 1);

struct EpsilonReport {
  MonomialIdeal ideal;
  ScaledSequence sequence;  // length((I^n)^sat / I^n) * d! / n^d
  ConvergenceReport convergence;
};

EpsilonReport epsilon_multiplicity(const MonomialIdeal& i, std::int64_t horizon, unsigned threads = 1,
                                   const Rational& tol = make_rational(1, 50));

struct TruncationRow {
  std::int64_t p = 0;
  std::int64_t q = 0;
  Rational predicted;  // predicted limit of truncate(S, p)
  Rational rescaled;   // predicted / p^q(S)
  bool dimension_drop = false;
};

struct ConeRow {
  std::string label;
  SemigroupInvariants invariants;
  Rational predicted;
  std::int64_t k = 0;  // last k with m k <= horizon
  Rational empirical;  // #S_{mk} / k^q at that k
  Rational relative_error;
  bool within_tol = false;
  std::vector<TruncationRow> truncations;
  // Among non-degenerate truncations the error to the predicted limit does
  // not grow from the smallest to the largest p.
  bool trend_ok = true;
};

ConeRow cone_theorem_row(const GradedSemigroup& s, std::int64_t horizon, const Rational& tol,
                         const std::vector<std::int64_t>& ps = {1, 2, 4, 8});

struct ConeSuiteReport {
  std::vector<ConeRow> rows;
  bool passed() const;
};

ConeSuiteReport cone_theorem_suite(const std::vector<GradedSemigroup>& fixtures, std::int64_t horizon,
                                   const Rational& tol = make_rational(1, 50), unsigned threads = 1,
                                   const std::vector<std::int64_t>& ps = {1, 2, 4, 8});

}  // namespace asymult
