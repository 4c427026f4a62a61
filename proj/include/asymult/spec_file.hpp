#pragma once

// Experiment specification files.
//
// Plain text, one `key = value` per line; `#` starts a comment, blank lines
// are ignored and keys may appear only once. Every file has a `type`
// (semigroup, family, series or ideal) and the remaining keys are checked
// against the schema of that type; see README.md for the full list.

#include "asymult/experiments.hpp"
#include "asymult/family.hpp"
#include "asymult/monomial.hpp"
#include "asymult/semigroup.hpp"
#include "asymult/series.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asymult {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpecFile {
 public:
  static SpecFile parse(const std::string& text, std::string origin = "<text>");
  static SpecFile read(const std::string& path);

  const std::string& origin() const { return origin_; }
  // File name without directory and extension ("" for parsed text).
  const std::string& stem() const { return stem_; }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
  std::vector<std::int64_t> get_int_list(const std::string& key) const;
  Rational get_rational(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  const std::string& type() const { return get("type"); }
  // Throws SpecError naming the first key outside `allowed` (type is implicit).
  void require_keys(const std::vector<std::string>& allowed) const;

  // Canonical text: one "key = value" line per entry in file order.
  std::string format() const;

 private:
  std::string origin_;
  std::string stem_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Integers, p/q, and terminating decimals such as 0.02 (converted exactly).
Rational parse_exact_number(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

// "residue:3:0,1", "explicit:2,5,7".
TSet parse_tset(const std::string& text);

// Generators written as tuples "(v_1,...,v_d,degree)".
std::vector<SemigroupGenerator> parse_generators(const std::string& text);
// Ideal generators as exponent rows separated by ';', e.g. "2 0; 1 1".
MonomialIdeal parse_ideal_rows(const std::string& text, std::size_t num_vars);

GradedSemigroup semigroup_from_spec(const SpecFile& spec);
GradedFamily family_from_spec(const SpecFile& spec);
MonomialLinearSeries series_from_spec(const SpecFile& spec);
// Parameters of a thmN1 or theorem8 series spec (keys s, r, weights, e, schedule).
ThmN1Params thmN1_params_from_spec(const SpecFile& spec);
MonomialIdeal ideal_from_spec(const SpecFile& spec);

}  // namespace asymult
