#include "asymult/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace asymult {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& raw) {
  const auto text = trim(raw);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw SpecError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw SpecError("not an integer: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

SpecFile SpecFile::parse(const std::string& text, std::string origin) {
  SpecFile spec;
  spec.origin_ = std::move(origin);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const auto where = spec.origin_ + ":" + std::to_string(line_no);
    if (eq == std::string::npos) throw SpecError(where + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw SpecError(where + ": empty key");
    if (spec.has(key)) throw SpecError(where + ": duplicate key '" + key + "'");
    spec.entries_.emplace_back(key, value);
  }
  if (!spec.has("type")) throw SpecError(spec.origin_ + ": missing 'type'");
  return spec;
}

SpecFile SpecFile::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto spec = parse(buf.str(), path);
  spec.stem_ = std::filesystem::path(path).stem().string();
  return spec;
}

bool SpecFile::has(const std::string& key) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == key; });
}

const std::string& SpecFile::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw SpecError(origin_ + ": missing key '" + key + "'");
}

std::string SpecFile::get_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? get(key) : fallback;
}

std::int64_t SpecFile::get_int(const std::string& key) const {
  try {
    return parse_int(get(key));
  } catch (const SpecError& e) {
    throw SpecError(origin_ + ": key '" + key + "': " + e.what());
  }
}

std::int64_t SpecFile::get_int_or(const std::string& key, std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::vector<std::int64_t> SpecFile::get_int_list(const std::string& key) const {
  try {
    return parse_int_list(get(key));
  } catch (const SpecError& e) {
    throw SpecError(origin_ + ": key '" + key + "': " + e.what());
  }
}

Rational SpecFile::get_rational(const std::string& key) const {
  try {
    return parse_exact_number(get(key));
  } catch (const std::exception& e) {
    throw SpecError(origin_ + ": key '" + key + "': " + e.what());
  }
}

void SpecFile::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = value;
      return;
    }
  entries_.emplace_back(key, value);
}

void SpecFile::require_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [k, v] : entries_) {
    if (k == "type" || k == "name") continue;
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw SpecError(origin_ + ": unknown key '" + k + "' for type " + type());
  }
}

std::string SpecFile::format() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

Rational parse_exact_number(const std::string& raw) {
  const auto text = trim(raw);
  const auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  const auto whole = text.substr(0, dot);
  const auto frac = text.substr(dot + 1);
  const bool negative = !whole.empty() && whole[0] == '-';
  const auto digits = negative ? whole.substr(1) : whole;
  auto all_digits = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (frac.empty() || !all_digits(frac) || !all_digits(digits)) throw SpecError("not a number: '" + text + "'");
  Integer num(digits.empty() ? "0" : digits);
  Integer den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream in(norm);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_int(tok));
  if (out.empty()) throw SpecError("empty list");
  return out;
}

TSet parse_tset(const std::string& raw) {
  const auto parts = split(trim(raw), ':');
  if (parts.size() == 3 && parts[0] == "residue") {
    const auto classes = parse_int_list(parts[2]);
    return TSet::residues(parse_int(parts[1]), std::set<std::int64_t>(classes.begin(), classes.end()));
  }
  if (parts.size() == 2 && parts[0] == "explicit") {
    std::set<std::int64_t> members;
    if (!trim(parts[1]).empty())
      for (auto m : parse_int_list(parts[1])) members.insert(m);
    return TSet::explicit_set(std::move(members));
  }
  throw SpecError("T must be 'residue:<modulus>:<classes>' or 'explicit:<members>', got '" + raw + "'");
}

std::vector<SemigroupGenerator> parse_generators(const std::string& text) {
  std::vector<SemigroupGenerator> out;
  std::size_t pos = 0;
  std::size_t width = 0;
  while (true) {
    const auto open = text.find('(', pos);
    if (open == std::string::npos) break;
    const auto close = text.find(')', open);
    if (close == std::string::npos) throw SpecError("unbalanced parenthesis in generators");
    const auto coords = parse_int_list(text.substr(open + 1, close - open - 1));
    if (width == 0) width = coords.size();
    if (coords.size() != width) throw SpecError("generators have different lengths");
    SemigroupGenerator g;
    g.vector.assign(coords.begin(), coords.end() - 1);
    g.degree = coords.back();
    if (g.degree < 0) throw SpecError("negative generator degree");
    out.push_back(std::move(g));
    pos = close + 1;
  }
  if (out.empty()) throw SpecError("no generators given");
  if (trim(text.substr(pos)).find_first_not_of(" ,;") != std::string::npos)
    throw SpecError("trailing text after generators");
  return out;
}

MonomialIdeal parse_ideal_rows(const std::string& text, std::size_t num_vars) {
  std::vector<Exponent> gens;
  for (const auto& row : split(text, ';')) {
    if (row.empty()) continue;
    auto e = parse_int_list(row);
    if (e.size() != num_vars) throw SpecError("ideal generator '" + row + "' has the wrong number of exponents");
    for (auto x : e)
      if (x < 0) throw SpecError("negative exponent in '" + row + "'");
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(num_vars, std::move(gens));
}

namespace {

const std::vector<std::string> kRunKeys = {"horizon", "moduli", "tol"};

std::vector<std::string> with_run_keys(std::vector<std::string> keys) {
  keys.insert(keys.end(), kRunKeys.begin(), kRunKeys.end());
  return keys;
}

BlockSchedule schedule_from(const SpecFile& spec) {
  if (!spec.has("schedule")) return BlockSchedule();
  try {
    return BlockSchedule(spec.get_int_list("schedule"));
  } catch (const std::invalid_argument& e) {
    throw SpecError(spec.origin() + ": schedule: " + e.what());
  }
}

std::size_t positive_size(const SpecFile& spec, const std::string& key) {
  const auto v = spec.get_int(key);
  if (v < 1) throw SpecError(spec.origin() + ": '" + key + "' must be positive");
  return static_cast<std::size_t>(v);
}

MonomialIdeal ideal_key(const SpecFile& spec, const std::string& key) {
  try {
    return parse_ideal_rows(spec.get(key), positive_size(spec, "vars"));
  } catch (const SpecError& e) {
    throw SpecError(spec.origin() + ": key '" + key + "': " + e.what());
  }
}

std::optional<std::int64_t> optional_dimension(const SpecFile& spec, const std::string& key) {
  const auto v = spec.get(key);
  if (v == "-inf") return std::nullopt;
  return spec.get_int(key);
}

}  // namespace

GradedSemigroup semigroup_from_spec(const SpecFile& spec) {
  if (spec.type() != "semigroup") throw SpecError(spec.origin() + ": expected type semigroup");
  spec.require_keys(with_run_keys(
      {"generators", "truncate", "expect.predicted", "expect.m", "expect.q", "expect.ind", "expect.within_tol"}));
  std::vector<SemigroupGenerator> gens;
  try {
    gens = parse_generators(spec.get("generators"));
  } catch (const SpecError& e) {
    throw SpecError(spec.origin() + ": generators: " + e.what());
  }
  const auto dim = gens.front().vector.size();
  const auto label = spec.get_or("name", spec.stem());
  return GradedSemigroup(dim, std::move(gens), label);
}

GradedFamily family_from_spec(const SpecFile& spec) {
  if (spec.type() != "family") throw SpecError(spec.origin() + ": expected type family");
  spec.require_keys(with_run_keys({"builder", "vars", "ideal", "j_ideal", "lambda", "d", "t", "schedule", "pset",
                                   "graded_horizon", "expect.verdict", "expect.graded", "expect.rhs",
                                   "expect.lhs_tol"}));
  const auto& builder = spec.get("builder");
  try {
    if (builder == "power") return power_family(ideal_key(spec, "ideal"));
    if (builder == "saturation") return saturation_family(ideal_key(spec, "ideal"));
    if (builder == "symbolic") return symbolic_family(ideal_key(spec, "ideal"), ideal_key(spec, "j_ideal"));
    if (builder == "valuation") {
      RatVector lambda;
      for (const auto& part : split(spec.get("lambda"), ',')) lambda.push_back(parse_exact_number(part));
      return valuation_family(lambda);
    }
    if (builder == "example1") return example1_family(positive_size(spec, "d"), schedule_from(spec));
    if (builder == "dao_smirnov") return dao_smirnov_family(positive_size(spec, "d"), schedule_from(spec));
    if (builder == "artin_tau") return artin_tau_family(spec.get_int("t"), schedule_from(spec));
    if (builder == "corrupted") return corrupted_family(positive_size(spec, "d"));
  } catch (const std::invalid_argument& e) {
    throw SpecError(spec.origin() + ": " + e.what());
  }
  throw SpecError(spec.origin() + ": unknown family builder '" + builder + "'");
}

ThmN1Params thmN1_params_from_spec(const SpecFile& spec) {
  ThmN1Params p;
  p.s = optional_dimension(spec, "s");
  p.r = spec.get_int("r");
  if (spec.has("weights")) p.weights = spec.get_int_list("weights");
  p.e = spec.get_int_or("e", 1);
  p.schedule = schedule_from(spec);
  return p;
}

MonomialLinearSeries series_from_spec(const SpecFile& spec) {
  if (spec.type() != "series") throw SpecError(spec.origin() + ": expected type series");
  spec.require_keys(with_run_keys({"builder", "weights", "twist", "T", "s", "r", "e", "t", "schedule",
                                   "scale_exponent", "closure_horizon", "expect.kappa", "expect.verdict",
                                   "expect.index", "expect.closure", "expect.dims"}));
  const auto& builder = spec.get("builder");
  try {
    if (builder == "full") return full_series(spec.get_int_list("weights"), spec.get_int_or("twist", 1));
    if (builder == "example2") return example2_series(parse_tset(spec.get("T")));
    if (builder == "theorem21") return theorem21_series(parse_tset(spec.get("T")));
    if (builder == "artin") return artin_series(spec.get_int("t"), schedule_from(spec));
    if (builder == "thmN1") return thmN1_series(thmN1_params_from_spec(spec));
    if (builder == "theorem8") return theorem8_series(thmN1_params_from_spec(spec));
  } catch (const std::invalid_argument& e) {
    throw SpecError(spec.origin() + ": " + e.what());
  }
  throw SpecError(spec.origin() + ": unknown series builder '" + builder + "'");
}

MonomialIdeal ideal_from_spec(const SpecFile& spec) {
  if (spec.type() != "ideal") throw SpecError(spec.origin() + ": expected type ideal");
  spec.require_keys(with_run_keys({"vars", "ideal", "expect.limit", "expect.verdict"}));
  return ideal_key(spec, "ideal");
}

}  // namespace asymult
