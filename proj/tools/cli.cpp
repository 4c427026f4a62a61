#include "cli.hpp"

#include "asymult/experiments.hpp"
#include "asymult/spec_file.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace asymult::cli {

namespace {

struct Row {
  std::string section, key, n, raw, scaled, decimal, residue_class, verdict, detail;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Outcome {
  std::vector<Row> rows;
  std::vector<std::string> mismatches;

  void add(Row r) { rows.push_back(std::move(r)); }

  void value(const std::string& section, const std::string& key, const Rational& v, const std::string& detail = {}) {
    add({section, key, "", "", to_string(v), format_decimal(v), "", "", detail});
  }

  void check(const std::string& key, const std::string& expected, const std::string& actual) {
    const bool ok = expected == actual;
    add({"expect", key, "", "", "", "", "", ok ? "ok" : "mismatch", "expected=" + expected + ";actual=" + actual});
    if (!ok) mismatches.push_back(key + ": expected " + expected + ", got " + actual);
  }

  std::string csv() const {
    std::string out = "section,key,n,raw,scaled,decimal,residue_class,verdict,detail\n";
    for (const auto& r : rows) {
      const std::string fields[] = {r.section, r.key,           r.n,       r.raw,   r.scaled,
                                    r.decimal, r.residue_class, r.verdict, r.detail};
      for (std::size_t i = 0; i < 9; ++i) out += (i ? "," : "") + csv_field(fields[i]);
      out += '\n';
    }
    return out;
  }
};

struct Common {
  std::string input;
  std::optional<std::int64_t> horizon;
  std::optional<std::int64_t> moduli;
  std::string tol;
  std::string out_file;
  std::string golden_dir;
  bool update_golden = false;
  unsigned threads = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t horizon_of(const Common& c, const SpecFile* spec) {
  std::int64_t n = 0;
  if (c.horizon) n = *c.horizon;
  else if (spec && spec->has("horizon")) n = spec->get_int("horizon");
  else throw UsageError("no horizon given (use --horizon or a 'horizon' key)");
  if (n < 1) throw UsageError("horizon must be positive");
  return n;
}

std::int64_t moduli_of(const Common& c, const SpecFile* spec, std::int64_t fallback) {
  std::int64_t r = fallback;
  if (c.moduli) r = *c.moduli;
  else if (spec && spec->has("moduli")) r = spec->get_int("moduli");
  if (r < 0) throw UsageError("moduli must be nonnegative");
  return r;
}

Rational tol_of(const Common& c, const SpecFile* spec) {
  Rational t = make_rational(1, 50);
  try {
    if (!c.tol.empty()) t = parse_exact_number(c.tol);
    else if (spec && spec->has("tol")) t = spec->get_rational("tol");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (t <= 0) throw UsageError("tolerance must be positive");
  return t;
}

Rational expected_rational(const SpecFile& spec, const std::string& key) {
  return spec.get_rational(key);
}

void sequence_rows(Outcome& o, const std::string& section, const ScaledSequence& seq) {
  for (std::size_t i = 0; i < seq.n.size(); ++i)
    o.add({section, seq.normalization, std::to_string(seq.n[i]), to_string(seq.raw[i]), to_string(seq.values[i]),
           format_decimal(seq.values[i]), "", "", ""});
}

void verdict_rows(Outcome& o, const ScaledSequence& seq, const ConvergenceReport& rep) {
  for (const auto& c : rep.classes) {
    std::string detail = "samples=" + std::to_string(c.samples);
    if (c.verdict != Verdict::inconclusive || c.samples > 0)
      detail += ";liminf=" + to_string(c.liminf_est) + ";limsup=" + to_string(c.limsup_est) +
                ";tol_abs=" + format_decimal(c.tol_abs);
    // Window means carry huge exact denominators; only their decimal form is printed.
    o.add({"verdict", seq.normalization, std::to_string(rep.horizon), "", "",
           format_decimal(c.limit_estimate), std::to_string(c.residue) + " mod " + std::to_string(c.modulus),
           to_string(c.verdict), detail});
  }
}

void expect_verdict(Outcome& o, const SpecFile& spec, const ConvergenceReport& rep) {
  if (!spec.has("expect.verdict")) return;
  const auto& want = spec.get("expect.verdict");
  if (!parse_verdict(want)) throw SpecError(spec.origin() + ": unknown verdict '" + want + "'");
  std::string actual = want;
  if (rep.classes.empty()) actual = "none";
  for (const auto& c : rep.classes)
    if (to_string(c.verdict) != want) {
      actual = to_string(c.verdict) + " at " + std::to_string(c.residue) + " mod " + std::to_string(c.modulus);
      break;
    }
  o.check("expect.verdict", want, actual);
}

Outcome run_semigroup(const Common& c, const std::vector<std::int64_t>& truncations) {
  const auto spec = SpecFile::read(c.input);
  const auto s = semigroup_from_spec(spec);
  const auto n = horizon_of(c, &spec);
  const auto tol = tol_of(c, &spec);
  auto ps = truncations;
  if (ps.empty() && spec.has("truncate")) ps = spec.get_int_list("truncate");
  const auto row = cone_theorem_row(s, n, tol, ps);
  const auto& inv = row.invariants;

  Outcome o;
  o.add({"invariant", "m", "", std::to_string(inv.m), "", "", "", "", s.label()});
  o.add({"invariant", "q", "", std::to_string(inv.q), "", "", "", "", ""});
  o.add({"invariant", "ind", "", to_string(inv.ind), "", "", "", "", ""});
  o.value("invariant", "volume", inv.body.volume);
  o.value("invariant", "predicted", row.predicted);
  for (const auto& p : empirical_limit(s, n))
    o.add({"level", "count/k^" + std::to_string(inv.q), std::to_string(p.k), std::to_string(p.count),
           to_string(p.value), format_decimal(p.value), "", "", ""});
  o.add({"limit", "empirical", std::to_string(row.k), "", to_string(row.empirical), format_decimal(row.empirical), "",
         row.within_tol ? "within_tol" : "outside_tol",
         "predicted=" + to_string(row.predicted) + ";relative_error=" + format_decimal(row.relative_error) +
             ";tol=" + to_string(tol)});
  for (const auto& t : row.truncations)
    o.add({"truncate", "predicted/p^" + std::to_string(inv.q), std::to_string(t.p), std::to_string(t.q),
           to_string(t.rescaled), format_decimal(t.rescaled), "", t.dimension_drop ? "dimension_drop" : "full_dimension",
           "predicted=" + to_string(t.predicted)});
  if (!row.truncations.empty())
    o.add({"truncate_trend", "error_nonincreasing", "", "", "", "", "", row.trend_ok ? "ok" : "violated", ""});

  if (spec.has("expect.predicted"))
    o.check("expect.predicted", to_string(expected_rational(spec, "expect.predicted")), to_string(row.predicted));
  if (spec.has("expect.m")) o.check("expect.m", std::to_string(spec.get_int("expect.m")), std::to_string(inv.m));
  if (spec.has("expect.q")) o.check("expect.q", std::to_string(spec.get_int("expect.q")), std::to_string(inv.q));
  if (spec.has("expect.ind")) o.check("expect.ind", std::to_string(spec.get_int("expect.ind")), to_string(inv.ind));
  if (spec.has("expect.within_tol"))
    o.check("expect.within_tol", spec.get("expect.within_tol"), row.within_tol ? "true" : "false");
  return o;
}

Outcome run_family(const Common& c) {
  const auto spec = SpecFile::read(c.input);
  const auto f = family_from_spec(spec);
  const auto n = horizon_of(c, &spec);
  const auto moduli = moduli_of(c, &spec, 1);
  const auto tol = tol_of(c, &spec);
  const auto graded_horizon = spec.get_int_or("graded_horizon", std::min<std::int64_t>(n, 30));

  Outcome o;
  o.add({"family", "name", "", "", "", "", "", "", f.name()});
  const auto graded = check_graded(f, graded_horizon);
  std::string detail = "violations=" + std::to_string(graded.violation_count);
  if (!graded.violations.empty()) {
    const auto& v = graded.violations.front();
    detail += ";first=" + std::to_string(v.a) + "+" + std::to_string(v.b) + ":" + v.witness;
  }
  o.add({"graded", "check_graded", std::to_string(graded_horizon), "", "", "", "", graded.passed() ? "pass" : "fail",
         detail});
  if (spec.has("expect.graded")) o.check("expect.graded", spec.get("expect.graded"), graded.passed() ? "pass" : "fail");

  const auto seq = length_sequence(f, n, c.threads);
  sequence_rows(o, "length", seq);
  if (moduli > 0) {
    const auto rep = convergence_report(seq, moduli, tol);
    verdict_rows(o, seq, rep);
    expect_verdict(o, spec, rep);
  }
  return o;
}

Integer expected_series_dim(const SpecFile& spec, const std::string& formula, std::int64_t n) {
  if (formula == "thmN1") return thmN1_expected_dim(thmN1_params_from_spec(spec), n);
  if (formula == "example2") return parse_tset(spec.get("T")).contains(n) ? Integer(static_cast<long>(n + 1)) : Integer(0);
  throw SpecError(spec.origin() + ": unknown dimension formula '" + formula + "'");
}

Outcome run_series(const Common& c) {
  const auto spec = SpecFile::read(c.input);
  const auto l = series_from_spec(spec);
  const auto n = horizon_of(c, &spec);
  const auto moduli = moduli_of(c, &spec, 0);
  const auto tol = tol_of(c, &spec);
  const auto inv = kodaira_iitaka(l, n);
  std::int64_t exponent = inv.kappa.value.value_or(0);
  if (spec.has("scale_exponent")) exponent = spec.get_int("scale_exponent");

  Outcome o;
  o.add({"series", "name", "", "", "", "", "", "", l.name()});
  o.add({"invariant", "kappa", std::to_string(n), to_string(inv.kappa), "", "", "",
         inv.horizon_dependent ? "horizon_dependent" : "stable", "last_growth=" + std::to_string(inv.last_growth)});
  if (spec.has("expect.kappa")) o.check("expect.kappa", spec.get("expect.kappa"), to_string(inv.kappa));

  std::string index = "none";
  try {
    index = std::to_string(index_estimate(l, n));
  } catch (const std::domain_error&) {
  }
  o.add({"invariant", "index", std::to_string(n), index, "", "", "", "",
         l.info().known_index ? "known=" + std::to_string(*l.info().known_index) : ""});
  if (spec.has("expect.index")) o.check("expect.index", spec.get("expect.index"), index);

  const auto closure_horizon = spec.get_int_or("closure_horizon", std::min<std::int64_t>(n, 30));
  const auto closure = check_closure(l, closure_horizon);
  std::string detail = "violations=" + std::to_string(closure.violation_count);
  if (!closure.violations.empty()) {
    const auto& v = closure.violations.front();
    detail += ";first=" + std::to_string(v.a) + "+" + std::to_string(v.b) + ":" + v.witness;
  }
  o.add({"closure", "check_closure", std::to_string(closure_horizon), "", "", "", "",
         closure.passed() ? "pass" : "fail", detail});
  if (spec.has("expect.closure")) o.check("expect.closure", spec.get("expect.closure"), closure.passed() ? "pass" : "fail");

  const auto seq = dimension_sequence(l, n, exponent, c.threads);
  sequence_rows(o, "dim", seq);

  if (spec.has("expect.dims")) {
    const auto& formula = spec.get("expect.dims");
    std::string actual = "match";
    // The thmN1 closed form describes n >= 2 (its nil block is empty at n = 1).
    const std::int64_t first = formula == "thmN1" ? 2 : 1;
    for (std::int64_t k = first; k <= n; ++k)
      if (seq.raw[static_cast<std::size_t>(k - 1)] != expected_series_dim(spec, formula, k)) {
        actual = "differs at n=" + std::to_string(k);
        break;
      }
    o.check("expect.dims", "match", actual);
  }
  if (moduli > 0) {
    const auto rep = convergence_report(seq, moduli, tol);
    verdict_rows(o, seq, rep);
    expect_verdict(o, spec, rep);
  }
  return o;
}

Outcome run_volmult(const Common& c, std::vector<std::int64_t> ps) {
  const auto spec = SpecFile::read(c.input);
  const auto f = family_from_spec(spec);
  const auto n = horizon_of(c, &spec);
  if (ps.empty() && spec.has("pset")) ps = spec.get_int_list("pset");
  if (ps.empty()) throw UsageError("no p values given (use --pset or a 'pset' key)");
  const auto rep = volume_equals_multiplicity(f, ps, n, c.threads);

  Outcome o;
  o.add({"family", "name", "", "", "", "", "", "", f.name()});
  const auto d = std::to_string(rep.d);
  for (const auto& r : rep.rows)
    o.add({"rhs", "e(I_p)/p^" + d, std::to_string(r.p), to_string(r.multiplicity), to_string(r.rhs),
           format_decimal(r.rhs), "", "", ""});
  const auto& seq = rep.lhs_sequence;
  o.add({"lhs", seq.normalization, std::to_string(n), to_string(seq.raw.back()), to_string(rep.lhs),
         format_decimal(rep.lhs), "", "", ""});
  o.value("gap", "lhs-rhs", rep.gap, "p=" + std::to_string(rep.rows.back().p));
  if (spec.has("expect.rhs")) {
    const auto want = expected_rational(spec, "expect.rhs");
    std::string actual = to_string(want);
    for (const auto& r : rep.rows)
      if (r.rhs != want) {
        actual = to_string(r.rhs) + " at p=" + std::to_string(r.p);
        break;
      }
    o.check("expect.rhs", to_string(want), actual);
  }
  if (spec.has("expect.lhs_tol")) {
    const auto t = expected_rational(spec, "expect.lhs_tol");
    const auto target = rep.rows.back().rhs;
    const bool ok = abs_value(rep.gap) <= t * abs_value(target);
    o.check("expect.lhs_tol", "within", ok ? "within" : "outside");
  }
  return o;
}

bool looks_like_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find('=') != std::string::npos) return true;
  }
  return false;
}

Outcome run_eps(const Common& c) {
  std::optional<SpecFile> spec;
  std::optional<MonomialIdeal> ideal;
  if (looks_like_spec(c.input)) {
    spec = SpecFile::read(c.input);
    ideal = ideal_from_spec(*spec);
  } else {
    try {
      ideal = read_ideal_file(c.input);
    } catch (const std::invalid_argument& e) {
      throw SpecError(c.input + ": " + e.what());
    }
  }
  const SpecFile* sp = spec ? &*spec : nullptr;
  const auto n = horizon_of(c, sp);
  const auto moduli = moduli_of(c, sp, 1);
  const auto tol = tol_of(c, sp);
  const auto rep = epsilon_multiplicity(*ideal, n, c.threads, tol);

  Outcome o;
  o.add({"ideal", "generators", "", "", "", "", "", "", to_string(*ideal)});
  sequence_rows(o, "eps", rep.sequence);
  ConvergenceReport conv = rep.convergence;
  if (moduli != 1) conv = convergence_report(rep.sequence, std::max<std::int64_t>(moduli, 1), tol);
  verdict_rows(o, rep.sequence, conv);
  if (spec) {
    expect_verdict(o, *spec, conv);
    if (spec->has("expect.limit")) {
      const auto want = expected_rational(*spec, "expect.limit");
      const auto& est = conv.classes.front().limit_estimate;
      const auto bound = want == 0 ? tol : tol * abs_value(want);
      o.check("expect.limit", "within", abs_value(est - want) <= bound ? "within" : "outside");
    }
  }
  return o;
}

std::string stem_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

int finish(const std::string& command, const Common& c, const Outcome& o, std::ostream& out, std::ostream& err) {
  const auto csv = o.csv();
  if (c.out_file.empty()) {
    out << csv;
  } else {
    std::ofstream f(c.out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << c.out_file << "'\n";
      return kUsage;
    }
    f << csv;
  }
  int code = kOk;
  for (const auto& m : o.mismatches) {
    err << "mismatch: " << m << "\n";
    code = kMismatch;
  }
  if (!c.golden_dir.empty()) {
    const auto path = std::filesystem::path(c.golden_dir) / (command + "_" + stem_of(c.input) + ".csv");
    if (c.update_golden) {
      std::ofstream g(path, std::ios::binary);
      if (!g) {
        err << "error: cannot write golden file " << path.string() << "\n";
        return kUsage;
      }
      g << csv;
    } else {
      std::ifstream g(path, std::ios::binary);
      if (!g) {
        err << "mismatch: golden file " << path.string() << " is missing\n";
        return kMismatch;
      }
      std::stringstream buf;
      buf << g.rdbuf();
      if (buf.str() != csv) {
        std::istringstream a(buf.str()), b(csv);
        std::string la, lb;
        int line = 0;
        while (true) {
          ++line;
          const bool ga = static_cast<bool>(std::getline(a, la));
          const bool gb = static_cast<bool>(std::getline(b, lb));
          if (!ga && !gb) break;
          if (!ga || !gb || la != lb) {
            err << "mismatch: " << path.string() << " differs at line " << line << "\n  golden: " << (ga ? la : "<eof>")
                << "\n  actual: " << (gb ? lb : "<eof>") << "\n";
            break;
          }
        }
        code = kMismatch;
      }
    }
  }
  return code;
}

void add_common(CLI::App* sub, Common& c, bool with_moduli) {
  sub->add_option("input", c.input, "Specification file")->required();
  sub->add_option("--horizon", c.horizon, "Largest level index")->check(CLI::PositiveNumber);
  if (with_moduli) sub->add_option("--moduli", c.moduli, "Test residue classes mod r for r = 1..r_max");
  sub->add_option("--tol", c.tol, "Relative tolerance (integer, p/q or decimal)");
  sub->add_option("--out", c.out_file, "Write CSV to this file instead of stdout");
  sub->add_option("--golden", c.golden_dir, "Compare the CSV with DIR/<command>_<spec>.csv");
  sub->add_flag("--update-golden", c.update_golden, "Write the golden file instead of comparing");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic invariants of graded families and linear series", "asymult"};
  app.require_subcommand(1);
  Common c;
  std::vector<std::int64_t> truncations, pset;

  auto* semigroup = app.add_subcommand("semigroup", "Semigroup invariants, limits and truncations");
  add_common(semigroup, c, false);
  semigroup->add_option("--truncate", truncations, "Truncation levels p")->delimiter(',')->check(CLI::PositiveNumber);
  auto* family = app.add_subcommand("family", "Length sequence and convergence verdicts of a graded family");
  add_common(family, c, true);
  auto* series = app.add_subcommand("series", "Dimensions, Kodaira-Iitaka dimension and index of a linear series");
  add_common(series, c, true);
  auto* volmult = app.add_subcommand("volmult", "Volume versus multiplicity of a graded family");
  add_common(volmult, c, false);
  volmult->add_option("--pset", pset, "Values of p")->delimiter(',')->check(CLI::PositiveNumber);
  auto* eps = app.add_subcommand("eps", "Epsilon multiplicity sequence of a monomial ideal");
  add_common(eps, c, true);

  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) storage.emplace_back("asymult");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Outcome o;
    std::string command;
    if (semigroup->parsed()) command = "semigroup", o = run_semigroup(c, truncations);
    else if (family->parsed()) command = "family", o = run_family(c);
    else if (series->parsed()) command = "series", o = run_series(c);
    else if (volmult->parsed()) command = "volmult", o = run_volmult(c, pset);
    else command = "eps", o = run_eps(c);
    return finish(command, c, o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace asymult::cli
