#include "asymult/experiments.hpp"
#include "asymult/family.hpp"
#include "asymult/monomial.hpp"
#include "asymult/semigroup.hpp"
#include "asymult/series.hpp"
#include "asymult/spec_file.hpp"
#include "cli.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace asymult;

namespace {

py::object to_py(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

template <class T>
py::list to_py_list(const std::vector<T>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

// Accepts int, fractions.Fraction, exact decimal strings such as "0.02", or floats
// (through their shortest decimal representation).
Rational to_rational(const py::handle& obj) { return parse_exact_number(py::str(obj)); }

RatVector to_rat_vector(const std::vector<py::object>& values) {
  RatVector out;
  for (const auto& v : values) out.push_back(to_rational(v));
  return out;
}

MonomialIdeal to_ideal(const std::vector<Exponent>& gens, std::optional<std::size_t> num_vars) {
  if (!num_vars) {
    if (gens.empty()) throw std::invalid_argument("num_vars is required for the zero ideal");
    num_vars = gens.front().size();
  }
  return MonomialIdeal(*num_vars, gens);
}

BlockSchedule to_schedule(const std::optional<std::vector<std::int64_t>>& prefix) {
  return prefix ? BlockSchedule(*prefix) : BlockSchedule();
}

py::object kappa_to_py(const Kappa& k) { return k.value ? py::object(py::int_(*k.value)) : py::object(py::none()); }

py::dict sequence_dict(const ScaledSequence& s) {
  py::dict d;
  d["normalization"] = s.normalization;
  d["exponent"] = s.exponent;
  d["n"] = s.n;
  d["raw"] = to_py_list(s.raw);
  d["values"] = to_py_list(s.values);
  return d;
}

ScaledSequence sequence_from_raw(const std::vector<py::object>& raw, std::int64_t exponent,
                                 const py::object& multiplier) {
  std::vector<Integer> ints;
  for (const auto& v : raw) ints.emplace_back(std::string(py::str(v)));
  return make_scaled(ints, exponent, Integer(std::string(py::str(multiplier))), "raw/n^" + std::to_string(exponent));
}

py::dict report_dict(const ConvergenceReport& r) {
  py::dict d;
  d["tol"] = to_py(r.tol);
  d["horizon"] = r.horizon;
  py::list classes;
  for (const auto& c : r.classes) {
    py::dict row;
    row["modulus"] = c.modulus;
    row["residue"] = c.residue;
    row["verdict"] = to_string(c.verdict);
    row["samples"] = c.samples;
    row["liminf"] = to_py(c.liminf_est);
    row["limsup"] = to_py(c.limsup_est);
    row["estimate"] = to_py(c.limit_estimate);
    classes.append(row);
  }
  d["classes"] = classes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact asymptotic invariants of graded families and linear series";

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

  // Monomial ideals are passed as lists of exponent vectors.
  m.def(
      "colength", [](const std::vector<Exponent>& gens, std::optional<std::size_t> num_vars) {
        return to_py(colength(to_ideal(gens, num_vars)));
      },
      py::arg("generators"), py::arg("num_vars") = py::none());
  m.def(
      "relative_length",
      [](const std::vector<Exponent>& j, const std::vector<Exponent>& i, std::optional<std::size_t> num_vars) {
        return to_py(relative_length(to_ideal(j, num_vars), to_ideal(i, num_vars)));
      },
      py::arg("outer"), py::arg("inner"), py::arg("num_vars") = py::none());
  m.def(
      "multiplicity", [](const std::vector<Exponent>& gens) { return to_py(multiplicity_oracle(to_ideal(gens, {}))); },
      py::arg("generators"));
  m.def(
      "saturate", [](const std::vector<Exponent>& gens) { return saturate(to_ideal(gens, {})).generators(); },
      py::arg("generators"));
  m.def(
      "power",
      [](const std::vector<Exponent>& gens, std::int64_t n) { return power(to_ideal(gens, {}), n).generators(); },
      py::arg("generators"), py::arg("n"));

  py::class_<GradedSemigroup>(m, "Semigroup")
      .def(py::init([](const std::vector<std::pair<Point, std::int64_t>>& gens, const std::string& label) {
             if (gens.empty()) throw std::invalid_argument("a semigroup needs at least one generator");
             std::vector<SemigroupGenerator> out;
             for (const auto& [v, d] : gens) out.push_back({v, d});
             return GradedSemigroup(gens.front().first.size(), std::move(out), label);
           }),
           py::arg("generators"), py::arg("label") = "")
      .def_property_readonly("label", &GradedSemigroup::label)
      .def_property_readonly("point_dim", &GradedSemigroup::point_dim)
      .def("invariants",
           [](const GradedSemigroup& s) {
             const auto inv = invariants(s);
             py::dict d;
             d["m"] = inv.m;
             d["q"] = inv.q;
             d["ind"] = to_py(inv.ind);
             d["volume"] = to_py(inv.body.volume);
             return d;
           })
      .def("predicted_limit", [](const GradedSemigroup& s) { return to_py(predicted_limit(s)); })
      .def(
          "empirical_limit",
          [](const GradedSemigroup& s, std::int64_t horizon) {
            py::list out;
            for (const auto& p : empirical_limit(s, horizon)) out.append(py::make_tuple(p.k, p.count, to_py(p.value)));
            return out;
          },
          py::arg("horizon"))
      .def("level_counts",
           [](const GradedSemigroup& s, std::int64_t horizon) {
             std::vector<std::size_t> out;
             for (const auto& level : s.enumerate_levels(horizon)) out.push_back(level.size());
             return out;
           })
      .def("truncate", [](const GradedSemigroup& s, std::int64_t p) { return truncate(s, p); }, py::arg("p"));

  py::class_<GradedFamily>(m, "Family")
      .def_property_readonly("name", &GradedFamily::name)
      .def_property_readonly("dim", &GradedFamily::dim)
      .def("length", [](const GradedFamily& f, std::int64_t n) { return to_py(f.length(n)); }, py::arg("n"))
      .def(
          "ideal", [](const GradedFamily& f, std::int64_t n) { return f.monomial_level(n).generators(); },
          py::arg("n"))
      .def(
          "length_sequence",
          [](const GradedFamily& f, std::int64_t horizon, unsigned threads) {
            return sequence_dict(length_sequence(f, horizon, threads));
          },
          py::arg("horizon"), py::arg("threads") = 1)
      .def(
          "check_graded",
          [](const GradedFamily& f, std::int64_t horizon) {
            const auto r = check_graded(f, horizon);
            py::list witnesses;
            for (const auto& v : r.violations) witnesses.append(py::make_tuple(v.a, v.b, v.witness));
            py::dict d;
            d["passed"] = r.passed();
            d["violations"] = r.violation_count;
            d["witnesses"] = witnesses;
            return d;
          },
          py::arg("horizon"))
      .def(
          "convergence",
          [](const GradedFamily& f, std::int64_t horizon, std::int64_t moduli, const py::object& tol,
             unsigned threads) {
            return report_dict(convergence_report(length_sequence(f, horizon, threads), moduli, to_rational(tol)));
          },
          py::arg("horizon"), py::arg("moduli") = 1, py::arg("tol") = "1/50", py::arg("threads") = 1)
      .def(
          "volume_equals_multiplicity",
          [](const GradedFamily& f, const std::vector<std::int64_t>& ps, std::int64_t horizon, unsigned threads) {
            const auto r = volume_equals_multiplicity(f, ps, horizon, threads);
            py::dict rhs;
            for (const auto& row : r.rows) rhs[py::int_(row.p)] = to_py(row.rhs);
            py::dict d;
            d["rhs"] = rhs;
            d["lhs"] = to_py(r.lhs);
            d["gap"] = to_py(r.gap);
            return d;
          },
          py::arg("ps"), py::arg("horizon"), py::arg("threads") = 1);

  m.def(
      "power_family", [](const std::vector<Exponent>& gens) { return power_family(to_ideal(gens, {})); },
      py::arg("generators"));
  m.def(
      "valuation_family", [](const std::vector<py::object>& lambda) { return valuation_family(to_rat_vector(lambda)); },
      py::arg("weights"));
  m.def(
      "saturation_family", [](const std::vector<Exponent>& gens) { return saturation_family(to_ideal(gens, {})); },
      py::arg("generators"));
  m.def(
      "symbolic_family",
      [](const std::vector<Exponent>& i, const std::vector<Exponent>& j) {
        return symbolic_family(to_ideal(i, {}), to_ideal(j, {}));
      },
      py::arg("ideal"), py::arg("j_ideal"));
  m.def(
      "example1_family",
      [](std::size_t d, std::optional<std::vector<std::int64_t>> s) { return example1_family(d, to_schedule(s)); },
      py::arg("d"), py::arg("schedule") = py::none());
  m.def(
      "dao_smirnov_family",
      [](std::size_t d, std::optional<std::vector<std::int64_t>> s) { return dao_smirnov_family(d, to_schedule(s)); },
      py::arg("d"), py::arg("schedule") = py::none());
  m.def(
      "artin_tau_family",
      [](std::int64_t t, std::optional<std::vector<std::int64_t>> s) { return artin_tau_family(t, to_schedule(s)); },
      py::arg("t"), py::arg("schedule") = py::none());
  m.def("corrupted_family", &corrupted_family, py::arg("d"));

  py::class_<MonomialLinearSeries>(m, "LinearSeries")
      .def_property_readonly("name", &MonomialLinearSeries::name)
      .def("dim", [](const MonomialLinearSeries& l, std::int64_t n) { return to_py(l.dim(n)); }, py::arg("n"))
      .def(
          "dims", [](const MonomialLinearSeries& l, std::int64_t horizon) { return to_py_list(dims(l, horizon)); },
          py::arg("horizon"))
      .def(
          "kappa",
          [](const MonomialLinearSeries& l, std::int64_t horizon) {
            return kappa_to_py(kodaira_iitaka(l, horizon).kappa);
          },
          py::arg("horizon"))
      .def(
          "index", [](const MonomialLinearSeries& l, std::int64_t horizon) { return index_estimate(l, horizon); },
          py::arg("horizon"))
      .def(
          "check_closure",
          [](const MonomialLinearSeries& l, std::int64_t horizon) {
            const auto r = check_closure(l, horizon);
            py::list witnesses;
            for (const auto& v : r.violations) witnesses.append(py::make_tuple(v.a, v.b, v.witness));
            py::dict d;
            d["passed"] = r.passed();
            d["violations"] = r.violation_count;
            d["witnesses"] = witnesses;
            return d;
          },
          py::arg("horizon"))
      .def(
          "convergence",
          [](const MonomialLinearSeries& l, std::int64_t horizon, std::int64_t exponent, std::int64_t moduli,
             const py::object& tol, unsigned threads) {
            return report_dict(
                convergence_report(dimension_sequence(l, horizon, exponent, threads), moduli, to_rational(tol)));
          },
          py::arg("horizon"), py::arg("exponent"), py::arg("moduli") = 1, py::arg("tol") = "1/50",
          py::arg("threads") = 1);

  m.def("full_series", &full_series, py::arg("weights"), py::arg("twist") = 1);
  m.def(
      "example2_series",
      [](std::int64_t modulus, std::set<std::int64_t> residues) {
        return example2_series(TSet::residues(modulus, std::move(residues)));
      },
      py::arg("modulus"), py::arg("residues"));
  m.def(
      "theorem21_series",
      [](std::int64_t modulus, std::set<std::int64_t> residues) {
        return theorem21_series(TSet::residues(modulus, std::move(residues)));
      },
      py::arg("modulus"), py::arg("residues"));
  auto params = [](std::optional<std::int64_t> s, std::int64_t r, std::vector<std::int64_t> weights, std::int64_t e,
                   std::optional<std::vector<std::int64_t>> schedule) {
    ThmN1Params p;
    p.s = s;
    p.r = r;
    p.weights = weights.empty() ? std::vector<std::int64_t>(static_cast<std::size_t>(std::max(r, s.value_or(0))) + 1, 1)
                                : std::move(weights);
    p.e = e;
    p.schedule = to_schedule(schedule);
    return p;
  };
  m.def(
      "thmN1_series",
      [params](std::optional<std::int64_t> s, std::int64_t r, std::vector<std::int64_t> weights, std::int64_t e,
               std::optional<std::vector<std::int64_t>> schedule) {
        return thmN1_series(params(s, r, std::move(weights), e, schedule));
      },
      py::arg("s"), py::arg("r"), py::arg("weights") = std::vector<std::int64_t>{}, py::arg("e") = 1,
      py::arg("schedule") = py::none());
  m.def(
      "theorem8_series",
      [params](std::optional<std::int64_t> s, std::int64_t r, std::vector<std::int64_t> weights, std::int64_t e,
               std::optional<std::vector<std::int64_t>> schedule) {
        return theorem8_series(params(s, r, std::move(weights), e, schedule));
      },
      py::arg("s"), py::arg("r"), py::arg("weights") = std::vector<std::int64_t>{}, py::arg("e") = 1,
      py::arg("schedule") = py::none());
  m.def(
      "artin_series",
      [](std::int64_t t, std::optional<std::vector<std::int64_t>> s) { return artin_series(t, to_schedule(s)); },
      py::arg("t"), py::arg("schedule") = py::none());

  m.def(
      "convergence_report",
      [](const std::vector<py::object>& raw, std::int64_t exponent, std::int64_t moduli, const py::object& tol,
         const py::object& multiplier) {
        return report_dict(convergence_report(sequence_from_raw(raw, exponent, multiplier), moduli, to_rational(tol)));
      },
      py::arg("raw"), py::arg("exponent") = 0, py::arg("moduli") = 1, py::arg("tol") = "1/50",
      py::arg("multiplier") = 1);
  m.def(
      "epsilon_multiplicity",
      [](const std::vector<Exponent>& gens, std::int64_t horizon, unsigned threads) {
        const auto r = epsilon_multiplicity(to_ideal(gens, {}), horizon, threads);
        auto d = sequence_dict(r.sequence);
        d["verdict"] = to_string(r.convergence.classes.front().verdict);
        return d;
      },
      py::arg("generators"), py::arg("horizon"), py::arg("threads") = 1);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "asymult");
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
