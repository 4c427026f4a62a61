from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

import asymult

ROOT = Path(__file__).resolve().parents[2]


def test_colength_of_maximal_powers():
    for n in range(1, 8):
        gens = [[a, n - a] for a in range(n + 1)]
        assert asymult.colength(gens) == comb(n + 1, 2)


def test_multiplicity_and_relative_length():
    assert asymult.multiplicity([[2, 0], [0, 3]]) == 6
    assert asymult.relative_length([[1, 0]], [[2, 0], [1, 1]]) is not None
    assert asymult.saturate([[2, 0], [1, 1]]) == [[1, 0]]


def test_semigroup_limit():
    s = asymult.Semigroup([([0], 1), ([1], 2)])
    assert s.predicted_limit() == Fraction(1, 2)
    inv = s.invariants()
    assert (inv["m"], inv["q"], inv["ind"]) == (1, 1, 1)
    k, count, value = s.empirical_limit(100)[-1]
    assert abs(value - Fraction(1, 2)) < Fraction(1, 50)
    assert s.truncate(2).predicted_limit() == 1


def test_example1_oscillates():
    f = asymult.example1_family(1, [2, 6, 26, 210])
    seq = f.length_sequence(209)
    assert seq["values"][25] == Fraction(3, 2)
    assert seq["values"][208] == 2 - Fraction(13, 209)
    report = f.convergence(300, moduli=3, threads=2)
    assert {c["verdict"] for c in report["classes"]} == {"oscillates"}


def test_graded_checks():
    assert asymult.power_family([[1, 0], [0, 1]]).check_graded(20)["passed"]
    bad = asymult.corrupted_family(1).check_graded(10)
    assert not bad["passed"] and bad["witnesses"]


def test_volume_equals_multiplicity():
    f = asymult.valuation_family([1, 2])
    r = f.volume_equals_multiplicity([2, 4], 200)
    assert r["rhs"] == {2: Fraction(1, 2), 4: Fraction(1, 2)}
    assert abs(r["lhs"] - Fraction(1, 2)) < Fraction(1, 50)
    assert asymult.valuation_family(["3/2", 1.25]).length(3) > 0


def test_series():
    assert asymult.full_series([1, 1, 1]).kappa(30) == 2
    ex2 = asymult.example2_series(3, {0})
    assert ex2.kappa(60) is None
    assert [ex2.dim(n) for n in (3, 4, 6)] == [4, 0, 7]
    l = asymult.thmN1_series(1, 2)
    assert l.kappa(60) == 1
    assert l.check_closure(8)["passed"]


def test_convergence_report_on_raw_values():
    raw = [n * n for n in range(1, 101)]
    report = asymult.convergence_report(raw, exponent=2, moduli=2)
    assert all(c["verdict"] == "converges" for c in report["classes"])
    assert report["classes"][0]["estimate"] == 1


def test_epsilon():
    r = asymult.epsilon_multiplicity([[2, 0], [1, 1]], 30)
    assert r["raw"] == [comb(n + 1, 2) for n in range(1, 31)]


def test_cli_matches_golden():
    spec = ROOT / "data" / "specs" / "sg_half.spec"
    if not spec.exists():
        pytest.skip("source tree not available")
    code, out, err = asymult.run_cli(["semigroup", str(spec)])
    assert code == 0, err
    assert out == (ROOT / "tests" / "golden" / "semigroup_sg_half.csv").read_text()
    assert asymult.run_cli(["nonsense"])[0] == 2
