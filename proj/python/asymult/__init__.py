"""Exact asymptotic invariants of graded families of monomial ideals and linear series.

Integers come back as Python ints and exact rationals as fractions.Fraction.
Ideals are lists of exponent vectors, e.g. [[2, 0], [1, 1]] for (x^2, xy).
"""

from ._core import (
    Family,
    LinearSeries,
    Semigroup,
    SpecError,
    artin_series,
    artin_tau_family,
    colength,
    convergence_report,
    corrupted_family,
    dao_smirnov_family,
    epsilon_multiplicity,
    example1_family,
    example2_series,
    full_series,
    multiplicity,
    power,
    power_family,
    relative_length,
    run_cli,
    saturate,
    saturation_family,
    symbolic_family,
    theorem8_series,
    theorem21_series,
    thmN1_series,
    valuation_family,
)

__all__ = [name for name in dir() if not name.startswith("_")]
