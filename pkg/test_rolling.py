#!/usr/bin/env python3
"""
Tests for the rolling distribution of two spheres and its D.6 embedding.
"""

from fractions import Fraction

import pytest

from g2cartan.errors import ExceptionalRatio, G2CartanError, ResidualNonzero
from g2cartan.rolling import (
    RollingAlgebra,
    classify_rolling,
    classifying_invariant,
    invariant_monotonicity_check,
    involution_failures,
    solve_embedding,
    verify_rolling,
)
from g2cartan.rolling.algebra import ad_t_eigen_failures, flip_orientations, swap_factors


def test_classifying_invariant_values():
    assert classifying_invariant(2) == Fraction(-36, 7)
    assert classifying_invariant(5) == Fraction(1521, 224)
    assert classifying_invariant(Fraction(1, 2)) == classifying_invariant(2)
    assert classifying_invariant(-5) == classifying_invariant(5)


def test_invariant_at_holonomic_ratio():
    assert classifying_invariant(1) == Fraction(-9, 4)


@pytest.mark.parametrize("rho", [3, -3, Fraction(1, 3), Fraction(-1, 3)])
def test_invariant_poles(rho):
    with pytest.raises(ExceptionalRatio):
        classifying_invariant(rho)


def test_invariant_rejects_zero():
    with pytest.raises(G2CartanError):
        classifying_invariant(0)


@pytest.mark.parametrize("rho", [2, Fraction(5, 2), 5])
def test_derived_flag(rho):
    assert RollingAlgebra(rho).derived_flag() == [3, 4, 6]


@pytest.mark.parametrize("rho", [0, 1, -1])
def test_degenerate_ratios_are_rejected(rho):
    with pytest.raises(G2CartanError):
        RollingAlgebra(rho)


def test_involutions_relate_ratios():
    assert involution_failures(2) == []
    assert involution_failures(Fraction(7, 3)) == []
    v = {"i1": 1, "j2": 2}
    assert swap_factors(swap_factors(v)) == v
    assert flip_orientations(flip_orientations(v)) == v


def test_ad_t_eigenvalues():
    assert ad_t_eigen_failures(2) == []
    assert ad_t_eigen_failures(6) == []


@pytest.mark.parametrize("rho", [2, Fraction(5, 2), 5])
def test_generic_embedding(rho):
    solution = solve_embedding(rho)
    assert not solution.exceptional
    assert solution.residuals() == []
    assert solution.a_squared == classifying_invariant(rho)


def test_exceptional_embedding():
    solution = solve_embedding(3, "exceptional")
    assert solution.exceptional
    assert solution.residuals() == []


def test_exceptional_mode_needs_ratio_three():
    with pytest.raises(G2CartanError):
        solve_embedding(2, "exceptional")
    with pytest.raises(G2CartanError):
        solve_embedding(2, "sideways")


def test_generic_embedding_fails_at_three():
    with pytest.raises((ExceptionalRatio, ResidualNonzero)):
        solve_embedding(3)


def test_classify_rolling():
    a2, psi, verdict = classify_rolling(5)
    assert a2 == Fraction(1521, 224)
    assert psi == "tilde_-1"
    assert verdict == "6-dimensional symmetry"
    assert classify_rolling(2)[1] == "tilde_i"
    with pytest.raises(ExceptionalRatio) as excinfo:
        classify_rolling(3)
    assert excinfo.value.symmetry_dim == 14
    with pytest.raises(G2CartanError):
        classify_rolling(Fraction(1, 2))


@pytest.mark.parametrize("rho,psi", [(2, "tilde_i"), (5, "tilde_-1")])
def test_verify_rolling(rho, psi):
    report = verify_rolling(rho)
    assert report.passed, report.failures()
    assert report.data["psi"] == psi
    assert report.data["exceptional"] is False
    assert report.data["residuals_zero"] is True
    assert report.ext == f"a^2={classifying_invariant(rho)}"


def test_verify_rolling_at_exceptional_ratio():
    report = verify_rolling(3)
    assert report.passed, report.failures()
    assert report.data["exceptional"] is True
    assert report.data["symmetry_dim"] == 14


def test_invariant_is_monotone_on_both_intervals():
    samples = [Fraction(6, 5), Fraction(3, 2), 2, Fraction(5, 2), Fraction(7, 2), 5, 10]
    report = invariant_monotonicity_check(samples)
    assert report.passed, report.failures()
    assert report.data["invariants"]["2"] == "-36/7"


def test_monotonicity_flags_bad_samples():
    report = invariant_monotonicity_check([Fraction(1, 2), 2])
    assert not report.passed
    assert report.failures()[0].name == "rolling.samples_in_range"
