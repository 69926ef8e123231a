#!/usr/bin/env python3
"""
Tests for anti-involutions, real fixed-point algebras, Killing signatures and
the so(1,3)-invariant models.
"""

import random
from fractions import Fraction

import pytest

from g2cartan.algebra.scalar_tower import ONE, ZERO, I, Scalar
from g2cartan.core.g2 import BASIS, bracket
from g2cartan.errors import G2CartanError, NotRealMatrix, RealityViolation, UnknownLabel
from g2cartan.models import build_model
from g2cartan.real_forms import (
    MODEL_TYPES,
    all_anti_involutions,
    anti_involution,
    classification_labels,
    classify_real_models,
    fixed_point_algebra,
    killing_signature,
    printed_basis_algebra,
    real_holonomy,
    so13_models,
    tau,
    verify_anti_involution,
    verify_real_tables,
    verify_so13,
)
from g2cartan.real_forms.fixed import expected_d6_types
from g2cartan.real_forms.signature import diagonal
from g2cartan.rolling.algebra import so3_pair


def test_signature_of_diagonal_matrices():
    assert killing_signature(diagonal([2, -3])) == (1, 1, 0)
    assert killing_signature(diagonal([1, 0, Fraction(-1, 2)])) == (1, 1, 1)


def test_signature_with_zero_diagonal():
    # Killing form of sl(2) in the basis H, X, Y
    assert killing_signature([[8, 0, 0], [0, 0, 4], [0, 4, 0]]) == (2, 1, 0)


def test_signature_of_compact_algebra():
    assert killing_signature(so3_pair().killing_matrix()) == (0, 6, 0)


def test_signature_rejects_complex_entries():
    with pytest.raises(NotRealMatrix):
        killing_signature([[ONE, I], [I, ONE]])


def test_signature_table_has_nine_types():
    assert len(MODEL_TYPES) == 9
    assert MODEL_TYPES[(3, 3, 0)] == "so(1,3)"
    assert MODEL_TYPES[(0, 3, 3)] == "e(3)"


def _random_invertible(rng, n):
    """Shuffled upper triangular matrix with nonzero diagonal."""
    rows = []
    for i in range(n):
        row = [ZERO] * n
        row[i] = Scalar(rng.choice([1, -2, 3]))
        for j in range(i + 1, n):
            row[j] = Scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        rows.append(row)
    rng.shuffle(rows)
    return rows


@pytest.mark.parametrize("values,expected", [([2, -3, 0, 5], (2, 1, 1)), ([1, 1, -1, 0, 0], (2, 1, 2)), ([-4, -1, 7], (1, 2, 0))])
def test_signature_is_invariant_under_congruence(values, expected):
    rng = random.Random(99)
    m = diagonal(values)
    n = len(values)
    assert killing_signature(m) == expected
    for _ in range(10):
        p = _random_invertible(rng, n)
        congruent = [
            [sum((p[a][i] * m[a][b] * p[b][j] for a in range(n) for b in range(n)), ZERO) for j in range(n)]
            for i in range(n)
        ]
        assert killing_signature(congruent) == expected


@pytest.mark.parametrize("m", all_anti_involutions(), ids=lambda m: m.label)
def test_listed_maps_are_anti_involutions(m):
    report = verify_anti_involution(m)
    assert report.passed, report.failures()


def test_unknown_anti_involution():
    with pytest.raises(UnknownLabel):
        anti_involution("sigma_1")
    with pytest.raises(UnknownLabel):
        anti_involution("psi_2")


@pytest.mark.parametrize("label", ["tau_i", "tau_-i"])
def test_tau_needs_a_real_zeta(label):
    with pytest.raises(UnknownLabel):
        anti_involution(label)
    with pytest.raises(UnknownLabel):
        tau(label.partition("_")[2])
    assert label not in {m.label for m in all_anti_involutions()}
    # with zeta = i the bracket [e01, f01] would pick up zeta^2 = -1
    z = I
    assert bracket(BASIS["e01"] * z, BASIS["f01"] * z) == -bracket(BASIS["e01"], BASIS["f01"])


def test_listed_maps_cover_ten_anti_involutions():
    labels = [m.label for m in all_anti_involutions()]
    assert len(labels) == 10
    assert [name for name in labels if name.startswith("tau")] == ["tau_1", "tau_-1"]


def test_anti_involution_on_model():
    report = verify_anti_involution("tilde_1", build_model("D.6", {"a": 1}))
    assert report.passed
    assert report.data["psi"] == "tilde_1"


def test_reality_condition():
    with pytest.raises(RealityViolation):
        verify_anti_involution("psi_1", build_model("D.6", {"a": 1 + I}))


def test_classification_labels():
    assert classification_labels("N.6") == ["tau_1", "tau_-1"]
    assert classification_labels("N.7", 0) == ["psi_1", "psi_i"]
    assert classification_labels("N.7", 2) == ["psi_1", "psi_-1"]
    assert classification_labels("N.7", 2 * I) == ["psi_i", "psi_-i"]
    assert classification_labels("D.6", 0) == ["psi_1", "psi_i", "tilde_1", "tilde_i"]
    assert classification_labels("D.6", Fraction(1, 2) * I) == ["psi_i", "tilde_i", "tilde_-i"]
    with pytest.raises(RealityViolation):
        classification_labels("D.6", -1)


def test_expected_types_by_range():
    assert expected_d6_types(5)["tilde_-1"] == "so(3)xso(3)"
    assert expected_d6_types(2)["psi_1"] == "sl(2,R)xe(1,1)"
    assert expected_d6_types(Fraction(1, 2) * I)["psi_i"] == "so(1,3)"


def test_d6_real_forms_at_one():
    report = classify_real_models("D.6", 1)
    assert report.passed, report.failures()
    types = {row["psi"]: row["type"] for row in report.data["models"]}
    assert types == {
        "psi_1": "sl(2,R)xsl(2,R)",
        "tilde_1": "sl(2,R)xso(3)",
        "tilde_-1": "sl(2,R)xso(3)",
    }


def test_d6_real_forms_at_boundary():
    report = classify_real_models("D.6", Fraction(3, 2) * I)
    assert report.passed, report.failures()
    types = {row["psi"]: row["type"] for row in report.data["models"]}
    assert types == {"psi_i": "e(1,2)", "tilde_i": "e(3)", "tilde_-i": "e(1,2)"}


@pytest.mark.parametrize("family,param", [("N.6", 0), ("N.7", 1), ("N.7", I)])
def test_n_family_real_forms_close(family, param):
    report = classify_real_models(family, param)
    assert report.passed, report.failures()
    assert all(row["dim"] == build_model(family, {"c": param}).dim for row in report.data["models"])


def test_fixed_algebra_of_psi_one_is_split():
    algebra = fixed_point_algebra("psi_1", build_model("D.6", {"a": 3}))
    assert algebra.dim == 6
    assert algebra.type == "sl(2,R)xsl(2,R)"


def test_printed_basis_matches_fixed_algebra():
    model = build_model("D.6", {"a": Scalar(0, 2)})
    printed = printed_basis_algebra("tilde_i", model)
    assert printed.signature == fixed_point_algebra("tilde_i", model).signature
    with pytest.raises(UnknownLabel):
        printed_basis_algebra("tau_1", model)


def test_real_holonomy_of_d6_at_zero():
    model = build_model("D.6", {"a": 0})
    assert real_holonomy("psi_1", model).type == "sl(3,R)"
    assert real_holonomy("tilde_1", model).type == "su(1,2)"


def test_real_holonomy_of_n7_is_heisenberg():
    assert real_holonomy("psi_1", build_model("N.7", {"c": 0})).type == "heis5"


def test_real_tables():
    report = verify_real_tables()
    assert report.passed, report.failures()
    names = {check.name for check in report.checks}
    assert {"realform.redundancy", "realform.parameter_action"} <= names


@pytest.mark.parametrize(
    "case,alpha,a2,psi",
    [
        ("H", 1, Fraction(0), "psi_i"),
        ("C", 1, Fraction(0), "tilde_i"),
        ("H", 2, Fraction(-81, 136), "psi_i"),
        ("C", 2, Fraction(-81, 136), "tilde_-i"),
        ("C", Fraction(1, 2), Fraction(-81, 136), "tilde_i"),
    ],
)
def test_so13_models(case, alpha, a2, psi):
    report = verify_so13(case, alpha)
    assert report.passed, report.failures()
    assert report.data["a2"] == str(a2)
    assert report.data["psi"] == psi


def test_so13_parameter_stays_in_range():
    for alpha in (Fraction(1, 3), 3, 7):
        solved = so13_models("H", alpha)
        assert Fraction(-9, 4) < solved.a_squared <= 0
        assert solved.mismatches() == []


def test_so13_rejects_zero_alpha():
    with pytest.raises(G2CartanError):
        so13_models("C", 0)
