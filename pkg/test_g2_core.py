#!/usr/bin/env python3
"""
Tests for Lie(G2): structure constants, Killing form, roots, the 7-dimensional
representation and the parabolic grading.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest

from g2cartan.core.g2 import (
    BASIS,
    LABELS,
    bracket,
    cartan_matrix,
    eigenvalue_failures,
    element,
    jacobi_failures,
    killing_closed_form,
    killing_form,
    root_datum,
    root_decomposition,
)
from g2cartan.core.parabolic import (
    COSET,
    G0,
    P_PLUS,
    exp_ad,
    filtration_degree,
    filtration_failures,
    graded_dims,
    grading_failures,
    leading_part,
)
from g2cartan.core.rep7 import verify_rep7
from g2cartan.errors import NotInFiltrand, NotNilpotent


def test_basis_has_fourteen_labels():
    assert len(LABELS) == 14
    assert len(set(LABELS)) == 14


def test_jacobi_identity_on_all_triples():
    assert len(list(combinations(LABELS, 3))) == 364
    assert jacobi_failures() == []


def test_killing_form_matches_closed_form():
    pairs = list(combinations_with_replacement(LABELS, 2))
    assert len(pairs) == 105
    for a, b in pairs:
        assert killing_form(BASIS[a], BASIS[b]) == killing_closed_form(BASIS[a], BASIS[b]), (a, b)


def test_killing_form_pairs_root_spaces():
    assert killing_form(BASIS["e10"], BASIS["e10"]) == 0
    assert killing_form(BASIS["e21"], BASIS["f32"]) == 0
    assert killing_form(BASIS["e31"], BASIS["f31"]) != 0


def test_sample_brackets():
    assert bracket(BASIS["e10"], BASIS["f10"]) == element((2, "Z1"), (-3, "Z2"))
    assert bracket(BASIS["Z1"], BASIS["e21"]) == BASIS["e21"] * 2
    assert bracket(BASIS["f10"], BASIS["e10"]) == element((-2, "Z1"), (3, "Z2"))


def test_root_decomposition():
    assert eigenvalue_failures() == []
    roots = root_decomposition()
    assert len(roots) == 12
    assert roots[(3, 2)] == "e32"
    assert roots[(-1, 0)] == "f10"


def test_root_datum():
    datum = root_datum()
    assert len(datum.positive_roots) == 6
    matrix = cartan_matrix()
    assert matrix[0][0] == matrix[1][1] == 2
    assert matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0] == 1


def test_standard_representation():
    report = verify_rep7()
    assert report.passed, report.failures()
    names = [check.name for check in report.checks]
    assert "rep7.homomorphism" in names
    assert report.checks[0].count == 196


def test_grading_and_filtration():
    assert graded_dims() == [2, 1, 2, 4, 2, 1, 2]
    assert grading_failures() == []
    assert filtration_failures() == []
    assert len(COSET) == 5 and len(G0) == 4 and len(P_PLUS) == 5


def test_filtration_degree():
    assert filtration_degree(BASIS["f31"]) == -3
    assert filtration_degree(element((1, "f10"), (1, "e32"))) == -1
    assert filtration_degree(BASIS["e32"]) == 3


def test_exp_ad_of_positive_nilpotent():
    t = element((1, "Z1"), (-4, "Z2"))
    # the series stops after one term: [e21, t] = 2e21 and [e21, e21] = 0
    assert bracket(BASIS["e21"], t) == BASIS["e21"] * 2
    assert exp_ad(BASIS["e21"], t) == element((1, "Z1"), (-4, "Z2"), (2, "e21"))
    assert exp_ad(BASIS["e10"], BASIS["e32"]) == BASIS["e32"]


def test_exp_ad_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        exp_ad(BASIS["Z1"], BASIS["e10"])


def test_killing_form_on_cartan_subalgebra():
    z1, z2 = BASIS["Z1"], BASIS["Z2"]
    assert killing_form(z1, z1) == 48
    assert killing_form(z1, z2) == 24
    assert killing_form(z2, z2) == 16


def _random_element(rng, labels=LABELS, terms=3):
    chosen = rng.sample(list(labels), min(terms, len(labels)))
    return element(*((Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)), label) for label in chosen))


@pytest.fixture
def rng():
    import random

    return random.Random(1729)


def test_killing_form_is_ad_invariant(rng):
    for _ in range(200):
        x, y, z = (_random_element(rng) for _ in range(3))
        assert killing_form(bracket(x, y), z) + killing_form(y, bracket(x, z)) == 0


def test_exp_ad_is_an_automorphism(rng):
    for _ in range(40):
        n = _random_element(rng, P_PLUS)
        x, y = _random_element(rng), _random_element(rng)
        gx, gy = exp_ad(n, x), exp_ad(n, y)
        assert exp_ad(n, bracket(x, y)) == bracket(gx, gy)
        assert killing_form(gx, gy) == killing_form(x, y)


def test_leading_part():
    x = element((1, "f10"), (2, "f01"), (-1, "e32"))
    assert leading_part(x, -1) == BASIS["f10"]
    assert leading_part(BASIS["e32"], -1) == element()
    assert leading_part(BASIS["e32"], 3) == BASIS["e32"]
    with pytest.raises(NotInFiltrand):
        leading_part(x, 0)
    with pytest.raises(NotInFiltrand):
        leading_part(BASIS["f31"], -2)
