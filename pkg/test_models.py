#!/usr/bin/env python3
"""
Tests for the algebraic model catalog, holonomy, almost-Einstein scales,
the type III obstruction and the abstract-algebra dictionary.
"""

from fractions import Fraction

import pytest

from g2cartan.algebra.param_poly import ParamPoly
from g2cartan.algebra.scalar_tower import I, Scalar
from g2cartan.errors import G2CartanError, UnknownLabel
from g2cartan.models import (
    ROWS,
    almost_einstein_dim,
    build_model,
    curvature_coefficients,
    holonomy,
    replicate_iii6_obstruction,
    verify_dictionary,
    verify_model,
)
from g2cartan.models.catalog import parse_label
from g2cartan.types import ModelLabel


@pytest.mark.parametrize(
    "label,params",
    [
        ("N.6", {}),
        ("N.7", {"c": 0}),
        ("N.7", {"c": 1}),
        ("D.6", {"a": 0}),
        ("D.6", {"a": Fraction(3, 2)}),
        ("D.6", {"a": Fraction(3, 2) * I}),
    ],
)
def test_catalog_models_verify(label, params):
    report = verify_model(build_model(label, params))
    assert report.passed, [(c.name, c.witness) for c in report.failures()]


def test_n6_curvature_coefficients():
    coefficients = curvature_coefficients(build_model("N.6"))
    assert coefficients is not None
    nonzero = {k: v for k, v in coefficients.items() if v}
    assert nonzero == {"kappa4": 42, "kappa5": -30, "kappa6": 20, "kappa7": -4, "kappa8": 6}


def test_d6_curvature_coefficients_follow_parameter():
    a = Fraction(3, 2)
    coefficients = curvature_coefficients(build_model("D.6", {"a": a}))
    assert coefficients is not None
    assert coefficients["kappa4"] == -4
    assert coefficients["kappa6"] == a * Fraction(4, 3)
    assert coefficients["kappa8"] == -2 * a * a


def test_model_dimensions():
    assert build_model("N.7", {"c": 2}).dim == 7
    assert build_model("N.6").dim == 6
    assert build_model("D.6", {"a": 1}).dim == 6
    assert build_model("flat").dim == 14


def test_parse_label():
    assert parse_label("N.7_c") == ModelLabel.N7
    assert parse_label("D.6") == ModelLabel.D6
    assert parse_label("b=0") == ModelLabel.B0
    with pytest.raises(UnknownLabel):
        parse_label("III.6")


def test_formal_model_keeps_parameter_symbolic():
    model = build_model("D.6", formal=True)
    assert model.formal
    assert not build_model("D.6", {"a": 1}).formal
    with pytest.raises(G2CartanError):
        holonomy(model)


def test_flat_model_holonomy_is_trivial():
    flat = build_model("flat")
    hol = holonomy(flat)
    assert hol.dim == 0
    assert hol.tag() == "trivial"
    assert almost_einstein_dim(flat) == 7


def test_d6_at_zero_has_sl3_holonomy():
    model = build_model("D.6", {"a": 0})
    hol = holonomy(model)
    assert hol.dim == 8
    assert hol.tag() == "sl3"
    assert almost_einstein_dim(model, hol) == 1


def test_n7_at_zero_has_heisenberg_holonomy():
    hol = holonomy(build_model("N.7", {"c": 0}))
    assert hol.dim == 5
    assert hol.tag() == "heis5"


def test_holonomy_contains_curvature_values():
    model = build_model("D.6", {"a": 0})
    hol = holonomy(model)
    assert all(hol.contains(v) for v in hol.initial)
    assert hol.contains(model.curvature.value("f10", "f32"))


def test_type_three_model_does_not_exist():
    report = replicate_iii6_obstruction()
    assert report.passed, report.failures()
    assert report.data["solution_direction"] == {"a": "1", "b": "-1/3", "c": "1"}


@pytest.mark.parametrize("row", sorted(ROWS))
def test_dictionary_rows(row):
    report = verify_dictionary(row)
    assert report.passed, [(c.name, c.witness) for c in report.failures()]


def test_dictionary_generic_row_with_other_parameter():
    report = verify_dictionary("D.6-generic", Scalar(5))
    assert report.passed


def test_unknown_dictionary_row():
    with pytest.raises(UnknownLabel):
        verify_dictionary("D.7")


@pytest.mark.parametrize("label", ["N.7", "D.6"])
def test_formal_models_verify_identically(label):
    report = verify_model(build_model(label, formal=True))
    assert report.passed, [(c.name, c.witness) for c in report.failures()]


def test_formal_killing_determinant_identity():
    model = build_model("D.6", formal=True)
    det = model.table.killing_determinant()
    a = ParamPoly.variable("a")
    assert isinstance(det, ParamPoly)
    assert det == 4096 * (4 * a * a + 9) ** 3 * (a * a - 4) ** 2
    assert det.degree == 10
    report = verify_model(model)
    assert next(c for c in report.checks if c.name == "model.killing_determinant").passed


def test_formal_rank_checks_use_leading_parts():
    model = build_model("N.7", formal=True)
    assert any(isinstance(c, ParamPoly) for x in model.basis.values() for c in x.to_vector().values())
    report = verify_model(model)
    assert next(c for c in report.checks if c.name == "model.m1.coset_span").passed
    specialised = verify_model(model.evaluate(Scalar(Fraction(3, 2))))
    assert specialised.passed, [(c.name, c.witness) for c in specialised.failures()]


@pytest.mark.parametrize("label,params", [("b=0", {"a": 1}), ("flat", {})])
def test_flat_models_verify(label, params):
    model = build_model(label, params)
    assert not model.curvature
    report = verify_model(model)
    assert report.passed, [(c.name, c.witness) for c in report.failures()]


@pytest.mark.parametrize(
    "label,params,dim",
    [("N.6", {}, 14), ("D.6", {"a": 1}, 14), ("D.6", {"a": 0}, 8), ("N.7", {"c": 0}, 5)],
)
def test_holonomy_dimensions(label, params, dim):
    assert holonomy(build_model(label, params)).dim == dim


@pytest.mark.parametrize(
    "label,params,dim",
    [
        ("flat", {}, 7),
        ("N.7", {"c": 0}, 2),
        ("N.7", {"c": 1}, 2),
        ("N.6", {}, 0),
        ("D.6", {"a": 1}, 0),
        ("D.6", {"a": 0}, 1),
    ],
)
def test_almost_einstein_dimensions(label, params, dim):
    assert almost_einstein_dim(build_model(label, params)) == dim
