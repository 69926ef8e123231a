#!/usr/bin/env python3
"""
Tests for binary quartics, their annihilators in g0 and the Tanaka prolongation.
"""

import random
from fractions import Fraction

import pytest

from g2cartan.core.g2 import BASIS
from g2cartan.core.parabolic import exp_ad
from g2cartan.errors import ZeroQuartic
from g2cartan.prolongation import NORMAL_FORMS, BinaryQuartic, annihilator, g0_action, tanaka_prolong
from g2cartan.prolongation.quartics import exp_g0_action, normal_form, rigidity_sweep, same_span
from g2cartan.types import RootType


@pytest.mark.parametrize(
    "tag,ann_dim",
    [(RootType.N, 2), (RootType.III, 1), (RootType.D, 1), (RootType.II, 0), (RootType.I, 0)],
)
def test_annihilator_dimension_by_root_type(tag, ann_dim):
    assert len(annihilator(NORMAL_FORMS[tag])) == ann_dim


@pytest.mark.parametrize(
    "tag,dims",
    [
        (RootType.N, {-3: 2, -2: 1, -1: 2, 0: 2, 1: 0, 2: 0, 3: 0}),
        (RootType.D, {-3: 2, -2: 1, -1: 2, 0: 1, 1: 0, 2: 0, 3: 0}),
        (RootType.I, {-3: 2, -2: 1, -1: 2, 0: 0, 1: 0, 2: 0, 3: 0}),
    ],
)
def test_prolongation_is_rigid(tag, dims):
    prolongation = tanaka_prolong(NORMAL_FORMS[tag])
    assert prolongation.dims() == dims
    assert prolongation.rigid
    assert prolongation.dim == sum(dims.values())


def test_annihilator_elements_kill_the_quartic():
    phi = NORMAL_FORMS[RootType.N]
    for x in annihilator(phi):
        assert not g0_action(x, phi)


def test_g0_action_is_linear_in_the_quartic():
    phi = BinaryQuartic([1, 2, 0, -1, 3])
    psi = BinaryQuartic([0, 1, 1, 0, Fraction(1, 2)])
    x = BASIS["e01"]
    assert g0_action(x, phi + psi) == g0_action(x, phi) + g0_action(x, psi)


def test_scaling_does_not_change_prolongation():
    phi = BinaryQuartic([0, 0, 1, 0, 0])
    assert tanaka_prolong(phi * 5).dims() == tanaka_prolong(phi).dims()


def test_zero_quartic_is_rejected():
    with pytest.raises(ZeroQuartic):
        tanaka_prolong(BinaryQuartic([0, 0, 0, 0, 0]))


def test_quartic_needs_five_coefficients():
    with pytest.raises(ValueError):
        BinaryQuartic([1, 2, 3])


def test_type_one_normal_form_rejects_degenerate_cross_ratio():
    with pytest.raises(ValueError):
        normal_form(RootType.I, Fraction(1))


def test_random_quartics_are_rigid():
    assert rigidity_sweep(8, seed=3) == []


def test_proportionality():
    phi = BinaryQuartic([1, 0, 0, 0, 1])
    assert phi.is_proportional_to(phi * Fraction(-2, 3))
    assert not phi.is_proportional_to(BinaryQuartic.monomial(2))


@pytest.mark.parametrize("tag", [RootType.N, RootType.III, RootType.D])
def test_annihilator_is_equivariant_under_g0_exponentials(tag):
    rng = random.Random(31)
    phi = NORMAL_FORMS[tag]
    ann = annihilator(phi)
    for _ in range(6):
        n = BASIS[rng.choice(["e01", "f01"])] * Fraction(rng.choice([-2, -1, 1, 3]), rng.randint(1, 3))
        moved = exp_g0_action(n, phi)
        assert same_span(annihilator(moved), [exp_ad(n, x) for x in ann])
