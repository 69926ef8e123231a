#!/usr/bin/env python3
"""
Tests for the Lie algebra (co)homology complexes and the curvature module E.
"""

import random
from fractions import Fraction

import pytest

from g2cartan.core.g2 import BASIS, element
from g2cartan.core.parabolic import G0
from g2cartan.errors import NotInE
from g2cartan.homology import (
    Cochain,
    act_chain,
    curvature_module,
    partial,
    partial_star,
    quartic_covariants,
    to_chain,
    to_cochain,
)
from g2cartan.homology.complexes import (
    act_cochain,
    cohomology_dims,
    hodge_decompose,
    laplacian,
    lowest_weight_vector,
    zero_cohomology,
)
from g2cartan.homology.curvature_module import COMPONENT_DIMS, HOMOGENEITY, NAMES, component_of
from g2cartan.models import build_model
from g2cartan.prolongation import BinaryQuartic, tanaka_prolong


@pytest.fixture(scope="module")
def module():
    return curvature_module()


def test_differential_squares_to_zero():
    for cochain in Cochain.basis(1)[:12]:
        assert not partial(partial(cochain))


def test_killing_identification_round_trip():
    phi0 = lowest_weight_vector()
    assert to_chain(to_cochain(phi0)) == phi0


def test_lowest_weight_vector_is_normal():
    assert not partial_star(lowest_weight_vector())


def test_zero_cohomology_is_bottom_of_grading():
    assert sorted(zero_cohomology()) == ["f31", "f32"]


def test_second_cohomology_is_binary_quartics():
    assert cohomology_dims(2)["cohomology"] == 5


def test_hodge_decomposition_in_degree_two():
    summary = hodge_decompose(2).summary()
    assert summary.total == 140
    assert summary.harmonic == 5
    assert summary.direct
    assert summary.image_partial + summary.harmonic + summary.image_partial_star == summary.total


def test_curvature_module_dimension(module):
    assert module.dim == 24
    assert len(NAMES) == 24
    assert module.printed_rank() == 24
    assert module.component_dims() == COMPONENT_DIMS
    assert sum(COMPONENT_DIMS.values()) == 24


def test_printed_chains_lie_in_module(module):
    assert module.unmatched_chains() == []
    assert module.homogeneity_mismatches() == []


def test_module_is_normal_and_p_stable(module):
    assert module.non_normal() == []
    assert module.unstable_images() == []


def test_coefficients_reject_cochains_outside_module(module):
    outside = to_cochain(lowest_weight_vector()) + Cochain.basis(2)[0]
    if module.contains(outside):
        pytest.skip("basis cochain happens to lie in E")
    with pytest.raises(NotInE):
        module.coefficients(outside)


def test_flat_model_has_zero_covariants():
    binary, ternary = quartic_covariants(build_model("flat").curvature)
    assert not any(binary)
    assert ternary == {}


@pytest.mark.parametrize(
    "label,params,expected_dim",
    [("N.7", {"c": 0}, 7), ("D.6", {"a": 1}, 6), ("N.6", {}, 7)],
)
def test_binary_covariant_has_model_root_type(label, params, expected_dim):
    binary, _ = quartic_covariants(build_model(label, params).curvature)
    assert tanaka_prolong(BinaryQuartic(binary)).dim == expected_dim


def test_action_preserves_module(module):
    image = module.chains["A1"]
    for label in ("e10", "e01", "Z1"):
        image = act_chain(BASIS[label], image)
        assert module.span.contains(image.to_vector())


def test_vertical_variation_along_e01(module):
    m = module.vertical_variation(BASIS["e01"])
    a1 = NAMES.index("A1")
    assert not any(m[0])
    for k in range(1, 5):
        assert m[k][a1 + k - 1] == -k
        assert [j for j, c in enumerate(m[k]) if c] == [a1 + k - 1]
    assert not any(m[NAMES.index("B1")])
    assert m[NAMES.index("B2")][NAMES.index("B1")] == -1


def test_vertical_variation_along_grading_element(module):
    m = module.vertical_variation(BASIS["Z1"])
    for j, name in enumerate(NAMES):
        assert m[j][j] == -HOMOGENEITY[component_of(name)]
        assert [k for k, c in enumerate(m[j]) if c] == [j]
    assert sorted({-m[j][j] for j in range(len(NAMES))}) == [4, 5, 6, 7, 8, 9]


def test_laplacian_is_g0_equivariant():
    rng = random.Random(4242)
    basis = Cochain.basis(2)
    for _ in range(12):
        cochain = Cochain.zero(2)
        for term in rng.sample(basis, 4):
            cochain = cochain + term * Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        z = element(*((rng.randint(-3, 3), label) for label in G0))
        assert laplacian(act_cochain(z, cochain)) == act_cochain(z, laplacian(cochain))
