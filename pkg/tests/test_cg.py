"""
Residues, zero structures, Casson-Gordon and graph-link invariants
"""
import sys
from fractions import Fraction

import pytest

from harness import run_tests

from cg import (
    INF,
    InvariantPair,
    cg_sigma_eta,
    graphlink_sigma_eta,
    is_characteristic,
    residue,
    vanishes,
    zero_structure,
)
from curve import curve_data, sig_eta
from errors import (
    BadParametersError,
    EmptyLinkError,
    NonOddPrimeError,
    NotCharacteristicError,
    UndefinedResidueError,
    ZeroVectorError,
)
from graph import build_gamma, tree_from_weights
from scheme import parse_scheme

SAMPLE = parse_scheme("J 1-<2-> 2+")


def test_residue():
    assert residue(Fraction(1, 2), 3) == 2
    assert residue(-1, 5) == 4
    assert residue(Fraction(-7, 4), 5) == 2
    with pytest.raises(UndefinedResidueError):
        residue(Fraction(1, 3), 3)


def test_vanishes_at_infinity():
    assert vanishes(0, INF)
    assert not vanishes(6, INF)
    assert vanishes(6, 3)


def test_single_vertex_lens_space():
    g = tree_from_weights([3], [])
    for c in ([1], [2]):
        value = cg_sigma_eta(g, c, 3)
        assert value.sigma == Fraction(1, 3)
        assert value.eta == 0


def test_invariant_pair_sig_is_sigma():
    pair = InvariantPair(Fraction(1, 3), 0)
    assert pair.sig == pair.sigma == Fraction(1, 3)
    assert sig_eta(SAMPLE, 7, 2).sig == -10


def test_cg_input_errors():
    g = tree_from_weights([3], [])
    with pytest.raises(NonOddPrimeError):
        cg_sigma_eta(g, [1], 9)
    with pytest.raises(NonOddPrimeError):
        cg_sigma_eta(g, [1], 2)
    with pytest.raises(NotCharacteristicError):
        cg_sigma_eta(g, [1], 5)
    with pytest.raises(ZeroVectorError):
        cg_sigma_eta(g, [3], 3)


def test_c_plus_is_characteristic_on_gamma():
    data = curve_data(SAMPLE)
    flags = is_characteristic(data.gamma_plus, data.c_plus, 7)
    assert all(flags[:data.gamma.size])


def test_zero_structure_of_sample_at_three():
    data = curve_data(SAMPLE)
    zs = zero_structure(data.gamma, data.gamma_plus, data.c_plus, 3)
    # c = (-6, 2, 3, 1, -3, 5, 5, 1, 1, 14, -10, -10, -2, -2)
    assert zs.zero_vertices == (0, 2, 4)
    assert zs.z == 3
    assert zs.frak_z == (2,)
    assert zs.frak_e == 6
    assert (zs.sign, zs.nullity) == (1, 0)


def test_zero_structure_at_infinity_is_empty_for_odd_type():
    data = curve_data(SAMPLE)
    zs = zero_structure(data.gamma, data.gamma_plus, data.c_plus, INF)
    assert zs.frak_z == ()


def test_graph_link_engine_matches_curve_formula():
    gamma = curve_data(SAMPLE).gamma
    for p in (3, 5, 7, 11):
        for b in range(1, (p - 1) // 2 + 1):
            link = graphlink_sigma_eta(gamma, 2 * b, p)
            curve = sig_eta(SAMPLE, p, b)
            assert (Fraction(link.sigma), link.eta) == (curve.sig, curve.eta), (p, b)


def test_graph_link_eta_independent_of_a():
    gamma = curve_data(SAMPLE).gamma
    assert len({graphlink_sigma_eta(gamma, a, 7).eta for a in range(1, 7)}) == 1


def test_graph_link_input_errors():
    gamma = build_gamma(parse_scheme("J"))
    with pytest.raises(BadParametersError):
        graphlink_sigma_eta(gamma, 0, 5)
    with pytest.raises(BadParametersError):
        graphlink_sigma_eta(gamma, 5, 5)
    with pytest.raises(EmptyLinkError):
        graphlink_sigma_eta(tree_from_weights([1, 2], [(0, 1)]), 1, 3)


if __name__ == "__main__":
    sys.exit(run_tests(globals(), "CASSON-GORDON TESTS"))
