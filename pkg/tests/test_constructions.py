import math

import pytest

from dessinlab.constructions import (HAParams, as_report, construct_as, construct_ha,
                                     construct_pa, construct_tw, default_a5_pair, ha_enumerate,
                                     ha_isomorphic, ha_primitivity, telescoping_products,
                                     tw_element_x, tw_report)
from dessinlab.covering import algebraic_quotient, classify_covering
from dessinlab.dessin import dessin_isomorphic
from dessinlab.errors import PreconditionError
from dessinlab.groups.models import WreathGroup, perm_from_cycles
from dessinlab.groups.ops import translation_subgroup, wreath_base
from dessinlab.numthy import euler_phi


@pytest.mark.parametrize("p,d,ell,count", [(2, 2, 3, 3), (2, 3, 7, 14), (5, 1, 4, 8),
                                           (3, 2, 8, 16)])
def test_ha_class_counts(p, d, ell, count):
    assert len(ha_enumerate(p, d, ell)) == count == euler_phi(ell) * ell // d


@pytest.mark.parametrize("p,d,ell", [(2, 2, 3), (5, 1, 4), (7, 1, 3), (3, 2, 4)])
def test_ha_isomorphism_rule_matches_generator_maps(p, d, ell):
    params = [(i, j) for i in range(ell) for j in range(ell) if math.gcd(j, ell) == 1]
    dessins = {ij: construct_ha(HAParams(p, d, ell, *ij)) for ij in params}
    for a in params:
        for b in params:
            if a < b:
                assert dessin_isomorphic(dessins[a], dessins[b])[0] == \
                    ha_isomorphic(a, b, p, d, ell)


def test_ha_example_and_smooth_quotient():
    D = construct_ha(HAParams(5, 1, 4, 1, 3))
    assert D.signature == (4, 2, 4)
    N = translation_subgroup(D.group)
    r = classify_covering(D, N)
    assert r.smooth
    Q = algebraic_quotient(D, N)
    assert Q.is_unicellular() and Q.face_length == 8
    assert ha_primitivity(1, 3, 4) == (True, False)


def test_ha_non_smooth_when_i_zero():
    D = construct_ha(HAParams(2, 2, 3, 0, 1))
    assert not classify_covering(D, translation_subgroup(D.group)).smooth


def test_ha_preconditions():
    with pytest.raises(PreconditionError):
        HAParams(3, 2, 2, 1, 1).validate()  # 2 already divides 3 - 1
    with pytest.raises(PreconditionError):
        HAParams(5, 1, 4, 1, 2).validate()  # gcd(j, ell) = 2


@pytest.mark.parametrize("k", [5, 7])
def test_tw_orders_by_structure_and_telescoping(k):
    T, s, t = default_a5_pair()
    D, checks = construct_tw(T, k, s, t)
    assert all(checks.values())
    assert D.signature == (k, k, k)
    assert D.chi == (3 - k) * 60**k
    W = D.group
    x = tw_element_x(W, s, t)
    assert telescoping_products(W, x, 1) == W.identity()
    assert classify_covering(D, wreath_base(W), cap=0).smooth


def test_tw_rejects_even_degree():
    T, s, t = default_a5_pair()
    with pytest.raises(PreconditionError):
        construct_tw(T, 6, s, t)


def test_tw_report_chi():
    T, s, t = default_a5_pair()
    report = tw_report(T, 9, s, t)
    assert report["dessin"]["chi"] == report["chi_expected"] == -6 * 60**9


@pytest.mark.parametrize("a", [[[0, 1], [2, 3]], [[0, 1, 2]]])
def test_pa_closure_k2(a):
    T, s, t = default_a5_pair()
    D, info = construct_pa(T, 2, perm_from_cycles(5, a), s, t)
    assert info["bw_is_g"] and info["g_power_in_base"]
    assert info["closure_order"] == 7200 == D.order


def test_as_witness():
    witness, D = construct_as(5)
    assert D.signature == (5, 5, 5)
    G = D.group
    x = G.embed(witness.x)
    assert G.commutator(G.phi, G.embed(witness.s)) == x
    assert G.commutator(G.power(G.phi, witness.j), G.embed(witness.t)) == x
    report = as_report(5, verify_closure=True)
    assert report["closure_order"] == 163680
    with pytest.raises(PreconditionError):
        construct_as(4)
