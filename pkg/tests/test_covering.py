import pytest

from dessinlab.covering import (algebraic_quotient, check_chi_bounds, classify_covering,
                                geometric_quotient, hurwitz_bound_check,
                                ramification_from_orbits, riemann_hurwitz_holds,
                                smooth_covering_group_test, schur_smooth_test,
                                verify_quotient_theorem)
from dessinlab.dessin import make_dessin
from dessinlab.errors import PreconditionError
from dessinlab.groups.models import CyclicGroup, QuaternionGroup
from dessinlab.groups.ops import (center, cyclic_normal_subgroup, trivial_subgroup,
                                  whole_group)
from dessinlab.sl2 import StandardPair, smooth_indices


def quaternion(m):
    Q = QuaternionGroup(4 * m)
    return make_dessin(Q, Q.mul(Q.x, Q.y), Q.inv(Q.y))


def test_q8_center_report():
    D = quaternion(2)
    r = classify_covering(D, center(D.group))
    assert (r.e_b, r.e_w, r.e_f) == (2, 2, 2)
    assert r.totally_branched and not r.smooth
    assert r.ram_points == 6
    assert r.chi_quotient == 2
    assert r.minimal is True
    assert r.to_json()["ratio"] == "-1/1"


@pytest.mark.parametrize("m", range(2, 9))
def test_cyclic_quotients_of_quaternion(m):
    D = quaternion(m)
    Q = D.group
    for k in range(1, 2 * m):
        if (2 * m) % k:
            continue
        N = cyclic_normal_subgroup(Q, Q.power(Q.x, k))
        r = classify_covering(D, N)
        assert riemann_hurwitz_holds(r)
        assert verify_quotient_theorem(D, N)
        geo = geometric_quotient(D, N)
        assert ramification_from_orbits(geo, r.sheets) == r.ram_points
        assert algebraic_quotient(D, N).chi == r.chi_quotient
        assert r.smooth == smooth_covering_group_test(Q, N, D.b, D.w)
        verdict = check_chi_bounds(r)
        assert verdict["ok"]


def test_trivial_and_whole_subgroups():
    D = quaternion(3)
    r = classify_covering(D, trivial_subgroup(D.group))
    assert r.smooth and r.chi_quotient == D.chi and r.ram_points == 0
    r = classify_covering(D, whole_group(D.group))
    assert r.quotient_order == 1 and r.chi_quotient == 2


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_schur_test_matches_smooth_indices(p):
    smooth = set(smooth_indices(p))
    for i in range(1, p):
        G, b, w = StandardPair(p, i).group_and_generators()
        assert schur_smooth_test(G, b, w) == (i in smooth)


def test_hurwitz_bound_requires_negative_chi():
    with pytest.raises(PreconditionError):
        hurwitz_bound_check(make_dessin(CyclicGroup(2), 1, 1))
    check = hurwitz_bound_check(quaternion(5))
    assert check["ok"] and not check["equality"]
