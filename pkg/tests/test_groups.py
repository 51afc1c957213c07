import pytest
from hypothesis import given, settings, strategies as st

from dessinlab.errors import NotAHomomorphism, NotNormal, PreconditionError
from dessinlab.groups.indexed import IndexedGroup
from dessinlab.groups.matrix import ProjectiveSL2Group, SigmaL2Group, SL2Group
from dessinlab.groups.models import (AffineGroup, CyclicGroup, DirectProductGroup,
                                     QuaternionGroup, WreathGroup, alternating_group_a5)
from dessinlab.groups.ops import (center, conjugacy_class_reps, cyclic_normal_subgroup,
                                  extend_generator_map, is_minimal_normal, normal_closure,
                                  quotient_group, translation_subgroup)

SMALL_GROUPS = [
    CyclicGroup(12),
    QuaternionGroup(8),
    QuaternionGroup(24),
    AffineGroup(2, 2, 3),
    AffineGroup(5, 1, 4),
    SL2Group(5),
    SL2Group(3, 2),
    ProjectiveSL2Group(7),
    alternating_group_a5(),
]

ORDERS = {"cyclic:12": 12, "quaternion:8": 8, "quaternion:24": 24, "agl1:2^2:3": 12,
          "agl1:5:4": 20, "sl2:5": 120, "sl2:3^2": 720, "psl2:7": 168}


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=lambda G: G.spec)
def test_enumerated_order_matches_structure(G):
    n = len(G.elements())
    if G.structural_order() is not None:
        assert n == G.structural_order()
    if G.spec in ORDERS:
        assert n == ORDERS[G.spec]


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=lambda G: G.spec)
def test_element_orders_match_naive_powering(G):
    for g in G.elements():
        assert G.element_order(g) == G.naive_order(g)


@settings(max_examples=60)
@given(st.sampled_from(SMALL_GROUPS), st.data())
def test_group_axioms(G, data):
    elems = G.elements()
    a, b, c = (data.draw(st.sampled_from(elems)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity()
    assert G.mul(G.identity(), a) == a
    assert G.power(a, -3) == G.inv(G.power(a, 3))


def test_quaternion_relations():
    for m in range(2, 8):
        Q = QuaternionGroup(4 * m)
        x, y = Q.x, Q.y
        assert Q.power(x, 2 * m) == Q.identity()
        assert Q.power(y, 2) == Q.power(x, m)
        assert Q.conj(x, y) == Q.inv(x)
        assert center(Q).order == 2


def test_wreath_structure_and_orders():
    W = WreathGroup(alternating_group_a5(), 3)
    assert W.structural_order() == 60**3 * 3
    g = W.shift
    assert W.element_order(g) == 3
    x = W.base([W.inner.gens[0], W.inner.identity(), W.inner.gens[1]])
    for k in range(1, 4):
        gx = W.mul(W.power(g, k), x)
        assert W.element_order(gx) == W.naive_order(gx)


def test_sigma_l2_order_and_frobenius():
    G = SigmaL2Group(3)
    assert G.structural_order() == 504 * 3
    assert G.element_order(G.phi) == 3
    assert len(G.elements()) == 1512


@pytest.mark.parametrize("G", [SL2Group(5), ProjectiveSL2Group(7), SL2Group(3, 2)],
                         ids=lambda G: G.spec)
def test_indexed_closure_matches_generic(G):
    IG = IndexedGroup(G)
    assert IG.n == len(G.elements())
    a, b = G.gens[0], G.gens[1]
    assert IG.closure_size([IG.right_perm(a), IG.right_perm(b)]) == len(G.closure([a, b]))
    assert IG.closure_size([IG.right_perm(a)]) == G.element_order(a)
    orders = IG.orders
    for idx in range(0, IG.n, 7):
        assert orders[idx] == G.element_order(IG.elements[idx])


def test_conjugacy_class_counts():
    assert len(conjugacy_class_reps(SL2Group(5))) == 9
    assert len(conjugacy_class_reps(alternating_group_a5())) == 5
    assert len(IndexedGroup(ProjectiveSL2Group(7)).conjugacy_class_reps()) == 6


def test_normal_subgroups():
    Q = QuaternionGroup(16)
    N = cyclic_normal_subgroup(Q, Q.x)
    assert N.order == 8
    assert len(quotient_group(Q, N).elements()) == 2
    with pytest.raises(NotNormal):
        cyclic_normal_subgroup(Q, Q.y)
    A = AffineGroup(2, 3, 7)
    T = translation_subgroup(A)
    assert T.order == 8 and is_minimal_normal(A, T)
    assert normal_closure(A, [A.translation(1)]).order == 8


def test_direct_product_orders():
    G = DirectProductGroup([CyclicGroup(3), CyclicGroup(4)], gens=[(1, 0), (0, 1)])
    assert len(G.elements()) == 12
    assert G.element_order((1, 1)) == 12


def test_extend_generator_map():
    Q = QuaternionGroup(8)
    xy = Q.mul(Q.x, Q.y)
    image = extend_generator_map(Q, (Q.x, Q.y), Q, (Q.y, Q.x))
    assert len(set(image.values())) == 8
    assert image[xy] == Q.mul(Q.y, Q.x)
    with pytest.raises(NotAHomomorphism):
        extend_generator_map(Q, (Q.x, Q.y), Q, (Q.x, Q.x))
    with pytest.raises(PreconditionError):
        extend_generator_map(Q, (Q.x, Q.power(Q.x, 3)), Q, (Q.x, Q.power(Q.x, 3)))
