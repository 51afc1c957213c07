import pytest
from collections import Counter

from dessinlab.dessin import dessin_isomorphic, make_dessin
from dessinlab.errors import CapExceeded, NotGenerating, PreconditionError
from dessinlab.groups.matrix import SL2Group
from dessinlab.groups.models import AffineGroup, CyclicGroup, QuaternionGroup
from dessinlab.sl2 import StandardPair


def corpus():
    out = []
    for m in (2, 3, 5):
        Q = QuaternionGroup(4 * m)
        out.append(make_dessin(Q, Q.mul(Q.x, Q.y), Q.inv(Q.y)))
    for p in (5, 7):
        out.extend(StandardPair(p, i).dessin() for i in (1, 2, p - 1))
    A = AffineGroup(2, 2, 3)
    out.append(make_dessin(A, A.mul(A.h(1), A.translation(1)), A.h(1)))
    return out


@pytest.mark.parametrize("D", corpus(), ids=repr)
def test_faces_double_cover_the_arcs(D):
    faces = D.face_set()
    assert len(faces) == D.counts["faces"]
    wb = Counter(e for f in faces for e, d in f.arcs() if d == "wb")
    bw = Counter(e for f in faces for e, d in f.arcs() if d == "bw")
    elems = set(D.group.elements())
    assert set(wb) == elems and set(wb.values()) == {1}
    assert set(bw) == elems and set(bw.values()) == {1}


@pytest.mark.parametrize("D", corpus(), ids=repr)
def test_face_walk_alternates_shared_vertices(D):
    for face in D.face_set():
        edges = face.edges
        for k in range(0, len(edges), 2):
            nxt = edges[(k + 2) % len(edges)]
            assert D.black_vertex(edges[k]) == D.black_vertex(edges[k + 1])
            assert D.white_vertex(edges[k + 1]) == D.white_vertex(nxt)


@pytest.mark.parametrize("D", corpus(), ids=repr)
def test_euler_characteristic_by_counting_cells(D):
    graph = D.underlying_graph()
    faces = D.face_set()
    v = len(graph.black) + len(graph.white)
    assert v - D.order + len(faces) == D.chi
    assert graph.is_connected()
    bdeg, wdeg = graph.valencies()
    assert bdeg == {D.signature[0]} and wdeg == {D.signature[1]}


def test_quaternion_example():
    Q = QuaternionGroup(8)
    D = make_dessin(Q, Q.mul(Q.x, Q.y), Q.inv(Q.y))
    assert D.signature == (4, 4, 4)
    assert D.chi == -2 and D.genus == 2
    assert D.multiplicity() == 2


def test_rejections():
    Q = QuaternionGroup(8)
    with pytest.raises(NotGenerating):
        make_dessin(Q, Q.x, Q.x)
    with pytest.raises(PreconditionError):
        make_dessin(Q, Q.identity(), Q.x)
    with pytest.raises(CapExceeded):
        make_dessin(SL2Group(13), SL2Group(13).lower_unipotent,
                    SL2Group(13).upper_unipotent, cap=100)
    Z = CyclicGroup(1)
    assert make_dessin(Z, 0, 0).chi == 2


def test_star_allowed_on_request():
    Z = CyclicGroup(6)
    D = make_dessin(Z, 0, 1, allow_star=True)
    assert D.signature == (1, 6, 6)
    assert D.chi == 2


def test_isomorphism_witness_and_rejection():
    Q = QuaternionGroup(8)
    D1 = make_dessin(Q, Q.x, Q.y)
    D2 = make_dessin(Q, Q.y, Q.x)
    ok, mapping = dessin_isomorphic(D1, D2)
    assert ok and mapping[Q.x] == Q.y
    D3 = make_dessin(Q, Q.x, Q.mul(Q.x, Q.y))
    assert dessin_isomorphic(D1, D3)[0]
    Z = CyclicGroup(5)
    assert not dessin_isomorphic(make_dessin(Z, 1, 2), make_dessin(Z, 1, 3))[0]
