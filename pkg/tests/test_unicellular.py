import math

import pytest
from hypothesis import given, strategies as st

from dessinlab.dessin import dessin_isomorphic
from dessinlab.errors import PreconditionError
from dessinlab.unicellular import (admissible_lambdas, count_K, count_T, count_U_lambda,
                                   counting_report, decomposition_identity, describe,
                                   direct_product, enumerate_unicellular, in_triple_set,
                                   triple_set, uncolored_graph_count, unicellular_dessin)


@pytest.mark.parametrize("ell", range(1, 31))
def test_dessins_are_unicellular_with_complete_bipartite_graphs(ell):
    for k in range(ell):
        D = unicellular_dessin(ell, k)
        d = describe(ell, k)
        assert len(D.face_set()) == 1
        assert D.chi == d.chi
        g = D.underlying_graph()
        assert len(g.black) == d.m and len(g.white) == d.n
        assert g.is_complete_bipartite()
        assert set(g.pair_multiplicities().values()) == {d.lam}


@pytest.mark.parametrize("ell", [1, 2, 6, 9, 12])
def test_pairwise_non_isomorphic(ell):
    dessins = [unicellular_dessin(ell, k) for k in range(ell)]
    for a in range(ell):
        for b in range(a + 1, ell):
            assert not dessin_isomorphic(dessins[a], dessins[b])[0]


@given(st.integers(min_value=1, max_value=400))
def test_counting_chain(ell):
    descs = enumerate_unicellular(ell)
    assert len(descs) == ell
    assert all(in_triple_set(ell, *d.triple) for d in descs)
    assert {d.triple for d in descs} == set(triple_set(ell))
    assert len(triple_set(ell)) == count_T(ell)
    for lam in admissible_lambdas(ell):
        assert sum(1 for d in descs if d.lam == lam) == count_U_lambda(ell, lam)
    for m, n, lam in triple_set(ell):
        brute = sum(1 for d in descs if d.triple == (m, n, lam))
        assert brute == count_K(m, n, lam, ell)
    assert decomposition_identity(ell)["ok"]


@given(st.integers(min_value=1, max_value=400))
def test_uncolored_graph_count_merges_swapped_colours(ell):
    triples = set(triple_set(ell))
    unordered = {tuple(sorted((m, n))) + (lam,) for m, n, lam in triples}
    assert uncolored_graph_count(ell) == len(unordered)


def test_small_examples():
    assert describe(6, 3).triple == (3, 2, 1)
    report = counting_report(15)
    assert report["total"] == 15 and report["identity_ok"]
    assert [t["count"] for t in report["per_lambda"]] == [4, 2, 6, 3]
    with pytest.raises(PreconditionError):
        describe(5, 5)


def test_direct_product_of_coprime_unicellular():
    D = direct_product([unicellular_dessin(3, 2), unicellular_dessin(4, 3)])
    assert D.order == 12 and D.is_unicellular()
    with pytest.raises(PreconditionError):
        direct_product([unicellular_dessin(3, 2), unicellular_dessin(6, 2)])
