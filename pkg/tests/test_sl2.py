import pytest
from hypothesis import given, strategies as st

from dessinlab.dessin import dessin_isomorphic, make_dessin
from dessinlab.errors import OutOfScope, PreconditionError
from dessinlab.groups.matrix import SL2Group
from dessinlab.numthy import euler_phi, odd_part, primes_up_to
from dessinlab.polynomial import poly_roots_mod_p, psi_star_poly
from dessinlab.sl2 import (StandardPair, admissible_triples, brute_force_lmn, bw_order,
                           bw_order_bruteforce, central_quotient_is_smooth, eq_trace_witness,
                           fibonacci_order, fibonacci_power_matrix, fibonacci_smooth_verdicts,
                           indices_with_order, lmn_group_criterion, pisano_period, psi_report,
                           schur_smooth_exists, smooth_count_formula, smooth_index_table,
                           smooth_indices, spectrum, spectrum_by_enumeration)

PRIMES = [p for p in primes_up_to(97) if p >= 5]


def test_order_examples():
    assert bw_order(11, 1) == 5
    assert bw_order(7, 6) == 6
    assert bw_order(5, 1) == 10  # trace -2: minus a unipotent
    assert StandardPair(13, 11).order == 4


@given(st.sampled_from(PRIMES), st.data())
def test_bw_order_matches_matrix_powers(p, data):
    i = data.draw(st.integers(1, p - 1))
    assert bw_order(p, i) == bw_order_bruteforce(p, i)


@pytest.mark.parametrize("p", PRIMES)
def test_smooth_indices_count(p):
    assert len(smooth_indices(p)) == (odd_part(p + 1) + odd_part(p - 1)) // 2 - 1
    assert smooth_count_formula(p) == len(smooth_indices(p))


def test_smooth_index_examples():
    assert smooth_indices(11) == [1, 5, 8]
    rows = smooth_index_table(5)
    assert [r["order"] for r in rows] == [10, 3, 4, 6]


@pytest.mark.parametrize("p", PRIMES)
def test_indices_with_odd_order_are_psi_roots(p):
    for n in range(3, p + 2, 2):
        if (p - 1) % n and (p + 1) % n:
            continue
        idx = indices_with_order(p, n)
        assert set(idx) == {i for i in poly_roots_mod_p(psi_star_poly(n), p) if 1 <= i < p}
        assert 2 * len(idx) == euler_phi(n)


def test_indices_with_order_examples_and_preconditions():
    assert indices_with_order(11, 5) == [1, 5]
    assert indices_with_order(13, 7) == [5, 6, 8]
    assert indices_with_order(19, 9) == [1, 5, 7]
    with pytest.raises(PreconditionError):
        indices_with_order(13, 1)
    with pytest.raises(PreconditionError):
        indices_with_order(13, 5)


def test_psi_report_cli_shape():
    report = psi_report(5, 19)
    assert report["psi_star"] == "X^2 + 5X + 5"
    assert report["roots"] == [{"p": 11, "i": [1, 5]}, {"p": 19, "i": [2, 12]}]


@pytest.mark.parametrize("p", [p for p in primes_up_to(1000) if p >= 7])
def test_fibonacci_order_is_half_the_pisano_period(p):
    order, _ = fibonacci_order(p)
    assert 2 * order == pisano_period(p)
    assert fibonacci_power_matrix(p, order) == (1, 0, 0, 1)


def test_fibonacci_examples():
    assert fibonacci_order(5)[0] == 10
    assert [fibonacci_order(p)[0] for p in (101, 41, 29, 109)] == [25, 20, 7, 54]
    rows = fibonacci_smooth_verdicts([101, 41])
    assert rows[0]["smooth"] and not rows[1]["smooth"]
    assert rows[0]["p_mod_20"] == 1


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
@pytest.mark.parametrize("projective", [False, True])
def test_spectrum_formula_matches_enumeration(q, projective):
    assert spectrum(q, projective) == spectrum_by_enumeration(q, projective)


def test_criterion_exception_by_exhaustion():
    assert lmn_group_criterion(9, 3, 5, 5, False) is False
    assert brute_force_lmn(9, 3, 5, 5, False) is None
    assert brute_force_lmn(9, 3, 5, 5, True) is not None


def test_criterion_preconditions():
    with pytest.raises(PreconditionError) as info:
        lmn_group_criterion(4, 4, 3, 2, False)
    msg = str(info.value)
    assert "odd prime power" in msg and "sorted" in msg and "even entry" in msg
    with pytest.raises(PreconditionError):
        lmn_group_criterion(7, 3, 3, 3, False)  # not hyperbolic


def test_schur_scope():
    with pytest.raises(OutOfScope):
        schur_smooth_exists(9, 3, 5, 5)
    assert schur_smooth_exists(7, 3, 3, 7) is False
    assert schur_smooth_exists(11, 3, 5, 5) is True


def test_admissible_triples_are_sorted_spectrum_entries():
    spec = set(spectrum(13, True))
    for t in admissible_triples(13, True, odd_hyperbolic=True):
        assert list(t) == sorted(t) and set(t) <= spec and all(x % 2 for x in t)


def test_eq_trace_witness():
    b, w = eq_trace_witness(7, 6, 6, 5)
    G = SL2Group(7)
    assert (G.element_order(b), G.element_order(w), G.element_order(G.mul(b, w))) == (3, 3, 14)


@pytest.mark.parametrize("p", [p for p in PRIMES if p <= 31])
def test_dessin_level_smoothness(p):
    smooth = set(smooth_indices(p))
    for i in range(1, p):
        assert central_quotient_is_smooth(p, i) == (i in smooth)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_all_standard_dessins_share_one_graph(p):
    G, b, w = StandardPair(p, 1).group_and_generators()
    base = {i: StandardPair(p, i).dessin() for i in range(1, p)}
    ends = base[1].underlying_graph().ends
    for i in range(2, p):
        assert base[i].underlying_graph().ends == ends
    for k in range(1, p):
        for i in range(1, p):
            D = make_dessin(G, G.power(b, k), G.power(w, i), asserted_by_construction=True)
            assert dessin_isomorphic(D, base[(i * k) % p])[0]
