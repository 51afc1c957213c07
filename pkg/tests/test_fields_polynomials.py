import pytest
from hypothesis import given, strategies as st

from dessinlab.fields import GF, find_irreducible
from dessinlab.polynomial import (IntPolynomial, cyclotomic_poly, poly_roots_mod_p,
                                  psi_poly, psi_star_poly)
from dessinlab.numthy import divisors

FIELDS = [(2, 1), (3, 1), (13, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 5)]


@pytest.mark.parametrize("p,f", FIELDS)
def test_field_axioms_exhaustive_small(p, f):
    F = GF(p, f)
    q = p**f
    elems = range(q)
    for a in elems:
        assert F.add(a, F.neg(a)) == F.zero
        assert F.mul(a, F.one) == a
        if a:
            assert F.mul(a, F.inv(a)) == F.one
    prim = F.primitive_element()
    assert F.mul_order(prim) == q - 1


@given(st.sampled_from(FIELDS), st.data())
def test_field_ring_laws(pf, data):
    F = GF(*pf)
    q = pf[0] ** pf[1]
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, b) == F.add(b, a)
    # Frobenius is additive and multiplicative
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


@pytest.mark.parametrize("p,f", FIELDS)
def test_pow_matches_repeated_multiplication(p, f):
    F = GF(p, f)
    for a in range(p**f):
        acc = F.one
        for k in range(6):
            assert F.pow(a, k) == acc
            acc = F.mul(acc, a)


def test_find_irreducible_lexicographic_first():
    assert find_irreducible(5, 2).coeffs == (2, 0, 1)


def test_square_roots():
    F = GF(3, 2)
    for a in range(9):
        if F.is_square(a):
            r = F.sqrt(a)
            assert F.mul(r, r) == a


@pytest.mark.parametrize("n", range(1, 40))
def test_cyclotomic_product(n):
    prod = IntPolynomial([1])
    for d in divisors(n):
        prod = prod * cyclotomic_poly(d)
    assert prod == IntPolynomial.monomial(n) - 1


def test_psi_examples():
    assert psi_poly(3).coeffs == (1, 1)
    assert psi_poly(4).coeffs == (0, 1)
    assert str(psi_star_poly(5)) == "X^2 + 5X + 5"
    assert poly_roots_mod_p(psi_star_poly(5), 11) == {1, 5}
    assert poly_roots_mod_p(psi_star_poly(8), 17) == {4, 9}
    assert poly_roots_mod_p(psi_star_poly(3), 5) == {2}


@pytest.mark.parametrize("n", range(3, 25))
def test_psi_roots_are_twice_cosines(n):
    # psi_n(2 cos(2 pi k / n)) = 0 for gcd(k, n) = 1, checked over GF(p) with n | p - 1
    from dessinlab.numthy import primes_up_to
    import math
    p = next(p for p in primes_up_to(2000) if p > 3 and (p - 1) % n == 0)
    F = GF(p)
    zeta = F.pow(F.primitive_element(), (p - 1) // n)
    f = psi_poly(n)
    for k in range(1, n):
        if math.gcd(k, n) == 1:
            t = F.add(F.pow(zeta, k), F.inv(F.pow(zeta, k)))
            assert f.eval_mod(t, p) == 0
