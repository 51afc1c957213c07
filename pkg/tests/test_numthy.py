import math

from hypothesis import given, strategies as st

from dessinlab.numthy import (divisors, euler_phi, factorize, is_prime, is_primitive_divisor,
                              multiplicative_order_mod, odd_part, p_part, primes_up_to)


def test_primes_up_to_matches_trial_division():
    naive = [n for n in range(2, 500) if all(n % d for d in range(2, int(n**0.5) + 1))]
    assert primes_up_to(499) == naive
    assert all(is_prime(p) for p in naive)


@given(st.integers(min_value=1, max_value=5000))
def test_factorization_reconstructs(n):
    f = factorize(n)
    prod = 1
    for p, e in f:
        assert is_prime(p)
        prod *= p**e
    assert prod == n


@given(st.integers(min_value=1, max_value=2000))
def test_phi_counts_units(n):
    assert euler_phi(n) == sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


@given(st.integers(min_value=1, max_value=2000))
def test_divisors_and_parts(n):
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
    assert odd_part(n) * p_part(n, 2) == n
    assert odd_part(n) % 2 == 1


@given(st.integers(min_value=2, max_value=300), st.integers(min_value=2, max_value=300))
def test_multiplicative_order(a, n):
    if math.gcd(a, n) != 1:
        return
    k = multiplicative_order_mod(a, n)
    assert pow(a, k, n) == 1 % n
    assert all(pow(a, j, n) != 1 % n for j in range(1, k))


def test_primitive_divisor():
    assert is_primitive_divisor(3, 2, 2)
    assert is_primitive_divisor(7, 2, 3)
    assert is_primitive_divisor(4, 5, 1)
    assert is_primitive_divisor(8, 3, 2)
    assert not is_primitive_divisor(2, 3, 2)  # already divides 3 - 1
    assert not is_primitive_divisor(5, 2, 3)  # does not divide 7
