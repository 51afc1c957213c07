"""Elementary number theory on exact integers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError


@dataclass(frozen=True)
class FactoredInt:
    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=4096)
def factorize(n: int) -> FactoredInt:
    """Prime factorization by trial division, primes in increasing order."""
    if n < 1:
        raise PreconditionError(f"factorize needs n >= 1, got {n}")
    out = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return FactoredInt(n, tuple(out))


def prime_divisors(n: int) -> tuple[int, ...]:
    return factorize(n).primes


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).factors == ((n, 1),)


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n).primes:
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def p_part(n: int, p: int) -> int:
    """Largest power of the prime p dividing n."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if n < 1:
        raise PreconditionError(f"p_part needs n >= 1, got {n}")
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def odd_part(n: int) -> int:
    return n // p_part(n, 2)


def is_primitive_divisor(ell: int, p: int, d: int) -> bool:
    """True iff ell divides p^d - 1 but no p^i - 1 with 1 <= i < d."""
    if (p**d - 1) % ell:
        return False
    return all((p**i - 1) % ell for i in range(1, d))


def multiplicative_order_mod(a: int, n: int) -> int:
    """Order of a in (Z/n)^*."""
    if math.gcd(a, n) != 1:
        raise PreconditionError(f"{a} is not a unit mod {n}")
    if n == 1:
        return 1
    order = euler_phi(n)
    for p, _ in factorize(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, f) with q = p^f, or raise."""
    fac = factorize(q).factors
    if len(fac) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    return fac[0]
