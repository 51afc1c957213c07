"""2x2 matrix groups over GF(q): SL(2,q), PSL(2,q) and SigmaL(2,2^r).

A matrix [[a, b], [c, d]] is the tuple (a, b, c, d) of field codes.
"""

from __future__ import annotations

import math
from functools import reduce

from ..errors import PreconditionError
from ..fields import GF, FiniteField
from ..numthy import factorize, is_prime, prime_power
from .base import Group


def mat_mul(F: FiniteField, A, B):
    a, b, c, d = A
    e, f, g, h = B
    if F.f == 1:
        p = F.p
        return ((a * e + b * g) % p, (a * f + b * h) % p,
                (c * e + d * g) % p, (c * f + d * h) % p)
    add, mul = F.add, F.mul
    return (add(mul(a, e), mul(b, g)), add(mul(a, f), mul(b, h)),
            add(mul(c, e), mul(d, g)), add(mul(c, f), mul(d, h)))


def mat_inv_det1(F: FiniteField, A):
    a, b, c, d = A
    return (d, F.neg(b), F.neg(c), a)


def trace(F: FiniteField, A) -> int:
    return F.add(A[0], A[3])


class SL2Group(Group):
    """SL(2, p^f), generated by the two unipotent matrices (plus a diagonal
    matrix when f > 1)."""

    def __init__(self, p: int, f: int = 1):
        if not is_prime(p) or f < 1:
            raise PreconditionError(f"need a prime p and f >= 1, got p={p}, f={f}")
        self.p, self.f = p, f
        self.field = F = GF(p, f)
        self.q = F.q
        gens = [self.lower_unipotent, self.upper_unipotent]
        if f > 1:
            mu = F.primitive_element()
            gens.append((mu, 0, 0, F.inv(mu)))
        super().__init__(gens)

    @property
    def spec(self):
        return f"sl2:{self.p}" + (f"^{self.f}" if self.f > 1 else "")

    @property
    def lower_unipotent(self):
        return (1, 0, 1, 1)

    @property
    def upper_unipotent(self):
        return (1, 1, 0, 1)

    @property
    def minus_identity(self):
        return (self.field.neg(1), 0, 0, self.field.neg(1))

    def matrix(self, rows) -> tuple:
        (a, b), (c, d) = rows
        F = self.field
        m = tuple(F.from_int(v) if F.f == 1 else v for v in (a, b, c, d))
        return self.check(m)

    def identity(self):
        return (1, 0, 0, 1)

    def mul(self, a, b):
        return mat_mul(self.field, a, b)

    def inv(self, a):
        return mat_inv_det1(self.field, a)

    def contains(self, g):
        if not (isinstance(g, tuple) and len(g) == 4):
            return False
        if not all(isinstance(v, int) and 0 <= v < self.q for v in g):
            return False
        F = self.field
        return F.sub(F.mul(g[0], g[3]), F.mul(g[1], g[2])) == 1

    def structural_order(self):
        q = self.q
        return q * (q * q - 1)

    def trace(self, g) -> int:
        return trace(self.field, g)

    def order_exponents(self) -> list[int]:
        """Every element order divides one of these."""
        q, p = self.q, self.p
        return [q - 1, q + 1, p if p == 2 else 2 * p]

    def element_order(self, g):
        e = self.identity()
        if g == e:
            return 1
        for exp in self.order_exponents():
            if self.power(g, exp) == e:
                order = exp
                for prime, _ in factorize(exp):
                    while order % prime == 0 and self.power(g, order // prime) == e:
                        order //= prime
                return order
        raise AssertionError(f"{g} has no admissible order")

    def center_elements(self) -> list:
        return sorted({self.identity(), self.minus_identity})

    def format_element(self, g):
        a, b, c, d = g
        return f"[[{a},{b}],[{c},{d}]]"


class ProjectiveSL2Group(Group):
    """PSL(2, q) = SL(2, q)/{I, -I}; the canonical representative of a coset
    is the smaller of A and -A."""

    def __init__(self, p: int, f: int = 1):
        self.sl = SL2Group(p, f)
        self.p, self.f, self.q, self.field = p, f, self.sl.q, self.sl.field
        super().__init__([self.project(g) for g in self.sl.gens])

    @property
    def spec(self):
        return f"psl2:{self.p}" + (f"^{self.f}" if self.f > 1 else "")

    def negate(self, A):
        neg = self.field.neg
        return tuple(neg(v) for v in A)

    def project(self, A):
        return min(A, self.negate(A))

    def identity(self):
        return self.sl.identity()

    def mul(self, a, b):
        return self.project(self.sl.mul(a, b))

    def inv(self, a):
        return self.project(self.sl.inv(a))

    def contains(self, g):
        return self.sl.contains(g) and g == self.project(g)

    def structural_order(self):
        return self.sl.structural_order() // math.gcd(2, self.q - 1)

    def trace(self, g) -> int:
        return self.sl.trace(g)

    def element_order(self, g):
        o = self.sl.element_order(g)
        if o % 2 == 0 and self.sl.power(g, o // 2) == self.sl.minus_identity:
            return o // 2
        return o

    def matrix(self, rows):
        return self.project(self.sl.matrix(rows))

    def format_element(self, g):
        return "+-" + self.sl.format_element(g)


class SigmaL2Group(Group):
    """SigmaL(2, 2^r) = SL(2, 2^r) : <phi> with phi the entrywise Frobenius.

    (A, e) stands for A phi^e, and phi^e B phi^-e = F^e(B) with F squaring
    entries, so (A, e)(B, f) = (A F^e(B), e + f).
    """

    def __init__(self, r: int):
        if r < 1:
            raise PreconditionError(f"need r >= 1, got {r}")
        self.r = r
        self.sl = SL2Group(2, r)
        self.field = F = self.sl.field
        self._frob = [[F.frobenius(a, e) for a in range(F.q)] for e in range(r)]
        super().__init__([(g, 0) for g in self.sl.gens] + [(self.sl.identity(), 1 % r)])

    @property
    def spec(self):
        return f"sigmal2:{self.r}"

    @property
    def phi(self):
        return (self.sl.identity(), 1 % self.r)

    def embed(self, A):
        return (A, 0)

    def frob(self, A, e: int):
        table = self._frob[e % self.r]
        return tuple(table[v] for v in A)

    def identity(self):
        return (self.sl.identity(), 0)

    def mul(self, a, b):
        A, e = a
        B, f = b
        return (self.sl.mul(A, self.frob(B, e)), (e + f) % self.r)

    def inv(self, a):
        A, e = a
        return (self.frob(self.sl.inv(A), -e), (-e) % self.r)

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == 2 and self.sl.contains(g[0])
                and isinstance(g[1], int) and 0 <= g[1] < self.r)

    def structural_order(self):
        return self.sl.structural_order() * self.r

    def element_order(self, g):
        top = self.r // math.gcd(g[1], self.r)
        x = self.power(g, top)
        return top * self.sl.element_order(x[0])

    def format_element(self, g):
        A, e = g
        tail = "" if e == 0 else ("phi" if e == 1 else f"phi^{e}")
        return self.sl.format_element(A) + tail


def lcm_all(values) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


def sl2_from_q(q: int, projective: bool = False) -> Group:
    p, f = prime_power(q)
    return ProjectiveSL2Group(p, f) if projective else SL2Group(p, f)
