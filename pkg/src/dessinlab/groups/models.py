"""Concrete group models: cyclic, permutation, quaternion, direct product,
one-dimensional affine, and wreath products with a cyclic top group."""

from __future__ import annotations

import math
from functools import reduce
from typing import Sequence

from ..errors import PreconditionError
from ..fields import GF
from .base import Group


class CyclicGroup(Group):
    """Z_n written multiplicatively as powers of h; elements are exponents."""

    def __init__(self, n: int):
        if n < 1:
            raise PreconditionError(f"cyclic group order must be >= 1, got {n}")
        self.n = n
        super().__init__([1 % n])

    @property
    def spec(self):
        return f"cyclic:{self.n}"

    def identity(self):
        return 0

    def mul(self, a, b):
        return (a + b) % self.n

    def inv(self, a):
        return (-a) % self.n

    def power(self, g, k):
        return g * k % self.n

    def contains(self, g):
        return isinstance(g, int) and 0 <= g < self.n

    def structural_order(self):
        return self.n

    def element_order(self, g):
        return self.n // math.gcd(g, self.n)

    def h(self, k: int = 1) -> int:
        return k % self.n

    def format_element(self, g):
        return "1" if g == 0 else ("h" if g == 1 else f"h^{g}")


def perm_from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> tuple[int, ...]:
    image = list(range(n))
    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if not 0 <= pt < n or pt in seen:
                raise PreconditionError(f"bad cycle {tuple(cyc)} on {n} points")
            seen.add(pt)
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            image[a] = b
    return tuple(image)


def perm_cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [i], p[i]
        seen.add(i)
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


class PermutationGroup(Group):
    """Permutations of {0..n-1} as image tuples, acting on the right.

    The product p*q applies p first: (p*q)[i] = q[p[i]].
    """

    def __init__(self, n: int, gens: Sequence[Sequence[int]], label: str | None = None):
        self.n = n
        gens = [tuple(g) for g in gens]
        for g in gens:
            if sorted(g) != list(range(n)):
                raise PreconditionError(f"{g} is not a permutation of {n} points")
        self.label = label
        super().__init__(gens or [tuple(range(n))])

    @property
    def spec(self):
        if self.label:
            return self.label
        parts = ["".join("(" + ",".join(map(str, c)) + ")" for c in perm_cycles(g)) or "()"
                 for g in self.gens]
        return f"perm:{self.n}:" + ";".join(parts)

    def identity(self):
        return tuple(range(self.n))

    def mul(self, a, b):
        return tuple(b[i] for i in a)

    def inv(self, a):
        out = [0] * self.n
        for i, ai in enumerate(a):
            out[ai] = i
        return tuple(out)

    def contains(self, g):
        return isinstance(g, tuple) and sorted(g) == list(range(self.n))

    def element_order(self, g):
        return reduce(lambda x, y: x * y // math.gcd(x, y),
                      (len(c) for c in perm_cycles(g)), 1)

    def format_element(self, g):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in perm_cycles(g)) or "()"


def alternating_group_a5() -> PermutationGroup:
    return PermutationGroup(5, [perm_from_cycles(5, [[0, 1, 2, 3, 4]]),
                                perm_from_cycles(5, [[0, 1, 2]])], label="a5")


class QuaternionGroup(Group):
    """Q_{4m} = <x, y | x^{2m}, y^2 = x^m, x^y = x^-1>; (a, e) is x^a y^e."""

    def __init__(self, order: int):
        if order % 4 or order < 4:
            raise PreconditionError(f"quaternion order must be a multiple of 4, got {order}")
        self.m = order // 4
        super().__init__([(1 % (2 * self.m), 0), (0, 1)])

    @property
    def spec(self):
        return f"quaternion:{4 * self.m}"

    @property
    def x(self):
        return (1 % (2 * self.m), 0)

    @property
    def y(self):
        return (0, 1)

    def identity(self):
        return (0, 0)

    def mul(self, u, v):
        a, e = u
        c, f = v
        n = 2 * self.m
        if e == 0:
            return ((a + c) % n, f)
        if f == 0:
            return ((a - c) % n, 1)
        return ((a - c + self.m) % n, 0)

    def inv(self, u):
        a, e = u
        n = 2 * self.m
        return ((-a) % n, 0) if e == 0 else ((a + self.m) % n, 1)

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == 2 and 0 <= g[0] < 2 * self.m
                and g[1] in (0, 1))

    def structural_order(self):
        return 4 * self.m

    def format_element(self, g):
        a, e = g
        xs = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
        ys = "y" if e else ""
        return (xs + ys) or "1"


class DirectProductGroup(Group):
    """Componentwise product; generated by the given tuple generators."""

    def __init__(self, factors: Sequence[Group], gens: Sequence[tuple] | None = None):
        self.factors = tuple(factors)
        if gens is None:
            gens = []
            for i, fac in enumerate(self.factors):
                for g in fac.gens:
                    gens.append(tuple(g if j == i else f.identity()
                                      for j, f in enumerate(self.factors)))
        super().__init__(gens)

    @property
    def spec(self):
        return " x ".join(f.spec for f in self.factors)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == len(self.factors)
                and all(f.contains(x) for f, x in zip(self.factors, g)))

    def element_order(self, g):
        return reduce(lambda x, y: x * y // math.gcd(x, y),
                      (f.element_order(x) for f, x in zip(self.factors, g)), 1)

    def format_element(self, g):
        return "(" + ", ".join(f.format_element(x) for f, x in zip(self.factors, g)) + ")"


class AffineGroup(Group):
    """GF(q)^+ : <h> inside AGL(1, q), h = mu^((q-1)/ell) for the smallest
    primitive element mu.

    (beta, e) is the map v -> v h^e + beta; maps compose left to right, so
    (beta1, e1)(beta2, e2) = (beta1 h^e2 + beta2, e1 + e2).
    """

    def __init__(self, p: int, d: int, ell: int):
        q = p**d
        if (q - 1) % ell:
            raise PreconditionError(f"{ell} does not divide {q} - 1")
        self.p, self.d, self.ell, self.q = p, d, ell, q
        self.field = GF(p, d)
        self.mu = self.field.primitive_element()
        h = self.field.pow(self.mu, (q - 1) // ell)
        self.hpow = [self.field.pow(h, e) for e in range(ell)]
        super().__init__([(0, 1 % ell), (1, 0)])

    @property
    def spec(self):
        return f"agl1:{self.p}^{self.d}:{self.ell}"

    def h(self, k: int = 1):
        return (0, k % self.ell)

    def translation(self, beta: int):
        return (beta, 0)

    def identity(self):
        return (0, 0)

    def mul(self, a, b):
        F = self.field
        return (F.add(F.mul(a[0], self.hpow[b[1]]), b[0]), (a[1] + b[1]) % self.ell)

    def inv(self, a):
        F = self.field
        e = (-a[1]) % self.ell
        return (F.neg(F.mul(a[0], self.hpow[e])), e)

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == 2 and 0 <= g[0] < self.q
                and 0 <= g[1] < self.ell)

    def structural_order(self):
        return self.q * self.ell

    def element_order(self, g):
        beta, e = g
        if e:
            return self.ell // math.gcd(e, self.ell)
        return 1 if beta == 0 else self.p

    def format_element(self, g):
        beta, e = g
        parts = []
        if e:
            parts.append("h" if e == 1 else f"h^{e}")
        if beta:
            parts.append("t[" + ",".join(map(str, self.field.coeffs(beta))) + "]")
        return "".join(parts) or "1"


class WreathGroup(Group):
    """T^k : <g> with g shifting coordinates, never enumerated for large k.

    (t, c) stands for t g^c with u^g = (u_k, u_1, ..., u_{k-1}); products are
    (t, c)(u, d) = ((t_i u_{i+c})_i, c + d), indices mod k.
    """

    def __init__(self, inner: PermutationGroup, k: int, label: str = "a5"):
        if k < 1:
            raise PreconditionError(f"wreath degree must be >= 1, got {k}")
        self.inner, self.k, self.label = inner, k, label
        self._inner_set = frozenset(inner.elements())
        one = inner.identity()
        gens = []
        for t in inner.gens:
            gens.append((tuple(t if i == 0 else one for i in range(k)), 0))
        gens.append(((one,) * k, 1 % k))
        super().__init__(gens)

    @property
    def spec(self):
        return f"wreath:{self.label}:{self.k}"

    @property
    def shift(self):
        return ((self.inner.identity(),) * self.k, 1 % self.k)

    def base(self, entries: Sequence) -> tuple:
        if len(entries) != self.k:
            raise PreconditionError(f"need {self.k} base entries")
        return (tuple(entries), 0)

    def identity(self):
        return ((self.inner.identity(),) * self.k, 0)

    def mul(self, a, b):
        t, c = a
        u, d = b
        k, m = self.k, self.inner.mul
        return (tuple(m(t[i], u[(i + c) % k]) for i in range(k)), (c + d) % k)

    def inv(self, a):
        t, c = a
        k, inv = self.k, self.inner.inv
        return (tuple(inv(t[(j - c) % k]) for j in range(k)), (-c) % k)

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == 2 and len(g[0]) == self.k
                and all(t in self._inner_set for t in g[0]) and 0 <= g[1] < self.k)

    def structural_order(self):
        return self.inner.order() ** self.k * self.k

    def element_order(self, g):
        """Reduce to the base: g^o lies in T^k for o the order of the top part,
        and its order there is the lcm of the coordinate orders."""
        _, c = g
        top = self.k // math.gcd(c, self.k)
        x = self.power(g, top)
        base_order = reduce(lambda a, b: a * b // math.gcd(a, b),
                            (self.inner.element_order(t) for t in x[0]), 1)
        return top * base_order

    def format_element(self, g):
        t, c = g
        body = ",".join(self.inner.format_element(x) for x in t)
        tail = "" if c == 0 else ("g" if c == 1 else f"g^{c}")
        return f"[{body}]{tail}"
