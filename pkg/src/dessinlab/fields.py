"""Finite fields GF(p^f) with elements encoded as integers.

An element with coefficient vector (c_0, ..., c_{f-1}) over GF(p) is stored as
the integer sum c_i p^i. ``FiniteField`` works on these integers directly so
that group models can keep matrices as plain tuples; ``FqElement`` wraps one
integer with operator overloads for readable user code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .numthy import factorize, is_prime
from .polynomial import IntPolynomial

TABLE_LIMIT = 1 << 12
ADD_TABLE_LIMIT = 256


def _polymod_p(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic m, coefficients mod p, constant first."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for shift in range(len(a) - 1 - dm, -1, -1):
        top = a[shift + dm]
        if top:
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - top * c) % p
    a = a[:dm] if dm > 0 else []
    return a


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    f = len(coeffs) - 1
    for k in range(1, f // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            divisor = list(low) + [1]
            if not any(_polymod_p(coeffs, divisor, p)):
                return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, f: int) -> IntPolynomial:
    """First monic irreducible of degree f over GF(p).

    Candidates are ordered by their integer encoding, i.e. lexicographically
    on (c_{f-1}, ..., c_0). For f = 1 the sentinel X is returned.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if f < 1:
        raise PreconditionError(f"degree must be >= 1, got {f}")
    if f == 1:
        return IntPolynomial([0, 1])
    for code in range(p**f):
        low = [(code // p**i) % p for i in range(f)]
        coeffs = low + [1]
        if coeffs[0] == 0:
            continue
        if _is_irreducible(coeffs, p):
            return IntPolynomial(coeffs)
    raise AssertionError(f"no irreducible of degree {f} over GF({p})")


class FiniteField:
    """GF(p^f) acting on integer codes in [0, p^f)."""

    def __init__(self, p: int, f: int = 1):
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = find_irreducible(p, f)
        self._mod = list(self.modulus.coeffs)
        self._exp = None
        self._log = None
        self._add = None
        if f > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.f})" if self.f > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash((self.p, self.f))

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p**i) % p for i in range(self.f))

    def from_coeffs(self, coeffs) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def _poly_mul(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.f - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.from_coeffs(_polymod_p(prod, self._mod, self.p))

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        out, scale = 0, 1
        for _ in range(self.f):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _build_tables(self):
        q = self.q
        gen = None
        for cand in range(2, q):
            x, k = cand, 1
            while x != 1:
                x = self._poly_mul(x, cand)
                k += 1
            if k == q - 1:
                gen = cand
                break
        if gen is None:
            gen = 1
        exp = [1] * (2 * (q - 1))
        for k in range(1, 2 * (q - 1)):
            exp[k] = self._poly_mul(exp[k - 1], gen)
        log = [0] * q
        for k in range(q - 1):
            log[exp[k]] = k
        self._exp, self._log = exp, log
        if q <= ADD_TABLE_LIMIT:
            self._add = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        if self.f == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_coeffs(-c for c in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._poly_mul(a, b)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        if self.f == 1:
            return pow(a, k, self.p)
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.f == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def frobenius(self, a: int, k: int = 1) -> int:
        return self.pow(a, self.p**k)

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(p) -> GF(q)."""
        return n % self.p

    def mul_order(self, a: int) -> int:
        """Multiplicative order by dividing out prime factors of q - 1."""
        if a == 0:
            raise PreconditionError("zero has no multiplicative order")
        order = self.q - 1
        for prime, _ in factorize(order):
            while order % prime == 0 and self.pow(a, order // prime) == 1:
                order //= prime
        return order

    def primitive_element(self) -> int:
        """Smallest code generating the multiplicative group."""
        for cand in range(1, self.q):
            if self.mul_order(cand) == self.q - 1:
                return cand
        raise AssertionError("multiplicative group has no generator")

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a: int) -> int:
        """A square root of a square, by Tonelli-Shanks."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if not self.is_square(a):
            raise PreconditionError(f"{a} is not a square in {self}")
        s, odd = 0, self.q - 1
        while odd % 2 == 0:
            odd //= 2
            s += 1
        z = next(c for c in range(2, self.q) if not self.is_square(c))
        m, c = s, self.pow(z, odd)
        t, r = self.pow(a, odd), self.pow(a, (odd + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = self.mul(t2, t2)
                i += 1
            bpow = c
            for _ in range(m - i - 1):
                bpow = self.mul(bpow, bpow)
            m, c = i, self.mul(bpow, bpow)
            t, r = self.mul(t, c), self.mul(r, bpow)
        return r

    def element(self, value) -> "FqElement":
        if isinstance(value, (list, tuple)):
            value = self.from_coeffs(value)
        return FqElement(self, value % self.q if self.f == 1 else value)


@lru_cache(maxsize=None)
def GF(p: int, f: int = 1) -> FiniteField:
    return FiniteField(p, f)


@dataclass(frozen=True)
class FqElement:
    field: FiniteField
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise PreconditionError(f"code {self.value} outside {self.field}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise PreconditionError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return FqElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __neg__(self):
        return FqElement(self.field, self.field.neg(self.value))

    def __sub__(self, other):
        return FqElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FqElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FqElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FqElement(
            self.field, self.field.mul(self.value, self.field.inv(self._other(other)))
        )

    def __pow__(self, k: int):
        return FqElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> "FqElement":
        return FqElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FqElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.f, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FqElement({self.field!r}, {list(self.coeffs)})"


def fq_mul_order(x: FqElement) -> int:
    return x.field.mul_order(x.value)
