"""Exact univariate integer polynomials, cyclotomic and trace polynomials."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable

from .errors import PreconditionError
from .numthy import divisors, euler_phi


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Polynomial with Python-int coefficients, constant term first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division; raises if a quotient coefficient is not an integer."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = divisor.degree
        lead = divisor.leading
        quot = [0] * max(0, len(rem) - dq)
        for shift in range(len(rem) - 1 - dq, -1, -1):
            top = rem[shift + dq]
            if top == 0:
                continue
            if top % lead:
                raise ArithmeticError("quotient has non-integer coefficients")
            factor = top // lead
            quot[shift] = factor
            for i, c in enumerate(divisor.coeffs):
                rem[shift + i] -= factor * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError("division leaves a remainder")
        return quot

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c: int) -> "IntPolynomial":
        """The polynomial f(X + c)."""
        return self.compose(IntPolynomial([c, 1]))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "X" if k == 1 else f"X^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPolynomial:
    """Phi_n via exact division of X^n - 1 by Phi_d for the proper divisors d."""
    if n < 1:
        raise PreconditionError(f"cyclotomic_poly needs n >= 1, got {n}")
    poly = IntPolynomial.monomial(n) - 1
    for d in divisors(n):
        if d < n:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly


@lru_cache(maxsize=None)
def psi_poly(n: int) -> IntPolynomial:
    """Minimal polynomial of 2cos(2pi/n), recovered from Phi_n.

    Phi_n is palindromic of degree 2d with d = phi(n)/2, so Phi_n(X)/X^d is a
    Laurent polynomial symmetric under X -> 1/X. Peel off the top term a X^k
    by subtracting a (X + 1/X)^k and recording a Y^k, down to k = 0.
    """
    if n < 3:
        raise PreconditionError(f"psi_poly needs n >= 3, got {n}")
    phi = cyclotomic_poly(n)
    d = euler_phi(n) // 2
    laurent = {k - d: c for k, c in enumerate(phi.coeffs) if c}
    out = [0] * (d + 1)
    for k in range(d, -1, -1):
        a = laurent.get(k, 0)
        if a == 0:
            continue
        out[k] = a
        for r in range(k + 1):
            e = k - 2 * r
            laurent[e] = laurent.get(e, 0) - a * comb(k, r)
    if any(laurent.values()):
        raise ArithmeticError(f"Phi_{n} is not symmetric")
    return IntPolynomial(out)


def psi_star_poly(n: int) -> IntPolynomial:
    """psi_n(X + 2): its roots i are the exponents whose trace i + 2 is a root of psi_n."""
    return psi_poly(n).shift(2)


def laurent_clear(psi: IntPolynomial, half_degree: int) -> IntPolynomial:
    """Expand psi(X + 1/X) * X^half_degree as an ordinary polynomial.

    Independent of the peeling in ``psi_poly``: it expands each power of
    X + 1/X binomially and collects exponents.
    """
    out = {}
    for k, a in enumerate(psi.coeffs):
        for r in range(k + 1):
            e = k - 2 * r + half_degree
            out[e] = out.get(e, 0) + a * comb(k, r)
    if any(e < 0 and c for e, c in out.items()):
        raise ArithmeticError("negative exponent survives")
    top = max(out) if out else 0
    return IntPolynomial(out.get(e, 0) for e in range(top + 1))


def poly_roots_mod_p(f: IntPolynomial, p: int) -> set[int]:
    """All residues i in [0, p) with f(i) = 0 mod p, by sweeping."""
    return {i for i in range(p) if f.eval_mod(i, p) == 0}
