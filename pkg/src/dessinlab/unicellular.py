"""Unicellular regular dessins D(Z_ell, h^k, h^(1-k)) and their counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dessin import RegularDessin, make_dessin
from .errors import PreconditionError
from .groups.models import CyclicGroup, DirectProductGroup
from .numthy import euler_phi, factorize, p_part, prime_divisors


@dataclass(frozen=True)
class UnicellularDescriptor:
    ell: int
    k: int
    m: int
    n: int
    lam: int
    genus: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.lam)

    @property
    def chi(self) -> int:
        return self.m + self.n - self.ell + 1

    def as_row(self) -> dict:
        return {"ell": self.ell, "k": self.k, "m": self.m, "n": self.n,
                "lambda": self.lam, "genus": self.genus}


def describe(ell: int, k: int) -> UnicellularDescriptor:
    if ell < 1 or not 0 <= k < ell:
        raise PreconditionError(f"need ell >= 1 and 0 <= k < ell, got ({ell}, {k})")
    m = math.gcd(k, ell)
    n = math.gcd((1 - k) % ell, ell)
    lam = ell // (m * n)
    chi = m + n - ell + 1
    if chi % 2:
        raise AssertionError(f"odd Euler characteristic for ell={ell}, k={k}")
    return UnicellularDescriptor(ell, k, m, n, lam, (2 - chi) // 2)


def enumerate_unicellular(ell: int) -> list[UnicellularDescriptor]:
    return [describe(ell, k) for k in range(ell)]


def unicellular_dessin(ell: int, k: int) -> RegularDessin:
    Z = CyclicGroup(ell)
    return make_dessin(Z, k % ell, (1 - k) % ell, allow_star=True)


def _two_part(n: int) -> int:
    return p_part(n, 2)


def in_triple_set(ell: int, m: int, n: int, lam: int) -> bool:
    return (m * n * lam == ell and math.gcd(m, n) == 1
            and _two_part(lam) < max(_two_part(ell), 2))


def triple_set(ell: int) -> list[tuple[int, int, int]]:
    if ell < 1:
        raise PreconditionError(f"need ell >= 1, got {ell}")
    out = []
    for m in range(1, ell + 1):
        if ell % m:
            continue
        for n in range(1, ell // m + 1):
            if (ell // m) % n:
                continue
            lam = ell // (m * n)
            if in_triple_set(ell, m, n, lam):
                out.append((m, n, lam))
    return out


def _correction(ell: int, lam: int) -> Fraction:
    """phi(lam) times (p-2)/(p-1) over primes of lam not dividing ell/lam."""
    outside = set(prime_divisors(ell // lam))
    value = Fraction(euler_phi(lam))
    for p in prime_divisors(lam):
        if p not in outside:
            value *= Fraction(p - 2, p - 1)
    return value


def _as_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise AssertionError(f"count {value} is not an integer")
    return int(value)


def count_K(m: int, n: int, lam: int, ell: int | None = None) -> int:
    ell = m * n * lam if ell is None else ell
    if not in_triple_set(ell, m, n, lam):
        raise PreconditionError(f"({m}, {n}, {lam}) is not admissible for ell={ell}")
    return _as_int(_correction(ell, lam))


def count_U_lambda(ell: int, lam: int) -> int:
    if ell % lam or _two_part(lam) >= max(_two_part(ell), 2):
        raise PreconditionError(f"lambda={lam} is not admissible for ell={ell}")
    return _as_int(2 ** len(prime_divisors(ell // lam)) * _correction(ell, lam))


def _delta(ell: int) -> int:
    return ell % 2


def count_T(ell: int) -> int:
    if ell < 1:
        raise PreconditionError(f"need ell >= 1, got {ell}")
    total = 1
    for p, e in factorize(ell):
        total *= 2 * e + (_delta(ell) if p == 2 else 1)
    return total


def uncolored_graph_count(ell: int) -> int:
    total = count_T(ell) + _delta(ell)
    assert total % 2 == 0
    return total // 2


def admissible_lambdas(ell: int) -> list[int]:
    return sorted({lam for _, _, lam in triple_set(ell)})


def decomposition_identity(ell: int) -> dict:
    terms = [{"lambda": lam, "count": count_U_lambda(ell, lam)}
             for lam in admissible_lambdas(ell)]
    total = sum(t["count"] for t in terms)
    return {"ell": ell, "terms": terms, "total": total, "ok": total == ell}


def counting_report(ell: int) -> dict:
    ident = decomposition_identity(ell)
    return {"ell": ell, "T_size": count_T(ell), "total": ident["total"],
            "per_lambda": ident["terms"], "identity_ok": ident["ok"]}


def direct_product(dessins: Sequence[RegularDessin]) -> RegularDessin:
    """Componentwise generators; needs pairwise coprime |b_i| and |w_i|."""
    if len(dessins) == 1:
        return dessins[0]
    for attr in (0, 1):
        orders = [D.signature[attr] for D in dessins]
        for i in range(len(orders)):
            for j in range(i + 1, len(orders)):
                if math.gcd(orders[i], orders[j]) != 1:
                    raise PreconditionError(f"orders {orders} are not pairwise coprime")
    b = tuple(D.b for D in dessins)
    w = tuple(D.w for D in dessins)
    G = DirectProductGroup([D.group for D in dessins], gens=[b, w])
    return make_dessin(G, b, w, allow_star=True)
