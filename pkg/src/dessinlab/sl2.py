"""The standard pair family D(SL(2,p), b, w^i), face-length arithmetic via
eigenvalues, Fibonacci orders, spectra and (l, m, n)-generation predicates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .covering import classify_covering
from .dessin import RegularDessin, make_dessin
from .errors import OutOfScope, PreconditionError, SearchExhausted
from .fields import GF
from .groups.indexed import IndexedGroup
from .groups.matrix import ProjectiveSL2Group, SL2Group
from .groups.ops import center
from .numthy import divisors, euler_phi, is_prime, odd_part, prime_power
from .polynomial import poly_roots_mod_p, psi_star_poly

GENERATION_CHECK_LIMIT = 31


def _require_prime(p: int) -> None:
    if not is_prime(p) or p < 5:
        raise PreconditionError(f"need a prime p >= 5, got {p}")


def _require_index(p: int, i: int) -> None:
    if not 1 <= i <= p - 1:
        raise PreconditionError(f"need 1 <= i <= {p - 1}, got {i}")


@dataclass(frozen=True)
class StandardPair:
    """b = [[1,0],[1,1]] and w = [[1,1],[0,1]] in SL(2,p), with exponent i."""

    p: int
    i: int

    @property
    def trace(self) -> int:
        return (self.i + 2) % self.p

    @property
    def order(self) -> int:
        return bw_order(self.p, self.i)

    @property
    def smooth(self) -> bool:
        return self.order % 2 == 1

    def group_and_generators(self) -> tuple[SL2Group, tuple, tuple]:
        G = SL2Group(self.p)
        return G, G.lower_unipotent, G.power(G.upper_unipotent, self.i)

    def dessin(self) -> RegularDessin:
        G, b, w = self.group_and_generators()
        return make_dessin(G, b, w, asserted_by_construction=self.p > GENERATION_CHECK_LIMIT)


def standard_pair(p: int) -> tuple[SL2Group, tuple, tuple]:
    """(SL(2,p), b, w); generation checked by closure for p <= 31."""
    if p == 2 or not is_prime(p) or p < 5:
        raise PreconditionError(f"need an odd prime p >= 5, got {p}")
    G = SL2Group(p)
    b, w = G.lower_unipotent, G.upper_unipotent
    if p <= GENERATION_CHECK_LIMIT:
        size = len(G.closure([b, w]))
        if size != G.order():
            raise AssertionError(f"standard pair generates {size} elements, not {G.order()}")
    return G, b, w


def bw_order(p: int, i: int) -> int:
    """|b w^i| from the eigenvalues of X^2 - (i+2) X + 1."""
    _require_prime(p)
    _require_index(p, i)
    tau = (i + 2) % p
    assert tau != 2, "trace 2 needs i = 0 mod p"
    if tau == p - 2:
        return 2 * p
    F = GF(p, 2)
    disc = F.from_int(tau * tau - 4)
    mu = F.mul(F.add(F.from_int(tau), F.sqrt(disc)), F.inv(F.from_int(2)))
    return F.mul_order(mu)


def bw_order_bruteforce(p: int, i: int) -> int:
    _require_prime(p)
    _require_index(p, i)
    G = SL2Group(p)
    return G.naive_order(G.mul(G.lower_unipotent, G.power(G.upper_unipotent, i)))


def smooth_count_formula(p: int) -> int:
    return (odd_part(p + 1) + odd_part(p - 1)) // 2 - 1


def smooth_indices(p: int) -> list[int]:
    """Exponents i with |b w^i| odd, i.e. D(SL(2,p), b, w^i) covers its
    central quotient smoothly."""
    _require_prime(p)
    out = [i for i in range(1, p) if bw_order(p, i) % 2 == 1]
    if len(out) != smooth_count_formula(p):
        raise AssertionError(f"{len(out)} smooth indices for p={p}, expected "
                             f"{smooth_count_formula(p)}")
    return out


def smooth_index_table(p: int) -> list[dict]:
    _require_prime(p)
    rows = []
    for i in range(1, p):
        n = bw_order(p, i)
        rows.append({"p": p, "i": i, "order": n, "smooth": n % 2 == 1})
    return rows


def indices_with_order(p: int, n: int) -> list[int]:
    _require_prime(p)
    if n < 3 or ((p - 1) % n and (p + 1) % n):
        raise PreconditionError(f"need n >= 3 dividing {p - 1} or {p + 1}, got {n}")
    out = [i for i in range(1, p) if bw_order(p, i) == n]
    if 2 * len(out) != euler_phi(n):
        raise AssertionError(f"{len(out)} indices of order {n} for p={p}")
    return out


def psi_root_pairs(n: int, p_max: int) -> list[tuple[int, int]]:
    """(p, i) with 5 <= p <= p_max prime, n | p +- 1, 1 <= i <= p-1 and
    psi*_n(i) = 0 mod p."""
    f = psi_star_poly(n)
    out = []
    for p in range(5, p_max + 1):
        if not is_prime(p) or ((p - 1) % n and (p + 1) % n):
            continue
        out.extend((p, i) for i in sorted(poly_roots_mod_p(f, p)) if 1 <= i <= p - 1)
    return out


def psi_report(n: int, p_max: int) -> dict:
    f = psi_star_poly(n)
    roots: dict = {}
    for p, i in psi_root_pairs(n, p_max):
        roots.setdefault(p, []).append(i)
    return {"n": n, "psi_star": str(f), "coefficients": list(f.coeffs),
            "roots": [{"p": p, "i": ii} for p, ii in sorted(roots.items())]}


# Fibonacci case i = 1

def pisano_period(p: int) -> int:
    a, b, k = 0, 1, 0
    while True:
        a, b = b, (a + b) % p
        k += 1
        if (a, b) == (0, 1):
            return k


def fibonacci_power_matrix(p: int, k: int) -> tuple:
    """(bw)^k = [[F_{2k-1}, F_{2k}], [F_{2k}, F_{2k+1}]] mod p."""
    F = [0, 1]
    while len(F) < 2 * k + 2:
        F.append((F[-1] + F[-2]) % p)
    return (F[2 * k - 1], F[2 * k], F[2 * k], F[2 * k + 1])


def fibonacci_class(p: int) -> str:
    if p == 5:
        return "p=5"
    if p % 5 in (1, 4):
        return "divides (p-1)/2; odd" if p % 4 == 3 else "divides (p-1)/2; parity open"
    return "divides p+1, not (p+1)/2; even"


def fibonacci_order(p: int) -> tuple[int, str]:
    """|bw| for i = 1, cross-checked against half the Pisano period."""
    _require_prime(p)
    order = bw_order(p, 1)
    if 2 * order != pisano_period(p):
        raise AssertionError(f"|bw| = {order} but the Pisano period of {p} is "
                             f"{pisano_period(p)}")
    tag = fibonacci_class(p)
    if p == 5:
        assert order == 10
    elif p % 5 in (1, 4):
        assert ((p - 1) // 2) % order == 0
    else:
        assert (p + 1) % order == 0 and ((p + 1) // 2) % order != 0
    return order, tag


def fibonacci_smooth_verdicts(ps) -> list[dict]:
    rows = []
    for p in ps:
        order, tag = fibonacci_order(p)
        rows.append({"p": p, "p_mod_20": p % 20, "order": order,
                     "smooth": order % 2 == 1, "class": tag})
    return rows


# Spectra and generation predicates

def spectrum(q: int, projective: bool) -> list[int]:
    p, _ = prime_power(q)
    if p == 2:
        raise PreconditionError("spectrum formulas here need odd q")
    if projective:
        out = set(divisors((q - 1) // 2)) | set(divisors((q + 1) // 2)) | {p}
    else:
        out = set(divisors(q - 1)) | set(divisors(q + 1)) | {p, 2 * p}
    return sorted(out)


def spectrum_by_enumeration(q: int, projective: bool) -> list[int]:
    p, f = prime_power(q)
    G = ProjectiveSL2Group(p, f) if projective else SL2Group(p, f)
    return sorted({G.element_order(g) for g in G.elements()})


def _proper_subfield_spectra(q: int, projective: bool) -> list[set]:
    p, f = prime_power(q)
    return [set(spectrum(p**e, projective)) for e in divisors(f) if e < f]


def _hyperbolic(l: int, m: int, n: int) -> bool:
    return Fraction(1, l) + Fraction(1, m) + Fraction(1, n) < 1


def lmn_group_criterion(q: int, l: int, m: int, n: int, projective: bool) -> bool:
    """Whether SL(2,q) (or PSL(2,q)) is generated by a pair with orders
    (l, m, n), for odd hyperbolic l <= m <= n."""
    p, _ = prime_power(q)
    problems = []
    if p == 2 or q < 5:
        problems.append(f"q={q} must be an odd prime power >= 5")
    if not l <= m <= n:
        problems.append(f"({l}, {m}, {n}) is not sorted")
    if any(x % 2 == 0 for x in (l, m, n)):
        problems.append(f"({l}, {m}, {n}) has an even entry")
    if not problems:
        spec = set(spectrum(q, projective))
        missing = [x for x in (l, m, n) if x not in spec]
        if missing:
            problems.append(f"{missing} not in the spectrum")
    if not _hyperbolic(l, m, n):
        problems.append(f"1/{l} + 1/{m} + 1/{n} is not below 1")
    if problems:
        raise PreconditionError("; ".join(problems))
    triple = {l, m, n}
    subfield_ok = not any(triple <= s for s in _proper_subfield_spectra(q, projective))
    if projective:
        return subfield_ok
    exceptions = {(3, 3, p, p), (p, p, p, p), (3, 5, 5, 9)}
    return subfield_ok and (l, m, n, q) not in exceptions


def schur_smooth_exists(q: int, l: int, m: int, n: int) -> bool:
    """Whether some D(PSL(2,q), b, w) of type (l, m, n) is covered smoothly
    by a dessin with group SL(2,q)."""
    p, _ = prime_power(q)
    if q == 9:
        raise OutOfScope("q = 9 has extra Schur covers; not handled")
    if p == 2 or q < 5:
        raise PreconditionError(f"q={q} must be an odd prime power >= 5")
    spec = set(spectrum(q, projective=True))
    if not (l <= m <= n) or min(l, m, n) <= 1 or not {l, m, n} <= spec:
        raise PreconditionError(f"need 1 < l <= m <= n in Spec(PSL(2,{q})), got ({l}, {m}, {n})")
    if (l * m * n) % 2 == 0 or (l, m, n) == (3, 3, 3):
        return False
    if (l, m, n, q) in {(3, 3, p, p), (p, p, p, p)}:
        return False
    return not any({l, m, n} <= s for s in _proper_subfield_spectra(q, projective=True))


def admissible_triples(q: int, projective: bool, odd_hyperbolic: bool) -> list[tuple]:
    spec = [x for x in spectrum(q, projective) if x > 1]
    out = []
    for a in spec:
        for b in spec:
            for c in spec:
                if not a <= b <= c:
                    continue
                if odd_hyperbolic and ((a * b * c) % 2 == 0 or not _hyperbolic(a, b, c)):
                    continue
                out.append((a, b, c))
    return out


@lru_cache(maxsize=None)
def _indexed(q: int, projective: bool) -> IndexedGroup:
    p, f = prime_power(q)
    return IndexedGroup(ProjectiveSL2Group(p, f) if projective else SL2Group(p, f))


@lru_cache(maxsize=None)
def brute_force_lmn(q: int, l: int, m: int, n: int, projective: bool):
    """A generating pair (b, w) with orders (l, m, n), or None after
    exhausting b over class representatives and w over all elements."""
    IG = _indexed(q, projective)
    orders = IG.orders
    reps = [i for i in IG.conjugacy_class_reps() if orders[i] == l]
    w_ok = orders == m
    for bi in reps:
        b = IG.elements[bi]
        prod_orders = orders[IG.left_perm(b)]
        right_b = IG.right_perm(b)
        for wi in np.nonzero(w_ok & (prod_orders == n))[0]:
            w = IG.elements[wi]
            if IG.closure_size([right_b, IG.right_perm(w)]) == IG.n:
                return b, w
    return None


def eq_trace_witness(q: int, alpha: int, beta: int, gamma: int) -> tuple:
    """(b, w) in SL(2,q) with traces alpha, beta and gamma for b, w, bw;
    b is the companion matrix of X^2 - alpha X + 1."""
    p, f = prime_power(q)
    G = SL2Group(p, f)
    F = G.field
    b = (0, F.neg(F.one), F.one, alpha)
    G.check(b)
    for w in G.elements():
        if G.trace(w) == beta and G.trace(G.mul(b, w)) == gamma:
            return b, w
    raise SearchExhausted(f"no pair with traces ({alpha}, {beta}, {gamma}) in SL(2,{q})")


def central_quotient_is_smooth(p: int, i: int) -> bool:
    """Dessin-level check: <b>, <w^i>, <b w^i> all miss -I."""
    D = StandardPair(p, i).dessin()
    return classify_covering(D, center(D.group)).smooth
