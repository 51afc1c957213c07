"""Face-quasiprimitive regular dessins covering unicellular ones.

HA: affine groups GF(p^d)^+ : <h>. TW, PA: wreath products T wr Z_k.
AS: SigmaL(2, 2^r) with the Frobenius phi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .covering import classify_covering
from .dessin import RegularDessin, make_dessin
from .errors import NotGenerating, PreconditionError, SearchExhausted
from .groups.base import DEFAULT_CAP
from .groups.indexed import IndexedGroup
from .groups.matrix import SigmaL2Group
from .groups.models import AffineGroup, PermutationGroup, WreathGroup, perm_from_cycles
from .groups.ops import translation_subgroup, wreath_base
from .numthy import euler_phi, is_prime, is_primitive_divisor


# HA family

@dataclass(frozen=True)
class HAParams:
    p: int
    d: int
    ell: int
    i: int
    j: int
    x: int = 1  # field element code, nonzero

    def validate(self) -> "HAParams":
        if not is_prime(self.p) or self.d < 1:
            raise PreconditionError(f"need a prime p and d >= 1, got ({self.p}, {self.d})")
        if not is_primitive_divisor(self.ell, self.p, self.d):
            raise PreconditionError(
                f"{self.ell} is not a primitive divisor of {self.p}^{self.d} - 1")
        if not (0 <= self.i < self.ell and 0 <= self.j < self.ell):
            raise PreconditionError(f"i, j must lie in [0, {self.ell})")
        if math.gcd(self.j, self.ell) != 1:
            raise PreconditionError(f"gcd(j, ell) = gcd({self.j}, {self.ell}) is not 1")
        if not 0 < self.x < self.p**self.d:
            raise PreconditionError("x must be a nonzero field element")
        return self

    @property
    def smooth(self) -> bool:
        return self.i != 0 and self.i != self.j


def ha_generators(params: HAParams) -> tuple[AffineGroup, tuple, tuple]:
    """b = h^i x and w = x^-1 h^(j-i), so bw = h^j."""
    params.validate()
    A = AffineGroup(params.p, params.d, params.ell)
    F = A.field
    b = A.mul(A.h(params.i), A.translation(params.x))
    w = A.mul(A.translation(F.neg(params.x)), A.h(params.j - params.i))
    return A, b, w


def construct_ha(params: HAParams, cap: int = DEFAULT_CAP) -> RegularDessin:
    A, b, w = ha_generators(params)
    return make_dessin(A, b, w, cap)


def ha_report(params: HAParams, cap: int = DEFAULT_CAP) -> dict:
    D = construct_ha(params, cap)
    cov = classify_covering(D, translation_subgroup(D.group), cap)
    black, white = ha_primitivity(params.i, params.j, params.ell)
    return {
        "family": "HA",
        "params": {"p": params.p, "d": params.d, "ell": params.ell,
                   "i": params.i, "j": params.j, "x": params.x},
        "dessin": D.report(),
        "smooth": params.smooth,
        "covering": cov.to_json(),
        "black_primitive": black,
        "white_primitive": white,
    }


def ha_isomorphic(a: tuple[int, int], b: tuple[int, int], p: int, d: int, ell: int) -> bool:
    i1, j1 = a
    i2, j2 = b
    for k in range(d):
        t = pow(p, k, ell)
        if (i1 * t - i2) % ell == 0 and (j1 * t - j2) % ell == 0:
            return True
    return False


def ha_primitivity(i: int, j: int, ell: int) -> tuple[bool, bool]:
    """(black vertices primitive, white vertices primitive)."""
    return math.gcd(i % ell, ell) == 1, math.gcd((j - i) % ell, ell) == 1


def ha_enumerate(p: int, d: int, ell: int) -> list[dict]:
    """One row per isomorphism class: the minimal (i, j) of each orbit of
    multiplication by powers of p."""
    if not is_primitive_divisor(ell, p, d):
        raise PreconditionError(f"{ell} is not a primitive divisor of {p}^{d} - 1")
    seen = set()
    rows = []
    for i in range(ell):
        for j in range(ell):
            if math.gcd(j, ell) != 1 or (i, j) in seen:
                continue
            orbit = {((i * pow(p, k, ell)) % ell, (j * pow(p, k, ell)) % ell)
                     for k in range(d)}
            seen |= orbit
            black, white = ha_primitivity(i, j, ell)
            rows.append({"i": i, "j": j, "smooth": i != 0 and i != j,
                         "black_primitive": black, "white_primitive": white})
    expected = euler_phi(ell) * ell
    if expected % d or len(rows) != expected // d:
        raise AssertionError(f"{len(rows)} classes, expected phi(ell) ell / d = {expected}/{d}")
    return rows


def ha_frobenius_semiregular(A: AffineGroup) -> bool:
    """No nontrivial multiplier fixes a nonzero vector: v h^e = v forces e = 0."""
    F = A.field
    for e in range(1, A.ell):
        for v in range(1, A.q):
            if F.mul(v, A.hpow[e]) == v:
                return False
    return True


# TW and PA families

def default_a5_pair() -> tuple[PermutationGroup, tuple, tuple]:
    """A5 with s a 5-cycle and t an involution generating it."""
    T = PermutationGroup(5, [perm_from_cycles(5, [[0, 1, 2, 3, 4]]),
                             perm_from_cycles(5, [[0, 1], [2, 3]])], label="a5")
    return T, T.gens[0], T.gens[1]


def _check_pair(T: PermutationGroup, s, t, need_involution: bool) -> None:
    T.check(s)
    T.check(t)
    if need_involution and T.element_order(t) != 2:
        raise PreconditionError("t must have order 2")
    size = len(T.closure([s, t]))
    if size != T.order():
        raise NotGenerating(size, T.order())


def tw_element_x(W: WreathGroup, s, t) -> tuple:
    """x = (s, 1, t, 1, (ts)^-1, 1, ..., 1)."""
    T = W.inner
    one = T.identity()
    entries = [one] * W.k
    entries[0], entries[2], entries[4] = s, t, T.inv(T.mul(t, s))
    return W.base(entries)


def telescoping_products(W: WreathGroup, x, step: int) -> tuple:
    """x x^(g^step) x^(g^(2 step)) ... over k factors."""
    g = W.shift
    acc = W.identity()
    for i in range(W.k):
        acc = W.mul(acc, W.conj(x, W.power(g, step * i)))
    return acc


def construct_tw(T: PermutationGroup, k: int, s, t) -> tuple[RegularDessin, dict]:
    if k < 5 or k % 2 == 0:
        raise PreconditionError(f"k must be odd and at least 5, got {k}")
    _check_pair(T, s, t, need_involution=True)
    W = WreathGroup(T, k, label=getattr(T, "label", None) or "T")
    x = tw_element_x(W, s, t)
    g = W.shift
    b = W.mul(W.power(g, 2), W.inv(x))
    w = W.mul(x, W.inv(g))
    D = make_dessin(W, b, w, asserted_by_construction=True)
    checks = {
        "bw_is_g": W.mul(b, w) == g,
        "telescoping_w": telescoping_products(W, x, 1) == W.identity(),
        "telescoping_b": telescoping_products(W, x, 2) == W.identity(),
    }
    return D, checks


def tw_report(T: PermutationGroup, k: int, s, t) -> dict:
    D, checks = construct_tw(T, k, s, t)
    cov = classify_covering(D, wreath_base(D.group), cap=0)
    return {"family": "TW", "k": k, "dessin": D.report(), "checks": checks,
            "chi_expected": (3 - k) * T.order() ** k,
            "smooth": cov.smooth, "asserted_by_construction": True}


def construct_pa(T: PermutationGroup, k: int, a, s, t,
                 cap: int = DEFAULT_CAP) -> tuple[RegularDessin, dict]:
    """D(G, g^2 x, x^-1 g^-1) with g = (1, ..., 1, a) times the k-cycle shift."""
    if k < 2:
        raise PreconditionError(f"need k >= 2, got {k}")
    T.check(a)
    if a == T.identity():
        raise PreconditionError("a must not be the identity")
    _check_pair(T, s, t, need_involution=False)
    W = WreathGroup(T, k, label=getattr(T, "label", None) or "T")
    one = T.identity()
    g = W.mul(W.base([one] * (k - 1) + [a]), W.shift)
    x = W.base([s, t] + [one] * (k - 2))
    b = W.mul(W.power(g, 2), x)
    w = W.inv(W.mul(g, x))
    gk = W.power(g, k)
    info = {"g_power_in_base": gk[1] == 0 and gk != W.identity(),
            "bw_is_g": W.mul(b, w) == g}
    if W.structural_order() <= cap:
        size = len(W.closure([x, g], cap))
        info["closure_order"] = size
        if size != W.structural_order():
            raise NotGenerating(size, W.structural_order())
        D = make_dessin(W, b, w, cap)
    else:
        D = make_dessin(W, b, w, asserted_by_construction=True)
    return D, info


# AS family

@dataclass(frozen=True)
class ASWitness:
    r: int
    j: int
    x: tuple  # matrix in SL(2, 2^r)
    s: tuple
    t: tuple
    b: tuple
    w: tuple


def _commutator_table(G: SigmaL2Group, i: int, elements: list) -> list:
    """[phi^i, t] = F^-i(t^-1) t for each t, as matrices in SL(2, 2^r)."""
    SL = G.sl
    return [SL.mul(G.frob(SL.inv(t), -i), t) for t in elements]


def construct_as(r: int, cap: int = DEFAULT_CAP) -> tuple[ASWitness, RegularDessin]:
    """Search ascending j and ascending t for x = [phi, s] = [phi^j, t] whose
    Frobenius orbit generates SL(2, 2^r)."""
    if not is_prime(r) or r < 5:
        raise PreconditionError(f"r must be a prime >= 5, got {r}")
    return _as_search(r, cap)


@lru_cache(maxsize=None)
def _as_search(r: int, cap: int) -> tuple[ASWitness, RegularDessin]:
    G = SigmaL2Group(r)
    SL = G.sl
    IG = IndexedGroup(SL, cap)
    elements = IG.elements
    d1: dict = {}
    for s, c in zip(elements, _commutator_table(G, 1, elements)):
        d1.setdefault(c, s)
    tried = set()
    for j in range(2, r):
        for t, x in zip(elements, _commutator_table(G, j, elements)):
            if x not in d1 or x in tried:
                continue
            tried.add(x)
            orbit = [G.frob(x, e) for e in range(r)]
            if IG.closure_size([IG.right_perm(y) for y in orbit]) != IG.n:
                continue
            b = G.power(G.phi, j - 1)
            w = G.mul(G.phi, G.embed(x))
            witness = ASWitness(r, j, x, d1[x], t, b, w)
            D = make_dessin(G, b, w, asserted_by_construction=True, cap=cap)
            return witness, D
    raise SearchExhausted(f"no x in D_1 and D_j with generating Frobenius orbit for r={r}")


def as_report(r: int, verify_closure: bool = False, cap: int = DEFAULT_CAP) -> dict:
    witness, D = construct_as(r, cap)
    G = D.group
    out = {"family": "AS", "r": r, "j": witness.j,
           "x": G.sl.format_element(witness.x),
           "b": G.format_element(witness.b), "w": G.format_element(witness.w),
           "signature": list(D.signature), "order": D.order, "chi": D.chi}
    if verify_closure:
        out["closure_order"] = len(G.closure([witness.b, witness.w], cap))
    return out
