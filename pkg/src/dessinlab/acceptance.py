"""The twelve acceptance checks, shared by the test suite and ``verify all``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .constructions import (HAParams, as_report, construct_ha, default_a5_pair, ha_enumerate,
                            ha_frobenius_semiregular, tw_report)
from .covering import (algebraic_quotient, check_chi_bounds, classify_covering,
                       geometric_quotient, hurwitz_bound_check, ramification_from_orbits,
                       riemann_hurwitz_holds, verify_quotient_theorem)
from .dessin import RegularDessin, dessin_isomorphic, make_dessin
from .errors import NotNormal
from .groups.matrix import ProjectiveSL2Group, SL2Group
from .groups.models import AffineGroup, QuaternionGroup
from .groups.ops import center, cyclic_subgroup, normal_subgroup, translation_subgroup
from .numthy import euler_phi, primes_up_to
from .polynomial import psi_star_poly
from .sl2 import (StandardPair, admissible_triples, brute_force_lmn, bw_order,
                  bw_order_bruteforce, fibonacci_order, lmn_group_criterion, psi_root_pairs,
                  schur_smooth_exists, smooth_count_formula)
from .unicellular import (count_K, count_T, count_U_lambda, decomposition_identity,
                          enumerate_unicellular, triple_set, unicellular_dessin)


@dataclass
class CriterionResult:
    id: int
    title: str
    passed: bool
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({len(self.failures)} failures, first: {self.failures[0]})" if self.failures else ""
        return f"criterion {self.id:2d} {status}: {self.title}{extra}"

    def to_json(self) -> dict:
        return {"id": self.id, "title": self.title, "passed": self.passed,
                "failures": [str(f) for f in self.failures[:20]], "notes": self.notes}


class _Checker:
    def __init__(self, cid: int, title: str):
        self.result = CriterionResult(cid, title, True)

    def expect(self, ok: bool, what) -> None:
        if not ok:
            self.result.passed = False
            self.result.failures.append(what)

    def done(self, **notes) -> CriterionResult:
        self.result.notes.update(notes)
        return self.result


# 1

def unicellular_chain(ell_max: int = 200) -> CriterionResult:
    c = _Checker(1, "unicellular enumeration and counting chain")
    for ell in range(1, ell_max + 1):
        descs = enumerate_unicellular(ell)
        c.expect(len(descs) == ell, ("descriptor count", ell, len(descs)))
        buckets = Counter(d.triple for d in descs)
        triples = triple_set(ell)
        c.expect(set(buckets) <= set(triples), ("triple outside T", ell))
        for m, n, lam in triples:
            c.expect(buckets[(m, n, lam)] == count_K(m, n, lam, ell), ("count_K", ell, (m, n, lam)))
        by_lambda = Counter()
        for (m, n, lam), size in buckets.items():
            by_lambda[lam] += size
        for lam in {t[2] for t in triples}:
            c.expect(by_lambda[lam] == count_U_lambda(ell, lam), ("count_U", ell, lam))
        c.expect(len(triples) == count_T(ell), ("count_T", ell))
        c.expect(decomposition_identity(ell)["ok"], ("identity", ell))
    return c.done(ell_max=ell_max)


# 2

PSI_STAR_GOLDEN = {
    3: (3, 1),
    4: (2, 1),
    5: (5, 5, 1),
    6: (1, 1),
    7: (7, 14, 7, 1),
    8: (2, 4, 1),
    9: (3, 9, 6, 1),
    10: (1, 3, 1),
}

ROOTS_GOLDEN = {
    3: [(5, 2), (7, 4), (11, 8), (13, 10), (17, 14), (19, 16)],
    4: [(5, 3), (7, 5), (11, 9), (13, 11), (17, 15), (19, 17)],
    5: [(11, 1), (11, 5), (19, 2), (19, 12)],
    6: [(5, 4), (7, 6), (11, 10), (13, 12), (17, 16), (19, 18)],
    7: [(13, 5), (13, 6), (13, 8)],
    8: [(7, 1), (7, 2), (17, 4), (17, 9)],
    9: [(17, 5), (17, 11), (17, 12), (19, 1), (19, 5), (19, 7)],
    10: [(11, 2), (11, 6), (19, 3), (19, 13)],
}


def psi_table_golden() -> CriterionResult:
    c = _Checker(2, "psi* polynomials and root pairs for n = 3..10, p <= 19")
    for n, coeffs in PSI_STAR_GOLDEN.items():
        c.expect(psi_star_poly(n).coeffs == coeffs, ("polynomial", n, str(psi_star_poly(n))))
        c.expect(psi_root_pairs(n, 19) == ROOTS_GOLDEN[n], ("roots", n, psi_root_pairs(n, 19)))
    # the table covers semisimple orders n | p +- 1; trace -2 gives order 2p instead
    off_table = []
    for p in _odd_primes(5, 19):
        for i in range(1, p):
            n = bw_order(p, i)
            listed = [m for m, pairs in ROOTS_GOLDEN.items() if (p, i) in pairs]
            semisimple = (p - 1) % n == 0 or (p + 1) % n == 0
            expected = [n] if 3 <= n <= 10 and semisimple else []
            c.expect(listed == expected, ("order vs table", p, i, n, listed))
            if 3 <= n <= 10 and not semisimple:
                off_table.append((p, i, n))
    c.expect(off_table == [(5, 1, 10)], ("orders outside n | p +- 1", off_table))
    return c.done(off_table=off_table)


# 3, 4

def _odd_primes(lo: int, hi: int) -> list[int]:
    return [p for p in primes_up_to(hi) if p >= lo]


def order_methods_agree(p_max: int = 97) -> CriterionResult:
    c = _Checker(3, "eigenvalue and matrix-powering orders of b w^i agree")
    pairs = 0
    for p in _odd_primes(5, p_max):
        for i in range(1, p):
            pairs += 1
            c.expect(bw_order(p, i) == bw_order_bruteforce(p, i), (p, i))
    return c.done(pairs=pairs)


def smooth_index_count(p_max: int = 97) -> CriterionResult:
    c = _Checker(4, "number of smooth exponents equals ((p+1)_2' + (p-1)_2')/2 - 1")
    for p in _odd_primes(5, p_max):
        count = sum(1 for i in range(1, p) if bw_order_bruteforce(p, i) % 2 == 1)
        c.expect(count == smooth_count_formula(p), (p, count, smooth_count_formula(p)))
    return c.done()


# 5

FIB_ORDERS = {101: 25, 41: 20, 29: 7, 109: 54}
FIB_SMOOTH = [101, 181, 461, 521, 541, 941]
FIB_NOT_SMOOTH = [41, 61, 241, 281, 401, 421, 601, 641, 661, 701, 761, 821, 881]


def fibonacci_verdicts(bound: int = 500) -> CriterionResult:
    c = _Checker(5, "Fibonacci orders and smoothness verdicts")
    for p, expected in FIB_ORDERS.items():
        c.expect(fibonacci_order(p)[0] == expected, ("order", p))
    for p in FIB_SMOOTH:
        c.expect(fibonacci_order(p)[0] % 2 == 1, ("listed smooth", p))
    for p in FIB_NOT_SMOOTH:
        c.expect(fibonacci_order(p)[0] % 2 == 0, ("listed not smooth", p))
    for p in _odd_primes(7, bound):
        order = fibonacci_order(p)[0]
        if p % 20 in (11, 19):
            c.expect(order % 2 == 1, ("11/19 mod 20 smooth", p))
        if p % 5 in (2, 3):
            c.expect(order % 2 == 0, ("+-2 mod 5 not smooth", p))
    return c.done()


# 6, 12

CRITERION_FIELDS = (5, 7, 11, 13)


def criterion_vs_oracle() -> CriterionResult:
    c = _Checker(6, "(l,m,n)-group criterion against exhaustive search")
    checked = 0
    for q in CRITERION_FIELDS:
        for projective in (False, True):
            for triple in admissible_triples(q, projective, odd_hyperbolic=True):
                checked += 1
                predicted = lmn_group_criterion(q, *triple, projective)
                found = brute_force_lmn(q, *triple, projective) is not None
                c.expect(predicted == found, (q, triple, "PSL" if projective else "SL",
                                              predicted, found))
    c.expect(brute_force_lmn(9, 3, 5, 5, False) is None, "SL(2,9) has a (3,5,5) pair")
    c.expect(lmn_group_criterion(9, 3, 5, 5, False) is False, "criterion accepts (3,5,5,9)")
    return c.done(cases=checked)


def schur_predicate_vs_construction() -> CriterionResult:
    c = _Checker(12, "Schur smooth-covering predicate against direct construction")
    checked = 0
    for q in CRITERION_FIELDS:
        for l, m, n in admissible_triples(q, projective=True, odd_hyperbolic=False):
            checked += 1
            predicted = schur_smooth_exists(q, l, m, n)
            direct = (l * m * n) % 2 == 1 and brute_force_lmn(q, l, m, n, False) is not None
            c.expect(predicted == direct, (q, (l, m, n), predicted, direct))
    return c.done(cases=checked)


# 7

def quaternion_dessin(m: int) -> RegularDessin:
    Q = QuaternionGroup(4 * m)
    return make_dessin(Q, Q.mul(Q.x, Q.y), Q.inv(Q.y))


def quaternion_quotients(m_max: int = 10) -> CriterionResult:
    c = _Checker(7, "quaternion dessins: central quotient and ramification")
    for m in range(2, m_max + 1):
        D = quaternion_dessin(m)
        Z = center(D.group)
        c.expect(D.chi == -2 * (m - 1), ("chi", m, D.chi))
        c.expect(algebraic_quotient(D, Z).chi == 2, ("quotient chi", m))
        c.expect(verify_quotient_theorem(D, Z), ("quotient theorem", m))
        report = classify_covering(D, Z)
        c.expect(riemann_hurwitz_holds(report), ("Riemann-Hurwitz", m))
        geo_points = ramification_from_orbits(geometric_quotient(D, Z), report.sheets)
        c.expect(geo_points == report.ram_points, ("ramification routes", m, geo_points,
                                                   report.ram_points))
        if m == 2:
            c.expect(report.ram_points == 6, ("Q8 ramification points", report.ram_points))
            c.expect(report.totally_branched, "Q8 not totally branched")
    return c.done()


# 8

def _cyclic_normal_subgroups(G) -> list:
    seen, out = set(), []
    for g in G.elements():
        elems = frozenset(cyclic_subgroup(G, g).elements)
        if len(elems) == 1 or elems in seen:
            continue
        seen.add(elems)
        try:
            out.append(normal_subgroup(G, elems))
        except NotNormal:
            continue
    return out


def hurwitz_witness() -> RegularDessin:
    b, w = brute_force_lmn(7, 2, 3, 7, True)
    return make_dessin(ProjectiveSL2Group(7), b, w)


def bounds_corpus() -> list[RegularDessin]:
    corpus = [quaternion_dessin(m) for m in range(2, 11)]
    for p in (5, 7, 11):
        corpus.extend(StandardPair(p, i).dessin() for i in range(1, p))
    corpus.append(hurwitz_witness())
    b, w = brute_force_lmn(7, 4, 6, 14, False)
    corpus.append(make_dessin(SL2Group(7), b, w))
    for p, d, ell in ((2, 2, 3), (5, 1, 4), (7, 1, 3), (2, 3, 7)):
        for row in ha_enumerate(p, d, ell):
            corpus.append(construct_ha(HAParams(p, d, ell, row["i"], row["j"])))
    for ell in range(2, 31):
        for k in range(ell):
            corpus.append(unicellular_dessin(ell, k))
    return [D for D in corpus if D.chi < 0]


def chi_bounds() -> CriterionResult:
    c = _Checker(8, "Hurwitz bound and covering Euler-characteristic bounds")
    corpus = bounds_corpus()
    coverings = 0
    upper_equalities = 0
    for D in corpus:
        h = hurwitz_bound_check(D)
        c.expect(h["ok"] and h["equality"] == h["hurwitz"], ("Hurwitz bound", repr(D)))
        normals = [center(D.group)] + _cyclic_normal_subgroups(D.group)
        for N in {frozenset(N.elements()): N for N in normals}.values():
            if N.order == 1:
                continue
            coverings += 1
            report = classify_covering(D, N)
            verdict = check_chi_bounds(report)
            c.expect(verdict["ok"], ("chi bounds", repr(D), N.order, verdict))
            c.expect(riemann_hurwitz_holds(report), ("Riemann-Hurwitz", repr(D), N.order))
            if verdict.get("upper_equality"):
                upper_equalities += 1
            if report.chi_quotient < 0:
                Q = algebraic_quotient(D, N)
                hq = hurwitz_bound_check(Q)
                c.expect(hq["ok"] and hq["equality"] == hq["hurwitz"],
                         ("quotient Hurwitz bound", repr(D), N.order))
    W = hurwitz_witness()
    c.expect(W.order == 168 and W.chi == -4 and W.order == 42 * abs(W.chi), "PSL(2,7) witness")
    return c.done(dessins=len(corpus), coverings=coverings, upper_equalities=upper_equalities)


# 9

HA_CASES = ((2, 2, 3), (2, 3, 7), (5, 1, 4), (3, 2, 8), (7, 1, 3), (11, 1, 5))


def ha_family() -> CriterionResult:
    c = _Checker(9, "HA classification counts and smooth unicellular quotients")
    for p, d, ell in HA_CASES:
        rows = ha_enumerate(p, d, ell)
        c.expect(len(rows) * d == euler_phi(ell) * ell, ("class count", p, d, ell, len(rows)))
        c.expect(ha_frobenius_semiregular(AffineGroup(p, d, ell)), ("Frobenius", p, d, ell))
        for row in rows:
            if not row["smooth"]:
                continue
            D = construct_ha(HAParams(p, d, ell, row["i"], row["j"]))
            N = translation_subgroup(D.group)
            report = classify_covering(D, N)
            Q = algebraic_quotient(D, N)
            c.expect(report.smooth, ("smooth", p, d, ell, row))
            c.expect(Q.is_unicellular() and Q.face_length == 2 * ell,
                     ("unicellular quotient", p, d, ell, row))
    return c.done()


# 10

def tw_and_as_witnesses(run_as: bool = True) -> CriterionResult:
    c = _Checker(10, "TW telescoping certificates and the AS witness at r = 5")
    T, s, t = default_a5_pair()
    for k in (5, 7, 9):
        report = tw_report(T, k, s, t)
        c.expect(report["dessin"]["signature"] == [k, k, k], ("TW signature", k))
        c.expect(all(report["checks"].values()), ("TW telescoping", k, report["checks"]))
        c.expect(report["dessin"]["chi"] == (3 - k) * 60**k, ("TW chi", k))
        c.expect(report["smooth"], ("TW smooth", k))
    if run_as:
        report = as_report(5, verify_closure=True)
        c.expect(report["signature"] == [5, 5, 5], ("AS signature", report["signature"]))
        c.expect(report["closure_order"] == 163680 == report["order"],
                 ("AS closure", report["closure_order"]))
    return c.done()


# 11

def isomorphism_rigidity(primes=(5, 7, 11)) -> CriterionResult:
    c = _Checker(11, "D(SL(2,p), b, w^i) pairwise non-isomorphic in i")
    for p in primes:
        dessins = [StandardPair(p, i).dessin() for i in range(1, p)]
        for a in range(len(dessins)):
            c.expect(dessin_isomorphic(dessins[a], dessins[a])[0], ("self", p, a + 1))
            for b in range(a + 1, len(dessins)):
                c.expect(not dessin_isomorphic(dessins[a], dessins[b])[0], (p, a + 1, b + 1))
    return c.done()


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: unicellular_chain,
    2: psi_table_golden,
    3: order_methods_agree,
    4: smooth_index_count,
    5: fibonacci_verdicts,
    6: criterion_vs_oracle,
    7: quaternion_quotients,
    8: chi_bounds,
    9: ha_family,
    10: tw_and_as_witnesses,
    11: isomorphism_rigidity,
    12: schur_predicate_vs_construction,
}


def run_criteria(ids=None) -> list[CriterionResult]:
    return [CRITERIA[i]() for i in (ids or sorted(CRITERIA))]
