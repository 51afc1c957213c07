"""Quotients of regular dessins by normal subgroups and covering classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .dessin import RegularDessin, make_dessin
from .errors import CapExceeded, PreconditionError
from .groups.base import DEFAULT_CAP, Group
from .groups.matrix import SL2Group
from .groups.ops import (NormalSubgroup, center, cyclic_intersection_size,
                         is_minimal_normal, quotient_group)


def fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def algebraic_quotient(D: RegularDessin, N: NormalSubgroup,
                       cap: int = DEFAULT_CAP) -> RegularDessin:
    Q = quotient_group(D.group, N, cap)
    return make_dessin(Q, Q.project(D.b), Q.project(D.w), cap)


@dataclass
class GeometricQuotient:
    """N-orbits on vertices, edges and faces; each orbit keyed by its minimal
    member, with the incidences induced from D."""

    black: dict  # black vertex -> orbit key
    white: dict
    edges: dict  # edge -> orbit key
    faces: dict  # face rep -> orbit key
    orbit_sizes: dict = field(default_factory=dict)

    def counts(self) -> dict:
        return {k: len(set(getattr(self, k).values()))
                for k in ("black", "white", "edges", "faces")}


def geometric_quotient(D: RegularDessin, N: NormalSubgroup,
                       cap: int = DEFAULT_CAP) -> GeometricQuotient:
    G = D.group
    nel = sorted(N.elements(cap))
    elems = G.elements(cap)
    edges = {g: min(G.mul(g, n) for n in nel) for g in elems}

    def orbit_map(canon):
        keys = {}
        sizes = {}
        for v in sorted({canon(g) for g in elems}):
            orbit = {canon(G.mul(v, n)) for n in nel}
            keys[v] = min(orbit)
            sizes[v] = len(orbit)
        return keys, sizes

    black, bsize = orbit_map(D.black_vertex)
    white, wsize = orbit_map(D.white_vertex)
    faces, fsize = orbit_map(lambda g: D.coset_rep(D.bw, g))
    esize = {g: len({G.mul(g, n) for n in nel}) for g in elems}
    return GeometricQuotient(black, white, edges, faces,
                             {"black": bsize, "white": wsize, "faces": fsize, "edges": esize})


def verify_quotient_theorem(D: RegularDessin, N: NormalSubgroup,
                            cap: int = DEFAULT_CAP) -> bool:
    """Check that projecting representatives is an incidence-preserving
    bijection from the geometric quotient onto the algebraic one."""
    geo = geometric_quotient(D, N, cap)
    Q = quotient_group(D.group, N, cap)
    DQ = make_dessin(Q, Q.project(D.b), Q.project(D.w), cap)
    proj = Q.project

    def bijective(keys: dict, image) -> bool:
        by_orbit: dict = {}
        for member, orbit in keys.items():
            by_orbit.setdefault(orbit, set()).add(image(member))
        if any(len(v) != 1 for v in by_orbit.values()):
            return False
        images = [next(iter(v)) for v in by_orbit.values()]
        return len(set(images)) == len(images)

    if geo.counts() != DQ.counts:
        return False
    if not bijective(geo.black, lambda v: DQ.black_vertex(proj(v))):
        return False
    if not bijective(geo.white, lambda v: DQ.white_vertex(proj(v))):
        return False
    if not bijective(geo.edges, proj):
        return False
    if not bijective(geo.faces, lambda f: DQ.coset_rep(DQ.bw, proj(f))):
        return False
    for g in D.group.elements(cap):
        if DQ.black_vertex(proj(D.black_vertex(g))) != DQ.black_vertex(proj(g)):
            return False
        if DQ.white_vertex(proj(D.white_vertex(g))) != DQ.white_vertex(proj(g)):
            return False
    for face in D.face_set():
        image = DQ.boundary_walk(proj(face.rep), len(face.edges) // 2)
        if tuple(proj(e) for e in face.edges) != image:
            return False
    return True


@dataclass
class CoveringReport:
    sheets: int
    e_b: int
    e_w: int
    e_f: int
    signature: tuple
    quotient_signature: tuple
    quotient_order: int
    chi: int
    chi_quotient: int
    minimal: object  # True, False or "unknown"

    @property
    def smooth(self) -> bool:
        return self.e_b == self.e_w == self.e_f == 1

    @property
    def quasi_smooth(self) -> bool:
        return self.e_b == self.e_w == 1

    @property
    def totally_branched(self) -> bool:
        return self.e_b == self.e_w == self.e_f == self.sheets

    @property
    def ramified(self) -> tuple[bool, bool, bool]:
        """(black, white, face) ramification flags."""
        return (self.e_b > 1, self.e_w > 1, self.e_f > 1)

    @property
    def ram_points(self) -> int:
        total = Fraction(0)
        for flag, order in zip(self.ramified, self.quotient_signature):
            if flag:
                total += Fraction(self.quotient_order, order)
        assert total.denominator == 1
        return int(total)

    @property
    def ratio(self) -> Fraction | None:
        if self.chi_quotient == 0:
            return None
        return Fraction(self.chi, self.chi_quotient)

    def bounds(self) -> dict:
        n = self.sheets
        upper_applicable = self.chi_quotient < 0
        return {
            "lower_ok": self.chi <= n * self.chi_quotient,
            "upper_ok": (self.chi >= (42 * n - 41) * self.chi_quotient
                         if upper_applicable else None),
            "upper_applicable": upper_applicable,
        }

    def to_json(self) -> dict:
        ratio = self.ratio
        return {
            "sheets": self.sheets,
            "smooth": self.smooth,
            "quasi_smooth": self.quasi_smooth,
            "totally_branched": self.totally_branched,
            "minimal": self.minimal,
            "e_b": self.e_b,
            "e_w": self.e_w,
            "e_f": self.e_f,
            "ram_points": self.ram_points,
            "chi": self.chi,
            "chi_quotient": self.chi_quotient,
            "ratio": fraction_text(ratio) if ratio is not None else None,
            "bounds": self.bounds(),
        }


def _chi(order: int, sig) -> int:
    value = order * (sum(Fraction(1, s) for s in sig) - 1)
    assert value.denominator == 1
    return int(value)


def classify_covering(D: RegularDessin, N: NormalSubgroup,
                      cap: int = DEFAULT_CAP) -> CoveringReport:
    """Intersection arithmetic only; the group is enumerated just for the
    minimality flag, which degrades to "unknown" past the cap."""
    e_b = cyclic_intersection_size(N, D.b)
    e_w = cyclic_intersection_size(N, D.w)
    e_f = cyclic_intersection_size(N, D.bw)
    sig = D.signature
    qsig = (sig[0] // e_b, sig[1] // e_w, sig[2] // e_f)
    if D.order % N.order:
        raise PreconditionError("|N| does not divide |G|")
    qorder = D.order // N.order
    if N.order == 1:
        minimal = False
    else:
        try:
            minimal = is_minimal_normal(D.group, N, cap) if D.order <= cap else "unknown"
        except CapExceeded:
            minimal = "unknown"
    return CoveringReport(N.order, e_b, e_w, e_f, sig, qsig, qorder,
                          D.chi, _chi(qorder, qsig), minimal)


def riemann_hurwitz_holds(report: CoveringReport) -> bool:
    """|N| chi_N - chi = sum over b, w, bw of (|G/N|/|c bar|) |N| (1 - 1/e_c)."""
    n = report.sheets
    lhs = n * report.chi_quotient - report.chi
    rhs = sum(Fraction(report.quotient_order, qc) * n * (1 - Fraction(1, e))
              for qc, e in zip(report.quotient_signature, (report.e_b, report.e_w, report.e_f)))
    return lhs == rhs


def check_chi_bounds(report: CoveringReport) -> dict:
    """|N| <= chi/chi_N <= 42|N| - 41 with the equality characterizations."""
    b = report.bounds()
    n = report.sheets
    lower_equal = report.chi == n * report.chi_quotient
    verdict = {
        **b,
        "lower_equality": lower_equal,
        "lower_equality_iff_smooth": lower_equal == report.smooth,
    }
    if b["upper_applicable"]:
        upper_equal = report.chi == (42 * n - 41) * report.chi_quotient
        quotient_hurwitz = sorted(report.quotient_signature) == [2, 3, 7]
        verdict["upper_equality"] = upper_equal
        verdict["upper_equality_iff"] = upper_equal == (report.totally_branched
                                                        and quotient_hurwitz)
    ok = b["lower_ok"] and verdict["lower_equality_iff_smooth"]
    if b["upper_applicable"]:
        ok = ok and b["upper_ok"] and verdict["upper_equality_iff"]
    verdict["ok"] = ok
    return verdict


def smooth_covering_group_test(G: Group, N: NormalSubgroup, b, w,
                               cap: int = DEFAULT_CAP) -> bool:
    """Orders of b, w, bw agree with the orders of their images in G/N."""
    Q = quotient_group(G, N, cap)
    bw = G.mul(b, w)
    return all(G.element_order(x) == Q.element_order(Q.project(x)) for x in (b, w, bw))


def schur_smooth_test(G: Group, b, w) -> bool:
    """<b>, <w>, <bw> all meet the center trivially."""
    if not isinstance(G, SL2Group) or G.q % 2 == 0 or G.q < 5:
        raise PreconditionError("needs SL(2,q) with q odd and q >= 5")
    Z = center(G)
    return all(cyclic_intersection_size(Z, x) == 1 for x in (b, w, G.mul(b, w)))


def hurwitz_bound_check(D: RegularDessin) -> dict:
    if D.chi >= 0:
        raise PreconditionError(f"needs chi < 0, got {D.chi}")
    bound = 42 * abs(D.chi)
    return {
        "order": D.order,
        "bound": bound,
        "ok": D.order <= bound,
        "equality": D.order == bound,
        "hurwitz": D.is_hurwitz(),
        "ratio": fraction_text(Fraction(D.order, abs(D.chi))),
    }


def ramification_from_orbits(geo: GeometricQuotient, sheets: int) -> int:
    """Count quotient vertices and faces with fewer than |N| preimages."""
    total = 0
    for kind in ("black", "white", "faces"):
        keys = getattr(geo, kind)
        sizes = geo.orbit_sizes[kind]
        small = {keys[v] for v, s in sizes.items() if s < sheets}
        total += len(small)
    return total
