"""The coset dessin D(G, b, w): edges are group elements, black and white
vertices are right cosets of <b> and <w>, faces are right translates of the
boundary cycle spun by bw."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import CapExceeded, NotAHomomorphism, NotBijective, NotGenerating, PreconditionError
from .groups.base import DEFAULT_CAP, Group
from .groups.ops import extend_generator_map

HURWITZ_SIGNATURE = (2, 3, 7)


@dataclass(frozen=True)
class FaceCycle:
    """Face through the canonical representative ``rep`` of the <bw>-coset.

    ``edges`` alternates white-to-black and black-to-white traversals:
    (bw)^-k rep, then b^-1 (bw)^-k rep, for k = 0 .. |bw|-1.
    """

    rep: object
    edges: tuple

    def __len__(self):
        return len(self.edges)

    def arcs(self):
        """(edge, direction) pairs; direction 'wb' runs white to black."""
        return [(e, "wb" if i % 2 == 0 else "bw") for i, e in enumerate(self.edges)]


@dataclass
class BiCosetGraph:
    black: list
    white: list
    ends: dict  # edge -> (black vertex, white vertex)
    multiplicity: int

    def valencies(self) -> tuple[set, set]:
        bdeg = Counter(v for v, _ in self.ends.values())
        wdeg = Counter(v for _, v in self.ends.values())
        return set(bdeg.values()), set(wdeg.values())

    def pair_multiplicities(self) -> Counter:
        return Counter(self.ends.values())

    def is_complete_bipartite(self) -> bool:
        return len(self.pair_multiplicities()) == len(self.black) * len(self.white)

    def is_connected(self) -> bool:
        adj: dict = {}
        for bv, wv in self.ends.values():
            adj.setdefault(("b", bv), set()).add(("w", wv))
            adj.setdefault(("w", wv), set()).add(("b", bv))
        start = next(iter(adj))
        seen, stack = {start}, [start]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.black) + len(self.white)


class RegularDessin:
    """Use ``make_dessin`` to build one; the constructor skips validation."""

    def __init__(self, group: Group, b, w, asserted_by_construction: bool = False,
                 cap: int = DEFAULT_CAP):
        self.group, self.b, self.w = group, b, w
        self.asserted_by_construction = asserted_by_construction
        self.cap = cap
        self.bw = group.mul(b, w)

    @cached_property
    def signature(self) -> tuple[int, int, int]:
        G = self.group
        return (G.element_order(self.b), G.element_order(self.w), G.element_order(self.bw))

    @cached_property
    def order(self) -> int:
        return self.group.order(self.cap)

    @property
    def counts(self) -> dict:
        n = self.order
        lb, lw, lf = self.signature
        return {"black": n // lb, "white": n // lw, "edges": n, "faces": n // lf}

    @cached_property
    def chi(self) -> int:
        lb, lw, lf = self.signature
        value = self.order * (Fraction(1, lb) + Fraction(1, lw) + Fraction(1, lf) - 1)
        if value.denominator != 1 or value.numerator % 2:
            raise AssertionError(f"Euler characteristic {value} is not an even integer")
        return int(value)

    @property
    def genus(self) -> int:
        g = (2 - self.chi) // 2
        if g < 0:
            raise AssertionError("negative genus")
        return g

    @property
    def face_length(self) -> int:
        return 2 * self.signature[2]

    def is_unicellular(self) -> bool:
        return self.signature[2] == self.order

    def is_hurwitz(self) -> bool:
        return sorted(self.signature) == list(HURWITZ_SIGNATURE)

    def multiplicity(self) -> int:
        """|<b> cap <w>|, the edge multiplicity of the underlying graph."""
        G = self.group
        wpowers = set()
        x = G.identity()
        while True:
            wpowers.add(x)
            x = G.mul(x, self.w)
            if x == G.identity():
                break
        count, x = 0, G.identity()
        while True:
            count += x in wpowers
            x = G.mul(x, self.b)
            if x == G.identity():
                return count

    def _powers(self, g) -> list:
        G = self.group
        out, x = [], G.identity()
        while True:
            out.append(x)
            x = G.mul(x, g)
            if x == out[0]:
                return out

    def coset_rep(self, gen, g):
        """Minimal element of the right coset <gen> g."""
        mul = self.group.mul
        return min(mul(x, g) for x in self._powers(gen))

    def black_vertex(self, g):
        return self.coset_rep(self.b, g)

    def white_vertex(self, g):
        return self.coset_rep(self.w, g)

    def boundary_walk(self, start, laps: int | None = None) -> tuple:
        """Edge sequence of the face walk from ``start`` without
        canonicalizing; ``laps`` counts (bw)^-1 steps, default |bw|."""
        G = self.group
        binv = G.inv(self.b)
        step = G.inv(self.bw)
        edges, x = [], start
        for _ in range(self.signature[2] if laps is None else laps):
            edges.append(x)
            edges.append(G.mul(binv, x))
            x = G.mul(step, x)
        return tuple(edges)

    def boundary_cycle(self, g) -> FaceCycle:
        rep = self.coset_rep(self.bw, g)
        return FaceCycle(rep, self.boundary_walk(rep))

    def face_set(self) -> list[FaceCycle]:
        faces, seen = [], set()
        for g in self.group.elements(self.cap):
            if g in seen:
                continue
            face = self.boundary_cycle(g)
            seen.update(face.edges[0::2])
            faces.append(face)
        return faces

    def underlying_graph(self) -> BiCosetGraph:
        elems = self.group.elements(self.cap)
        ends = {g: (self.black_vertex(g), self.white_vertex(g)) for g in elems}
        black = sorted({v for v, _ in ends.values()})
        white = sorted({v for _, v in ends.values()})
        return BiCosetGraph(black, white, ends, self.multiplicity())

    def report(self) -> dict:
        G = self.group
        return {
            "group_spec": G.spec,
            "b": G.format_element(self.b),
            "w": G.format_element(self.w),
            "signature": list(self.signature),
            "counts": self.counts,
            "chi": self.chi,
            "genus": self.genus,
            "unicellular": self.is_unicellular(),
            "hurwitz": self.is_hurwitz(),
            "multiplicity": self.multiplicity(),
        }

    def __repr__(self):
        G = self.group
        return (f"D({G.spec}, {G.format_element(self.b)}, {G.format_element(self.w)})")


def make_dessin(G: Group, b, w, cap: int = DEFAULT_CAP,
                asserted_by_construction: bool = False,
                allow_star: bool = False) -> RegularDessin:
    """Build D(G, b, w), checking generation by closure unless the caller
    certifies it by construction.

    b = 1 or w = 1 (a star) is rejected for nontrivial G unless ``allow_star``.
    """
    G.check(b)
    G.check(w)
    e = G.identity()
    if (b == e or w == e) and not allow_star and G.order(cap) != 1:
        raise PreconditionError("b = 1 or w = 1 is only allowed for the trivial group")
    if not asserted_by_construction:
        order = G.order(cap)
        if order > cap:
            raise CapExceeded(cap)
        size = len(G.closure([b, w], cap))
        if size != order:
            raise NotGenerating(size, order)
    return RegularDessin(G, b, w, asserted_by_construction, cap)


def signature(D: RegularDessin) -> tuple[int, int, int]:
    return D.signature


def euler_characteristic(D: RegularDessin) -> int:
    return D.chi


def genus(D: RegularDessin) -> int:
    return D.genus


def is_unicellular(D: RegularDessin) -> bool:
    return D.is_unicellular()


def is_hurwitz(D: RegularDessin) -> bool:
    return D.is_hurwitz()


def boundary_cycle(D: RegularDessin, g) -> FaceCycle:
    return D.boundary_cycle(g)


def face_set(D: RegularDessin) -> list[FaceCycle]:
    return D.face_set()


def underlying_graph(D: RegularDessin) -> BiCosetGraph:
    return D.underlying_graph()


def dessin_isomorphic(D1: RegularDessin, D2: RegularDessin) -> tuple[bool, dict | None]:
    """Isomorphic iff the generator map (b1, w1) -> (b2, w2) extends to a
    group isomorphism; returns the map as witness."""
    if D1.order != D2.order:
        return False, None
    try:
        mapping = extend_generator_map(D1.group, (D1.b, D1.w), D2.group, (D2.b, D2.w),
                                       max(D1.cap, D2.cap))
    except (NotAHomomorphism, NotBijective):
        return False, None
    return True, mapping
