"""Subgroups, normal subgroups, quotients and generator-map extension."""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable, Sequence

from ..errors import (CapExceeded, NotAHomomorphism, NotBijective, NotNormal,
                      PreconditionError)
from .base import DEFAULT_CAP, Group
from .matrix import ProjectiveSL2Group, SL2Group
from .models import AffineGroup, CyclicGroup, WreathGroup


class ElementSet:
    """A finite set of elements of one parent group."""

    def __init__(self, parent: Group, elements: Iterable):
        self.parent = parent
        self.elements = frozenset(elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __eq__(self, other):
        if isinstance(other, ElementSet):
            return self.parent is other.parent and self.elements == other.elements
        return NotImplemented

    def __hash__(self):
        return hash(self.elements)


class NormalSubgroup:
    """A normal subgroup given by its elements or by a membership test.

    Structural subgroups (center of SL(2,q), base of a wreath product,
    translations of an affine group) carry a ``tag`` and are never enumerated.
    """

    def __init__(self, parent: Group, order: int, contains: Callable,
                 elements: frozenset | None = None, tag: str | None = None):
        self.parent = parent
        self.order = order
        self._contains = contains
        self._elements = elements
        self.tag = tag

    def __contains__(self, g):
        return self._contains(g)

    def __len__(self):
        return self.order

    def elements(self, cap: int = DEFAULT_CAP) -> frozenset:
        if self._elements is None:
            if self.order > cap:
                raise CapExceeded(cap)
            self._elements = frozenset(g for g in self.parent.elements(cap) if g in self)
        return self._elements

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self):
        label = self.tag or "enumerated"
        return f"<NormalSubgroup {label} of order {self.order} in {self.parent.spec}>"


def element_order(G: Group, g) -> int:
    return G.element_order(G.check(g))


def cyclic_subgroup(G: Group, g) -> ElementSet:
    G.check(g)
    out, x = [], G.identity()
    while True:
        out.append(x)
        x = G.mul(x, g)
        if x == out[0]:
            break
    return ElementSet(G, out)


def generated_subgroup(G: Group, gens: Sequence, cap: int = DEFAULT_CAP) -> ElementSet:
    for g in gens:
        G.check(g)
    return ElementSet(G, G.closure(gens, cap))


def is_generating_pair(G: Group, b, w, cap: int = DEFAULT_CAP) -> bool:
    target = G.order(cap)
    if target > cap:
        raise CapExceeded(cap)
    return len(G.closure([G.check(b), G.check(w)], cap)) == target


def intersection_size_with(N: NormalSubgroup, cyc: ElementSet) -> int:
    if cyc.parent is not N.parent:
        raise PreconditionError("subgroup and element set live in different groups")
    return sum(1 for g in cyc.elements if g in N)


def cyclic_intersection_size(N: NormalSubgroup, g) -> int:
    """|<g> cap N| by walking the powers of g; works for structural groups."""
    G = N.parent
    e = G.identity()
    count, x = 0, e
    while True:
        if x in N:
            count += 1
        x = G.mul(x, g)
        if x == e:
            return count


def _check_normal(G: Group, elements: frozenset) -> None:
    for n in sorted(elements):
        for g in G.gens:
            c = G.conj(n, g)
            if c not in elements:
                raise NotNormal(n, g)


def normal_subgroup(G: Group, elements: Iterable, check: bool = True) -> NormalSubgroup:
    """Wrap an enumerated subgroup, verifying closure and normality."""
    elems = frozenset(elements)
    if check:
        if G.identity() not in elems:
            raise PreconditionError("subgroup lacks the identity")
        closed = G.closure(elems)
        if len(closed) != len(elems):
            raise PreconditionError("element set is not closed under products")
        _check_normal(G, elems)
    return NormalSubgroup(G, len(elems), elems.__contains__, elems)


def trivial_subgroup(G: Group) -> NormalSubgroup:
    e = G.identity()
    return NormalSubgroup(G, 1, lambda g: g == e, frozenset([e]), tag="trivial")


def whole_group(G: Group, cap: int = DEFAULT_CAP) -> NormalSubgroup:
    return NormalSubgroup(G, G.order(cap), G.contains, tag="whole")


def center(G: Group, cap: int = DEFAULT_CAP) -> NormalSubgroup:
    if isinstance(G, SL2Group):
        elems = frozenset(G.center_elements())
        return NormalSubgroup(G, len(elems), elems.__contains__, elems, tag="center")
    gens = G.gens
    elems = frozenset(z for z in G.elements(cap)
                      if all(G.mul(z, s) == G.mul(s, z) for s in gens))
    return NormalSubgroup(G, len(elems), elems.__contains__, elems, tag="center")


def wreath_base(W: WreathGroup) -> NormalSubgroup:
    return NormalSubgroup(W, W.inner.order() ** W.k,
                          lambda g: W.contains(g) and g[1] == 0, tag="base")


def translation_subgroup(A: AffineGroup) -> NormalSubgroup:
    return NormalSubgroup(A, A.q, lambda g: A.contains(g) and g[1] == 0,
                          tag="translations")


def cyclic_normal_subgroup(G: Group, g) -> NormalSubgroup:
    return normal_subgroup(G, cyclic_subgroup(G, g).elements)


class QuotientGroup(Group):
    """G/N for enumerable G; a coset is stored as its minimal element."""

    def __init__(self, parent: Group, N: NormalSubgroup, cap: int = DEFAULT_CAP):
        self.parent, self.N = parent, N
        nelems = sorted(N.elements(cap))
        rep = {}
        for g in parent.elements(cap):
            if g in rep:
                continue
            for n in nelems:
                rep[parent.mul(g, n)] = g
        self._rep = rep
        super().__init__(sorted({rep[s] for s in parent.gens}))
        self._order = len(set(rep.values()))

    @property
    def spec(self):
        return f"{self.parent.spec}/N{self.N.order}"

    def project(self, g):
        return self._rep[g]

    def identity(self):
        return self._rep[self.parent.identity()]

    def mul(self, a, b):
        return self._rep[self.parent.mul(a, b)]

    def inv(self, a):
        return self._rep[self.parent.inv(a)]

    def contains(self, g):
        return self._rep.get(g) == g

    def structural_order(self):
        return self._order

    def format_element(self, g):
        return self.parent.format_element(g) + "N"


def quotient_group(G: Group, N: NormalSubgroup, cap: int = DEFAULT_CAP) -> Group:
    """G/N with a ``project`` method for the natural map.

    Structural subgroups produce structural quotients: SL(2,q) by its center
    gives the PSL model, a wreath product or affine group by its base gives
    the cyclic top group.
    """
    if N.tag == "center" and isinstance(G, SL2Group) and N.order == 2:
        Q = ProjectiveSL2Group(G.p, G.f)
        return Q
    if N.tag == "base" and isinstance(G, WreathGroup):
        Q = CyclicGroup(G.k)
        Q.project = lambda g: g[1]
        return Q
    if N.tag == "translations" and isinstance(G, AffineGroup):
        Q = CyclicGroup(G.ell)
        Q.project = lambda g: g[1]
        return Q
    if N._elements is not None or N.order <= cap:
        elems = N.elements(cap)
        if N.tag not in ("trivial", "center", "whole"):
            _check_normal(G, elems)
    return QuotientGroup(G, N, cap)


def project(Q: Group, g):
    return Q.project(g)


def extend_generator_map(G: Group, src: tuple, H: Group, dst: tuple,
                         cap: int = DEFAULT_CAP) -> dict:
    """Extend b1 -> b2, w1 -> w2 to an isomorphism G -> H or raise.

    Images are propagated breadth first along right multiplication by the
    generators; every Cayley edge is checked, so a completed map is a
    homomorphism.
    """
    if G.order(cap) != H.order(cap):
        raise NotBijective(f"|G| = {G.order()} differs from |H| = {H.order()}")
    pairs = list(zip(src, dst))
    image = {G.identity(): H.identity()}
    queue = deque([G.identity()])
    while queue:
        g = queue.popleft()
        hg = image[g]
        for s, t in pairs:
            gs = G.mul(g, s)
            ht = H.mul(hg, t)
            have = image.get(gs)
            if have is None:
                image[gs] = ht
                queue.append(gs)
                if len(image) > cap:
                    raise CapExceeded(cap)
            elif have != ht:
                raise NotAHomomorphism(f"{G.format_element(gs)} has two images")
    if len(image) != G.order(cap):
        raise PreconditionError("source pair does not generate G")
    if len(set(image.values())) != len(image):
        raise NotBijective("map is not injective")
    return image


def normal_closure(G: Group, seed: Iterable, cap: int = DEFAULT_CAP) -> NormalSubgroup:
    gens = [g for g in seed if g != G.identity()]
    while True:
        H = G.closure(gens, cap)
        extra = None
        for h in gens:
            for s in G.gens:
                c = G.conj(h, s)
                if c not in H:
                    extra = c
                    break
            if extra is not None:
                break
        if extra is None:
            elems = frozenset(H)
            return NormalSubgroup(G, len(elems), elems.__contains__, elems)
        gens.append(extra)


def conjugacy_class(G: Group, g) -> set:
    seen = {g}
    frontier = [g]
    while frontier:
        nxt = []
        for x in frontier:
            for s in G.gens:
                y = G.conj(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def is_minimal_normal(G: Group, N: NormalSubgroup, cap: int = DEFAULT_CAP) -> bool:
    elems = N.elements(cap)
    if len(elems) <= 1:
        raise PreconditionError("minimality is defined for nontrivial subgroups")
    done = {G.identity()}
    for n in sorted(elems):
        if n in done:
            continue
        if normal_closure(G, [n], cap).elements() != elems:
            return False
        done |= conjugacy_class(G, n)
    return True


def conjugacy_class_reps(G: Group, cap: int = DEFAULT_CAP) -> list:
    reps, seen = [], set()
    for g in G.elements(cap):
        if g not in seen:
            reps.append(g)
            seen |= conjugacy_class(G, g)
    return reps
