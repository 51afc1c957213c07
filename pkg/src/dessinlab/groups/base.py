"""Abstract finite group with closure-based enumeration."""

from __future__ import annotations

import threading
from typing import Any, Hashable, Iterable, Sequence

from ..errors import CapExceeded, PreconditionError

DEFAULT_CAP = 2_000_000

Element = Hashable


class Group:
    """A finite group given by element arithmetic and a generator list.

    Subclasses implement ``identity``, ``mul`` and ``inv`` on hashable,
    mutually comparable payloads. Python ordering on payloads is the fixed
    total order used for canonical representatives.
    """

    name = "group"

    def __init__(self, gens: Sequence[Element]):
        self.gens = tuple(gens)
        self._lock = threading.Lock()
        self._elements: list | None = None
        self._order: int | None = None

    def identity(self) -> Element:
        raise NotImplementedError

    def mul(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def inv(self, a: Element) -> Element:
        raise NotImplementedError

    def contains(self, g: Any) -> bool:
        """Membership in the model's element universe."""
        return True

    def structural_order(self) -> int | None:
        """|G| from a formula, when the model knows one."""
        return None

    @property
    def spec(self) -> str:
        return self.name

    def format_element(self, g: Element) -> str:
        return repr(g)

    def __repr__(self):
        return f"<{type(self).__name__} {self.spec}>"

    def check(self, g: Element) -> Element:
        if not self.contains(g):
            raise PreconditionError(f"{g!r} is not an element of {self.spec}")
        return g

    def power(self, g: Element, k: int) -> Element:
        if k < 0:
            g, k = self.inv(g), -k
        result = self.identity()
        while k:
            if k & 1:
                result = self.mul(result, g)
            g = self.mul(g, g)
            k >>= 1
        return result

    def word(self, *factors: Element) -> Element:
        result = self.identity()
        for f in factors:
            result = self.mul(result, f)
        return result

    def conj(self, g: Element, by: Element) -> Element:
        """g^by = by^-1 g by."""
        return self.mul(self.mul(self.inv(by), g), by)

    def commutator(self, a: Element, b: Element) -> Element:
        """[a, b] = a^-1 b^-1 a b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def naive_order(self, g: Element, limit: int = DEFAULT_CAP) -> int:
        e = self.identity()
        x, k = g, 1
        while x != e:
            x = self.mul(x, g)
            k += 1
            if k > limit:
                raise CapExceeded(limit, "order computation")
        return k

    def element_order(self, g: Element) -> int:
        return self.naive_order(g)

    def closure(self, gens: Iterable[Element], cap: int = DEFAULT_CAP) -> set:
        """Subgroup generated by gens, by breadth-first right multiplication."""
        gens = [g for g in gens]
        e = self.identity()
        seen = {e}
        frontier = [e]
        mul = self.mul
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = mul(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > cap:
                            raise CapExceeded(cap)
            frontier = nxt
        return seen

    def elements(self, cap: int = DEFAULT_CAP) -> list:
        """Sorted element list; computed once and cached."""
        with self._lock:
            if self._elements is None:
                known = self.structural_order()
                if known is not None and known > cap:
                    raise CapExceeded(cap)
                self._elements = sorted(self.closure(self.gens, cap))
                if self._order is None:
                    self._order = len(self._elements)
            return self._elements

    def order(self, cap: int = DEFAULT_CAP) -> int:
        if self._order is None:
            known = self.structural_order()
            if known is not None:
                self._order = known
            else:
                self.elements(cap)
        return self._order

    def is_enumerable(self, cap: int = DEFAULT_CAP) -> bool:
        return self.order(cap) <= cap
