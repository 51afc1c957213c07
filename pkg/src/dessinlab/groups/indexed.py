"""Enumerated groups with elements numbered 0..n-1 and numpy permutations.

Brute-force searches work on indices: right multiplication by g is an index
permutation, closures run on boolean masks. SL(2,q) and PSL(2,q) get
vectorized matrix products; other models fall back to Python loops.
"""

from __future__ import annotations

import numpy as np

from .base import DEFAULT_CAP, Group
from .matrix import ProjectiveSL2Group, SL2Group


class _MatrixBackend:
    def __init__(self, group: Group, elements: list):
        self.projective = isinstance(group, ProjectiveSL2Group)
        F = group.field
        self.q, self.p, self.prime = F.q, F.p, F.f == 1
        if not self.prime:
            q = F.q
            self.add_t = np.array([[F.add(a, b) for b in range(q)] for a in range(q)])
            self.mul_t = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)])
            self.neg_t = np.array([F.neg(a) for a in range(q)])
        self.arr = np.array(elements, dtype=np.int64)
        self.codes = self.encode(self.arr)

    def add(self, x, y):
        return (x + y) % self.p if self.prime else self.add_t[x, y]

    def mul(self, x, y):
        return (x * y) % self.p if self.prime else self.mul_t[x, y]

    def neg(self, x):
        return (-x) % self.p if self.prime else self.neg_t[x]

    def encode(self, arr):
        q = self.q
        return ((arr[:, 0] * q + arr[:, 1]) * q + arr[:, 2]) * q + arr[:, 3]

    def matmul(self, X, Y):
        a, b, c, d = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
        e, f, g, h = Y[:, 0], Y[:, 1], Y[:, 2], Y[:, 3]
        return np.stack([self.add(self.mul(a, e), self.mul(b, g)),
                         self.add(self.mul(a, f), self.mul(b, h)),
                         self.add(self.mul(c, e), self.mul(d, g)),
                         self.add(self.mul(c, f), self.mul(d, h))], axis=1)

    def lookup(self, arr):
        codes = self.encode(arr)
        if self.projective:
            codes = np.minimum(codes, self.encode(self.neg(arr)))
        return np.searchsorted(self.codes, codes)

    def inverses(self):
        a, b, c, d = (self.arr[:, i] for i in range(4))
        return np.stack([d, self.neg(b), self.neg(c), a], axis=1)


class IndexedGroup:
    def __init__(self, group: Group, cap: int = DEFAULT_CAP):
        self.group = group
        self.elements = group.elements(cap)
        self.n = len(self.elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity = self.index[group.identity()]
        self._backend = None
        if isinstance(group, (SL2Group, ProjectiveSL2Group)):
            self._backend = _MatrixBackend(group, self.elements)
        self._orders = None

    @property
    def orders(self) -> np.ndarray:
        if self._orders is None:
            order = self.group.element_order
            self._orders = np.array([order(g) for g in self.elements], dtype=np.int64)
        return self._orders

    def right_perm(self, g) -> np.ndarray:
        """i -> index of elements[i] * g."""
        be = self._backend
        if be is not None:
            Y = np.broadcast_to(np.array(g, dtype=np.int64), be.arr.shape)
            return be.lookup(be.matmul(be.arr, Y))
        mul, idx = self.group.mul, self.index
        return np.fromiter((idx[mul(e, g)] for e in self.elements), np.int64, self.n)

    def left_perm(self, g) -> np.ndarray:
        """i -> index of g * elements[i]."""
        be = self._backend
        if be is not None:
            X = np.broadcast_to(np.array(g, dtype=np.int64), be.arr.shape)
            return be.lookup(be.matmul(X, be.arr))
        mul, idx = self.group.mul, self.index
        return np.fromiter((idx[mul(g, e)] for e in self.elements), np.int64, self.n)

    def closure_size(self, perms: list[np.ndarray]) -> int:
        seen = np.zeros(self.n, dtype=bool)
        seen[self.identity] = True
        frontier = np.array([self.identity])
        total = 1
        while frontier.size:
            imgs = np.unique(np.concatenate([P[frontier] for P in perms]))
            new = imgs[~seen[imgs]]
            seen[new] = True
            total += new.size
            frontier = new
        return total

    def generates(self, gens) -> bool:
        return self.closure_size([self.right_perm(g) for g in gens]) == self.n

    def conjugacy_class_reps(self) -> list[int]:
        """Minimal index of each class, by orbit partition under conjugation."""
        be = self._backend
        assigned = np.zeros(self.n, dtype=bool)
        reps = []
        if be is not None:
            inv = be.inverses()
            for i in range(self.n):
                if assigned[i]:
                    continue
                reps.append(i)
                G = np.broadcast_to(be.arr[i], be.arr.shape)
                assigned[be.lookup(be.matmul(be.matmul(inv, G), be.arr))] = True
            return reps
        G = self.group
        for i, g in enumerate(self.elements):
            if assigned[i]:
                continue
            reps.append(i)
            for h in self.elements:
                assigned[self.index[G.conj(g, h)]] = True
        return reps
