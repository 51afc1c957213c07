"""Group-spec strings and element words.

Specs: ``cyclic:12``, ``sl2:13``, ``sl2:3^2``, ``psl2:7``, ``quaternion:8``,
``agl1:2^2:3``, ``wreath:a5:5``, ``sigmal2:5``, ``perm:5:(0,1,2,3,4);(0,1,2)``.

Elements are words of atoms with optional integer powers, e.g. ``xy``,
``y^-1``, ``h^3``, ``[[1,0],[1,1]]^2``, ``(0,1)(2,3)``, ``phi[[1,1],[0,1]]``.
The output of each model's ``format_element`` parses back to the same element.
Atom names per model: cyclic ``h``; quaternion ``x``, ``y``; agl1 ``h`` and
``x`` (translation by 1); sl2/psl2 ``L``, ``U`` (the unipotent generators)
and matrix literals (``+-`` prefix allowed for psl2); sigmal2 ``phi`` and
matrix literals; wreath ``g`` (the shift), ``e1``, ``e2`` (the inner generators
in the first coordinate) and base literals ``[(..),(..),..]``; agl1
translation literals ``t[c0, c1]`` over field coefficients; perm cycle literals. ``1`` is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, PreconditionError
from .groups.base import Group
from .groups.matrix import ProjectiveSL2Group, SigmaL2Group, SL2Group
from .groups.models import (AffineGroup, CyclicGroup, PermutationGroup, QuaternionGroup,
                            WreathGroup, alternating_group_a5, perm_from_cycles)
from .numthy import is_prime

_INT = re.compile(r"-?\d+")
_MATRIX = re.compile(r"\[\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*,\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]\]")


@dataclass
class GroupSpec:
    raw: str
    kind: str
    params: tuple
    group: Group

    @property
    def canonical(self) -> str:
        return self.group.spec


def _int_at(text: str, pos: int, what: str) -> tuple[int, int]:
    m = _INT.match(text, pos)
    if not m:
        raise ParseError(f"expected {what}", text, pos)
    return int(m.group()), m.end()


def _expect_end(text: str, pos: int) -> None:
    if pos != len(text):
        raise ParseError("unexpected trailing input", text, pos)


def _expect(text: str, pos: int, ch: str) -> int:
    if not text.startswith(ch, pos):
        raise ParseError(f"expected {ch!r}", text, pos)
    return pos + len(ch)


def _prime_power_field(text: str, pos: int) -> tuple[int, int, int]:
    p, pos = _int_at(text, pos, "a prime")
    f = 1
    if text.startswith("^", pos):
        f, pos = _int_at(text, pos + 1, "an exponent")
    return p, f, pos


def _cycles_at(text: str, pos: int, n: int) -> tuple[list, int]:
    """Parse ``(a,b,c)(d,e)``; spaces may replace commas."""
    cycles = []
    while pos < len(text) and text[pos] == "(":
        end = text.find(")", pos)
        if end < 0:
            raise ParseError("unclosed cycle", text, pos)
        body = text[pos + 1:end].replace(",", " ").split()
        try:
            cyc = [int(v) for v in body]
        except ValueError:
            raise ParseError("cycle entries must be integers", text, pos + 1) from None
        if any(not 0 <= v < n for v in cyc) or len(set(cyc)) != len(cyc):
            raise ParseError(f"cycle entries must be distinct points in 0..{n - 1}", text, pos)
        if cyc:
            cycles.append(cyc)
        pos = end + 1
    return cycles, pos


def parse_group_spec(text: str) -> GroupSpec:
    kind, sep, _ = text.partition(":")
    if not sep:
        raise ParseError("expected '<kind>:'", text, len(text))
    pos = len(kind) + 1
    try:
        if kind == "cyclic":
            n, end = _int_at(text, pos, "an order")
            _expect_end(text, end)
            if n < 1:
                raise ParseError("order must be positive", text, pos)
            return GroupSpec(text, kind, (n,), CyclicGroup(n))
        if kind in ("sl2", "psl2"):
            p, f, end = _prime_power_field(text, pos)
            _expect_end(text, end)
            if not is_prime(p):
                raise ParseError(f"{p} is not prime", text, pos)
            G = SL2Group(p, f) if kind == "sl2" else ProjectiveSL2Group(p, f)
            return GroupSpec(text, kind, (p, f), G)
        if kind == "quaternion":
            n, end = _int_at(text, pos, "an order")
            _expect_end(text, end)
            if n < 8 or n % 4:
                raise ParseError("quaternion order must be a multiple of 4, at least 8",
                                 text, pos)
            return GroupSpec(text, kind, (n,), QuaternionGroup(n))
        if kind == "agl1":
            p, d, end = _prime_power_field(text, pos)
            end = _expect(text, end, ":")
            ell, end2 = _int_at(text, end, "ell")
            _expect_end(text, end2)
            if not is_prime(p):
                raise ParseError(f"{p} is not prime", text, pos)
            if ell < 1 or (p**d - 1) % ell:
                raise ParseError(f"ell must divide {p}^{d} - 1", text, end)
            return GroupSpec(text, kind, (p, d, ell), AffineGroup(p, d, ell))
        if kind == "wreath":
            end = _expect(text, pos, "a5:")
            k, end2 = _int_at(text, end, "a degree")
            _expect_end(text, end2)
            if k < 1:
                raise ParseError("degree must be positive", text, end)
            return GroupSpec(text, kind, ("a5", k), WreathGroup(alternating_group_a5(), k))
        if kind == "sigmal2":
            r, end = _int_at(text, pos, "r")
            _expect_end(text, end)
            if r < 1:
                raise ParseError("r must be positive", text, pos)
            return GroupSpec(text, kind, (r,), SigmaL2Group(r))
        if kind == "perm":
            n, end = _int_at(text, pos, "a degree")
            end = _expect(text, end, ":")
            gens = []
            while True:
                cycles, nxt = _cycles_at(text, end, n)
                if nxt == end and not text.startswith("()", end):
                    raise ParseError("expected a cycle", text, end)
                gens.append(perm_from_cycles(n, cycles))
                end = nxt
                if end == len(text):
                    break
                end = _expect(text, end, ";")
            return GroupSpec(text, kind, (n, tuple(gens)), PermutationGroup(n, gens))
    except PreconditionError as exc:
        raise ParseError(str(exc), text, pos) from None
    raise ParseError(f"unknown group kind {kind!r}", text, 0)


def _named_atoms(G: Group) -> dict:
    if isinstance(G, CyclicGroup):
        return {"h": G.h(1)}
    if isinstance(G, QuaternionGroup):
        return {"x": G.x, "y": G.y}
    if isinstance(G, AffineGroup):
        return {"h": G.h(1), "x": G.translation(1)}
    if isinstance(G, SL2Group):
        return {"L": G.lower_unipotent, "U": G.upper_unipotent}
    if isinstance(G, ProjectiveSL2Group):
        return {"L": G.project(G.sl.lower_unipotent), "U": G.project(G.sl.upper_unipotent)}
    if isinstance(G, SigmaL2Group):
        return {"phi": G.phi}
    if isinstance(G, WreathGroup):
        atoms = {"g": G.shift}
        for idx, gen in enumerate(G.gens[:-1], start=1):
            atoms[f"e{idx}"] = gen
        return atoms
    return {}


def _matrix_at(G: Group, text: str, pos: int):
    m = _MATRIX.match(text, pos)
    if not m:
        raise ParseError("malformed matrix literal", text, pos)
    entries = tuple(int(v) for v in m.groups())
    if isinstance(G, (SigmaL2Group, ProjectiveSL2Group)):
        sl = G.sl
    elif isinstance(G, SL2Group):
        sl = G
    else:
        raise ParseError("matrix literals need an sl2, psl2 or sigmal2 group", text, pos)
    if not sl.contains(entries):
        raise ParseError("matrix is not in SL(2,q) (entries are field codes)", text, pos)
    if isinstance(G, SigmaL2Group):
        return G.embed(entries), m.end()
    if isinstance(G, ProjectiveSL2Group):
        return G.project(entries), m.end()
    return entries, m.end()


def _base_at(G: WreathGroup, text: str, pos: int):
    """``[(0 1 2 3 4),(),...]``: one inner permutation per coordinate."""
    entries = []
    pos += 1
    while True:
        cycles, nxt = _cycles_at(text, pos, G.inner.n)
        if nxt == pos:
            raise ParseError("expected a cycle", text, pos)
        entries.append(perm_from_cycles(G.inner.n, cycles))
        pos = nxt
        if text.startswith("]", pos):
            break
        pos = _expect(text, pos, ",")
    if len(entries) != G.k:
        raise ParseError(f"expected {G.k} coordinates, got {len(entries)}", text, pos)
    return G.base(entries), pos + 1


def parse_element(G: Group, text: str):
    """Parse a word over the model's atoms into an element of G."""
    atoms = _named_atoms(G)
    names = sorted(atoms, key=len, reverse=True)
    pos = 0
    result = G.identity()
    src = text.strip()
    if src == "1":
        return result
    if not src:
        raise ParseError("empty element", text, 0)
    offset = len(text) - len(text.lstrip())
    text_ = src

    def fail(msg, at):
        raise ParseError(msg, text, at + offset)

    while pos < len(text_):
        ch = text_[pos]
        if ch.isspace():
            pos += 1
            continue
        if text_.startswith("+-[[", pos) and isinstance(G, ProjectiveSL2Group):
            pos += 2
            continue
        if text_.startswith("[[", pos):
            try:
                atom, pos = _matrix_at(G, text_, pos)
            except ParseError as exc:
                fail(str(exc).split(" at offset")[0], exc.offset)
        elif text_.startswith("[(", pos) and isinstance(G, WreathGroup):
            try:
                atom, pos = _base_at(G, text_, pos)
            except ParseError as exc:
                fail(str(exc).split(" at offset")[0], exc.offset)
        elif text_.startswith("t[", pos) and isinstance(G, AffineGroup):
            end = text_.find("]", pos)
            try:
                digits = [int(v) for v in text_[pos + 2:end].split(",")] if end > 0 else None
            except ValueError:
                digits = None
            if not digits or len(digits) != G.d or any(not 0 <= v < G.p for v in digits):
                fail(f"expected t[c0, ..., c{G.d - 1}] with entries in 0..{G.p - 1}", pos)
            atom = G.translation(G.field.from_coeffs(digits))
            pos = end + 1
        elif ch == "(":
            if not isinstance(G, PermutationGroup):
                fail("cycle literals need a perm group", pos)
            try:
                cycles, pos = _cycles_at(text_, pos, G.n)
            except ParseError as exc:
                fail(str(exc).split(" at offset")[0], exc.offset)
            atom = perm_from_cycles(G.n, cycles)
        else:
            name = next((n for n in names if text_.startswith(n, pos)), None)
            if name is None:
                fail(f"unknown symbol {ch!r}", pos)
            atom = atoms[name]
            pos += len(name)
        if pos < len(text_) and text_[pos] == "^":
            k = _INT.match(text_, pos + 1)
            if not k:
                fail("expected an integer exponent", pos + 1)
            atom = G.power(atom, int(k.group()))
            pos = k.end()
        result = G.mul(result, atom)
    return result
