"""Finite bounded lattices given by their cover relation.

A lattice is built from a list of element names plus cover pairs.  The order
is the reflexive-transitive closure of the covers; meets and joins are derived
once, at validation time, and cached as index tables.  Element identity is by
name within one lattice only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateElement,
    NotALattice,
    NotAPartialOrder,
    NotBounded,
    SizeLimitExceeded,
    UnknownElement,
)

DEFAULT_MAX_SIZE = 64


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.rule}: ({', '.join(self.witness)}) {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> list[str]:
        """Distinct rule names that failed, in first-seen order."""
        return list(dict.fromkeys(v.rule for v in self.violations))

    def failed(self, rule: str) -> bool:
        return any(v.rule == rule for v in self.violations)

    def first(self, rule: str) -> Violation | None:
        for v in self.violations:
            if v.rule == rule:
                return v
        return None

    def __add__(self, other: ValidationReport) -> ValidationReport:
        return ValidationReport(self.violations + other.violations)


@dataclass(frozen=True)
class FiniteBoundedLattice:
    """Immutable finite bounded lattice.

    Construct through :func:`build_lattice` (or a generator below); the
    derived tables are trusted as-is by every other module.
    """

    name: str
    elements: tuple[str, ...]
    bottom: str
    top: str
    covers: tuple[tuple[str, str], ...]
    leq_table: tuple[tuple[bool, ...], ...] = field(repr=False, compare=False)
    meet_table: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    join_table: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _index: dict = field(repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownElement(f"{x!r} is not an element of lattice {self.name}") from None

    @property
    def bottom_index(self) -> int:
        return self._index[self.bottom]

    @property
    def top_index(self) -> int:
        return self._index[self.top]

    def leq(self, x: str, y: str) -> bool:
        return self.leq_table[self.index(x)][self.index(y)]

    def meet(self, x: str, y: str) -> str:
        return self.elements[self.meet_table[self.index(x)][self.index(y)]]

    def join(self, x: str, y: str) -> str:
        return self.elements[self.join_table[self.index(x)][self.index(y)]]


def leq(L: FiniteBoundedLattice, x: str, y: str) -> bool:
    return L.leq(x, y)


def meet(L: FiniteBoundedLattice, x: str, y: str) -> str:
    return L.meet(x, y)


def join(L: FiniteBoundedLattice, x: str, y: str) -> str:
    return L.join(x, y)


def _closure(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    # up[i] is a bitmask of every j with i <= j
    up = [1 << i for i in range(n)]
    for a, b in edges:
        up[a] |= 1 << b
    for k in range(n):
        bit = 1 << k
        row = up[k]
        for i in range(n):
            if up[i] & bit:
                up[i] |= row
    return up


def _hasse(n: int, up: list[int]) -> list[tuple[int, int]]:
    out = []
    for i in range(n):
        strict = up[i] & ~(1 << i)
        for j in range(n):
            if not strict >> j & 1:
                continue
            # j covers i unless some k sits strictly between them
            between = strict & ~(1 << j)
            if not any(between >> k & 1 and up[k] >> j & 1 for k in range(n)):
                out.append((i, j))
    return out


def _fail(exc_type, rule: str, witness: Sequence[str], message: str):
    report = ValidationReport((Violation(rule, tuple(witness), message),))
    return exc_type(f"{rule}: {message}", report)


def build_lattice(
    name: str,
    elements: Sequence[str],
    bottom: str,
    top: str,
    covers: Iterable[tuple[str, str]],
    *,
    max_size: int = DEFAULT_MAX_SIZE,
) -> FiniteBoundedLattice:
    """Validate the data and return a lattice, or raise.

    The raised exception's ``report`` names the first offending rule with
    its witnesses.  Rules are checked in a fixed order: size, duplicates,
    unknown names, acyclicity, bounds, meet/join existence.

    The stored ``covers`` are canonical: the Hasse diagram of the derived
    order, sorted by declaration index.  Redundant input pairs are dropped.
    """
    elements = tuple(elements)
    covers = [tuple(c) for c in covers]
    n = len(elements)
    if n == 0:
        raise _fail(NotBounded, "non-empty", (), "a bounded lattice needs at least one element")
    if n > max_size:
        raise _fail(SizeLimitExceeded, "size-limit", (), f"{n} elements exceeds the cap of {max_size}")

    index: dict[str, int] = {}
    for x in elements:
        if x in index:
            raise _fail(DuplicateElement, "duplicate-element", (x,), f"{x!r} declared twice")
        index[x] = len(index)

    for x in (bottom, top, *(v for c in covers for v in c)):
        if x not in index:
            raise _fail(UnknownElement, "unknown-element", (x,), f"{x!r} is not declared")

    edges = []
    for a, b in covers:
        if a == b:
            raise _fail(NotAPartialOrder, "antisymmetry", (a, b), "a cover must relate two distinct elements")
        edges.append((index[a], index[b]))

    up = _closure(n, edges)
    for i in range(n):
        for j in range(i + 1, n):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise _fail(
                    NotAPartialOrder, "antisymmetry", (elements[i], elements[j]),
                    "covers contain a cycle through these elements",
                )

    b, t = index[bottom], index[top]
    for i, x in enumerate(elements):
        if not up[b] >> i & 1:
            raise _fail(NotBounded, "bottom-least", (bottom, x), f"{bottom} is not below {x}")
        if not up[i] >> t & 1:
            raise _fail(NotBounded, "top-greatest", (x, top), f"{x} is not below {top}")

    down = [0] * n
    for i in range(n):
        for j in range(n):
            if up[i] >> j & 1:
                down[j] |= 1 << i
    by_down = {m: i for i, m in enumerate(down)}
    by_up = {m: i for i, m in enumerate(up)}

    meet_t = [[0] * n for _ in range(n)]
    join_t = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m = by_down.get(down[i] & down[j])
            if m is None:
                raise _fail(NotALattice, "meet-exists", (elements[i], elements[j]),
                            "no greatest lower bound")
            k = by_up.get(up[i] & up[j])
            if k is None:
                raise _fail(NotALattice, "join-exists", (elements[i], elements[j]),
                            "no least upper bound")
            meet_t[i][j] = meet_t[j][i] = m
            join_t[i][j] = join_t[j][i] = k

    leq_t = tuple(tuple(bool(up[i] >> j & 1) for j in range(n)) for i in range(n))
    canon = tuple((elements[a], elements[c]) for a, c in _hasse(n, up))
    return FiniteBoundedLattice(
        name=name,
        elements=elements,
        bottom=bottom,
        top=top,
        covers=canon,
        leq_table=leq_t,
        meet_table=tuple(map(tuple, meet_t)),
        join_table=tuple(map(tuple, join_t)),
        _index=index,
    )


def validate_lattice(name, elements, bottom, top, covers, *, max_size=DEFAULT_MAX_SIZE) -> ValidationReport:
    """Like :func:`build_lattice` but returns the report instead of raising."""
    from .errors import LatticeError

    try:
        build_lattice(name, elements, bottom, top, covers, max_size=max_size)
    except LatticeError as exc:
        if exc.report is None:
            raise
        return exc.report
    return ValidationReport()


# -- standard fixtures -------------------------------------------------------

def make_chain(n: int, name: str | None = None, *, max_size: int = DEFAULT_MAX_SIZE) -> FiniteBoundedLattice:
    """Chain ``e0 < e1 < ... < e{n-1}``."""
    if not 2 <= n <= max_size:
        raise SizeLimitExceeded(f"chain length must be in 2..{max_size}, got {n}")
    els = [f"e{i}" for i in range(n)]
    return build_lattice(name or f"C{n}", els, els[0], els[-1],
                         list(zip(els, els[1:])), max_size=max_size)


def make_boolean(k: int, name: str | None = None) -> FiniteBoundedLattice:
    """Boolean lattice on ``k`` atoms; elements are ``k``-bit strings."""
    if not 1 <= k <= 4:
        raise SizeLimitExceeded(f"boolean lattice needs 1..4 atoms, got {k}")
    els = [format(v, f"0{k}b") for v in range(1 << k)]
    covers = [(els[v], els[v | 1 << bit]) for v in range(1 << k) for bit in range(k)
              if not v >> bit & 1]
    return build_lattice(name or f"B{k}", els, els[0], els[-1], covers)


def make_diamond_M3(name: str = "M3") -> FiniteBoundedLattice:
    atoms = ["p", "q", "r"]
    covers = [("0", a) for a in atoms] + [(a, "1") for a in atoms]
    return build_lattice(name, ["0", *atoms, "1"], "0", "1", covers)


def make_pentagon_N5(name: str = "N5") -> FiniteBoundedLattice:
    # 0 < a < b < 1 and 0 < c < 1
    covers = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
    return build_lattice(name, ["0", "a", "b", "c", "1"], "0", "1", covers)


def make_product(A: FiniteBoundedLattice, B: FiniteBoundedLattice, name: str | None = None,
                 *, max_size: int = DEFAULT_MAX_SIZE) -> FiniteBoundedLattice:
    """Cartesian product with the componentwise order; elements are ``(a,b)``."""
    if len(A) * len(B) > max_size:
        raise SizeLimitExceeded(f"product would have {len(A) * len(B)} elements (cap {max_size})")

    def pair(a, b):
        return f"({a},{b})"

    els = [pair(a, b) for a in A.elements for b in B.elements]
    covers = [(pair(a, b), pair(a2, b)) for a, a2 in A.covers for b in B.elements]
    covers += [(pair(a, b), pair(a, b2)) for a in A.elements for b, b2 in B.covers]
    return build_lattice(name or f"{A.name}x{B.name}", els, pair(A.bottom, B.bottom),
                         pair(A.top, B.top), covers, max_size=max_size)


def fixture_corpus() -> dict[str, FiniteBoundedLattice]:
    """The fixed fixture set: C2..C6, B1..B3, M3, N5, C3xC3."""
    out = {f"C{n}": make_chain(n) for n in range(2, 7)}
    out.update({f"B{k}": make_boolean(k) for k in range(1, 4)})
    out["M3"] = make_diamond_M3()
    out["N5"] = make_pentagon_N5()
    out["C3xC3"] = make_product(out["C3"], out["C3"])
    return out
