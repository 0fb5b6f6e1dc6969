"""Binary operators on a finite lattice, quasi-overlap / quasi-grouping axioms.

Axioms checked (for all x, y, z in L):

=====  ===========================================  ==========================================
 no.    quasi-overlap ``O``                          quasi-grouping ``G``
=====  ===========================================  ==========================================
 1      O(x,y) = O(y,x)                              G(x,y) = G(y,x)
 2      O(x,y) = 0  iff  x = 0 or y = 0              G(x,y) = 0  iff  x = 0 and y = 0
 3      O(x,y) = 1  iff  x = 1 and y = 1             G(x,y) = 1  iff  x = 1 or y = 1
 4      y <= z  implies  O(x,y) <= O(x,z)            y <= z  implies  G(x,y) <= G(x,z)
=====  ===========================================  ==========================================

Axiom 4 constrains the second argument only.  Each failed axiom gets the
lexicographically smallest witness (by element declaration order); for the
"iff" axioms the witness records which implication broke: ``"=>"`` is
"value at bound implies condition on arguments", ``"<="`` the converse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Mapping

from .errors import DomainMismatch, NotTotal, SizeLimitExceeded, UnknownElement
from .lattice import FiniteBoundedLattice

OVERLAP = "quasi-overlap"
GROUPING = "quasi-grouping"
ENUMERATION_CAP = 5


@dataclass(frozen=True)
class OperatorTable:
    """Total binary operation; ``table[i][j]`` is an element index."""

    name: str
    lattice: FiniteBoundedLattice
    table: tuple[tuple[int, ...], ...]
    provenance: Mapping | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.lattice)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise NotTotal(f"operator {self.name} is not an {n}x{n} table")
        for row in self.table:
            for v in row:
                if not 0 <= v < n:
                    raise UnknownElement(f"operator {self.name} produces an index outside {self.lattice.name}")

    @classmethod
    def from_mapping(cls, name: str, L: FiniteBoundedLattice,
                     mapping: Mapping[tuple[str, str], str]) -> OperatorTable:
        for x, y in mapping:
            L.index(x), L.index(y)
        rows = []
        for x in L.elements:
            row = []
            for y in L.elements:
                if (x, y) not in mapping:
                    raise NotTotal(f"operator {name} has no entry for ({x}, {y})")
                row.append(L.index(mapping[x, y]))
            rows.append(tuple(row))
        return cls(name, L, tuple(rows))

    @classmethod
    def from_function(cls, name: str, L: FiniteBoundedLattice,
                      fn: Callable[[str, str], str]) -> OperatorTable:
        return cls(name, L, tuple(tuple(L.index(fn(x, y)) for y in L.elements) for x in L.elements))

    def __call__(self, x: str, y: str) -> str:
        L = self.lattice
        return L.elements[self.table[L.index(x)][L.index(y)]]

    def as_dict(self) -> dict[tuple[str, str], str]:
        els = self.lattice.elements
        return {(els[i], els[j]): els[v] for i, row in enumerate(self.table) for j, v in enumerate(row)}

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)


@dataclass(frozen=True)
class Witness:
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    relation: str
    direction: str | None = None

    def __str__(self) -> str:
        tag = f" [{self.direction}]" if self.direction else ""
        return f"({', '.join(self.inputs)}) -> ({', '.join(self.outputs)}): {self.relation}{tag}"


@dataclass(frozen=True)
class AxiomReport:
    kind: str
    verdicts: dict[str, bool]
    counterexamples: dict[str, Witness]
    notes: tuple[str, ...] = ()
    # None when the first axiom failed and nothing can be derived
    first_argument_monotone: bool | None = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def failed(self) -> list[str]:
        return [a for a, v in self.verdicts.items() if not v]


def canonical_meet(L: FiniteBoundedLattice, name: str = "meet") -> OperatorTable:
    return OperatorTable(name, L, L.meet_table)


def canonical_join(L: FiniteBoundedLattice, name: str = "join") -> OperatorTable:
    return OperatorTable(name, L, L.join_table)


def _check(L: FiniteBoundedLattice, op: OperatorTable, kind: str) -> AxiomReport:
    if op.lattice != L:
        raise DomainMismatch(f"operator {op.name} is on {op.lattice.name}, not {L.name}")
    T, els, lq = op.table, L.elements, L.leq_table
    n, b, t = len(L), L.bottom_index, L.top_index
    p = "QO" if kind == OVERLAP else "QG"
    name = op.name
    wit: dict[str, Witness] = {}

    def put(ax, w):
        wit.setdefault(ax, w)

    for i in range(n):
        for j in range(n):
            x, y, v = els[i], els[j], T[i][j]
            if f"{p}1" not in wit and v != T[j][i]:
                put(f"{p}1", Witness((x, y), (els[v], els[T[j][i]]),
                                     f"{name}({x},{y}) != {name}({y},{x})"))
            if kind == OVERLAP:
                zero_cond, one_cond = i == b or j == b, i == t and j == t
                zero_txt, one_txt = "x = 0 or y = 0", "x = 1 and y = 1"
            else:
                zero_cond, one_cond = i == b and j == b, i == t or j == t
                zero_txt, one_txt = "x = 0 and y = 0", "x = 1 or y = 1"
            for ax, bound, cond, txt, sym in ((f"{p}2", b, zero_cond, zero_txt, "0"),
                                              (f"{p}3", t, one_cond, one_txt, "1")):
                if ax in wit:
                    continue
                if v == bound and not cond:
                    put(ax, Witness((x, y), (els[v],),
                                    f"{name}({x},{y}) = {sym} but not ({txt})", "=>"))
                elif cond and v != bound:
                    put(ax, Witness((x, y), (els[v],),
                                    f"{txt} holds but {name}({x},{y}) = {els[v]} != {sym}", "<="))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                if lq[j][k] and not lq[T[i][j]][T[i][k]]:
                    x, y, z = els[i], els[j], els[k]
                    put(f"{p}4", Witness((x, y, z), (els[T[i][j]], els[T[i][k]]),
                                         f"{y} <= {z} but {name}({x},{y}) is not <= {name}({x},{z})"))
                    break
            else:
                continue
            break
        if f"{p}4" in wit:
            break

    verdicts = {f"{p}{k}": f"{p}{k}" not in wit for k in range(1, 5)}
    notes = []
    first_arg = None
    if verdicts[f"{p}1"]:
        first_arg = all(not lq[j][k] or lq[T[j][i]][T[k][i]]
                        for i in range(n) for j in range(n) for k in range(n))
        notes.append(f"first-argument increasingness {'holds' if first_arg else 'fails'}"
                     f" (derived from {p}1)")
    return AxiomReport(kind, verdicts, {a: wit[a] for a in sorted(wit)}, tuple(notes), first_arg)


def check_quasi_overlap(L: FiniteBoundedLattice, O: OperatorTable) -> AxiomReport:
    return _check(L, O, OVERLAP)


def check_quasi_grouping(L: FiniteBoundedLattice, G: OperatorTable) -> AxiomReport:
    return _check(L, G, GROUPING)


def check_axioms(L: FiniteBoundedLattice, op: OperatorTable, kind: str) -> AxiomReport:
    if kind not in (OVERLAP, GROUPING):
        raise ValueError(f"unknown operator kind {kind!r}")
    return _check(L, op, kind)


def _enumerate(L: FiniteBoundedLattice, kind: str) -> list[OperatorTable]:
    n = len(L)
    if n > ENUMERATION_CAP:
        raise SizeLimitExceeded(f"operator enumeration is capped at {ENUMERATION_CAP} elements, got {n}")
    b, t, lq = L.bottom_index, L.top_index, L.leq_table
    overlap = kind == OVERLAP
    middle = [v for v in range(n) if v != b and v != t]

    def allowed(i, j):
        if overlap:
            if i == b or j == b:
                return [b]
            if i == t and j == t:
                return [t]
        else:
            if i == t or j == t:
                return [t]
            if i == b and j == b:
                return [b]
        return middle

    cells = [(i, j) for i in range(n) for j in range(i, n)]
    T = [[-1] * n for _ in range(n)]
    out: list[tuple[int, ...]] = []

    def fits(i, j, v):
        # rows i and j both see v in the column of the other argument
        for row, col in ((i, j), (j, i)):
            R = T[row]
            for k in range(n):
                w = R[k]
                if w < 0:
                    continue
                if lq[col][k] and not lq[v][w]:
                    return False
                if lq[k][col] and not lq[w][v]:
                    return False
        return True

    def rec(c):
        if c == len(cells):
            out.append(tuple(v for row in T for v in row))
            return
        i, j = cells[c]
        for v in allowed(i, j):
            if fits(i, j, v):
                T[i][j] = T[j][i] = v
                rec(c + 1)
                T[i][j] = T[j][i] = -1

    rec(0)
    out.sort()
    tag = "qo" if overlap else "qg"
    return [OperatorTable(f"{tag}{k}", L, tuple(flat[r * n:(r + 1) * n] for r in range(n)))
            for k, flat in enumerate(out)]


def enumerate_quasi_overlaps(L: FiniteBoundedLattice) -> list[OperatorTable]:
    """All quasi-overlaps on ``L`` (at most 5 elements), in lexicographic table order."""
    return _enumerate(L, OVERLAP)


def enumerate_quasi_groupings(L: FiniteBoundedLattice) -> list[OperatorTable]:
    """All quasi-groupings on ``L`` (at most 5 elements), in lexicographic table order."""
    return _enumerate(L, GROUPING)


def enumerate_operators(L: FiniteBoundedLattice, kind: str) -> list[OperatorTable]:
    if kind not in (OVERLAP, GROUPING):
        raise ValueError(f"unknown operator kind {kind!r}")
    return _enumerate(L, kind)


def all_tables(L: FiniteBoundedLattice) -> Iterator[tuple[int, ...]]:
    """Unpruned iterator over every flat ``n*n`` table on ``L`` (for oracles)."""
    n = len(L)
    return product(range(n), repeat=n * n)
