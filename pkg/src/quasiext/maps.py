"""Monotone maps between lattices and retraction / pseudo-inverse pairs.

A retraction pair ``(r, s)`` links a big lattice ``L`` to a small lattice
``M``: ``r: L -> M`` and ``s: M -> L`` are monotone and ``r(s(m)) == m`` for
every ``m`` in ``M``.  Nothing requires ``M`` to be a subset of ``L``.

Checkers accept either a :class:`MonotoneMap` or a plain ``{x: y}`` mapping so
that invalid data can be diagnosed instead of rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import (
    DomainMismatch,
    NotARetraction,
    NotMonotone,
    NotTotal,
    SizeLimitExceeded,
    UnknownElement,
)
from .lattice import DEFAULT_MAX_SIZE, FiniteBoundedLattice, ValidationReport, Violation


@dataclass(frozen=True)
class MonotoneMap:
    """Total order-preserving map ``domain -> codomain``.

    ``table[i]`` is the codomain index of the image of ``domain.elements[i]``.
    Monotonicity is checked exhaustively on construction.
    """

    name: str
    domain: FiniteBoundedLattice
    codomain: FiniteBoundedLattice
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != len(self.domain):
            raise NotTotal(f"map {self.name} has {len(self.table)} entries for "
                           f"{len(self.domain)} domain elements")
        if any(not 0 <= v < len(self.codomain) for v in self.table):
            raise UnknownElement(f"map {self.name} has an image outside {self.codomain.name}")
        report = _monotone_report(self.table, self.domain, self.codomain)
        if not report.ok:
            raise NotMonotone(f"map {self.name} is not order-preserving: {report.violations[0]}", report)

    @classmethod
    def from_mapping(cls, name: str, domain: FiniteBoundedLattice, codomain: FiniteBoundedLattice,
                     mapping: Mapping[str, str]) -> MonotoneMap:
        return cls(name, domain, codomain, _table_from_mapping(mapping, domain, codomain))

    def __call__(self, x: str) -> str:
        return self.codomain.elements[self.table[self.domain.index(x)]]

    def as_dict(self) -> dict[str, str]:
        return {x: self.codomain.elements[v] for x, v in zip(self.domain.elements, self.table)}


MapLike = Union[MonotoneMap, Mapping[str, str]]


def _table_from_mapping(mapping: Mapping[str, str], A: FiniteBoundedLattice,
                        B: FiniteBoundedLattice) -> tuple[int, ...]:
    for x in mapping:
        A.index(x)
    missing = [x for x in A.elements if x not in mapping]
    if missing:
        raise NotTotal(f"no image given for {missing[0]!r}")
    return tuple(B.index(mapping[x]) for x in A.elements)


def as_table(f: MapLike, A: FiniteBoundedLattice, B: FiniteBoundedLattice) -> tuple[int, ...]:
    """Index table of ``f`` viewed as a map ``A -> B``."""
    if isinstance(f, MonotoneMap):
        if f.domain != A or f.codomain != B:
            raise DomainMismatch(
                f"map {f.name} goes {f.domain.name} -> {f.codomain.name}, expected {A.name} -> {B.name}")
        return f.table
    return _table_from_mapping(f, A, B)


def _monotone_report(table, A, B, rule="monotone", label="f") -> ValidationReport:
    out = []
    n = len(A)
    for i in range(n):
        for j in range(n):
            if i != j and A.leq_table[i][j] and not B.leq_table[table[i]][table[j]]:
                x, y = A.elements[i], A.elements[j]
                fx, fy = B.elements[table[i]], B.elements[table[j]]
                out.append(Violation(rule, (x, y),
                                     f"{x} <= {y} but {label}({x}) = {fx} is not <= {label}({y}) = {fy}"))
    return ValidationReport(tuple(out))


def check_monotone(f: MapLike, A: FiniteBoundedLattice, B: FiniteBoundedLattice) -> ValidationReport:
    return _monotone_report(as_table(f, A, B), A, B)


def identity_map(L: FiniteBoundedLattice, name: str = "id") -> MonotoneMap:
    return MonotoneMap(name, L, L, tuple(range(len(L))))


def constant_map(A: FiniteBoundedLattice, B: FiniteBoundedLattice, value: str,
                 name: str | None = None) -> MonotoneMap:
    return MonotoneMap(name or f"const_{value}", A, B, (B.index(value),) * len(A))


def compose(f: MonotoneMap, g: MonotoneMap, name: str | None = None) -> MonotoneMap:
    """Apply ``f`` first, then ``g``."""
    if f.codomain != g.domain:
        raise DomainMismatch(f"cannot compose {f.name}: ->{f.codomain.name} with {g.name}: {g.domain.name}->")
    return MonotoneMap(name or f"{f.name}_then_{g.name}", f.domain, g.codomain,
                       tuple(g.table[v] for v in f.table))


def check_retraction_pair(L: FiniteBoundedLattice, M: FiniteBoundedLattice,
                          r: MapLike, s: MapLike) -> ValidationReport:
    """Both maps monotone and ``r(s(m)) == m`` for every ``m`` in ``M``."""
    rt = as_table(r, L, M)
    st = as_table(s, M, L)
    report = _monotone_report(rt, L, M, "r-monotone", "r") + _monotone_report(st, M, L, "s-monotone", "s")
    bad = []
    for m, sm in enumerate(st):
        back = rt[sm]
        if back != m:
            x, y, z = M.elements[m], L.elements[sm], M.elements[back]
            bad.append(Violation("retraction", (x,), f"r(s({x})) = r({y}) = {z} != {x}"))
    return report + ValidationReport(tuple(bad))


def check_boundary_conditions(L: FiniteBoundedLattice, M: FiniteBoundedLattice,
                              r: MapLike) -> ValidationReport:
    """The two equivalences ``r(x) = 0_M <=> x = 0_L`` and ``r(x) = 1_M <=> x = 1_L``.

    Rules are ``boundary-zero`` and ``boundary-one``; each witness is a
    single element of ``L`` and the message names the failing direction.
    """
    rt = as_table(r, L, M)
    out = []
    for rule, lb, mb, sym in (("boundary-zero", L.bottom_index, M.bottom_index, "0"),
                              ("boundary-one", L.top_index, M.top_index, "1")):
        for i, v in enumerate(rt):
            x = L.elements[i]
            if v == mb and i != lb:
                out.append(Violation(rule, (x,), f"r({x}) = {sym}_M but {x} != {sym}_L"))
            elif i == lb and v != mb:
                out.append(Violation(rule, (x,), f"{x} = {sym}_L but r({x}) = {M.elements[v]} != {sym}_M"))
    return ValidationReport(tuple(out))


def check_homomorphism(f: MapLike, A: FiniteBoundedLattice, B: FiniteBoundedLattice,
                       label: str = "f") -> ValidationReport:
    """Optional stricter verdict: ``f`` preserves binary meets and joins."""
    t = as_table(f, A, B)
    out = []
    n = len(A)
    for opname, ta, tb in (("meet", A.meet_table, B.meet_table), ("join", A.join_table, B.join_table)):
        for i in range(n):
            for j in range(i + 1, n):
                lhs, rhs = t[ta[i][j]], tb[t[i]][t[j]]
                if lhs != rhs:
                    x, y = A.elements[i], A.elements[j]
                    out.append(Violation(
                        f"{label}-preserves-{opname}", (x, y),
                        f"{label}({opname}({x},{y})) = {B.elements[lhs]} but "
                        f"{opname}({label}({x}),{label}({y})) = {B.elements[rhs]}"))
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class RetractionPair:
    r: MonotoneMap
    s: MonotoneMap
    boundary_zero_ok: bool
    boundary_one_ok: bool

    @property
    def big(self) -> FiniteBoundedLattice:
        return self.r.domain

    @property
    def small(self) -> FiniteBoundedLattice:
        return self.r.codomain

    @property
    def boundary_ok(self) -> bool:
        return self.boundary_zero_ok and self.boundary_one_ok


def make_retraction_pair(L: FiniteBoundedLattice, M: FiniteBoundedLattice,
                         r: MapLike, s: MapLike) -> RetractionPair:
    """Validate ``(r, s)`` and record the boundary-condition flags.

    Raises :class:`NotARetraction` (with the report) when the maps are not
    monotone or ``r`` does not undo ``s``.
    """
    report = check_retraction_pair(L, M, r, s)
    if not report.ok:
        raise NotARetraction(f"not a retraction pair: {report.violations[0]}", report)
    rm = r if isinstance(r, MonotoneMap) else MonotoneMap.from_mapping("r", L, M, r)
    sm = s if isinstance(s, MonotoneMap) else MonotoneMap.from_mapping("s", M, L, s)
    b = check_boundary_conditions(L, M, rm)
    return RetractionPair(rm, sm, not b.failed("boundary-zero"), not b.failed("boundary-one"))


def _embeddings(L, M, require_boundary) -> Iterator[tuple[int, ...]]:
    nm, nl = len(M), len(L)
    lq, mq = L.leq_table, M.leq_table
    s = [0] * nm
    used = [False] * nl

    def rec(m):
        if m == nm:
            yield tuple(s)
            return
        if require_boundary and m == M.bottom_index:
            cands = [L.bottom_index]
        elif require_boundary and m == M.top_index:
            cands = [L.top_index]
        else:
            cands = range(nl)
        for v in cands:
            if used[v]:
                continue
            if all(mq[p][m] == lq[s[p]][v] and mq[m][p] == lq[v][s[p]] for p in range(m)):
                s[m] = v
                used[v] = True
                yield from rec(m + 1)
                used[v] = False

    yield from rec(0)


def _retractions_for(L, M, s, require_boundary) -> Iterator[tuple[int, ...]]:
    nl, nm = len(L), len(M)
    lq, mq = L.leq_table, M.leq_table
    r = [-1] * nl
    for m, v in enumerate(s):
        r[v] = m
    fixed = [i for i in range(nl) if r[i] >= 0]
    free = [i for i in range(nl) if r[i] < 0]
    lb, lt, mb, mt = L.bottom_index, L.top_index, M.bottom_index, M.top_index

    if require_boundary:
        for i in fixed:
            if (r[i] == mb) != (i == lb) or (r[i] == mt) != (i == lt):
                return

    def allowed(i):
        if not require_boundary:
            return range(nm)
        if i == lb:
            return [mb]
        if i == lt:
            return [mt]
        return [v for v in range(nm) if v != mb and v != mt]

    assigned = list(fixed)

    def rec(k):
        if k == len(free):
            yield tuple(r)
            return
        i = free[k]
        for v in allowed(i):
            if all((not lq[j][i] or mq[r[j]][v]) and (not lq[i][j] or mq[v][r[j]]) for j in assigned):
                r[i] = v
                assigned.append(i)
                yield from rec(k + 1)
                assigned.pop()
        r[i] = -1

    yield from rec(0)


def enumerate_retraction_pairs(L: FiniteBoundedLattice, M: FiniteBoundedLattice,
                               require_boundary: bool = False, *,
                               max_size: int = DEFAULT_MAX_SIZE) -> list[RetractionPair]:
    """Every retraction pair ``L -> M``, sorted by ``(s.table, r.table)``.

    ``s`` ranges over order-embeddings (forced anyway by ``r o s = id``);
    ``r`` over monotone maps fixing the image of ``s``.  With
    ``require_boundary`` only pairs satisfying both boundary conditions are
    kept.
    """
    if len(L) > max_size or len(M) > max_size:
        raise SizeLimitExceeded(f"lattices of size {len(L)} and {len(M)} exceed the cap of {max_size}")
    found = []
    for st in _embeddings(L, M, require_boundary):
        for rt in _retractions_for(L, M, st, require_boundary):
            found.append((st, rt))
    found.sort()
    out = []
    for st, rt in found:
        r = MonotoneMap("r", L, M, rt)
        s = MonotoneMap("s", M, L, st)
        b = check_boundary_conditions(L, M, r)
        out.append(RetractionPair(r, s, not b.failed("boundary-zero"), not b.failed("boundary-one")))
    return out
