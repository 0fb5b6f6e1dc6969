"""Text formats for lattices, maps and operators.

All three formats are line based, ``#`` starts a comment, blank lines are
ignored and tokens are whitespace separated::

    lattice C3             map r from C4 to C3      operator min on C3
    elements 0 m 1         0 -> 0                   0 0 -> 0
    bottom 0               a -> m                   0 m -> 0
    top 1                  ...                      ...
    covers                 end                      end
    0 m
    m 1
    end

Serialization is canonical: elements in declaration order, covers as the
Hasse diagram in declaration order, map lines in domain order, operator
rows in row-major order.  ``parse(serialize(x)) == x`` for every object.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .errors import (
    DuplicateEntry,
    LatticeSyntaxError,
    NotMonotone,
    NotTotal,
    UnknownElement,
    UnknownReference,
)
from .lattice import DEFAULT_MAX_SIZE, FiniteBoundedLattice, build_lattice
from .maps import MonotoneMap
from .operators import OperatorTable

TOKEN = re.compile(r"[A-Za-z0-9_(),^]+")


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        for t in toks:
            if not TOKEN.fullmatch(t) and t != "->":
                raise LatticeSyntaxError("invalid token", line=no, token=t)
        yield no, toks


def _header(lines, keyword: str, shape: list[str | None]) -> tuple[int, list[str]]:
    """Read the first line and check it against ``keyword`` plus ``shape``.

    ``shape`` lists fixed literal tokens, with None standing for a name.
    """
    try:
        no, toks = next(lines)
    except StopIteration:
        raise LatticeSyntaxError(f"empty input, expected '{keyword}'", line=1) from None
    if toks[0] != keyword:
        raise LatticeSyntaxError(f"expected '{keyword}'", line=no, token=toks[0])
    rest = toks[1:]
    if len(rest) != len(shape):
        raise LatticeSyntaxError(f"malformed '{keyword}' header", line=no)
    names = []
    for tok, want in zip(rest, shape):
        if want is None:
            if tok == "->":
                raise LatticeSyntaxError("expected a name", line=no, token=tok)
            names.append(tok)
        elif tok != want:
            raise LatticeSyntaxError(f"expected '{want}'", line=no, token=tok)
    return no, names


def _trailing(lines):
    for no, toks in lines:
        raise LatticeSyntaxError("content after 'end'", line=no, token=toks[0])


def detect_kind(text: str) -> str:
    """First directive of ``text``: lattice, map or operator."""
    for _, toks in _lines(text):
        return toks[0]
    raise LatticeSyntaxError("empty input", line=1)


# -- lattices ----------------------------------------------------------------

def parse_lattice(text: str, *, max_size: int = DEFAULT_MAX_SIZE) -> FiniteBoundedLattice:
    lines = _lines(text)
    _, (name,) = _header(lines, "lattice", [None])
    decl: dict[str, list[str]] = {}
    covers: list[tuple[str, str]] = []
    seen: dict[tuple[str, str], int] = {}
    section = "header"
    last = 1
    for no, toks in lines:
        last = no
        head = toks[0]
        if section == "covers":
            if head == "end":
                if len(toks) != 1:
                    raise LatticeSyntaxError("'end' takes no arguments", line=no)
                section = "done"
                break
            if len(toks) != 2 or "->" in toks:
                raise LatticeSyntaxError("a cover line is '<lower> <upper>'", line=no, token=head)
            pair = (toks[0], toks[1])
            for x in pair:
                if x not in decl["elements"]:
                    raise UnknownElement(f"{x!r} is not declared", line=no, token=x)
            if pair in seen:
                raise DuplicateEntry(f"cover {pair[0]} {pair[1]} repeats line {seen[pair]}", line=no)
            seen[pair] = no
            covers.append(pair)
            continue
        if head in ("elements", "bottom", "top"):
            if head in decl:
                raise DuplicateEntry(f"second '{head}' declaration", line=no, token=head)
            args = toks[1:]
            if head == "elements" and not args or head != "elements" and len(args) != 1:
                raise LatticeSyntaxError(f"malformed '{head}' declaration", line=no, token=head)
            if "->" in args:
                raise LatticeSyntaxError("unexpected '->'", line=no, token="->")
            decl[head] = args
        elif head == "covers":
            if len(toks) != 1:
                raise LatticeSyntaxError("'covers' takes no arguments", line=no)
            for need in ("elements", "bottom", "top"):
                if need not in decl:
                    raise LatticeSyntaxError(f"missing '{need}' declaration before 'covers'", line=no)
            section = "covers"
        elif head == "end":
            raise LatticeSyntaxError("missing 'covers' section", line=no, token=head)
        else:
            raise LatticeSyntaxError("unknown directive", line=no, token=head)
    if section != "done":
        raise LatticeSyntaxError("missing 'end'", line=last)
    _trailing(lines)
    return build_lattice(name, decl["elements"], decl["bottom"][0], decl["top"][0], covers,
                         max_size=max_size)


def serialize_lattice(L: FiniteBoundedLattice) -> str:
    out = [f"lattice {L.name}", "elements " + " ".join(L.elements),
           f"bottom {L.bottom}", f"top {L.top}", "covers"]
    order = {x: i for i, x in enumerate(L.elements)}
    out += [f"{a} {b}" for a, b in sorted(L.covers, key=lambda c: (order[c[0]], order[c[1]]))]
    out.append("end")
    return "\n".join(out) + "\n"


# -- workspace ---------------------------------------------------------------

@dataclass(frozen=True)
class MapSpec:
    """A parsed map before any order check."""

    name: str
    domain: FiniteBoundedLattice
    codomain: FiniteBoundedLattice
    mapping: dict[str, str]


@dataclass
class Workspace:
    """Named objects loaded from files; cross references resolve here.

    ``raw_maps`` holds every parsed map; ``maps`` only those that are
    order-preserving.
    """

    lattices: dict[str, FiniteBoundedLattice] = field(default_factory=dict)
    maps: dict[str, MonotoneMap] = field(default_factory=dict)
    raw_maps: dict[str, MapSpec] = field(default_factory=dict)
    operators: dict[str, OperatorTable] = field(default_factory=dict)

    def lattice(self, name: str, line: int | None = None) -> FiniteBoundedLattice:
        try:
            return self.lattices[name]
        except KeyError:
            raise UnknownReference(f"no lattice named {name!r} is loaded", line=line, token=name) from None

    def add_lattice(self, L: FiniteBoundedLattice) -> FiniteBoundedLattice:
        if L.name in self.lattices:
            raise DuplicateEntry(f"lattice {L.name!r} loaded twice")
        self.lattices[L.name] = L
        return L

    def add_map(self, spec: MapSpec) -> MapSpec:
        if spec.name in self.raw_maps:
            raise DuplicateEntry(f"map {spec.name!r} loaded twice")
        self.raw_maps[spec.name] = spec
        try:
            self.maps[spec.name] = MonotoneMap.from_mapping(spec.name, spec.domain, spec.codomain, spec.mapping)
        except NotMonotone:
            pass
        return spec

    def add_operator(self, op: OperatorTable) -> OperatorTable:
        if op.name in self.operators:
            raise DuplicateEntry(f"operator {op.name!r} loaded twice")
        self.operators[op.name] = op
        return op

    def load_text(self, text: str, *, max_size: int = DEFAULT_MAX_SIZE):
        kind = detect_kind(text)
        if kind == "lattice":
            return self.add_lattice(parse_lattice(text, max_size=max_size))
        if kind == "map":
            return self.add_map(parse_map_spec(text, self))
        if kind == "operator":
            return self.add_operator(parse_operator(text, self))
        raise LatticeSyntaxError("expected 'lattice', 'map' or 'operator'", line=1, token=kind)

    @classmethod
    def from_files(cls, paths, *, max_size: int = DEFAULT_MAX_SIZE) -> Workspace:
        """Load lattices first so maps and operators can refer to any of them."""
        ws = cls()
        texts = [Path(p).read_text(encoding="utf-8") for p in paths]
        for text in texts:
            if detect_kind(text) == "lattice":
                ws.load_text(text, max_size=max_size)
        for text in texts:
            if detect_kind(text) != "lattice":
                ws.load_text(text, max_size=max_size)
        return ws


# -- maps --------------------------------------------------------------------

def parse_map_spec(text: str, workspace: Workspace) -> MapSpec:
    lines = _lines(text)
    hno, (name, src, dst) = _header(lines, "map", [None, "from", None, "to", None])
    A, B = workspace.lattice(src, hno), workspace.lattice(dst, hno)
    mapping: dict[str, str] = {}
    where: dict[str, int] = {}
    last = hno
    done = False
    for no, toks in lines:
        last = no
        if toks == ["end"]:
            done = True
            break
        if len(toks) != 3 or toks[1] != "->":
            raise LatticeSyntaxError("a map line is '<x> -> <y>'", line=no, token=toks[0])
        x, y = toks[0], toks[2]
        if x not in A:
            raise UnknownElement(f"{x!r} is not an element of {A.name}", line=no, token=x)
        if y not in B:
            raise UnknownElement(f"{y!r} is not an element of {B.name}", line=no, token=y)
        if x in mapping:
            raise DuplicateEntry(f"{x!r} already mapped on line {where[x]}", line=no, token=x)
        mapping[x] = y
        where[x] = no
    if not done:
        raise LatticeSyntaxError("missing 'end'", line=last)
    _trailing(lines)
    for x in A.elements:
        if x not in mapping:
            raise NotTotal(f"map {name} gives no image for {x!r}", line=last, token=x)
    return MapSpec(name, A, B, mapping)


def parse_map(text: str, workspace: Workspace) -> MonotoneMap:
    spec = parse_map_spec(text, workspace)
    return MonotoneMap.from_mapping(spec.name, spec.domain, spec.codomain, spec.mapping)


def serialize_map(f: MonotoneMap | MapSpec) -> str:
    mapping = f.mapping if isinstance(f, MapSpec) else f.as_dict()
    out = [f"map {f.name} from {f.domain.name} to {f.codomain.name}"]
    out += [f"{x} -> {mapping[x]}" for x in f.domain.elements]
    out.append("end")
    return "\n".join(out) + "\n"


# -- operators ---------------------------------------------------------------

def parse_operator(text: str, workspace: Workspace) -> OperatorTable:
    lines = _lines(text)
    hno, (name, lname) = _header(lines, "operator", [None, "on", None])
    L = workspace.lattice(lname, hno)
    entries: dict[tuple[str, str], str] = {}
    where: dict[tuple[str, str], int] = {}
    last = hno
    done = False
    for no, toks in lines:
        last = no
        if toks == ["end"]:
            done = True
            break
        if len(toks) != 4 or toks[2] != "->":
            raise LatticeSyntaxError("an operator line is '<x> <y> -> <z>'", line=no, token=toks[0])
        x, y, z = toks[0], toks[1], toks[3]
        for t in (x, y, z):
            if t not in L:
                raise UnknownElement(f"{t!r} is not an element of {L.name}", line=no, token=t)
        if (x, y) in entries:
            raise DuplicateEntry(f"pair ({x}, {y}) already given on line {where[x, y]}", line=no, token=x)
        entries[x, y] = z
        where[x, y] = no
    if not done:
        raise LatticeSyntaxError("missing 'end'", line=last)
    _trailing(lines)
    for x in L.elements:
        for y in L.elements:
            if (x, y) not in entries:
                raise NotTotal(f"operator {name} has no entry for ({x}, {y})", line=last, token=x)
    return OperatorTable.from_mapping(name, L, entries)


def serialize_operator(op: OperatorTable) -> str:
    els = op.lattice.elements
    out = [f"operator {op.name} on {op.lattice.name}"]
    out += [f"{els[i]} {els[j]} -> {els[v]}" for i, row in enumerate(op.table) for j, v in enumerate(row)]
    out.append("end")
    return "\n".join(out) + "\n"
