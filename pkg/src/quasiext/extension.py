"""Extending an operator from the small lattice ``M`` to the big lattice ``L``.

Given a retraction pair ``(r, s)`` and an operator ``F`` on ``M`` the
extension is ``F^E(x, y) = s(F(r(x), r(y)))``.  It is computed whether or
not the hypotheses hold; :func:`verify_theorem` checks the hypotheses, the
axioms of the result, and the identity ``F^E(s(x), s(y)) = s(F(x, y))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from .errors import DomainMismatch, TheoremViolation
from .lattice import FiniteBoundedLattice, ValidationReport, Violation
from .maps import MapLike, MonotoneMap, RetractionPair, as_table, check_boundary_conditions, check_retraction_pair
from .operators import GROUPING, OVERLAP, AxiomReport, OperatorTable, check_axioms

PairLike = Union[RetractionPair, Tuple[MapLike, MapLike]]

VERIFIED = "verified"
PRECONDITIONS_FAILED = "preconditions-failed"
THEOREM_VIOLATION = "theorem-violation"


def _split(pair: PairLike) -> tuple[MapLike, MapLike]:
    if isinstance(pair, RetractionPair):
        return pair.r, pair.s
    r, s = pair
    return r, s


def _map_name(f: MapLike, default: str) -> str:
    return f.name if isinstance(f, MonotoneMap) else default


def _normalize_kind(kind: str) -> str:
    k = {"overlap": OVERLAP, "grouping": GROUPING}.get(kind, kind)
    if k not in (OVERLAP, GROUPING):
        raise ValueError(f"unknown operator kind {kind!r}")
    return k


def _extend(L, M, pair, source, kind) -> OperatorTable:
    if source.lattice != M:
        raise DomainMismatch(f"operator {source.name} lives on {source.lattice.name}, not {M.name}")
    r, s = _split(pair)
    rt, st = as_table(r, L, M), as_table(s, M, L)
    S = source.table
    table = tuple(tuple(st[S[rt[i]][rt[j]]] for j in range(len(L))) for i in range(len(L)))
    prov = {"kind": kind, "source": source.name, "small": M.name, "big": L.name,
            "r": _map_name(r, "r"), "s": _map_name(s, "s")}
    return OperatorTable(f"{source.name}^E", L, table, prov)


def extend_overlap(L: FiniteBoundedLattice, M: FiniteBoundedLattice, pair: PairLike,
                   O: OperatorTable) -> OperatorTable:
    """``O^E(x, y) = s(O(r(x), r(y)))`` for every ordered pair of ``L``."""
    return _extend(L, M, pair, O, OVERLAP)


def extend_grouping(L: FiniteBoundedLattice, M: FiniteBoundedLattice, pair: PairLike,
                    G: OperatorTable) -> OperatorTable:
    """``G^E(x, y) = s(G(r(x), r(y)))`` for every ordered pair of ``L``."""
    return _extend(L, M, pair, G, GROUPING)


def verify_extension_identity(pair: PairLike, source: OperatorTable,
                              extended: OperatorTable) -> ValidationReport:
    M, L = source.lattice, extended.lattice
    _, s = _split(pair)
    st = as_table(s, M, L)
    S, E = source.table, extended.table
    out = []
    for i in range(len(M)):
        for j in range(len(M)):
            lhs, rhs = E[st[i]][st[j]], st[S[i][j]]
            if lhs != rhs:
                x, y = M.elements[i], M.elements[j]
                out.append(Violation(
                    "extension-identity", (x, y),
                    f"{extended.name}(s({x}), s({y})) = {L.elements[lhs]} but "
                    f"s({source.name}({x}, {y})) = {L.elements[rhs]}"))
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class ExtensionResult:
    kind: str
    extended: OperatorTable
    identity_report: ValidationReport
    axiom_report: AxiomReport
    source_report: AxiomReport
    preconditions: ValidationReport

    @property
    def identity_ok(self) -> bool:
        return self.identity_report.ok

    @property
    def outcome(self) -> str:
        if not self.preconditions.ok:
            return PRECONDITIONS_FAILED
        if self.axiom_report.ok and self.identity_ok:
            return VERIFIED
        return THEOREM_VIOLATION

    @property
    def theorem_violation(self) -> bool:
        return self.outcome == THEOREM_VIOLATION

    def raise_for_violation(self) -> None:
        if self.theorem_violation:
            bad = self.axiom_report.failed() + ([] if self.identity_ok else ["extension-identity"])
            raise TheoremViolation(
                f"{self.extended.name}: hypotheses hold but {', '.join(bad)} failed")


def verify_theorem(L: FiniteBoundedLattice, M: FiniteBoundedLattice, pair: PairLike,
                   source: OperatorTable, kind: str) -> ExtensionResult:
    """Run the full pipeline and return every verdict.

    Order: retraction check, boundary conditions, source axioms, extension,
    axioms of the extension, extension identity.  A failure of the last two
    while all hypotheses hold is reported as ``theorem-violation``; it is a
    report outcome, never raised here.
    """
    kind = _normalize_kind(kind)
    r, s = _split(pair)
    pre = check_retraction_pair(L, M, r, s) + check_boundary_conditions(L, M, r)
    src = check_axioms(M, source, kind)
    pre = pre + ValidationReport(tuple(
        Violation(f"source-{ax}", w.inputs, str(w)) for ax, w in src.counterexamples.items()))
    ext = _extend(L, M, (r, s), source, kind)
    return ExtensionResult(
        kind=kind,
        extended=ext,
        identity_report=verify_extension_identity((r, s), source, ext),
        axiom_report=check_axioms(L, ext, kind),
        source_report=src,
        preconditions=pre,
    )
