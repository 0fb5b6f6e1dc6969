"""Command line front end.

Exit codes: 0 every check passed, 1 some property failed (witnesses are
printed), 2 input or usage error (message on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io as fmt
from .errors import LatticeError
from .extension import verify_theorem
from .lattice import (
    DEFAULT_MAX_SIZE,
    ValidationReport,
    make_boolean,
    make_chain,
    make_diamond_M3,
    make_pentagon_N5,
    make_product,
)
from .maps import (
    check_boundary_conditions,
    check_homomorphism,
    check_retraction_pair,
    enumerate_retraction_pairs,
)
from .operators import GROUPING, OVERLAP, AxiomReport, check_axioms, enumerate_operators

KINDS = {"quasi-overlap": OVERLAP, "quasi-grouping": GROUPING, "overlap": OVERLAP, "grouping": GROUPING}


class UsageError(Exception):
    pass


@dataclass
class Verdict:
    axiom: str
    passed: bool
    witness: dict | None = None

    def as_json(self) -> dict:
        d = {"axiom": self.axiom, "pass": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.axiom}"
        w = self.witness or {}
        text = f"FAIL {self.axiom}"
        if w:
            text += f"  witness ({', '.join(w['inputs'])})"
            if w.get("outputs"):
                text += f" -> ({', '.join(w['outputs'])})"
            text += f": {w['message']}"
        return text


@dataclass
class Outcome:
    verdicts: list[Verdict]
    results: object = None
    text: str = ""


def _report_verdicts(report: ValidationReport, rules: list[str]) -> list[Verdict]:
    out = []
    for rule in rules:
        v = report.first(rule)
        out.append(Verdict(rule, v is None,
                           None if v is None else {"inputs": list(v.witness), "outputs": [], "message": v.message}))
    return out


def _axiom_verdicts(report: AxiomReport, prefix: str = "") -> list[Verdict]:
    out = []
    for ax, ok in report.verdicts.items():
        w = report.counterexamples.get(ax)
        wd = None
        if w is not None:
            msg = w.relation + (f" [{w.direction}]" if w.direction else "")
            wd = {"inputs": list(w.inputs), "outputs": list(w.outputs), "message": msg}
        out.append(Verdict(prefix + ax, ok, wd))
    return out


def _kind(value: str) -> str:
    try:
        return KINDS[value]
    except KeyError:
        raise UsageError(f"unknown --kind {value!r}") from None


def _read_lattice(path: str, max_size: int):
    text = Path(path).read_text(encoding="utf-8")
    if fmt.detect_kind(text) != "lattice":
        raise UsageError(f"{path} is not a lattice file")
    return fmt.parse_lattice(text, max_size=max_size)


def _pair_workspace(args):
    ws = fmt.Workspace()
    L = ws.add_lattice(_read_lattice(args.big, args.max_size))
    M = _read_lattice(args.small, args.max_size)
    # the same lattice may serve as both L and M
    M = L if M == L else ws.add_lattice(M)
    return ws, L, M


def _load_pair_maps(args, ws, L, M):
    r = ws.add_map(fmt.parse_map_spec(Path(args.r).read_text(encoding="utf-8"), ws))
    s = ws.add_map(fmt.parse_map_spec(Path(args.s).read_text(encoding="utf-8"), ws))
    if (r.domain, r.codomain) != (L, M):
        raise UsageError(f"--r must map {L.name} to {M.name}")
    if (s.domain, s.codomain) != (M, L):
        raise UsageError(f"--s must map {M.name} to {L.name}")
    return r.mapping, s.mapping


# -- commands ----------------------------------------------------------------

LATTICE_RULES = [("partial-order", {"antisymmetry"}),
                 ("bounded", {"bottom-least", "top-greatest"}),
                 ("lattice", {"meet-exists", "join-exists"})]


def cmd_check_lattice(args) -> Outcome:
    text = Path(args.file).read_text(encoding="utf-8")
    try:
        L = fmt.parse_lattice(text, max_size=args.max_size)
    except LatticeError as exc:
        v = exc.report.violations[0] if exc.report is not None else None
        failed = next((name for name, rules in LATTICE_RULES if v is not None and v.rule in rules), None)
        if failed is None:
            raise
        out = []
        for name, _ in LATTICE_RULES:
            if name == failed:
                out.append(Verdict(name, False, {"inputs": list(v.witness), "outputs": [], "message": v.message}))
                break
            out.append(Verdict(name, True))
        return Outcome(out)
    return Outcome([Verdict(name, True) for name, _ in LATTICE_RULES],
                   {"lattice": L.name, "size": len(L)})


def cmd_check_operator(args) -> Outcome:
    ws = fmt.Workspace.from_files([args.lattice, args.operator], max_size=args.max_size)
    if len(ws.operators) != 1:
        raise UsageError("--operator must be an operator file")
    op = next(iter(ws.operators.values()))
    return Outcome(_axiom_verdicts(check_axioms(op.lattice, op, _kind(args.kind))))


def cmd_check_retraction(args) -> Outcome:
    ws, L, M = _pair_workspace(args)
    r, s = _load_pair_maps(args, ws, L, M)
    verdicts = _report_verdicts(check_retraction_pair(L, M, r, s), ["r-monotone", "s-monotone", "retraction"])
    if args.boundary:
        verdicts += _report_verdicts(check_boundary_conditions(L, M, r), ["boundary-zero", "boundary-one"])
    if args.strict_homomorphism:
        verdicts += _report_verdicts(check_homomorphism(r, L, M, "r"), ["r-preserves-meet", "r-preserves-join"])
        verdicts += _report_verdicts(check_homomorphism(s, M, L, "s"), ["s-preserves-meet", "s-preserves-join"])
    return Outcome(verdicts)


def _theorem(args):
    ws, L, M = _pair_workspace(args)
    r, s = _load_pair_maps(args, ws, L, M)
    op = ws.add_operator(fmt.parse_operator(Path(args.op).read_text(encoding="utf-8"), ws))
    if op.lattice != M:
        raise UsageError(f"--op must be an operator on {M.name}")
    res = verify_theorem(L, M, (r, s), op, _kind(args.kind))
    verdicts = _report_verdicts(res.preconditions, ["r-monotone", "s-monotone", "retraction",
                                                    "boundary-zero", "boundary-one"])
    verdicts += _axiom_verdicts(res.source_report, "source-")
    verdicts += _axiom_verdicts(res.axiom_report, "extension-")
    verdicts += _report_verdicts(res.identity_report, ["extension-identity"])
    return res, verdicts


def cmd_verify_theorem(args) -> Outcome:
    res, verdicts = _theorem(args)
    return Outcome(verdicts, {"outcome": res.outcome}, f"OUTCOME {res.outcome}\n")


def cmd_extend(args) -> Outcome:
    res, verdicts = _theorem(args)
    text = fmt.serialize_operator(res.extended)
    Path(args.output).write_text(text, encoding="utf-8")
    return Outcome(verdicts, {"outcome": res.outcome, "output": args.output, "operator": text},
                   f"OUTCOME {res.outcome}\nwrote {res.extended.name} to {args.output}\n")


def cmd_enumerate_retractions(args) -> Outcome:
    _, L, M = _pair_workspace(args)
    pairs = enumerate_retraction_pairs(L, M, require_boundary=args.boundary, max_size=args.max_size)
    results = []
    lines = [f"{len(pairs)} retraction pair(s) {L.name} -> {M.name}"]
    for k, p in enumerate(pairs):
        sd, rd = p.s.as_dict(), p.r.as_dict()
        results.append({"s": sd, "r": rd, "boundary_zero_ok": p.boundary_zero_ok,
                        "boundary_one_ok": p.boundary_one_ok})
        lines.append(f"pair {k}: s: " + " ".join(f"{x}->{y}" for x, y in sd.items())
                     + " | r: " + " ".join(f"{x}->{y}" for x, y in rd.items())
                     + f" | boundary-zero {'ok' if p.boundary_zero_ok else 'violated'}"
                     + f" | boundary-one {'ok' if p.boundary_one_ok else 'violated'}")
    return Outcome([], results, "\n".join(lines) + "\n")


def cmd_enumerate_operators(args) -> Outcome:
    L = _read_lattice(args.lattice, args.max_size)
    ops = enumerate_operators(L, _kind(args.kind))
    texts = [fmt.serialize_operator(op) for op in ops]
    header = f"{len(ops)} {_kind(args.kind)} operator(s) on {L.name}\n"
    return Outcome([], texts, header + "".join(texts))


def cmd_gen(args) -> Outcome:
    what, params = args.what, args.params
    need = {"chain": 1, "boolean": 1, "diamond": 0, "pentagon": 0, "product": 2}
    if what not in need:
        raise UsageError(f"unknown generator {what!r}")
    if len(params) != need[what]:
        raise UsageError(f"gen {what} takes {need[what]} argument(s)")
    if what in ("chain", "boolean"):
        try:
            n = int(params[0])
        except ValueError:
            raise UsageError(f"expected an integer, got {params[0]!r}") from None
        L = make_chain(n, max_size=args.max_size) if what == "chain" else make_boolean(n)
    elif what == "diamond":
        L = make_diamond_M3()
    elif what == "pentagon":
        L = make_pentagon_N5()
    else:
        A, B = (fmt.parse_lattice(Path(p).read_text(encoding="utf-8"), max_size=args.max_size)
                for p in params)
        L = make_product(A, B, max_size=args.max_size)
    text = fmt.serialize_lattice(L)
    return Outcome([], text, text)


# -- parser ------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a single JSON report on stdout")
    common.add_argument("--max-size", type=int, default=argparse.SUPPRESS, metavar="N",
                        help=f"element cap for parsed and generated lattices (default {DEFAULT_MAX_SIZE})")

    p = argparse.ArgumentParser(prog="quasiext", parents=[common],
                                description="Verify lattice operators and their retraction-based extensions.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-lattice", parents=[common], help="validate a lattice file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check_lattice)

    c = sub.add_parser("check-operator", parents=[common], help="check operator axioms")
    c.add_argument("--lattice", required=True)
    c.add_argument("--operator", required=True)
    c.add_argument("--kind", required=True, choices=sorted(KINDS))
    c.set_defaults(func=cmd_check_operator)

    def pair_flags(c, op=False):
        c.add_argument("--big", required=True, help="lattice file for L")
        c.add_argument("--small", required=True, help="lattice file for M")
        if op is not None:
            c.add_argument("--r", required=True, help="map file for r: L -> M")
            c.add_argument("--s", required=True, help="map file for s: M -> L")
        if op:
            c.add_argument("--op", required=True, help="operator file on M")
            c.add_argument("--kind", required=True, choices=sorted(KINDS))

    c = sub.add_parser("check-retraction", parents=[common], help="check a retraction pair")
    pair_flags(c)
    c.add_argument("--boundary", action="store_true", help="also check the two boundary conditions")
    c.add_argument("--strict-homomorphism", action="store_true",
                   help="also check that r and s preserve meets and joins")
    c.set_defaults(func=cmd_check_retraction)

    c = sub.add_parser("extend", parents=[common], help="extend an operator from M to L")
    pair_flags(c, op=True)
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(func=cmd_extend)

    c = sub.add_parser("verify-theorem", parents=[common], help="check hypotheses and the extension")
    pair_flags(c, op=True)
    c.set_defaults(func=cmd_verify_theorem)

    c = sub.add_parser("enumerate-retractions", parents=[common], help="list every retraction pair")
    pair_flags(c, op=None)
    c.add_argument("--boundary", action="store_true")
    c.set_defaults(func=cmd_enumerate_retractions)

    c = sub.add_parser("enumerate-operators", parents=[common], help="list every operator of a kind")
    c.add_argument("--lattice", required=True)
    c.add_argument("--kind", required=True, choices=sorted(KINDS))
    c.set_defaults(func=cmd_enumerate_operators)

    c = sub.add_parser("gen", parents=[common], help="print a standard lattice file")
    c.add_argument("what", help="chain | boolean | diamond | pentagon | product")
    c.add_argument("params", nargs="*")
    c.set_defaults(func=cmd_gen)
    return p


def _inputs(args) -> dict:
    skip = {"func", "command", "json", "max_size"}
    return {k.replace("_", "-"): v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.max_size = getattr(args, "max_size", DEFAULT_MAX_SIZE)
    try:
        outcome = args.func(args)
    except (LatticeError, UsageError, OSError) as exc:
        print(f"quasiext {args.command}: {exc}", file=sys.stderr)
        return 2
    code = 0 if all(v.passed for v in outcome.verdicts) else 1
    if args.json:
        doc = {"command": args.command, "inputs": _inputs(args),
               "verdicts": [v.as_json() for v in outcome.verdicts], "exit": code}
        if outcome.results is not None:
            doc["results"] = outcome.results
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        for v in outcome.verdicts:
            print(v.line())
        sys.stdout.write(outcome.text)
    return code


if __name__ == "__main__":
    sys.exit(main())
