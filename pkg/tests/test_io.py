import pytest

from quasiext import (
    DuplicateEntry,
    LatticeSyntaxError,
    NotMonotone,
    NotTotal,
    UnknownElement,
    UnknownReference,
    Workspace,
    canonical_meet,
    parse_lattice,
    parse_map,
    parse_operator,
    serialize_lattice,
    serialize_map,
    serialize_operator,
)
from quasiext.io import detect_kind, parse_map_spec

from conftest import FIXTURES

CANONICAL = sorted(p for p in FIXTURES.iterdir()
                   if p.suffix in (".lat", ".map", ".op") and p.stem not in {"cycle", "notlattice", "missing_row"})


def workspace():
    return Workspace.from_files(sorted(FIXTURES.glob("c[34].lat")) + [FIXTURES / "b2.lat"])


def test_parse_c4():
    L = parse_lattice((FIXTURES / "c4.lat").read_text())
    assert L.name == "C4" and len(L) == 4 and L.leq("a", "b")


@pytest.mark.parametrize("path", CANONICAL, ids=lambda p: p.name)
def test_round_trip_byte_exact(path):
    text = path.read_text(encoding="utf-8")
    ws = workspace()
    kind = detect_kind(text)
    if kind == "lattice":
        assert serialize_lattice(parse_lattice(text)) == text
    elif kind == "map":
        assert serialize_map(parse_map_spec(text, ws)) == text
    else:
        assert serialize_operator(parse_operator(text, ws)) == text


def test_comments_and_blank_lines_are_ignored():
    text = "# header\n\nlattice C2   # name\nelements 0 1\n\nbottom 0\ntop 1\ncovers\n0 1  # only cover\nend\n"
    L = parse_lattice(text)
    assert serialize_lattice(L) == "lattice C2\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 1\nend\n"


@pytest.mark.parametrize("text, line", [
    ("lattice X\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 1\n", 6),
    ("lattice X\nelements 0 1\nbottom 0\ntop 1\nfoo 1\ncovers\n0 1\nend\n", 5),
    ("lattice X\nelements 0 1\nbottom 0\ncovers\n0 1\nend\n", 4),
    ("lattice X\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 1\nend\nextra\n", 8),
    ("lattice X\nelements 0 1!\nbottom 0\ntop 1\ncovers\nend\n", 2),
    ("latice X\n", 1),
    ("lattice X\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 1 1\nend\n", 6),
])
def test_lattice_syntax_errors(text, line):
    with pytest.raises(LatticeSyntaxError) as exc:
        parse_lattice(text)
    assert exc.value.line == line


def test_lattice_reference_errors():
    with pytest.raises(UnknownElement) as exc:
        parse_lattice("lattice X\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 2\nend\n")
    assert exc.value.line == 6 and exc.value.token == "2"
    with pytest.raises(DuplicateEntry):
        parse_lattice("lattice X\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 1\n0 1\nend\n")
    with pytest.raises(DuplicateEntry):
        parse_lattice("lattice X\nelements 0 1\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 1\nend\n")


def test_operator_missing_row():
    ws = workspace()
    with pytest.raises(NotTotal) as exc:
        parse_operator((FIXTURES / "missing_row.op").read_text(), ws)
    assert "(1, 1)" in str(exc.value)


def test_operator_errors():
    ws = workspace()
    rows = "".join(f"{x} {y} -> 0\n" for x in "0m1" for y in "0m1")
    assert parse_operator(f"operator z on C3\n{rows}end\n", ws).name == "z"
    with pytest.raises(DuplicateEntry) as exc:
        parse_operator(f"operator z on C3\n0 0 -> 0\n{rows}end\n", ws)
    assert exc.value.line == 3
    with pytest.raises(UnknownReference):
        parse_operator(f"operator z on C9\n{rows}end\n", ws)
    with pytest.raises(UnknownElement):
        parse_operator(f"operator z on C3\n{rows.replace('1 1 -> 0', '1 1 -> q')}end\n", ws)
    with pytest.raises(LatticeSyntaxError):
        parse_operator(f"operator z on C3\n{rows}", ws)
    with pytest.raises(LatticeSyntaxError):
        parse_operator(f"operator z C3\n{rows}end\n", ws)


def test_map_parsing():
    ws = workspace()
    r = parse_map((FIXTURES / "r.map").read_text(), ws)
    assert r.as_dict() == {"0": "0", "a": "m", "b": "m", "1": "1"}
    with pytest.raises(NotMonotone):
        parse_map((FIXTURES / "r_nonmono.map").read_text(), ws)
    spec = parse_map_spec((FIXTURES / "r_nonmono.map").read_text(), ws)
    assert spec.mapping["0"] == "m"
    with pytest.raises(NotTotal) as exc:
        parse_map("map f from C4 to C3\n0 -> 0\na -> m\nb -> m\nend\n", ws)
    assert exc.value.token == "1"
    with pytest.raises(DuplicateEntry):
        parse_map("map f from C4 to C3\n0 -> 0\n0 -> 0\nend\n", ws)
    with pytest.raises(UnknownReference):
        parse_map("map f from C4 to C7\n0 -> 0\nend\n", ws)
    with pytest.raises(LatticeSyntaxError):
        parse_map("map f from C4 to C3\n0 => 0\nend\n", ws)


def test_workspace_rules():
    ws = workspace()
    with pytest.raises(DuplicateEntry):
        ws.load_text((FIXTURES / "c4.lat").read_text())
    ws.load_text((FIXTURES / "r_nonmono.map").read_text())
    assert "r_nonmono" in ws.raw_maps and "r_nonmono" not in ws.maps
    ws.load_text((FIXTURES / "r.map").read_text())
    assert "r" in ws.maps
    with pytest.raises(LatticeSyntaxError):
        ws.load_text("graph G\n")


def test_extended_operator_names_serialize(C3):
    op = canonical_meet(C3, "min^E")
    ws = Workspace()
    ws.add_lattice(C3)
    assert parse_operator(serialize_operator(op), ws) == op
