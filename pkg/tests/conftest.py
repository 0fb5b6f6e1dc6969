from pathlib import Path

import pytest

from quasiext import build_lattice, make_retraction_pair

FIXTURES = Path(__file__).parent / "fixtures"


def c4():
    return build_lattice("C4", ["0", "a", "b", "1"], "0", "1", [("0", "a"), ("a", "b"), ("b", "1")])


def c3():
    return build_lattice("C3", ["0", "m", "1"], "0", "1", [("0", "m"), ("m", "1")])


def b2():
    return build_lattice("B2", ["0", "p", "q", "1"], "0", "1",
                         [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])


R_CANON = {"0": "0", "a": "m", "b": "m", "1": "1"}
S_CANON = {"0": "0", "m": "a", "1": "1"}


@pytest.fixture
def C4():
    return c4()


@pytest.fixture
def C3():
    return c3()


@pytest.fixture
def B2():
    return b2()


@pytest.fixture
def canonical_pair(C4, C3):
    return make_retraction_pair(C4, C3, R_CANON, S_CANON)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                name = rep.nodeid.split("::test_criterion_", 1)[1]
                num, _, label = name.partition("_")
                lines.append((int(num), f"criterion {num} ({label}): {'PASS' if outcome == 'passed' else 'FAIL'}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
