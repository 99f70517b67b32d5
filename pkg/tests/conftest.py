from __future__ import annotations

import json
import re
from collections import defaultdict
from pathlib import Path

import pytest

from liespecial import LieType

GOLDEN = Path(__file__).parent / "golden"

# Types exercised throughout the suite.
TEST_MATRIX = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]


def parse_alpha(text: str, rank: int) -> tuple[int, ...]:
    """``"a1+2a2+a3"`` -> ``(1, 2, 1)``; ``"0"`` -> zero vector."""
    out = [0] * rank
    if text.strip() == "0":
        return tuple(out)
    for term in text.replace(" ", "").split("+"):
        m = re.fullmatch(r"(\d*)a(\d+)", term)
        assert m, term
        out[int(m.group(2)) - 1] += int(m.group(1) or 1)
    return tuple(out)


def parse_sigma(text: str) -> tuple[int, ...]:
    """``"s1 s2"`` -> ``(1, 2)``; ``"1"`` (the identity) -> ``()``."""
    if text.strip() == "1":
        return ()
    return tuple(int(tok[1:]) for tok in text.split())


@pytest.fixture(scope="session")
def a3_golden():
    data = json.loads((GOLDEN / "a3_table.json").read_text())
    rows = [(parse_sigma(w), tuple(parse_alpha(g, 3) for g in gs)) for w, gs in data["rows"]]
    gamma = {int(k): {parse_alpha(g, 3) for g in v} for k, v in data["gamma"].items()}
    return rows, gamma


@pytest.fixture(params=TEST_MATRIX)
def lie_type(request) -> LieType:
    return LieType.parse(request.param)


# -- one summary line per acceptance criterion ------------------------------

_criteria: dict[int, list[tuple[str, str]]] = defaultdict(list)
_titles: dict[int, str] = {}


def pytest_runtest_logreport(report):
    n = _criterion_of.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[n].append((report.nodeid.split("::")[-1], report.outcome))


_criterion_of: dict[str, int] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            n = marker.args[0]
            _criterion_of[item.nodeid] = n
            if len(marker.args) > 1:
                _titles[n] = marker.args[1]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        failed = [name for name, outcome in results if outcome != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {n}: {status}  {_titles.get(n, '')}  ({len(results) - len(failed)}/{len(results)} checks passed)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
