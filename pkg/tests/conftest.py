import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bicliques import BipartiteGraph  # noqa: E402


def random_graph(rng: random.Random, n: int, lo: int = -5, hi: int = 9, inf_rate: float = 0.0) -> BipartiteGraph:
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            if inf_rate and rng.random() < inf_rate:
                row.append("inf")
            else:
                row.append(Fraction(rng.randint(lo, hi), rng.randint(1, 4)))
        rows.append(row)
    return BipartiteGraph(rows)


@pytest.fixture
def rng():
    return random.Random(20161014)


_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    if report.when == "setup" and report.passed:
        return
    _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, duration = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number} {status}  {title}  ({duration:.1f}s)")
