import sys

import pytest

from tiltlab import quiver as qv


@pytest.fixture(autouse=True)
def _sequential(monkeypatch):
    monkeypatch.setenv("TILTLAB_THREADS", "0")


@pytest.fixture
def Q():
    """1 -> 2 -> 3 <- 4, the A4 example quiver."""
    return qv.validate([1, 2, 3, 4], [(1, 2), (2, 3), (4, 3)])


@pytest.fixture
def Qp():
    return qv.validate([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def A3():
    return qv.linear_a(3)


@pytest.fixture
def A2():
    return qv.linear_a(2)


def all_test_quivers():
    out = []
    for fam, n in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4)]:
        out.extend(qv.orientations(qv.DynkinType(fam, n)))
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
