import pytest

from quivercone import Quiver, loop_quiver, subspace_quiver
from quivercone.battery import battery

_ACCEPTANCE_LINES = []


@pytest.fixture
def a2():
    return Quiver(("1", "2"), (("1", "2"),))


@pytest.fixture
def a3():
    return Quiver(("1", "2", "3"), (("1", "2"), ("2", "3")))


@pytest.fixture
def kronecker():
    return Quiver(("1", "2"), (("1", "2"), ("1", "2")))


@pytest.fixture
def loop1():
    return loop_quiver(1)


@pytest.fixture
def loop2():
    return loop_quiver(2)


@pytest.fixture
def subspace2():
    return subspace_quiver(2)


@pytest.fixture(scope="session")
def full_battery():
    return list(battery(max_total=6))


@pytest.fixture(scope="session")
def report():
    """Collect one summary line per acceptance criterion."""

    def add(criterion, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{status}] criterion {criterion}: {detail}")

    return add


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
