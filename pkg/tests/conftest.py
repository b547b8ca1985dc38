import pytest

from stablepd.ideal import MonomialIdeal
from stablepd.ring import Ring


@pytest.fixture
def xyz():
    return Ring.parse("x,y,z")


@pytest.fixture
def r4():
    return Ring.standard(4)


def ideal(ring: Ring, *gens: str) -> MonomialIdeal:
    return MonomialIdeal(ring, tuple(ring.monomial(g) for g in gens))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
