import pytest

from immregions.core import ImmersionData
from immregions.oracle import Bounds, random_trace
from immregions.verifier import replay


def D(black, white, chi, n):
    return ImmersionData.of(black, white, chi, n)


SMALL = Bounds(max_k=3, max_count=3, max_n=4, min_chi=-8, max_trace_len=12)


def random_state(seed, bounds=SMALL):
    return replay(random_trace(seed, bounds))


@pytest.fixture
def boy_data():
    return D({0: 1}, {0: 1}, 1, 1)


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
