import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from divnc.groups import build_group
from divnc.ncposet import build_poset


@pytest.fixture(scope="session")
def poset():
    cache = {}

    def get(label, m):
        if (label, m) not in cache:
            cache[label, m] = build_poset(build_group(label), m)
        return cache[label, m]

    return get


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_record():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
