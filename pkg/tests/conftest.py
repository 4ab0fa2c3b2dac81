import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from acbsoliton.builtin import builtin_example  # noqa: E402
from acbsoliton.curvature import compute_pack  # noqa: E402


@pytest.fixture(scope="session")
def sasaki():
    m = builtin_example("sasaki5")
    return m, compute_pack(m)


@pytest.fixture(scope="session")
def f5():
    m = builtin_example("f5dim3")
    return m, compute_pack(m)


@pytest.fixture(scope="session")
def flat():
    m = builtin_example("flat3")
    return m, compute_pack(m)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
