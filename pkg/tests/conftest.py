import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from slipcheck import MonomialOrder, PolyRing  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def R3():
    return PolyRing.standard(3)


@pytest.fixture
def R4():
    return PolyRing.standard(4)


@pytest.fixture
def lex3():
    return MonomialOrder.lex(3)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.RESULTS
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines, key=lambda k: int(k[2:])):
        terminalreporter.write_line(lines[key])
