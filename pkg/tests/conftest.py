import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from corpus import gentle_example, three_vertex, z2_abab  # noqa: E402


@pytest.fixture
def z2():
    return z2_abab()


@pytest.fixture
def three():
    return three_vertex()


@pytest.fixture
def gentle():
    return gentle_example()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
