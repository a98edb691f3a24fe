import sys

import pytest

from heckemock.context import PrecisionContext


@pytest.fixture
def fast_ctx():
    """Lower-precision context for quick numeric unit tests."""
    return PrecisionContext(work_precision=30, c_max=2000)


@pytest.fixture(autouse=True)
def high_precision_arithmetic():
    """Compare results at more digits than mpmath's default 15."""
    import mpmath

    with mpmath.workdps(70):
        yield


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion that ran."""
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "SUMMARY", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
