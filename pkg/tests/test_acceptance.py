"""The thirteen acceptance criteria at their stated tolerances.

Each test records a one-line PASS/FAIL summary; the lines are printed
together at the end of the session (see conftest.py).
"""

import mpmath
import pytest

from heckemock import analytic, checks
from heckemock.qseries import tau

SUMMARY: list[str] = []


def record(result, limit=None):
    line = result.line()
    if limit is not None and result.seconds > limit:
        line += f" [runtime target {limit:.0f}s exceeded]"
    SUMMARY.append(line)
    print(line)
    assert result.passed, line
    if limit is not None:
        assert result.seconds < limit, line


def test_01_faber_polynomials():
    record(checks.check_faber(40), limit=10)


def test_02_hecke_polynomial_examples():
    record(checks.check_examples())


def test_03_theorem1_consistency():
    record(checks.check_theorem1(64), limit=60)


@pytest.mark.slow
def test_04_theorem2_certification():
    record(checks.check_theorem2(64), limit=600)


def test_05_mock_coefficients():
    record(checks.check_mock_coefficients(rel_tol=1e-4))


def test_06_beta():
    record(checks.check_beta(tol=5e-6))


def test_07_epstein_constant():
    record(checks.check_epstein(100))


@pytest.mark.slow
def test_08_f_bound():
    record(checks.check_f_bound((3, 5, 10), grid=50))


def test_09_whittaker_bound():
    record(checks.check_m_bound(100))


def test_10_deligne_bound():
    record(checks.check_deligne(63))


def test_11_shadow_proportionality():
    res = checks.check_shadow((1, 2, 3, 4))
    # the ratio with the n^{11/2} scaling taken literally is not constant;
    # report it so the substitution is visible next to the result
    with mpmath.workdps(30):
        literal = [
            analytic.shadow_coefficient(1, n).value * mpmath.mpf(n) ** 5.5 / tau(n) for n in (1, 2, 3, 4)
        ]
    res.detail += "; c^-(1,n) n^(11/2)/tau(n) = " + ", ".join(mpmath.nstr(v, 5) for v in literal)
    assert max(literal) / min(literal) > 10
    record(res)


@pytest.mark.slow
def test_12_equidistribution_trend():
    record(checks.check_equidistribution((10, 20, 50, 100)))


def test_13_rankin_swinnerton_dyer():
    record(checks.check_rankin_swinnerton_dyer((4, 6, 8, 10, 12, 14)))
