import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckemock import analytic as A
from heckemock.context import PrecisionContext
from heckemock.qseries import tau

FACT11 = math.factorial(11)


def brute_kloosterman(m, n, c):
    s = 0
    for v in range(c):
        if math.gcd(v, c) == 1:
            vb = pow(v, -1, c) if c > 1 else 0
            s += cmath.exp(2j * math.pi * (m * vb + n * v) / c)
    return s


@pytest.mark.parametrize("m,n,c,expected", [(1, 1, 1, 1), (1, 1, 2, 1), (1, 1, 3, -1)])
def test_kloosterman_examples(m, n, c, expected):
    assert abs(A.kloosterman(m, n, c) - expected) < 1e-50


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 50))
@settings(max_examples=80, deadline=None)
def test_kloosterman_against_complex_sum(m, n, c):
    ref = brute_kloosterman(m, n, c)
    assert abs(ref.imag) < 1e-9
    assert abs(float(A.kloosterman(m, n, c)) - ref.real) < 1e-9
    assert abs(A.kloosterman(m, n, c) - A.kloosterman(n, m, c)) < mpmath.mpf(10) ** -50


def test_kloosterman_float_path_matches():
    for c in (97, 360, 1001):
        assert abs(A._kloosterman_float(-3, 7, c) - float(A.kloosterman(-3, 7, c))) < 1e-11


def test_ramanujan_sum():
    for c in range(1, 40):
        for m in (1, 2, 6, 12):
            assert abs(A.ramanujan_sum(c, m) - A.kloosterman(m, 0, c)) < 1e-40


@pytest.mark.parametrize("x", ["0.001", "1", "7.5", "40", "250"])
def test_bessel_against_mpmath(x):
    ctx = PrecisionContext(work_precision=60)
    with mpmath.workdps(120):
        ri = mpmath.besseli(11, mpmath.mpf(x))
        rj = mpmath.besselj(11, mpmath.mpf(x))
    tol = mpmath.mpf(10) ** (1 - 60 // 2)
    assert abs(A.bessel_i(11, x, ctx) / ri - 1) < tol
    assert abs(A.bessel_j(11, x, ctx) / rj - 1) < tol


def test_bessel_at_zero():
    assert A.bessel_i(11, 0) == 0 and A.bessel_j(11, 0) == 0
    assert A.bessel_j(0, 0) == 1


def test_bessel_i_first_term():
    lead = mpmath.mpf(1) / 2**11 / FACT11
    assert abs(A.bessel_i(11, 1) / lead - (1 + mpmath.mpf(1) / 48)) < 1e-3


def test_trunc_exp():
    assert A.trunc_exp(0, 5) == 1
    assert A.trunc_exp(2, 1) == mpmath.mpf("2.5")
    assert A.trunc_exp(10, 0) == 1


def test_incomplete_gamma():
    assert abs(A.incomplete_gamma(1, 2) - mpmath.exp(-2)) < 1e-50
    assert A.incomplete_gamma(5, 0) == 24
    with mpmath.workdps(80):
        ref = mpmath.quad(lambda t: mpmath.exp(-t) * t**10, [1, 20, 60, mpmath.inf])
    assert abs(A.incomplete_gamma(11, 1) / ref - 1) < 1e-40


def test_whittaker_against_mpmath():
    for x in ("0.01", "0.9", "1", "3", "25"):
        with mpmath.workdps(80):
            ref = mpmath.whitm(5, mpmath.mpf(11) / 2, mpmath.mpf(x))
        assert abs(A.whittaker_m(5, x) / ref - 1) < 1e-40


def test_whittaker_small_x():
    assert A.whittaker_m(5, 0) == 0
    with mpmath.workdps(80):
        tail = mpmath.nsum(lambda n: 1 / mpmath.factorial(n), [11, mpmath.inf])
        ref = FACT11 * mpmath.exp(-mpmath.mpf(1) / 2) * tail
    assert abs(A.whittaker_m(5, 1) / ref - 1) < 1e-40


def test_whittaker_bound_spot():
    for x in (0.1, 1, 10):
        assert A.whittaker_m(5, x) <= mpmath.exp(mpmath.mpf(x) / 2) * mpmath.mpf(x) ** 6


def test_a_delta_published(fast_ctx):
    ref = mpmath.mpf("-73562460235.68364")
    assert abs(A.a_delta(1, fast_ctx).value / ref - 1) < 1e-14


def test_holomorphic_coefficient_normalization(fast_ctx):
    for n in (1, 2):
        a = A.a_delta(n, fast_ctx)
        c = A.holo_coefficient_p(-10, 1, n, fast_ctx)
        assert abs(FACT11 * c.value - a.value) <= FACT11 * c.tail_estimate + a.tail_estimate + 1e-15 * abs(a.value)


def test_constant_term(fast_ctx):
    c1 = A.constant_term_p(-10, 1, fast_ctx)
    assert abs(FACT11 * c1.value / (-mpmath.mpf(2615348736000) / 691) - 1) < 1e-3
    for m in (2, 3, 4):
        cm = A.constant_term_p(-10, m, fast_ctx)
        r = cm.value / c1.value
        slack = (cm.tail_estimate / abs(cm.value) + c1.tail_estimate / abs(c1.value)) * 2
        assert abs(r / A.sigma(11, m) - 1) <= slack + 1e-14


def test_beta_and_shadow(fast_ctx):
    b = A.beta_delta(fast_ctx)
    assert abs(b.value - mpmath.mpf("2.840287")) < 1e-6
    s = A.shadow_coefficient(1, 1, fast_ctx)
    assert abs(1 + s.value - b.value) < 1e-25


def test_beta_cmax_doubling():
    a = A.beta_delta(PrecisionContext(c_max=300), rel_tol=1e-40)
    b = A.beta_delta(PrecisionContext(c_max=600), rel_tol=1e-40)
    assert abs(a.value - b.value) < 1e-6
    assert abs(a.value - b.value) <= a.tail_estimate


def test_shadow_swap_symmetry(fast_ctx):
    for m, n in ((1, 2), (2, 3), (1, 4)):
        x = A.shadow_coefficient(m, n, fast_ctx).value * (mpmath.mpf(n) / m) ** 5.5
        y = A.shadow_coefficient(n, m, fast_ctx).value * (mpmath.mpf(m) / n) ** 5.5
        assert abs(x - y) < 1e-20


def test_shadow_ratio_constant(fast_ctx):
    r = [A.shadow_ratio(n, fast_ctx).value for n in (1, 2, 3)]
    assert max(abs(x - r[0]) for x in r) < 1e-12


def test_hecke_eigen_residuals(fast_ctx):
    for m in (2, 3):
        res = A.hecke_eigen_residuals(m, 3, fast_ctx)
        assert all(r.ok for r in res), [r for r in res if not r.ok]


def test_g_m_endpoints():
    for m in (1, 3, 10):
        assert abs(A.g_m(m, mpmath.pi / 2) - 5 * mpmath.pi / 2) < 1e-50
        assert abs(A.g_m(m, mpmath.pi / 3) - (5 * mpmath.pi / 3 + mpmath.pi * m)) < 1e-50


@given(st.integers(1, 30), st.floats(0.0, 1.0))
@settings(max_examples=30, deadline=None)
def test_g_m_inverse_round_trip(m, t):
    theta = mpmath.pi / 3 + (mpmath.pi / 6) * t
    back = A.g_m_inverse(m, A.g_m(m, theta))
    assert abs(back - theta) < 1e-29


def test_g_m_inverse_range():
    with pytest.raises(ValueError):
        A.g_m_inverse(3, 0)


def test_f_m_values():
    assert abs(A.f_m(3, mpmath.pi / 2)) < 1e-40
    m = 7
    for l in range(3, m + 1):
        th = A.g_m_inverse(m, mpmath.pi * l)
        v = A.f_m(m, th)
        assert abs(v) >= 1.98 * FACT11
        assert (v > 0) == (l % 2 == 0)


def test_damping_factor():
    for m in (3, 10):
        for t in (0, 0.5, 1):
            assert A.damping(m, mpmath.pi / 3 + t * mpmath.pi / 6) >= 0.99


def test_r_is_real_after_rotation(fast_ctx):
    for th in (1.1, 1.3, 1.5):
        r = A.r_eval(th, fast_ctx)
        w = mpmath.expj(-5 * mpmath.mpf(th)) * r.value
        assert abs(w.imag) <= r.tail_estimate + 1e-8
        assert abs(r.value) <= 2.10e11


def test_f_bound_single_point(fast_ctx):
    (rep,) = A.check_f_bound(3, 1, fast_ctx)
    assert abs(rep.theta - mpmath.pi / 2) < 1e-25
    assert rep.passed and rep.lhs < 0.9 * FACT11


def test_f_bound_rejects_small_m():
    with pytest.raises(ValueError):
        A.check_f_bound(2, 5)


def test_epstein():
    e = A.epstein_zeta6(100)
    assert 6 < e.lower and e.upper <= 6.0099
    e2 = A.epstein_zeta6(200)
    assert abs(e.value - e2.value) < 1e-8


def test_deligne():
    assert A.deligne_check(63)
    assert 24**2 <= 4 * 2**11
    with pytest.raises(ValueError):
        A.deligne_check(70, PrecisionContext(series_order=64))
