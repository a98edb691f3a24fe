from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckemock.context import PrecisionContext
from heckemock.qseries import (
    QSeries,
    TruncationError,
    bernoulli,
    delta,
    divisors,
    eisenstein,
    hecke_holomorphic,
    jfunction,
    sigma,
    tau,
)


def product_delta(N):
    """q prod (1 - q^n)^24 by direct multiplication, independent of the Eisenstein route."""
    coeffs = [0] * N
    coeffs[0] = 1
    for n in range(1, N):
        for _ in range(24):
            for e in range(N - 1, n - 1, -1):
                coeffs[e] -= coeffs[e - n]
    return [0] + coeffs[: N - 1]


def test_delta_matches_product_formula():
    d = delta(N=30)
    ref = product_delta(30)
    assert [int(d[e]) for e in range(30)] == ref


def test_tau_small_values():
    assert [tau(n) for n in range(1, 7)] == [1, -24, 252, -1472, 4830, -6048]


def test_tau_multiplicative():
    assert tau(6) == tau(2) * tau(3)
    assert tau(4) == tau(2) ** 2 - 2**11


def test_eisenstein_normalization():
    assert eisenstein(4, N=3).coeffs() == [1, 240, 2160]
    assert eisenstein(6, N=3).coeffs() == [1, -504, -16632]
    assert eisenstein(10, N=2)[1] == -264
    assert eisenstein(12, N=2)[1] == Fraction(65520, 691)


def test_j_coefficients():
    j = jfunction(N=4)
    assert [j[e] for e in range(-1, 4)] == [1, 744, 196884, 21493760, 864299970]


def test_j_is_e4_cubed_over_delta():
    N = 20
    assert (eisenstein(4, N=N) ** 3 / delta(N=N + 2)).agrees_with(jfunction(N=N))


def test_bernoulli():
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(2) == Fraction(1, 6)
    with pytest.raises(ValueError):
        bernoulli(3)


def test_divisors_and_sigma():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert sigma(0, 12) == 6
    assert sigma(9, 2) == 513


def test_hecke_eigenform_delta():
    d = delta(N=40)
    for m in (2, 3, 5):
        img = hecke_holomorphic(d, 12, m, (40 - 1) // m + 1)
        t = tau(m)
        assert all(img[n] == t * d[n] for n in range(img.truncation))


def test_hecke_needs_enough_input():
    with pytest.raises(TruncationError):
        hecke_holomorphic(delta(N=10), 12, 3, 10)


def test_unknown_coefficient_raises():
    with pytest.raises(TruncationError):
        delta(N=5)[5]


def test_tau_respects_context():
    with pytest.raises(TruncationError):
        tau(70, PrecisionContext(series_order=64))


def test_product_truncation_rule():
    a = QSeries(-1, [1, 2, 3], 2)  # known below q^2, valuation -1
    b = QSeries(0, [1, 1, 1, 1], 4)  # known below q^4, valuation 0
    assert (a * b).truncation == min(2 + 0, 4 - 1)


def test_inverse_truncation_rule():
    a = QSeries(2, [1, 5, 7], 5)
    inv = a.inverse()
    assert inv.start == -2 and inv.truncation == 5 - 2 * 2


def test_inverse_of_zero_series():
    with pytest.raises(ZeroDivisionError):
        QSeries(0, [0, 0], 2).inverse()


small_ints = st.integers(min_value=-50, max_value=50)


@st.composite
def series(draw, unit=False):
    start = draw(st.integers(min_value=-2, max_value=2))
    cs = draw(st.lists(small_ints, min_size=1, max_size=8))
    if unit and cs[0] == 0:
        cs[0] = 1
    return QSeries(start, cs)


@given(series(), series(), series())
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert (a * b).agrees_with(b * a)
    assert ((a * b) * c).agrees_with(a * (b * c))
    assert (a * (b + c)).agrees_with(a * b + a * c)


@given(series(unit=True))
@settings(max_examples=60, deadline=None)
def test_inverse_property(a):
    one = a * a.inverse()
    for e, c in one.items():
        assert c == (1 if e == 0 else 0)


@given(series(), st.integers(min_value=0, max_value=4))
@settings(max_examples=40, deadline=None)
def test_power_matches_repeated_product(a, e):
    p = QSeries.constant(1, 50)
    for _ in range(e):
        p = p * a
    assert (a**e).agrees_with(p)


def test_evaluate():
    s = QSeries(-1, [1, 2, 3])
    assert s.evaluate(Fraction(1, 2)) == 2 + 2 + Fraction(3, 2)
