from fractions import Fraction

import pytest

from heckemock.context import PrecisionContext
from heckemock.faber import (
    divisor_polynomial,
    evaluate_poly_at_series,
    faber_psi,
    faber_via_generating,
    h_k,
    hecke_image_j1,
    m_exp,
    reduce_to_j_polynomial,
)
from heckemock.polynomial import Poly
from heckemock.qseries import QSeries, TruncationError, delta, eisenstein, jfunction

X = Poly.x()


def test_published_psi():
    assert faber_psi(0) == Poly([1])
    assert faber_psi(1) == X - 744
    assert faber_psi(2) == Poly([159768, -1488, 1])
    assert faber_psi(3) == Poly([-36866976, 1069956, -2232, 1])


def test_psi_principal_part():
    j = jfunction(N=12)
    for m in range(1, 8):
        s = evaluate_poly_at_series(faber_psi(m), j)
        for e, c in s.items():
            if e <= 0:
                assert c == (1 if e == -m else 0), (m, e)


def test_psi_first_coefficients():
    j = jfunction(N=6)
    assert evaluate_poly_at_series(faber_psi(2), j)[1] == 42987520
    assert evaluate_poly_at_series(faber_psi(3), j)[1] == 2592899910


def test_generating_function_agrees():
    gen = faber_via_generating(20)
    assert all(gen[m] == faber_psi(m) for m in range(21))


def test_generating_function_needs_order():
    with pytest.raises(TruncationError):
        faber_via_generating(70, PrecisionContext(series_order=64))


def test_hecke_image_is_psi():
    ctx = PrecisionContext(series_order=200)
    j = jfunction(N=40)
    for m in range(2, 8):
        img = hecke_image_j1(m, ctx, n_out=5)
        psi = evaluate_poly_at_series(faber_psi(m), j)
        assert img.agrees_with(psi), m


def test_negative_m_rejected():
    with pytest.raises(ValueError):
        faber_psi(-1)


def test_m_exp_and_h_k():
    assert [m_exp(k) for k in (4, 12, 14, 24, 26)] == [0, 1, 0, 2, 1]
    assert h_k(10) == X * (X - 1728)
    with pytest.raises(ValueError):
        m_exp(5)


@pytest.mark.parametrize(
    "k,expected",
    [
        (4, X),
        (6, X - 1728),
        (8, X * X),
        (10, X * X - 1728 * X),
        (12, X - Fraction(432000, 691)),
        (14, X * X * (X - 1728)),
    ],
)
def test_eisenstein_divisor_polynomials(k, expected):
    assert divisor_polynomial(eisenstein(k, N=30), k) == expected


def test_delta_divisor_polynomial():
    assert divisor_polynomial(delta(N=30), 12) == Poly([1])


def test_reduce_rejects_non_modular():
    bad = jfunction(N=10) + QSeries.monomial(1, 10)
    with pytest.raises(ValueError):
        reduce_to_j_polynomial(bad)
