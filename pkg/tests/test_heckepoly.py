import pytest

from heckemock.heckepoly import (
    A_ZERO,
    hecke_poly_f,
    hecke_poly_f_full_range,
    hecke_poly_f_oracle,
    hecke_poly_report,
    integrality_witness,
)
from heckemock.polynomial import Poly

X = Poly.x()


@pytest.mark.parametrize(
    "m,expected",
    [
        (2, X * (X - 1728)),
        (3, X * (X - 768) * (X - 1728)),
        (4, X * Poly([374760, -1512, 1]) * (X - 1728)),
        (5, X * Poly([-149109760, 1302804, -2256, 1]) * (X - 1728)),
    ],
)
def test_published_examples(m, expected):
    assert hecke_poly_f(m) == expected


def test_a_zero():
    from fractions import Fraction

    assert A_ZERO == Fraction(-2615348736000, 691)


def test_integrality_witness_m2():
    num, ok = integrality_witness(2)
    assert num == -140201136
    assert ok


@pytest.mark.parametrize("m", [2, 3, 7, 12, 20])
def test_oracle_and_sum_ranges(m):
    f = hecke_poly_f(m)
    assert f == hecke_poly_f_oracle(m)
    assert f == hecke_poly_f_full_range(m)


def test_report_properties():
    rep = hecke_poly_report(9)
    assert rep.ok and rep.poly.degree == 9 and rep.poly.is_monic()


def test_m_below_two_rejected():
    with pytest.raises(ValueError):
        hecke_poly_f(1)
