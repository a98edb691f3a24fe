from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckemock import roots as R
from heckemock.heckepoly import hecke_poly_f
from heckemock.polynomial import Poly

X = Poly.x()


def test_sturm_counts():
    chain = R.SturmChain(X * (X - 1728))
    assert chain.total() == 2
    assert chain.count_closed(Fraction(0), Fraction(1728)) == 2
    # (lo, hi] excludes lo
    assert chain.count(Fraction(0), Fraction(1728)) == 1
    assert R.SturmChain(X - 768).count(Fraction(700), Fraction(800)) == 1
    assert R.SturmChain(X * X + 1).total() == 0


def test_isolation_of_quadratic():
    ivs = R.sturm_isolate(X * (X - 1728))
    assert len(ivs) == 2
    assert all(R.SturmChain(X * (X - 1728)).count(iv.lo, iv.hi) == 1 for iv in ivs)
    assert R.sturm_isolate(X * X + 1) == []


def test_squarefree_witness():
    res = R.is_squarefree((X - 1) * (X - 1))
    assert not res
    assert res.witness == X - 1 or res.witness == Poly([1, -1])
    assert R.is_squarefree(hecke_poly_f(4))
    with pytest.raises(ValueError, match="squarefree"):
        R.sturm_isolate((X - 1) * (X - 1) * (X + 2))


def test_squarefree_part():
    p = X * X * (X - 1728)
    assert R.squarefree_part(p) == X * (X - 1728)


def test_refine_known_roots():
    F3 = hecke_poly_f(3)
    tol = Fraction(1, 10**30)
    xs = [R.refine_root(F3, iv, tol) for iv in R.sturm_isolate(F3)]
    assert xs == [0, 768, 1728]
    F5 = hecke_poly_f(5)
    cubic = R.interior_factor(F5)
    for iv in R.sturm_isolate(cubic):
        x = R.refine_root(cubic, iv, tol)
        assert iv.lo <= x <= iv.hi
        # the cubic changes sign within tol of x
        a, b = cubic(x - tol), cubic(x + tol)
        assert a * b <= 0


def test_refine_rejects_non_bracket():
    with pytest.raises(ArithmeticError):
        R.refine_root(X - 5, R.IsolatingInterval(Fraction(6), Fraction(7)), Fraction(1, 100))


def test_angle_of_root_endpoints_and_round_trip():
    assert R.angle_of_root(0) == mpmath.pi / 3
    assert R.angle_of_root(1728) == mpmath.pi / 2
    th = R.angle_of_root(Fraction(768))
    assert abs(R.j_on_arc(th) - 768) < mpmath.mpf(10) ** -25
    thetas = [R.angle_of_root(x) for x in (100, 500, 1000, 1700)]
    assert thetas == sorted(thetas)
    with pytest.raises(ValueError):
        R.angle_of_root(1729)


@pytest.mark.parametrize("m", [2, 5, 9])
def test_verify_theorem2_small(m):
    cert = R.verify_theorem2(m)
    assert cert.passed, cert.failures
    assert cert.count_in_interval == m == cert.total_real
    if m >= 3:
        assert set(cert.cell_counts.values()) == {1}


def test_verify_theorem2_reports_bad_polynomial():
    cert = R.verify_theorem2(3, poly=X * (X - 1728) * (X - 2000))
    assert not cert.passed
    assert any("outside" in f or "expected" in f for f in cert.failures)


def test_grid_sign_changes_match_sturm():
    G = R.interior_factor(hecke_poly_f(8))
    n = R.sign_changes_on_grid(G, Fraction(0), Fraction(1728), 4000)
    assert n == R.SturmChain(G).count_closed(Fraction(0), Fraction(1728)) == 6


def test_hecke_roots_are_in_cells():
    recs = R.hecke_roots(7)
    assert len(recs) == 7
    assert [r.x for r in recs] == sorted(r.x for r in recs)
    assert sorted(r.index for r in recs[1:-1]) == list(range(3, 8))
    for r in recs:
        assert mpmath.pi / 3 <= r.theta <= mpmath.pi / 2


def test_star_discrepancy():
    assert R.star_discrepancy([0.5]) == 0.5
    assert R.star_discrepancy([0.25, 0.75]) == 0.25
    assert R.star_discrepancy([0.0, 1.0]) == 0.5
    with pytest.raises(ValueError):
        R.star_discrepancy([])


def test_equidistribution_small():
    rep = R.equidistribution(10)
    assert len(rep.normalized_positions) == 10
    assert all(0 <= u <= 1 for u in rep.normalized_positions)
    assert rep.star_discrepancy <= 5 / 10


@settings(max_examples=40, deadline=None)
@given(st.sets(st.fractions(min_value=-50, max_value=50, max_denominator=12), min_size=1, max_size=6))
def test_isolate_products_of_linear_factors(rs):
    p = Poly([1])
    for r in rs:
        p = p * Poly([-r, 1])
    ivs = R.sturm_isolate(p)
    assert len(ivs) == len(rs)
    for iv, r in zip(ivs, sorted(rs)):
        assert iv.lo < r <= iv.hi
        x = R.refine_root(p, iv, Fraction(1, 10**12))
        assert abs(x - r) < Fraction(1, 10**12)
