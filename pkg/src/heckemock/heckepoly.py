"""Hecke polynomials F_m(x) attached to the mock modular form M_Delta.

Two independent constructions:

* :func:`hecke_poly_f` -- the closed formula in terms of psi_m, tau(m),
  sigma_9 and sigma_11 (pure integer arithmetic, the production path);
* :func:`hecke_poly_f_oracle` -- the route through the q-expansion: apply
  T_{-10}(m) to the principal part of M_Delta with a_Delta(-1), a_Delta(0)
  kept symbolic, multiply by E_10, and expand in the psi basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .context import DEFAULT_CONTEXT, PrecisionContext
from .faber import faber_psi, faber_psi_range, reduce_to_j_polynomial
from .polynomial import Poly
from .qseries import QSeries, bernoulli, divisors, eisenstein, sigma, tau

FACT11 = math.factorial(11)

#: a_Delta(-1) and a_Delta(0): the principal part of M_Delta
A_MINUS1 = FACT11
A_ZERO = 24 * FACT11 / bernoulli(12)  # = -2615348736000/691


def _require_m(m: int):
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"m must be >= 2 (got {m!r})")


def integrality_witness(m: int) -> tuple[int, bool]:
    """Numerator 247944 tau(m) - 65520 sigma_11(m) and whether 691 divides it."""
    _require_m(m)
    num = 247944 * tau(m) - 65520 * sigma(11, m)
    return num, num % 691 == 0


def hecke_poly_f(m: int, ctx: PrecisionContext | None = None) -> Poly:
    """F_m(x) from the closed formula in the psi_n basis."""
    _require_m(m)
    t = tau(m, ctx) if ctx is not None else tau(m)
    num, divisible = integrality_witness(m)
    if not divisible:
        raise ArithmeticError(f"constant term of F_{m} is not integral: {num}/691")
    psi = faber_psi_range(m)
    const = num // 691 - 264 * sigma(9, m)
    out = psi[m] + const
    for l in range(1, m - 1):
        out = out - psi[m - l] * (264 * sigma(9, l))
    out = out - psi[1] * (t + 264 * sigma(9, m - 1))
    if not out.is_integral():
        raise ArithmeticError(f"F_{m} came out non-integral: {out}")
    return out


def hecke_poly_f_full_range(m: int, ctx: PrecisionContext | None = None) -> Poly:
    """F_m(x) with the sigma_9 convolution running over 1 <= l <= m.

    psi_m - 264 sum_{l<=m} sigma_9(l) psi_{m-l} + (a_0/11!)(sigma_11(m) - tau(m))
    - tau(m)(psi_1 - 264), with a_0/11! = 24/B_12 = -65520/691.  Must equal
    :func:`hecke_poly_f`, whose sum stops at m - 2.
    """
    _require_m(m)
    t = tau(m, ctx) if ctx is not None else tau(m)
    psi = faber_psi_range(m)
    a0 = A_ZERO / FACT11
    out = psi[m] + a0 * (sigma(11, m) - t) + 264 * t - psi[1] * t
    for l in range(1, m + 1):
        out = out - psi[m - l] * (264 * sigma(9, l))
    return out


# --- symbolic route ---------------------------------------------------------


@dataclass(frozen=True)
class SymbolicLaurent:
    """Laurent polynomial in q whose coefficients are  a * A_{-1} + b * A_0.

    ``terms`` maps exponent -> (a, b) with exact rationals.
    """

    terms: tuple[tuple[int, Fraction, Fraction], ...]

    @classmethod
    def from_dict(cls, d: dict[int, tuple[Fraction, Fraction]]) -> SymbolicLaurent:
        items = tuple(sorted((e, Fraction(a), Fraction(b)) for e, (a, b) in d.items() if a or b))
        return cls(items)

    def as_dict(self) -> dict[int, tuple[Fraction, Fraction]]:
        return {e: (a, b) for e, a, b in self.terms}

    def __sub__(self, other: SymbolicLaurent) -> SymbolicLaurent:
        d = self.as_dict()
        for e, (a, b) in other.as_dict().items():
            a0, b0 = d.get(e, (Fraction(0), Fraction(0)))
            d[e] = (a0 - a, b0 - b)
        return SymbolicLaurent.from_dict(d)

    def scale(self, c) -> SymbolicLaurent:
        return SymbolicLaurent.from_dict({e: (a * c, b * c) for e, a, b in self.terms})

    def substitute(self, a_minus1, a_zero, truncation: int = 1) -> QSeries:
        """Plug in numbers for the symbols; the result is known below q^truncation."""
        d = {e: a * a_minus1 + b * a_zero for e, a, b in self.terms}
        return QSeries.from_dict(d, truncation)

    def components(self, truncation: int = 1) -> tuple[QSeries, QSeries]:
        """The A_{-1} and A_0 coefficient series separately."""
        return (
            QSeries.from_dict({e: a for e, a, _ in self.terms}, truncation),
            QSeries.from_dict({e: b for e, _, b in self.terms}, truncation),
        )


def _m_delta_principal(idx: int) -> tuple[int, int]:
    """a_Delta(idx) for idx <= 0 as (coefficient of A_{-1}, coefficient of A_0)."""
    if idx == -1:
        return (1, 0)
    if idx == 0:
        return (0, 1)
    return (0, 0)


def hecke_image_m_delta_symbolic(m: int, ctx: PrecisionContext | None = None) -> SymbolicLaurent:
    """m^11 (M_Delta | T_{-10}(m)) through q^0, with a_Delta(-1), a_Delta(0) symbolic.

    Brute force over all n <= 0 and d | (m, n): the q^n coefficient is
    m^11 * sum d^-11 a_Delta(mn/d^2), and only mn/d^2 in {-1, 0} survive.
    """
    if m < 1:
        raise ValueError("m must be positive")
    out: dict[int, tuple[Fraction, Fraction]] = {}
    for n in range(-m * m, 1):
        g = math.gcd(m, n) if n else m
        a = b = Fraction(0)
        for d in divisors(g):
            idx = m * n // (d * d)
            ca, cb = _m_delta_principal(idx)
            if ca or cb:
                w = Fraction(m**11, d**11)
                a += ca * w
                b += cb * w
        if a or b:
            out[n] = (a, b)
    return SymbolicLaurent.from_dict(out)


def hecke_combination_symbolic(m: int, ctx: PrecisionContext | None = None) -> SymbolicLaurent:
    """Principal part and constant of m^11 M_Delta | T_{-10}(m) - tau(m) M_Delta."""
    t = tau(m, ctx) if ctx is not None else tau(m)
    base = SymbolicLaurent.from_dict({-1: (Fraction(1), Fraction(0)), 0: (Fraction(0), Fraction(1))})
    return hecke_image_m_delta_symbolic(m, ctx) - base.scale(t)


def hecke_combination_times_e10(m: int, ctx: PrecisionContext | None = None) -> QSeries:
    """E_10 * (m^11 M_Delta|T_{-10}(m) - tau(m) M_Delta) / 11!, known below q^1."""
    comb = hecke_combination_symbolic(m, ctx)
    e10 = eisenstein(10, N=m + 2)
    am1, a0 = comb.components(truncation=1)
    # keep A_{-1}, A_0 apart until the end
    lhs = (e10 * am1).scale(A_MINUS1) + (e10 * a0).scale(A_ZERO)
    return lhs.truncate(1).scale(Fraction(1, FACT11))


def hecke_poly_f_oracle(m: int, ctx: PrecisionContext | None = None) -> Poly:
    """F_m(x) rebuilt from the q-expansion of the Hecke combination."""
    _require_m(m)
    g = hecke_combination_times_e10(m, ctx)
    poly = reduce_to_j_polynomial(g)
    if not poly.is_integral():
        raise ArithmeticError(f"oracle F_{m} is not integral: {poly}")
    return poly


@dataclass(frozen=True)
class HeckePolyReport:
    m: int
    poly: Poly
    oracle_poly: Poly
    agree: bool
    endpoint_zeros: tuple[bool, bool]
    ranges_agree: bool = True

    @property
    def ok(self) -> bool:
        return (
            self.agree
            and self.ranges_agree
            and all(self.endpoint_zeros)
            and self.poly.is_monic()
            and self.poly.degree == self.m
            and self.poly.is_integral()
        )


def hecke_poly_report(m: int, ctx: PrecisionContext | None = None) -> HeckePolyReport:
    f = hecke_poly_f(m, ctx)
    o = hecke_poly_f_oracle(m, ctx)
    return HeckePolyReport(
        m, f, o, f == o, (f(0) == 0, f(1728) == 0), f == hecke_poly_f_full_range(m, ctx)
    )
