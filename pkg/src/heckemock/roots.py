"""Exact real-root isolation for integer polynomials and the zero certification of F_m.

Sturm chains are built with primitive pseudo-remainders over Z, so every
sign decision is exact.  Angles on the arc |tau| = 1 are recovered
numerically by bisection on j(e^{i theta}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath

from . import analytic
from .context import DEFAULT_CONTEXT, PrecisionContext
from .heckepoly import hecke_poly_f
from .polynomial import Poly
from .qseries import jfunction

# ---------------------------------------------------------------- Z[x] helpers
# Integer polynomials as lists, index = degree, no trailing zeros.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(a: list[int]) -> list[int]:
    g = _content(a)
    return [c // g for c in a] if g > 1 else list(a)


def _prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of a by b scaled by |lc(b)|^(deg a - deg b + 1) (sign preserving)."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    lc_abs = abs(lc)
    sgn = 1 if lc > 0 else -1
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        c = r[-1]
        # r <- |lc| * r - sgn * c * x^k * b, kills the top term
        r = [lc_abs * x for x in r]
        for i, bi in enumerate(b):
            r[i + k] -= sgn * c * bi
        r.pop()
        _trim(r)
    return r


def _derivative(a: Sequence[int]) -> list[int]:
    return [i * a[i] for i in range(1, len(a))]


def int_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd in Z[x] with positive leading coefficient."""
    a, b = _primitive(_trim(list(a))), _primitive(_trim(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r) if r else []
    if not a:
        return []
    a = _primitive(a)
    return a if a[-1] > 0 else [-c for c in a]


def _sign_at(a: Sequence[int], x: Fraction) -> int:
    """Sign of a(x) for rational x = n/d: the sign of sum a_i n^i d^(deg - i), by Horner."""
    if not a:
        return 0
    n, d = x.numerator, x.denominator
    acc = a[-1]
    if d == 1:
        for c in reversed(a[:-1]):
            acc = acc * n + c
    else:
        dp = 1
        for c in reversed(a[:-1]):
            dp *= d
            acc = acc * n + c * dp
    return (acc > 0) - (acc < 0)


def _as_int_list(p) -> list[int]:
    """Integer coefficients; rational input is scaled by a positive common denominator."""
    coeffs = [Fraction(c) for c in (p.coeffs if isinstance(p, Poly) else p)]
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return _trim([int(c * den) for c in coeffs])


# ------------------------------------------------------------------ squarefree


@dataclass(frozen=True)
class SquarefreeResult:
    squarefree: bool
    witness: Poly  # gcd(p, p')

    def __bool__(self):
        return self.squarefree


def is_squarefree(p) -> SquarefreeResult:
    """gcd(p, p') computed exactly over Z; p is squarefree iff it is constant."""
    a = _as_int_list(p)
    if len(a) <= 1:
        return SquarefreeResult(True, Poly([1]))
    g = int_gcd(a, _derivative(a))
    return SquarefreeResult(len(g) == 1, Poly(g))


def squarefree_part(p) -> Poly:
    """p / gcd(p, p'): same distinct roots, all simple."""
    a = _as_int_list(p)
    if len(a) <= 1:
        return Poly(a)
    g = int_gcd(a, _derivative(a))
    q, r = Poly(a).divmod(Poly(g))
    assert r.is_zero()
    return Poly(_primitive([int(c) for c in q.coeffs]))


# ---------------------------------------------------------------------- Sturm


class SturmChain:
    """Sturm sequence p, p', -rem(...), ... with primitive integer members."""

    def __init__(self, p):
        a = _as_int_list(p)
        if not a:
            raise ValueError("Sturm chain of the zero polynomial")
        chain = [a]
        if len(a) > 1:
            chain.append(_primitive(_derivative(a)))
            while len(chain[-1]) > 1:
                r = _prem(chain[-2], chain[-1])
                if not r:
                    break
                chain.append(_primitive([-c for c in r]))
        self.polys = chain

    @property
    def degree(self) -> int:
        return len(self.polys[0]) - 1

    def variations(self, x: Fraction) -> int:
        signs = [s for s in (_sign_at(q, x) for q in self.polys) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def _variations_inf(self, positive: bool) -> int:
        signs = []
        for q in self.polys:
            s = 1 if q[-1] > 0 else -1
            if not positive and (len(q) - 1) % 2:
                s = -s
            signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def count(self, lo: Fraction | None, hi: Fraction | None) -> int:
        """Distinct real roots in (lo, hi]; None means an infinite endpoint."""
        vlo = self._variations_inf(False) if lo is None else self.variations(Fraction(lo))
        vhi = self._variations_inf(True) if hi is None else self.variations(Fraction(hi))
        return vlo - vhi

    def count_closed(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in [lo, hi]."""
        lo = Fraction(lo)
        extra = 1 if _sign_at(self.polys[0], lo) == 0 else 0
        return self.count(lo, hi) + extra

    def total(self) -> int:
        return self.count(None, None)


def cauchy_bound(a: Sequence[int]) -> Fraction:
    """All roots have absolute value below 1 + max |a_i / a_n|."""
    lead = abs(a[-1])
    return 1 + Fraction(max((abs(c) for c in a[:-1]), default=0), lead)


@dataclass(frozen=True)
class IsolatingInterval:
    """Exactly one root in (lo, hi]; ``exact`` means hi itself is that root."""

    lo: Fraction
    hi: Fraction
    exact: bool = False

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def sturm_isolate(p, chain: SturmChain | None = None) -> list[IsolatingInterval]:
    """Disjoint rational intervals, one per real root, in increasing order.

    Non-squarefree input is rejected with the gcd(p, p') witness.
    """
    a = _as_int_list(p)
    sq = is_squarefree(a)
    if not sq:
        raise ValueError(f"polynomial is not squarefree; gcd(p, p') = {sq.witness}")
    if len(a) <= 1:
        return []
    chain = chain or SturmChain(a)
    B = cauchy_bound(a)
    out: list[IsolatingInterval] = []
    stack = [(-B, B, chain.count(-B, B))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_settle(a, chain, lo, hi))
            continue
        mid = (lo + hi) / 2
        n_left = chain.count(lo, mid)
        stack.append((mid, hi, n - n_left))
        stack.append((lo, mid, n_left))
    out.sort(key=lambda iv: iv.hi)
    return out


def _settle(a, chain: SturmChain, lo: Fraction, hi: Fraction) -> IsolatingInterval:
    """Tighten (lo, hi] until its endpoints are not roots, or flag an exact root at hi."""
    if _sign_at(a, hi) == 0:
        return IsolatingInterval(lo, hi, exact=True)
    while _sign_at(a, lo) == 0:
        mid = (lo + hi) / 2
        if _sign_at(a, mid) == 0:
            return IsolatingInterval(lo, mid, exact=True)
        if chain.count(mid, hi) == 1:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi)


def _mpf_fraction(x) -> Fraction:
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(int(man) * 2**exp) if exp >= 0 else Fraction(int(man), 2**-exp)


def _newton_guess(a: Sequence[int], lo: Fraction, hi: Fraction, tol: Fraction, dps: int):
    """High-precision Newton iteration from the bracket midpoint; None if it leaves the bracket."""
    with mpmath.workdps(dps):
        x = mpmath.mpf(_frac_mpf(lo + hi) / 2)
        flo, fhi = _frac_mpf(lo), _frac_mpf(hi)
        step_tol = _frac_mpf(tol) / 16
        for _ in range(200):
            val = der = mpmath.mpf(0)
            for c in reversed(a):
                der = der * x + val
                val = val * x + c
            if not der:
                return None
            step = val / der
            x -= step
            if not flo <= x <= fhi:
                return None
            if abs(step) < step_tol:
                return x
    return None


def _frac_mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def refine_root(p, interval: IsolatingInterval, tol) -> Fraction:
    """Shrink an isolating interval below width tol using exact signs only; return its midpoint.

    A high-precision Newton step proposes a bracket of width tol/2 around its
    estimate, accepted only if p has opposite exact signs at its ends;
    otherwise plain bisection runs to completion.
    """
    a = _as_int_list(p)
    if interval.exact:
        return interval.hi
    lo, hi = interval.lo, interval.hi
    slo, shi = _sign_at(a, lo), _sign_at(a, hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise ArithmeticError(
            f"interval ({lo}, {hi}] does not bracket a sign change (signs {slo}, {shi})"
        )
    tol = Fraction(tol)
    if hi - lo < tol:
        return (lo + hi) / 2
    digits = max(len(str(abs(c))) for c in a) + 2 * len(a)
    tol_digits = -math.floor(math.log10(tol)) if tol < 1 else 0
    for extra in (0, digits):
        guess = _newton_guess(a, lo, hi, tol, digits + tol_digits + 20 + extra)
        if guess is None:
            continue
        x = _mpf_fraction(guess)
        # round to a short dyadic so later exact work stays cheap
        k = max(tol_digits * 4 + 8, 8)
        x = Fraction(round(x * 2**k), 2**k)
        l2, h2 = x - tol / 4, x + tol / 4
        if lo <= l2 and h2 <= hi:
            s2, t2 = _sign_at(a, l2), _sign_at(a, h2)
            if s2 == 0:
                return l2
            if t2 == 0:
                return h2
            if s2 == slo and t2 == shi:
                return x
    while hi - lo >= tol:
        mid = (lo + hi) / 2
        s = _sign_at(a, mid)
        if s == 0:
            return mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def sign_changes_on_grid(p, lo: Fraction, hi: Fraction, steps: int) -> int:
    """Number of sign changes of p at lo + i*(hi-lo)/steps, zeros counted as roots."""
    a = _as_int_list(p)
    lo, hi = Fraction(lo), Fraction(hi)
    count = 0
    prev = None
    for i in range(steps + 1):
        s = _sign_at(a, lo + (hi - lo) * i / steps)
        if s == 0:
            count += 1
            prev = None
            continue
        if prev is not None and s != prev:
            count += 1
        prev = s
    return count


# -------------------------------------------------------------- j on the arc


def _j_terms(theta_min, digits: int) -> int:
    """Terms of the j expansion needed on the arc for a tail below 10^-digits."""
    s = math.sin(float(theta_min))
    target = digits * math.log(10) + 5
    n = 1
    while 4 * math.pi * math.sqrt(n) - 2 * math.pi * n * s > -target or n < 8:
        n += 1
    return n + 2


@lru_cache(maxsize=16)
def _j_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of q j(q) through q^(n-1)."""
    j = jfunction(N=n)
    return tuple(int(j[e]) for e in range(-1, n - 1))


def _j_and_derivative(theta, ctx: PrecisionContext):
    """j(e^{i theta}) and d/dtheta of it, both real on the arc."""
    n = _j_terms(min(float(theta), math.pi - float(theta)), ctx.work_precision + 10)
    cs = _j_coeffs(n)
    tau_pt = mpmath.expj(theta)
    q = mpmath.exp(2j * mpmath.pi * tau_pt)
    # Horner in q for sum c_e q^(e-1) and sum (e-1) c_e q^(e-1)
    val = mpmath.mpc(0)
    der = mpmath.mpc(0)
    for e in range(len(cs) - 1, -1, -1):
        val = val * q + cs[e]
        der = der * q + (e - 1) * cs[e]
    val /= q
    der /= q
    # dq/dtheta = -2 pi e^{i theta} q
    return mpmath.re(val), mpmath.re(der * (-2 * mpmath.pi * tau_pt))


def j_on_arc(theta, ctx: PrecisionContext | None = None):
    """j(e^{i theta}) as a real mpf (the imaginary part vanishes on the arc)."""
    ctx = ctx or DEFAULT_CONTEXT
    with ctx.workdps(10):
        return +_j_and_derivative(mpmath.mpf(theta), ctx)[0]


def angle_of_root(x, ctx: PrecisionContext | None = None, tol=None):
    """The theta in [pi/3, pi/2] with j(e^{i theta}) = x.

    Newton's method safeguarded by a bisection bracket (j increases with theta).
    """
    ctx = ctx or DEFAULT_CONTEXT
    tol = Fraction(tol if tol is not None else ctx.root_tol)
    with ctx.workdps(10):
        xv = mpmath.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else mpmath.mpf(x)
        if xv < 0 or xv > 1728:
            raise ValueError(f"angle_of_root: x = {mpmath.nstr(xv, 15)} lies outside [0, 1728]")
        lo, hi = mpmath.pi / 3, mpmath.pi / 2
        if xv == 0:
            return +lo
        if xv == 1728:
            return +hi
        tol_m = mpmath.mpf(tol.numerator) / tol.denominator
        th = (lo + hi) / 2
        while hi - lo > tol_m:
            val, der = _j_and_derivative(th, ctx)
            if val < xv:
                lo = th
            else:
                hi = th
            step = (val - xv) / der if der else mpmath.inf
            nxt = th - step
            if not lo < nxt < hi:
                nxt = (lo + hi) / 2
            elif abs(step) < tol_m / 4:
                return nxt
            th = nxt
        return (lo + hi) / 2


# ----------------------------------------------------------------- records


@dataclass(frozen=True)
class RootRecord:
    interval: IsolatingInterval
    x: Fraction  # refined rational approximation
    x_approx: mpmath.mpf
    theta: mpmath.mpf
    index: int | None  # cell index l with the root in (g^-1(pi(l+1)), g^-1(pi l)), if any


@dataclass
class Theorem2Certificate:
    m: int
    endpoint_zeros: tuple[bool, bool]
    squarefree: bool
    gcd_witness: Poly
    count_in_interval: int
    total_real: int
    cell_counts: dict[int, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def cell_boundaries(m: int, ctx: PrecisionContext | None = None) -> dict[int, tuple[Fraction, Fraction]]:
    """x-interval images under j of the cells (g^-1(pi(l+1)), g^-1(pi l)), 3 <= l <= m."""
    ctx = ctx or DEFAULT_CONTEXT
    xs: dict[int, Fraction] = {}
    with ctx.workdps(10):
        for l in range(3, m + 2):
            th = analytic.g_m_inverse(m, mpmath.pi * l, ctx)
            xs[l] = Fraction(mpmath.nstr(j_on_arc(th, ctx), 25, strip_zeros=False))
    return {l: (xs[l + 1], xs[l]) for l in range(3, m + 1)}


def verify_theorem2(m: int, ctx: PrecisionContext | None = None, poly: Poly | None = None) -> Theorem2Certificate:
    """Exact checks on the zeros of F_m: endpoints, simplicity, location, one root per g-cell."""
    if m < 2:
        raise ValueError("verify_theorem2 needs m >= 2")
    ctx = (ctx or DEFAULT_CONTEXT).at_least(m + 1)
    F = poly if poly is not None else hecke_poly_f(m, ctx)
    a = F.int_coeffs()
    ends = (_sign_at(a, Fraction(0)) == 0, _sign_at(a, Fraction(1728)) == 0)
    sq = is_squarefree(a)
    chain = SturmChain(a)
    inside = chain.count_closed(Fraction(0), Fraction(1728))
    total = chain.total()
    cert = Theorem2Certificate(m, ends, bool(sq), sq.witness, inside, total)
    if not all(ends):
        cert.failures.append(f"F_{m}(0) = {F(0)}, F_{m}(1728) = {F(1728)}")
    if not sq:
        cert.failures.append(f"gcd(F_{m}, F_{m}') = {sq.witness}")
    if inside != m:
        cert.failures.append(f"{inside} roots in [0, 1728], expected {m}")
    if total != inside:
        cert.failures.append(f"{total - inside} real roots outside [0, 1728]")
    if m >= 3:
        for l, (lo, hi) in cell_boundaries(m, ctx).items():
            n = chain.count(lo, hi)
            cert.cell_counts[l] = n
            if n != 1:
                cert.failures.append(f"cell l={l} ({float(lo):.6g}, {float(hi):.6g}] holds {n} roots")
    return cert


def interior_factor(F: Poly) -> Poly:
    """F / (x (x - 1728)), checked to be exact."""
    q, r = F.divmod(Poly([0, -1728, 1]))
    if not r.is_zero():
        raise ArithmeticError("x(x - 1728) does not divide the polynomial")
    return q


def hecke_roots(m: int, ctx: PrecisionContext | None = None, tol=None) -> list[RootRecord]:
    """All zeros of F_m, refined, with their angles on the arc, ordered by x."""
    ctx = (ctx or DEFAULT_CONTEXT).at_least(m + 1)
    tol = Fraction(tol if tol is not None else ctx.root_tol)
    F = hecke_poly_f(m, ctx)
    G = interior_factor(F)
    cells = cell_boundaries(m, ctx) if m >= 3 else {}
    records = [
        RootRecord(IsolatingInterval(Fraction(-1), Fraction(0), True), Fraction(0), mpmath.mpf(0), +mpmath.pi / 3, None)
    ]
    # G alternates in sign across the m - 1 cell boundaries: each of the
    # deg G disjoint cells then holds an odd number of roots, hence exactly one.
    # Anything else falls back to Sturm bisection.
    a = G.int_coeffs()
    cell_ivs = [IsolatingInterval(lo, hi) for lo, hi in sorted(cells.values())]
    signs = [_sign_at(a, cell_ivs[0].lo)] + [_sign_at(a, iv.hi) for iv in cell_ivs] if cell_ivs else []
    if len(cell_ivs) != G.degree or any(u * v >= 0 for u, v in zip(signs, signs[1:])):
        cell_ivs = sturm_isolate(G)
    with ctx.workdps(10):
        for iv in cell_ivs:
            x = refine_root(G, iv, tol)
            xa = _frac_mpf(x)
            idx = next((l for l, (lo, hi) in cells.items() if lo < x <= hi), None)
            records.append(RootRecord(iv, x, xa, angle_of_root(x, ctx, tol), idx))
        records.append(
            RootRecord(
                IsolatingInterval(Fraction(1727), Fraction(1728), True),
                Fraction(1728),
                mpmath.mpf(1728),
                +mpmath.pi / 2,
                None,
            )
        )
    return records


# ------------------------------------------------------------ equidistribution


def star_discrepancy(points: Sequence) -> float:
    """D* of a point set in [0, 1] against the uniform distribution."""
    u = sorted(float(p) for p in points)
    n = len(u)
    if n == 0:
        raise ValueError("empty point set")
    return max(max((i + 1) / n - x, x - i / n) for i, x in enumerate(u))


@dataclass(frozen=True)
class EquidistReport:
    m: int
    normalized_positions: tuple[float, ...]
    star_discrepancy: float
    x_values: tuple
    thetas: tuple


def normalized_position(m: int, theta):
    """u = (g_m(theta) - 5pi/2) / (5pi/3 + pi m - 5pi/2), clamped to [0, 1] against rounding."""
    lo = 5 * mpmath.pi / 2
    span = 5 * mpmath.pi / 3 + mpmath.pi * m - lo
    u = (analytic.g_m(m, theta) - lo) / span
    return min(max(u, mpmath.mpf(0)), mpmath.mpf(1))


def equidistribution(m: int, ctx: PrecisionContext | None = None) -> EquidistReport:
    """Zeros of F_m in the g_m-normalised coordinate u = (g_m(theta) - 5pi/2)/(5pi/3 + pi m - 5pi/2)."""
    if m < 2:
        raise ValueError("equidistribution needs m >= 2")
    ctx = (ctx or DEFAULT_CONTEXT).at_least(m + 1)
    recs = hecke_roots(m, ctx)
    with ctx.workdps(10):
        us = [float(normalized_position(m, r.theta)) for r in recs]
    order = sorted(range(len(us)), key=lambda i: us[i])
    return EquidistReport(
        m,
        tuple(us[i] for i in order),
        star_discrepancy(us),
        tuple(recs[i].x_approx for i in order),
        tuple(recs[i].theta for i in order),
    )
