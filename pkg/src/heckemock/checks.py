"""The verification suite behind ``heckemock verify``: one function per claim.

Reference values are the published decimals and factorizations; every
check returns a :class:`CheckResult` naming what failed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from . import analytic, roots
from .context import DEFAULT_CONTEXT, PrecisionContext
from .faber import divisor_polynomial, faber_psi, faber_via_generating
from .heckepoly import A_ZERO, hecke_poly_f, hecke_poly_report, integrality_witness
from .polynomial import Poly
from .qseries import eisenstein

X = Poly.x()

PSI_REFERENCE = {
    1: Poly([-744, 1]),
    2: Poly([159768, -1488, 1]),
    3: Poly([-36866976, 1069956, -2232, 1]),
}

F_REFERENCE = {
    2: X * (X - 1728),
    3: X * (X - 768) * (X - 1728),
    4: X * Poly([374760, -1512, 1]) * (X - 1728),
    5: X * Poly([-149109760, 1302804, -2256, 1]) * (X - 1728),
}

A_DELTA_REFERENCE = {
    1: mpmath.mpf("-73562460235.68364"),
    2: mpmath.mpf("-929026615019.11308"),
    3: mpmath.mpf("-8982427958440.32917"),
    4: mpmath.mpf("-71877619168847.70781"),
}
A_DELTA_ZERO = Fraction(-2615348736000, 691)
BETA_REFERENCE = mpmath.mpf("2.840287")
EPSTEIN_UPPER = 6.0099


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure of that check, not of the suite
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(number, name, bool(ok), detail, time.perf_counter() - t0)


def check_faber(m_max: int = 40, ctx: PrecisionContext | None = None) -> CheckResult:
    def run():
        bad = [m for m, p in PSI_REFERENCE.items() if faber_psi(m) != p]
        if bad:
            return False, f"psi_{bad[0]} = {faber_psi(bad[0])}, expected {PSI_REFERENCE[bad[0]]}"
        c = (ctx or DEFAULT_CONTEXT).at_least(m_max + 2)
        gen = faber_via_generating(m_max, c)
        bad = [m for m in range(m_max + 1) if gen[m] != faber_psi(m)]
        if bad:
            return False, f"greedy and generating-function psi_{bad[0]} differ"
        return True, f"psi_1..psi_3 exact; greedy = generating function for m <= {m_max}"

    return _timed(1, "Faber polynomials", run)


def check_examples() -> CheckResult:
    def run():
        for m, ref in F_REFERENCE.items():
            f = hecke_poly_f(m)
            if f != ref:
                return False, f"F_{m} = {f}, expected {ref}"
        return True, "F_2..F_5 equal the published factorizations"

    return _timed(2, "Hecke polynomial examples", run)


def check_theorem1(m_max: int = 64, ctx: PrecisionContext | None = None) -> CheckResult:
    def run():
        for m in range(2, m_max + 1):
            num, divisible = integrality_witness(m)
            if not divisible:
                return False, f"691 does not divide {num} at m = {m}"
            rep = hecke_poly_report(m, ctx)
            if not rep.ok:
                return False, (
                    f"m = {m}: closed form vs oracle agree={rep.agree}, "
                    f"sum ranges agree={rep.ranges_agree}, endpoints={rep.endpoint_zeros}"
                )
        return True, f"closed form = q-expansion oracle, 691 | witness, 2 <= m <= {m_max}"

    return _timed(3, "Closed form vs q-expansion", run)


def check_theorem2(m_max: int = 64, ctx: PrecisionContext | None = None) -> CheckResult:
    def run():
        for m in range(2, m_max + 1):
            cert = roots.verify_theorem2(m, ctx)
            if not cert.passed:
                return False, f"m = {m}: " + "; ".join(cert.failures)
        return True, f"endpoints, simplicity, Sturm counts, one root per g-cell, 2 <= m <= {m_max}"

    return _timed(4, "Zero certification", run)


def check_mock_coefficients(ctx: PrecisionContext | None = None, rel_tol: float = 1e-4) -> CheckResult:
    def run():
        c = (ctx or DEFAULT_CONTEXT).replace(c_max=10_000)
        worst = 0.0
        for n, ref in A_DELTA_REFERENCE.items():
            val = analytic.a_delta(n, c)
            rel = float(abs((val.value - ref) / ref))
            worst = max(worst, rel)
            if rel > rel_tol:
                return False, f"a_Delta({n}) = {mpmath.nstr(val.value, 20)}, relative error {rel:.2e}"
        if A_ZERO != A_DELTA_ZERO:
            return False, f"a_Delta(0) = {A_ZERO}"
        return True, f"a_Delta(1..4) worst relative error {worst:.1e}; a_Delta(0) = {A_ZERO}"

    return _timed(5, "Mock coefficients", run)


def check_beta(ctx: PrecisionContext | None = None, tol: float = 5e-6) -> CheckResult:
    def run():
        c = (ctx or DEFAULT_CONTEXT).replace(c_max=10_000)
        b = analytic.beta_delta(c)
        err = float(abs(b.value - BETA_REFERENCE))
        return err <= tol, f"beta = {mpmath.nstr(b.value, 15)} (|diff| {err:.1e}, tail {float(b.tail_estimate):.1e})"

    return _timed(6, "beta_Delta", run)


def check_epstein(cutoff: int = 100) -> CheckResult:
    def run():
        e = analytic.epstein_zeta6(cutoff)
        ok = e.upper <= EPSTEIN_UPPER and e.lower > 6
        return ok, f"lattice sum in [{e.lower:.10f}, {e.upper:.10f}]"

    return _timed(7, "Epstein zeta constant", run)


def check_f_bound(ms=(3, 5, 10), grid: int = 50, ctx: PrecisionContext | None = None) -> CheckResult:
    def run():
        worst = 0.0
        for m in ms:
            for r in analytic.check_f_bound(m, grid, ctx):
                worst = max(worst, float((r.lhs + r.truncation_error) / r.budget))
                if not r.passed:
                    return False, f"m = {m}, theta = {mpmath.nstr(r.theta, 10)}: lhs = {mpmath.nstr(r.lhs, 12)}"
        return True, f"m in {tuple(ms)}, {grid}-point grid; max (lhs + error)/11! = {worst:.3f}"

    return _timed(8, "f_m bound", run)


def check_m_bound(points: int = 100, ctx: PrecisionContext | None = None) -> CheckResult:
    def run():
        with (ctx or DEFAULT_CONTEXT).workdps(10):
            for i in range(points):
                x = mpmath.mpf(10) ** (-3 + 5 * mpmath.mpf(i) / (points - 1))
                lhs = analytic.whittaker_m(5, x, ctx)
                rhs = mpmath.exp(x / 2) * x**6
                if lhs > rhs:
                    return False, f"M(5, {mpmath.nstr(x, 8)}) = {mpmath.nstr(lhs, 12)} > {mpmath.nstr(rhs, 12)}"
        return True, f"M_(5,11/2)(x) <= e^(x/2) x^6 at {points} log-spaced x in [1e-3, 1e2]"

    return _timed(9, "Whittaker bound", run)


def check_deligne(m_max: int = 63) -> CheckResult:
    def run():
        bad = analytic.deligne_violations(m_max)
        return not bad, (f"violations at m = {bad}" if bad else f"exact for m <= {m_max}")

    return _timed(10, "Deligne bound", run)


def check_shadow(ns=(1, 2, 3, 4), ctx: PrecisionContext | None = None) -> CheckResult:
    def run():
        vals = [analytic.shadow_ratio(n, ctx) for n in ns]
        base = vals[0]
        spread = max(float(abs(v.value - base.value)) for v in vals)
        for n, v in zip(ns, vals):
            slack = v.tail_estimate + base.tail_estimate + mpmath.mpf(10) ** -20
            if abs(v.value - base.value) > slack:
                return False, f"ratio at n = {n} is {mpmath.nstr(v.value, 15)} vs {mpmath.nstr(base.value, 15)}"
        return True, f"(delta + n^11 c^-(1,n))/tau(n) = {mpmath.nstr(base.value, 12)} for n in {tuple(ns)} (spread {spread:.1e})"

    return _timed(11, "Shadow proportionality", run)


def check_equidistribution(ms=(10, 20, 50, 100), ctx: PrecisionContext | None = None) -> CheckResult:
    def run():
        d = {}
        for m in ms:
            d[m] = roots.equidistribution(m, ctx).star_discrepancy
            if d[m] > 5 / m:
                return False, f"D*_{m} = {d[m]:.4f} > {5 / m:.4f}"
        if 20 in d and 100 in d and not d[100] < d[20]:
            return False, f"D*_100 = {d[100]:.4f} is not below D*_20 = {d[20]:.4f}"
        return True, ", ".join(f"D*_{m} = {v:.4f}" for m, v in d.items())

    return _timed(12, "Equidistribution trend", run)


def integer_primitive(p: Poly) -> Poly:
    """Clear denominators: the primitive integer multiple of p with positive leading coefficient."""
    den = 1
    for c in p.coeffs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return Poly([c // g for c in ints])


def check_rankin_swinnerton_dyer(weights=(4, 6, 8, 10, 12, 14), ctx: PrecisionContext | None = None) -> CheckResult:
    def run():
        found = []
        for k in weights:
            f = eisenstein(k, N=k + 8)
            p = integer_primitive(divisor_polynomial(f, k, ctx))
            if p.degree <= 0:
                found.append(f"E_{k}: none")
                continue
            # repeated zeros (E_8 = E_4^2) are allowed: count distinct roots
            sq = roots.squarefree_part(p)
            chain = roots.SturmChain(sq)
            inside = chain.count_closed(Fraction(0), Fraction(1728))
            if inside != sq.degree or chain.total() != sq.degree:
                return False, f"E_{k}: {inside} of {sq.degree} distinct roots in [0, 1728]"
            found.append(f"E_{k}: {p.degree} ({inside} distinct)")
        return True, "roots in [0, 1728]: " + ", ".join(found)

    return _timed(13, "Rankin-Swinnerton-Dyer", run)


def run_suite(level: str = "quick", ctx: PrecisionContext | None = None) -> list[CheckResult]:
    """``quick``: exact checks up to m = 16.  ``full``: every check at full size."""
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    if level == "quick":
        return [
            check_faber(16, ctx),
            check_examples(),
            check_theorem1(16, ctx),
            check_theorem2(16, ctx),
            check_epstein(),
            check_m_bound(ctx=ctx),
            check_deligne(),
            check_rankin_swinnerton_dyer(ctx=ctx),
        ]
    return [
        check_faber(40, ctx),
        check_examples(),
        check_theorem1(64, ctx),
        check_theorem2(64, ctx),
        check_mock_coefficients(ctx),
        check_beta(ctx),
        check_epstein(),
        check_f_bound(ctx=ctx),
        check_m_bound(ctx=ctx),
        check_deligne(),
        check_shadow(ctx=ctx),
        check_equidistribution(ctx=ctx),
        check_rankin_swinnerton_dyer(ctx=ctx),
    ]
