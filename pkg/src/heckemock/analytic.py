"""High-precision numerics: Kloosterman-Bessel series, the mock coefficients
a_Delta(n), beta_Delta, Poincare series on the arc, and the bounding functions.

Conventions (all checked numerically against the printed values):

* a_Delta(n) = -2 pi 11! n^(-11/2) sum_c K(-1, n, c)/c I_11(4 pi sqrt(n)/c)
* beta_Delta = 1 + 2 pi sum_c K(1, 1, c)/c J_11(4 pi / c)
* the Kloosterman sum K_k(a, b; c) of the Fourier expansion is read as
  K(-a, b, c) in the holomorphic part and as K(a, b, c) in the nonholomorphic part, which makes
  c^-(1, 1) = beta_Delta - 1 > 0.

Every truncated sum comes back as a :class:`SeriesValue` whose
``tail_estimate`` is an analytic majorant of what was left out, plus a bound
on the float64 rounding used for large moduli.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .context import DEFAULT_CONTEXT, PrecisionContext
from .qseries import divisors, sigma, tau

FACT11 = math.factorial(11)
BUDGET = FACT11  # the right side of the f_m bound

# rounding of one float64 cosine term, argument reduction included
_COS_ERR = 2e-15


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series: its value, a bound for the neglected part, and the terms used."""

    value: object
    tail_estimate: object
    terms: int

    def __float__(self):
        return float(self.value)


def _ctx(ctx):
    return ctx or DEFAULT_CONTEXT


def _default_rel(ctx: PrecisionContext):
    return mpmath.mpf(10) ** (-(ctx.work_precision // 2))


# ------------------------------------------------------------- Kloosterman


@lru_cache(maxsize=4096)
def _units(c: int) -> tuple[np.ndarray, np.ndarray]:
    """Primitive residues v mod c and their inverses."""
    v = [x for x in range(1, c) if math.gcd(x, c) == 1] if c > 1 else [0]
    vb = [pow(x, -1, c) for x in v] if c > 1 else [0]
    return np.array(v, dtype=np.int64), np.array(vb, dtype=np.int64)


def _phases(m: int, n: int, c: int) -> np.ndarray:
    v, vb = _units(c)
    return (vb * (m % c) + v * (n % c)) % c


def _kloosterman_mp(m: int, n: int, c: int):
    if c == 1:
        return mpmath.mpf(1)
    counts = np.bincount(_phases(m, n, c), minlength=c)
    s = mpmath.mpf(0)
    for r in np.nonzero(counts)[0]:
        s += int(counts[r]) * mpmath.cospi(mpmath.mpf(2 * int(r)) / c)
    return s


def _kloosterman_float(m: int, n: int, c: int) -> float:
    r = _phases(m, n, c)
    return float(np.cos((2 * np.pi / c) * r).sum())


def kloosterman(m: int, n: int, c: int, ctx: PrecisionContext | None = None):
    """K(m, n, c) = sum over v mod c, gcd(v, c) = 1, of cos(2 pi (m v' + n v)/c), v v' = 1 mod c."""
    if not isinstance(c, int) or c < 1:
        raise ValueError(f"kloosterman: c must be a positive integer, got {c!r}")
    with _ctx(ctx).workdps(10):
        return _kloosterman_mp(m, n, c)


def ramanujan_sum(c: int, m: int) -> int:
    """c_c(m) = K(m, 0, c) = sum over d | (c, m) of mu(c/d) d, exactly."""
    return sum(_mobius(c // d) * d for d in divisors(math.gcd(c, m)))


def _mobius(n: int) -> int:
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


# ------------------------------------------------------------------ Bessel


def _bessel_series(nu: int, x, sign: int, ctx: PrecisionContext):
    if nu < 0:
        raise ValueError("order must be a nonnegative integer")
    x = mpmath.mpf(x)
    if x < 0:
        raise ValueError("argument must be nonnegative")
    if x == 0:
        return mpmath.mpf(1 if nu == 0 else 0)
    # the alternating series for J loses about x log10(e) digits
    guard = 10 + (int(float(x) * 0.4343) + 1 if sign < 0 else 0)
    with mpmath.workdps(ctx.work_precision + guard):
        h = x / 2
        h2 = sign * h * h
        t = h**nu / mpmath.factorial(nu)
        s = t
        eps = mpmath.mpf(10) ** (-(ctx.work_precision + 5))
        k = 0
        while True:
            k += 1
            t = t * h2 / (k * (nu + k))
            s += t
            # past k = 2h consecutive ratios are below 1/4
            if k > 2 * h and abs(t) <= eps * abs(s):
                break
    return s


def bessel_i(nu: int, x, ctx: PrecisionContext | None = None):
    """I_nu(x) by its ascending series."""
    return _bessel_series(nu, x, 1, _ctx(ctx))


def bessel_j(nu: int, x, ctx: PrecisionContext | None = None):
    """J_nu(x) by its ascending series, with guard digits for the cancellation."""
    return _bessel_series(nu, x, -1, _ctx(ctx))


# ------------------------------------------------- elementary special functions


def trunc_exp(j: int, x):
    """e_j(x) = sum_{n <= j} x^n / n!, Horner form."""
    if j < 0:
        raise ValueError("trunc_exp: order must be nonnegative")
    acc = mpmath.mpf(1)
    for n in range(j, 0, -1):
        acc = 1 + acc * x / n
    return acc


def incomplete_gamma(s: int, x, ctx: PrecisionContext | None = None):
    """Gamma(s, x) = (s-1)! e^-x e_{s-1}(x) for integer s >= 1."""
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"incomplete_gamma: s must be a positive integer, got {s!r}")
    with _ctx(ctx).workdps(10):
        x = mpmath.mpf(x)
        if x < 0:
            raise ValueError("incomplete_gamma: x must be nonnegative")
        return math.factorial(s - 1) * mpmath.exp(-x) * trunc_exp(s - 1, x)


def whittaker_m(kappa: int, x, ctx: PrecisionContext | None = None):
    """M_{kappa, kappa+1/2}(x) = (2kappa+1)! (e^{x/2} - e^{-x/2} e_{2kappa}(x)) / x^kappa.

    Below x = 1 the difference is summed directly as the exponential tail.
    """
    if not isinstance(kappa, int) or kappa < 1:
        raise ValueError("whittaker_m: kappa must be a positive integer")
    ctx = _ctx(ctx)
    f = math.factorial(2 * kappa + 1)
    with ctx.workdps(10):
        x = mpmath.mpf(x)
        if x < 0:
            raise ValueError("whittaker_m: x must be nonnegative")
        if x == 0:
            return mpmath.mpf(0)
        if x < 1:
            n = 2 * kappa + 1
            t = x**n / math.factorial(n)
            s = t
            eps = mpmath.mpf(10) ** (-(ctx.work_precision + 5))
            while abs(t) > eps * abs(s):
                n += 1
                t = t * x / n
                s += t
            return f * mpmath.exp(-x / 2) * s / x**kappa
        return f * (mpmath.exp(x / 2) - mpmath.exp(-x / 2) * trunc_exp(2 * kappa, x)) / x**kappa


# ------------------------------------------------------- Kloosterman-Bessel


def _kb_sum(m: int, n: int, kind: str, y0, ctx: PrecisionContext, rel_tol=None, abs_tol=0) -> SeriesValue:
    """sum_{c >= 1} K(m, n, c)/c B_11(y0/c) with B = I or J, summed in ascending c.

    Stops at the first c where the analytic tail bound drops below the
    target, or at ctx.c_max.  The bound uses |K(m,n,c)| <= c and
    |B_11(y)| <= (y/2)^11/11! (times cosh y for I).  Small moduli use exact
    residues and high-precision cosines; once the float64 rounding of all
    remaining terms fits in a tenth of the target, larger moduli switch to
    numpy, and that rounding is added to the reported tail.
    """
    bessel = bessel_i if kind == "I" else bessel_j
    rel = _default_rel(ctx) if rel_tol is None else mpmath.mpf(rel_tol)
    with ctx.workdps(10):
        y0 = mpmath.mpf(y0)
        lead = (y0 / 2) ** 11 / FACT11
        S = mpmath.mpf(0)
        float_err = mpmath.mpf(0)
        use_float = False
        tail = mpmath.inf
        c = 0
        while c < ctx.c_max:
            c += 1
            y = y0 / c
            B = bessel(11, y, ctx)
            if use_float:
                K = mpmath.mpf(_kloosterman_float(m, n, c))
                float_err += len(_units(c)[0]) * _COS_ERR / c * abs(B)
            else:
                K = _kloosterman_mp(m, n, c)
            S += K * B / c
            grow = mpmath.cosh(y) if kind == "I" else 1
            tail = lead * grow * mpmath.mpf(c) ** -10 / 10
            target = max(mpmath.mpf(abs_tol), rel * abs(S))
            if tail <= target:
                break
            if not use_float and c >= 8:
                nxt = lead * grow / mpmath.mpf(c + 1) ** 11
                if _COS_ERR * nxt * (1 + mpmath.mpf(c + 1) / 10) <= target / 10:
                    use_float = True
        return SeriesValue(S, tail + float_err, c)


def _scaled(sv: SeriesValue, factor) -> SeriesValue:
    return SeriesValue(factor * sv.value, abs(factor) * sv.tail_estimate, sv.terms)


def a_delta(n: int, ctx: PrecisionContext | None = None, rel_tol=None) -> SeriesValue:
    """Coefficient a_Delta(n) of the mock modular form, n >= 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"a_delta: n must be a positive integer, got {n!r} (a_Delta(0) is exact)")
    ctx = _ctx(ctx)
    with ctx.workdps(10):
        y0 = 4 * mpmath.pi * mpmath.sqrt(n)
        sv = _kb_sum(-1, n, "I", y0, ctx, rel_tol)
        pref = -2 * mpmath.pi * FACT11 * mpmath.mpf(n) ** mpmath.mpf(-5.5)
        return _scaled(sv, pref)


def beta_delta(ctx: PrecisionContext | None = None, rel_tol=None) -> SeriesValue:
    """beta_Delta = 1 + 2 pi sum_c K(1,1,c)/c J_11(4 pi/c)."""
    ctx = _ctx(ctx)
    with ctx.workdps(10):
        sv = _kb_sum(1, 1, "J", 4 * mpmath.pi, ctx, rel_tol)
        out = _scaled(sv, 2 * mpmath.pi)
        return SeriesValue(1 + out.value, out.tail_estimate, out.terms)


def _check_k(k: int):
    if k != -10:
        raise ValueError(f"only weight k = -10 is supported, got {k}")


def _check_mn(m: int, n: int):
    if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 1:
        raise ValueError(f"m and n must be positive integers, got {m!r}, {n!r}")


def shadow_coefficient(m: int, n: int, ctx: PrecisionContext | None = None, rel_tol=None) -> SeriesValue:
    """c^-_{-10,-m}(-n) = 2 pi (m/n)^(11/2) sum_c K(m,n,c)/c J_11(4 pi sqrt(mn)/c)."""
    _check_mn(m, n)
    ctx = _ctx(ctx)
    with ctx.workdps(10):
        sv = _kb_sum(m, n, "J", 4 * mpmath.pi * mpmath.sqrt(m * n), ctx, rel_tol)
        return _scaled(sv, 2 * mpmath.pi * (mpmath.mpf(m) / n) ** mpmath.mpf(5.5))


def holo_coefficient_p(k: int, m: int, n: int, ctx: PrecisionContext | None = None, rel_tol=None) -> SeriesValue:
    """c^+_{k,-m}(n) = -2 pi (m/n)^(11/2) sum_c K(-m,n,c)/c I_11(4 pi sqrt(mn)/c) for k = -10.

    The holomorphic part of P_{-10,-m} is 11! times these (leading 11! q^-m).
    """
    _check_k(k)
    _check_mn(m, n)
    ctx = _ctx(ctx)
    with ctx.workdps(10):
        sv = _kb_sum(-m, n, "I", 4 * mpmath.pi * mpmath.sqrt(m * n), ctx, rel_tol)
        return _scaled(sv, -2 * mpmath.pi * (mpmath.mpf(m) / n) ** mpmath.mpf(5.5))


def constant_term_p(k: int, m: int, ctx: PrecisionContext | None = None, rel_tol=None) -> SeriesValue:
    """Constant term of P_{-10,-m} in the same normalization as :func:`holo_coefficient_p`.

    -(2 pi)^12 m^11 / 11! * sum_c c_c(m)/c^12 with Ramanujan sums c_c(m);
    11! times the value at m = 1 is a_Delta(0) = 24 * 11!/B_12.
    """
    _check_k(k)
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    ctx = _ctx(ctx)
    rel = _default_rel(ctx) if rel_tol is None else mpmath.mpf(rel_tol)
    bound = sigma(1, m)  # |c_c(m)| <= sigma_1(m)
    with ctx.workdps(10):
        S = mpmath.mpf(0)
        c = 0
        tail = mpmath.inf
        while c < ctx.c_max:
            c += 1
            r = ramanujan_sum(c, m)
            if r:
                S += mpmath.mpf(r) / mpmath.mpf(c) ** 12
            tail = mpmath.mpf(bound) * mpmath.mpf(c) ** -11 / 11
            if tail <= rel * abs(S):
                break
        pref = -(2 * mpmath.pi) ** 12 * mpmath.mpf(m) ** 11 / FACT11
        return _scaled(SeriesValue(S, tail, c), pref)


# --------------------------------------------------------------- g_m and f_m


def _check_theta(theta):
    lo, hi = mpmath.pi / 3, mpmath.pi / 2
    slack = mpmath.mpf(10) ** (-mpmath.mp.dps + 5)
    if theta < lo - slack or theta > hi + slack:
        raise ValueError(f"theta = {mpmath.nstr(theta, 12)} is outside [pi/3, pi/2]")


def g_m(m: int, theta):
    """g_m(theta) = 5 theta + 2 pi m cos(theta), strictly decreasing on [pi/3, pi/2]."""
    theta = mpmath.mpf(theta)
    return 5 * theta + 2 * mpmath.pi * m * mpmath.cos(theta)


def g_m_inverse(m: int, y, ctx: PrecisionContext | None = None):
    """The theta in [pi/3, pi/2] with g_m(theta) = y, by bisection to ctx.root_tol."""
    if m < 1:
        raise ValueError("g_m_inverse: m must be positive")
    ctx = _ctx(ctx)
    with ctx.workdps(10):
        y = mpmath.mpf(y)
        lo, hi = mpmath.pi / 3, mpmath.pi / 2
        ymax, ymin = g_m(m, lo), g_m(m, hi)
        slack = mpmath.mpf(10) ** (-ctx.work_precision)
        if y > ymax + slack or y < ymin - slack:
            raise ValueError(
                f"g_m_inverse: y = {mpmath.nstr(y, 12)} outside [{mpmath.nstr(ymin, 12)}, {mpmath.nstr(ymax, 12)}]"
            )
        tol = mpmath.mpf(ctx.root_tol.numerator) / ctx.root_tol.denominator
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if g_m(m, mid) > y:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2


def damping(m: int, theta):
    """1 - e^{-x} e_10(x) with x = 4 pi m sin(theta)."""
    x = 4 * mpmath.pi * m * mpmath.sin(theta)
    return 1 - mpmath.exp(-x) * trunc_exp(10, x)


def f_m(m: int, theta, ctx: PrecisionContext | None = None):
    """f_m(theta) = 2 * 11! (1 - e^{-x} e_10(x)) cos(g_m(theta)), x = 4 pi m sin(theta)."""
    if m < 1:
        raise ValueError("f_m: m must be positive")
    with _ctx(ctx).workdps(10):
        theta = mpmath.mpf(theta)
        _check_theta(theta)
        return 2 * FACT11 * damping(m, theta) * mpmath.cos(g_m(m, theta))


# ------------------------------------------------------------ Poincare series


@lru_cache(maxsize=4096)
def _holo_cached(m: int, n: int, ctx: PrecisionContext) -> SeriesValue:
    return holo_coefficient_p(-10, m, n, ctx)


@lru_cache(maxsize=4096)
def _shadow_cached(m: int, n: int, ctx: PrecisionContext, digits: int) -> SeriesValue:
    return shadow_coefficient(m, n, ctx, mpmath.mpf(10) ** -digits)


@lru_cache(maxsize=256)
def _const_cached(m: int, ctx: PrecisionContext) -> SeriesValue:
    return constant_term_p(-10, m, ctx)


def _log_holo_bound(m: int, n: int) -> float:
    """log of an upper bound for 11! |c^+(m, n)|."""
    y = 4 * math.pi * math.sqrt(m * n)
    lead = 11 * math.log(y / 2) - math.lgamma(12)
    first = min(y, lead + y)  # I_11(y) <= min(e^y, (y/2)^11/11! cosh y)
    rest = lead + math.log(math.cosh(y / 2)) + math.log(0.00050)  # zeta(11) - 1 < 5e-4
    return (
        math.log(FACT11 * 2 * math.pi)
        + 5.5 * math.log(m / n)
        + max(first, rest)
        + math.log1p(math.exp(-abs(first - rest)))
    )


def _log_shadow_bound(m: int, n: int) -> float:
    """log of an upper bound for delta_{n,m} + |c^-(m, n)|, using |J_11| <= min(1, (y/2)^11/11!)."""
    y = 4 * math.pi * math.sqrt(m * n)
    lead = (y / 2) ** 11 / FACT11
    c0 = max(1, math.ceil(lead ** (1 / 11)))
    s = c0 + lead * c0**-10 / 10
    return math.log(1 + 2 * math.pi * (m / n) ** 5.5 * s)


def _log_nonholo_term(m: int, n: int, v: float) -> float:
    """log bound of |11 (delta + c^-) Gamma(11, 4 pi n v) q^-n|."""
    x = 4 * math.pi * n * v
    lg = math.lgamma(11) - x + math.log(float(trunc_exp(10, x)))
    return math.log(11) + _log_shadow_bound(m, n) + lg + 2 * math.pi * n * v


@dataclass(frozen=True)
class PoincareValue:
    """P_{-10,-m}(e^{i theta}) with the truncation budget it was computed to."""

    m: int
    theta: object
    value: object  # mpc
    tail_estimate: object
    n_holomorphic: int
    n_nonholomorphic: int


def _n_terms(logterm, start: int, log_target: float, cap: int = 5000) -> tuple[int, float]:
    """Smallest N >= start after which the bounded terms are decreasing and sum below the target."""
    N = start
    while N < cap:
        logs = [logterm(N + k) for k in range(1, 41)]
        if all(a >= b for a, b in zip(logs, logs[1:])):
            # later terms shrink at least as fast as the last observed ratio
            r = math.exp(logs[-1] - logs[-2])
            top = max(logs)
            total = sum(math.exp(x - top) for x in logs) + math.exp(logs[-1] - top) * r / (1 - r)
            log_tail = top + math.log(total)
            if log_tail <= log_target:
                return N, log_tail
        N += 1
    raise RuntimeError("Poincare series failed to converge")


def poincare_eval(m: int, theta, ctx: PrecisionContext | None = None) -> PoincareValue:
    """P_{-10,-m}(tau) at tau = e^{i theta} from its Fourier expansion.

    11! q^-m + A_0(m) + sum_n 11! c^+(m,n) q^n
      - 11 sum_n (delta_{n,m} + c^-(m,n)) Gamma(11, 4 pi n v) q^-n,   v = sin(theta).
    The n ranges grow until the neglected terms are below 10^(-digits/2)
    times 11! e^{2 pi m v}; coefficient errors are added to the estimate.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("poincare_eval: m must be a positive integer")
    ctx = _ctx(ctx)
    with ctx.workdps(10):
        theta = mpmath.mpf(theta)
        _check_theta(theta)
        v = mpmath.sin(theta)
        vf = float(v)
        tau_pt = mpmath.expj(theta)
        q = mpmath.exp(2j * mpmath.pi * tau_pt)
        qinv = 1 / q
        digits = ctx.work_precision // 2
        log_target = math.log(FACT11) + 2 * math.pi * m * vf - digits * math.log(10)

        n_hol, hol_tail = _n_terms(
            lambda n: _log_holo_bound(m, n) - 2 * math.pi * n * vf, ctx.n_max, log_target
        )
        n_nh, nh_tail = _n_terms(lambda n: _log_nonholo_term(m, n, vf), 1, log_target)

        const = _const_cached(m, ctx)
        total = FACT11 * qinv**m + FACT11 * const.value
        err = FACT11 * const.tail_estimate + mpmath.exp(hol_tail) + mpmath.exp(nh_tail)
        qn = mpmath.mpc(1)
        for n in range(1, n_hol + 1):
            qn *= q
            c = _holo_cached(m, n, ctx)
            total += FACT11 * c.value * qn
            err += FACT11 * c.tail_estimate * abs(qn)
        qn = mpmath.mpc(1)
        for n in range(1, n_nh + 1):
            qn *= qinv
            s = _shadow_cached(m, n, ctx, 12)
            coeff = (1 if n == m else 0) + s.value
            g = incomplete_gamma(11, 4 * mpmath.pi * n * v, ctx)
            total -= 11 * coeff * g * qn
            err += 11 * s.tail_estimate * g * abs(qn)
        return PoincareValue(m, theta, total, err, n_hol, n_nh)


def r_eval(theta, ctx: PrecisionContext | None = None) -> PoincareValue:
    """R(e^{i theta}) = P_{-10,-1}(e^{i theta})."""
    return poincare_eval(1, theta, ctx)


# ------------------------------------------------------------------ f bound


@dataclass(frozen=True)
class BoundReport:
    m: int
    theta: object
    lhs: object
    budget: int
    passed: bool
    truncation_error: object


def f_bound_lhs(m: int, theta, ctx: PrecisionContext | None = None) -> tuple:
    """|e^{-5i theta} e^{-2 pi m sin theta}(P_{-10,-m} - tau(m) R) - f_m(theta)| and its error bound."""
    ctx = _ctx(ctx)
    with ctx.workdps(10):
        theta = mpmath.mpf(theta)
        P = poincare_eval(m, theta, ctx)
        R = poincare_eval(1, theta, ctx)
        t = tau(m)
        damp = mpmath.exp(-2 * mpmath.pi * m * mpmath.sin(theta))
        w = mpmath.expj(-5 * theta) * damp * (P.value - t * R.value)
        lhs = abs(w - f_m(m, theta, ctx))
        err = damp * (P.tail_estimate + abs(t) * R.tail_estimate)
        return lhs, err


def f_bound_grid(grid: int) -> list:
    """theta_i = pi/3 + i (pi/6)/grid for i = 1..grid.

    pi/3 itself is left out: there the left side equals 11! up to a
    quantity far below any working precision, so strict inequality cannot
    be decided numerically at that single point.
    """
    if grid < 1:
        raise ValueError("grid must be positive")
    step = (mpmath.pi / 6) / grid
    return [mpmath.pi / 3 + i * step for i in range(1, grid + 1)]


def check_f_bound(m: int, grid: int = 50, ctx: PrecisionContext | None = None) -> list[BoundReport]:
    """Evaluate the f_m bound on a uniform theta grid; each report passes if lhs + error < 11!."""
    if not isinstance(m, int) or m < 3:
        raise ValueError(f"the f_m bound requires m >= 3, got {m!r}")
    ctx = _ctx(ctx)
    out = []
    with ctx.workdps(10):
        for theta in f_bound_grid(grid):
            lhs, err = f_bound_lhs(m, theta, ctx)
            out.append(BoundReport(m, theta, lhs, BUDGET, bool(lhs + err < BUDGET), err))
    return out


# ---------------------------------------------------- Epstein zeta, Deligne


@dataclass(frozen=True)
class EpsteinValue:
    value: float
    tail_bound: float
    rounding_bound: float

    @property
    def upper(self) -> float:
        return self.value + self.tail_bound + self.rounding_bound

    @property
    def lower(self) -> float:
        return self.value - self.rounding_bound


def epstein_zeta6(cutoff: int = 100) -> EpsteinValue:
    """sum over (c, d) != 0 of (c^2 + cd + d^2)^-6, partial sum over max(|c|,|d|) <= cutoff.

    The rest is bounded by 512 sum_{r > cutoff} r^-11 <= 512 cutoff^-10 / 10
    (8r points on the ring max = r, each with c^2 + cd + d^2 >= r^2/2).
    """
    if cutoff < 10:
        raise ValueError("epstein_zeta6: cutoff must be >= 10")
    r = np.arange(-cutoff, cutoff + 1, dtype=np.int64)
    c, d = np.meshgrid(r, r, indexing="ij")
    Q = (c * c + c * d + d * d).astype(np.float64).ravel()
    Q = Q[Q > 0]
    terms = np.sort(Q**-6.0)  # ascending for fsum
    value = math.fsum(terms.tolist())
    rounding = 4 * np.finfo(float).eps * value
    tail = 512 * cutoff**-10 / 10
    return EpsteinValue(value, tail, rounding)


def deligne_violations(m_max: int, ctx: PrecisionContext | None = None) -> list[int]:
    """m <= m_max where tau(m)^2 > sigma_0(m)^2 m^11 or tau(m)^2 > 4 m^12 (exact integers)."""
    if ctx is not None and m_max >= ctx.series_order:
        raise ValueError(f"m_max = {m_max} needs series order > {m_max}")
    bad = []
    for m in range(1, m_max + 1):
        t2 = tau(m) ** 2
        if t2 > sigma(0, m) ** 2 * m**11 or t2 > 4 * m**12:
            bad.append(m)
    return bad


def deligne_check(m_max: int, ctx: PrecisionContext | None = None) -> bool:
    """Both Deligne-type bounds hold for 1 <= m <= m_max."""
    return not deligne_violations(m_max, ctx)


# ---------------------------------------------------------- shadow structure


@dataclass(frozen=True)
class Residual:
    label: str
    lhs: object
    rhs: object
    error: object

    @property
    def ok(self) -> bool:
        return abs(self.lhs - self.rhs) <= self.error


def shadow_ratio(n: int, ctx: PrecisionContext | None = None) -> SeriesValue:
    """(delta_{n,1} + n^11 c^-(1, n)) / tau(n), constant in n (equal to beta_Delta)."""
    ctx = _ctx(ctx)
    with ctx.workdps(10):
        s = shadow_coefficient(1, n, ctx)
        t = tau(n)
        scale = mpmath.mpf(n) ** 11 / abs(t)
        return SeriesValue(((1 if n == 1 else 0) + n**11 * s.value) / t, scale * s.tail_estimate, s.terms)


def hecke_eigen_residuals(m: int, n_max: int, ctx: PrecisionContext | None = None) -> list[Residual]:
    """Nonholomorphic Hecke check: m^11 sum_{a | (m,n)} a^-11 b(mn/a^2) = tau(m) b(n),
    with b(n) = delta_{n,1} + c^-(1, n), the coefficients of Gamma(11, 4 pi n v) q^-n in R
    (up to the common factor -11).  Also compares delta_{n,m} + c^-(m, n) with tau(m) b(n).
    """
    ctx = _ctx(ctx)
    t = tau(m)
    cache: dict[int, SeriesValue] = {}

    def b(k):
        if k not in cache:
            cache[k] = shadow_coefficient(1, k, ctx)
        s = cache[k]
        return (1 if k == 1 else 0) + s.value, s.tail_estimate

    out = []
    with ctx.workdps(10):
        for n in range(1, n_max + 1):
            lhs = mpmath.mpf(0)
            err = mpmath.mpf(0)
            for a in divisors(math.gcd(m, n)):
                val, e = b(m * n // (a * a))
                w = mpmath.mpf(m) ** 11 / mpmath.mpf(a) ** 11
                lhs += w * val
                err += w * e
            bn, en = b(n)
            rhs = t * bn
            slack = 10 * (err + abs(t) * en) + mpmath.mpf(10) ** (-ctx.work_precision // 2) * abs(rhs)
            out.append(Residual(f"T({m}) b at n={n}", lhs, rhs, slack))
            direct = shadow_coefficient(m, n, ctx)
            dval = (1 if n == m else 0) + direct.value
            slack2 = 10 * (direct.tail_estimate + abs(t) * en) + mpmath.mpf(10) ** (
                -ctx.work_precision // 2
            ) * abs(rhs)
            out.append(Residual(f"c^-({m},{n}) vs tau({m}) b({n})", dval, rhs, slack2))
    return out


def main_terms(m: int, theta, ctx: PrecisionContext | None = None):
    """11! e^{-2 pi i m tau}(1 - e^{-x} e_10(x)) + complex conjugate, the two leading pieces of P_{-10,-m}
    after multiplying by e^{-5 i theta} e^{-2 pi m v}; their sum is f_m(theta)."""
    with _ctx(ctx).workdps(10):
        theta = mpmath.mpf(theta)
        x = mpmath.expj(-(g_m(m, theta)))
        return FACT11 * damping(m, theta) * (x + mpmath.conj(x))
