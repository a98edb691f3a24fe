"""Exact truncated Laurent q-expansions of level one modular objects.

Coefficients are rational. A series stores the coefficients of q^e for
``start <= e < truncation``; everything at or beyond ``truncation`` is
unknown, and no operation ever invents coefficients there.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from .context import DEFAULT_CONTEXT, PrecisionContext


class TruncationError(ValueError):
    """Raised when an operation would need coefficients that are not known."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _convolve(a: Sequence[int], b: Sequence[int], length: int) -> list[int]:
    out = [0] * length
    for i, ai in enumerate(a):
        if i >= length:
            break
        if ai == 0:
            continue
        lim = min(len(b), length - i)
        for k in range(lim):
            bk = b[k]
            if bk:
                out[i + k] += ai * bk
    return out


class QSeries:
    """Truncated Laurent series  sum_{start <= e < truncation} c_e q^e  over Q.

    Internally the coefficients share one positive denominator so products
    run on Python integers.
    """

    __slots__ = ("_start", "_num", "_den", "_trunc")

    def __init__(self, start: int, coeffs: Iterable, truncation: int | None = None):
        fracs = [_as_fraction(c) for c in coeffs]
        if truncation is None:
            truncation = start + len(fracs)
        if truncation - start != len(fracs):
            raise ValueError(
                f"need truncation - start == len(coeffs), got {truncation} - {start} != {len(fracs)}"
            )
        den = 1
        for c in fracs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in fracs]
        self._set(start, num, den, truncation)

    def _set(self, start, num, den, trunc):
        g = den
        for x in num:
            if g == 1:
                break
            g = math.gcd(g, x)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self._start = start
        self._num = tuple(num)
        self._den = den
        self._trunc = trunc

    @classmethod
    def _raw(cls, start: int, num: Sequence[int], den: int, trunc: int) -> QSeries:
        s = cls.__new__(cls)
        s._set(start, list(num), den, trunc)
        return s

    @classmethod
    def from_dict(cls, terms: dict[int, object], truncation: int) -> QSeries:
        if not terms:
            return cls(truncation, [], truncation)
        start = min(terms)
        coeffs = [terms.get(e, 0) for e in range(start, truncation)]
        return cls(start, coeffs, truncation)

    @classmethod
    def monomial(cls, exponent: int, truncation: int, coeff=1) -> QSeries:
        if exponent >= truncation:
            return cls(truncation, [], truncation)
        return cls(exponent, [coeff] + [0] * (truncation - exponent - 1), truncation)

    @classmethod
    def constant(cls, value, truncation: int) -> QSeries:
        return cls.monomial(0, truncation, value)

    # ---------------------------------------------------------------- access
    @property
    def start(self) -> int:
        return self._start

    @property
    def truncation(self) -> int:
        return self._trunc

    @property
    def denominator(self) -> int:
        """Common denominator of all stored coefficients."""
        return self._den

    @property
    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient (None if all known ones vanish)."""
        for i, x in enumerate(self._num):
            if x:
                return self._start + i
        return None

    def _effective_valuation(self) -> int:
        v = self.valuation
        return self._trunc if v is None else v

    def __getitem__(self, e: int) -> Fraction:
        if e >= self._trunc:
            raise TruncationError(f"coefficient of q^{e} unknown (series known below q^{self._trunc})")
        if e < self._start:
            return Fraction(0)
        return Fraction(self._num[e - self._start], self._den)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(x, self._den) for x in self._num]

    def items(self):
        for i, x in enumerate(self._num):
            yield self._start + i, Fraction(x, self._den)

    def is_integral(self) -> bool:
        return self._den == 1

    def integer_coeffs(self) -> list[int]:
        if self._den != 1:
            raise ValueError("series has non-integral coefficients")
        return list(self._num)

    def _dense(self, start: int, stop: int) -> list[int]:
        """Numerators for exponents start..stop-1 (zeros below own start)."""
        out = []
        for e in range(start, stop):
            if e < self._start:
                out.append(0)
            else:
                out.append(self._num[e - self._start])
        return out

    # ------------------------------------------------------------ arithmetic
    def truncate(self, n: int) -> QSeries:
        if n > self._trunc:
            raise TruncationError(f"cannot extend truncation from {self._trunc} to {n}", self._trunc)
        if n <= self._start:
            return QSeries._raw(n, [], 1, n)
        return QSeries._raw(self._start, self._num[: n - self._start], self._den, n)

    def shift(self, k: int) -> QSeries:
        """Multiply by q^k."""
        return QSeries._raw(self._start + k, self._num, self._den, self._trunc + k)

    def _combine(self, other: QSeries, sign: int) -> QSeries:
        start = min(self._start, other._start)
        trunc = min(self._trunc, other._trunc)
        if trunc <= start:
            return QSeries._raw(trunc, [], 1, trunc)
        den = self._den * other._den // math.gcd(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        a = self._dense(start, trunc)
        b = other._dense(start, trunc)
        return QSeries._raw(start, [x * fa + sign * y * fb for x, y in zip(a, b)], den, trunc)

    def _coerce(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return other
        return QSeries.constant(_as_fraction(other), max(self._trunc, 1))

    def __add__(self, other):
        return self._combine(self._coerce(other), 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(self._coerce(other), -1)

    def __rsub__(self, other):
        return self._coerce(other)._combine(self, -1)

    def __neg__(self):
        return QSeries._raw(self._start, [-x for x in self._num], self._den, self._trunc)

    def scale(self, c) -> QSeries:
        c = _as_fraction(c)
        return QSeries._raw(self._start, [x * c.numerator for x in self._num], self._den * c.denominator, self._trunc)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        va, vb = self._effective_valuation(), other._effective_valuation()
        start = self._start + other._start
        trunc = min(self._trunc + vb, other._trunc + va)
        if trunc <= start:
            return QSeries._raw(trunc, [], 1, trunc)
        num = _convolve(self._num, other._num, trunc - start)
        return QSeries._raw(start, num, self._den * other._den, trunc)

    def __rmul__(self, other):
        return self.scale(other)

    def inverse(self) -> QSeries:
        v = self.valuation
        if v is None:
            raise ZeroDivisionError("cannot invert a series whose known coefficients all vanish")
        if v != self._start:
            return self._strip().inverse()
        n = self._trunc - v  # relative precision
        a = self._num
        a0 = a[0]
        # b = den/a(q) ; work with Fractions only through a common scale a0^k
        out: list[Fraction] = [Fraction(self._den, a0)]
        for k in range(1, n):
            s = Fraction(0)
            for i in range(1, min(k, len(a) - 1) + 1):
                if a[i]:
                    s += a[i] * out[k - i]
            out.append(-s / a0)
        return QSeries(-v, out, -v + n)

    def _strip(self) -> QSeries:
        v = self.valuation
        if v is None or v == self._start:
            return self
        return QSeries._raw(v, self._num[v - self._start:], self._den, self._trunc)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        c = _as_fraction(other)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / c)

    def __pow__(self, e: int) -> QSeries:
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are supported")
        if e == 0:
            return QSeries.constant(1, max(self._trunc - self._effective_valuation(), 1))
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ------------------------------------------------------------- comparison
    def agrees_with(self, other: QSeries, upto: int | None = None) -> bool:
        """True iff coefficients match for every exponent both series know (below ``upto``)."""
        stop = min(self._trunc, other._trunc)
        if upto is not None:
            stop = min(stop, upto)
        start = min(self._start, other._start)
        if stop <= start:
            return True
        for e in range(start, stop):
            if self[e] != other[e]:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._trunc == other._trunc and self.agrees_with(other)

    def __hash__(self):
        s = self._strip()
        return hash((s._start, s._num, s._den, s._trunc))

    def evaluate(self, q):
        """Sum the known terms at a numeric q (mpmath or Python numbers)."""
        total = 0
        qe = q ** self._start
        for x in self._num:
            if x:
                total += qe * x
            qe *= q
        return total / self._den if self._den != 1 else total

    def __repr__(self):
        terms = []
        for e, c in self.items():
            if c and len(terms) < 6:
                terms.append(f"{c}*q^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^{self._trunc}))"


# ------------------------------------------------------------------ arithmetic


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def series_inv(a: QSeries) -> QSeries:
    return a.inverse()


def series_pow(a: QSeries, e: int) -> QSeries:
    if e < 1:
        raise ValueError("exponent must be a positive integer")
    return a**e


def series_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def series_sub(a: QSeries, b: QSeries) -> QSeries:
    return a - b


def scalar_mul(c, a: QSeries) -> QSeries:
    return a.scale(c)


# --------------------------------------------------------- number theory bits

_bernoulli_cache: list[Fraction] = [Fraction(1)]


def _bernoulli_upto(n: int) -> None:
    # sum_{j=0}^{k} C(k+1, j) B_j = 0 ; list.append is atomic under the GIL
    cache = _bernoulli_cache
    while len(cache) <= n:
        k = len(cache)
        s = sum(math.comb(k + 1, j) * cache[j] for j in range(k))
        cache.append(-s / (k + 1))


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k for even k >= 2 (B_2 = 1/6, B_12 = -691/2730)."""
    if not isinstance(k, int) or k < 2 or k % 2:
        raise ValueError(f"bernoulli: k must be an even integer >= 2, got {k!r}")
    _bernoulli_upto(k)
    return _bernoulli_cache[k]


def divisors(n: int) -> list[int]:
    if n <= 0:
        raise ValueError(f"divisors: n must be positive, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(nu: int, n: int) -> int:
    """Divisor power sum sigma_nu(n)."""
    if nu < 0:
        raise ValueError("sigma: nu must be nonnegative")
    if n <= 0:
        raise ValueError(f"sigma: n must be positive, got {n}")
    return sum(d**nu for d in divisors(n))


@lru_cache(maxsize=None)
def _sigma_table(nu: int, n: int) -> tuple[int, ...]:
    """sigma_nu(i) for 0 <= i < n (entry 0 is unused and set to 0), by sieving."""
    out = [0] * n
    for d in range(1, n):
        p = d**nu
        for mult in range(d, n, d):
            out[mult] += p
    return tuple(out)


# ------------------------------------------------------------- modular forms


def _order(ctx: PrecisionContext | None, N: int | None) -> int:
    if N is not None:
        return N
    return (ctx or DEFAULT_CONTEXT).series_order


@lru_cache(maxsize=64)
def _eisenstein(k: int, N: int) -> QSeries:
    factor = Fraction(-2 * k) / bernoulli(k)
    sig = _sigma_table(k - 1, N)
    return QSeries(0, [1] + [factor * sig[n] for n in range(1, N)], N)


def eisenstein(k: int, ctx: PrecisionContext | None = None, N: int | None = None) -> QSeries:
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, to O(q^N).

    The factor is 2k/B_k: this is what gives E_4 = 1 + 240q + ... and
    E_10 = 1 - 264q - ...
    """
    if not isinstance(k, int) or k < 2 or k % 2:
        raise ValueError(f"eisenstein: k must be an even integer >= 2, got {k!r}")
    return _eisenstein(k, _order(ctx, N))


@lru_cache(maxsize=32)
def _delta(N: int) -> QSeries:
    # E_4^3 - E_6^2 starts at q^1, so compute the Eisenstein series one term further
    e4 = _eisenstein(4, N)
    e6 = _eisenstein(6, N)
    d = (e4**3 - e6**2) / 1728
    return d


def delta(ctx: PrecisionContext | None = None, N: int | None = None) -> QSeries:
    """Ramanujan's Delta = (E_4^3 - E_6^2)/1728 = q - 24q^2 + ..., to O(q^N)."""
    return _delta(_order(ctx, N))


@lru_cache(maxsize=32)
def _j(N: int) -> QSeries:
    # Delta = q*(unit): its inverse loses two orders, so build from N+2 terms
    return (_eisenstein(4, N + 2) ** 3 * _delta(N + 2).inverse()).truncate(N)


def jfunction(ctx: PrecisionContext | None = None, N: int | None = None) -> QSeries:
    """j = E_4^3/Delta = q^-1 + 744 + 196884 q + ..., to O(q^N)."""
    return _j(_order(ctx, N))


def _tau_order(n: int) -> int:
    N = 64
    while N <= n:
        N *= 2
    return N


def tau(n: int, ctx: PrecisionContext | None = None) -> int:
    """Ramanujan's tau(n), the q^n coefficient of Delta.

    With a context the request must lie inside its series order; without one
    Delta is expanded as far as needed.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"tau: n must be a positive integer, got {n!r}")
    if ctx is not None:
        if n >= ctx.series_order:
            raise TruncationError(
                f"tau({n}) needs series order > {n}, context has {ctx.series_order}", n + 1
            )
        N = ctx.series_order
    else:
        N = _tau_order(n)
    c = _delta(N)[n]
    assert c.denominator == 1
    return c.numerator


# ---------------------------------------------------------------- Hecke action


def hecke_holomorphic(f: QSeries, k: int, m: int, n_out: int) -> QSeries:
    """Weight k Hecke operator T_k(m) on a (meromorphic) q-expansion.

    The q^n coefficient of the image is sum_{d | (m, n), d > 0} d^(k-1) c(mn/d^2).
    Returns the image known below q^n_out; needs f known below q^(m(n_out-1)+1).
    """
    if m < 1:
        raise ValueError(f"hecke_holomorphic: m must be positive, got {m}")
    need = m * (n_out - 1) + 1
    if f.truncation < need:
        raise TruncationError(
            f"T_{k}({m}) to O(q^{n_out}) needs input known below q^{need}, have q^{f.truncation}",
            need,
        )
    v = f.valuation
    if v is None:
        return QSeries(n_out, [], n_out)
    start = min(v * m, v, n_out)
    out = []
    for n in range(start, n_out):
        s = Fraction(0)
        g = math.gcd(m, n) if n else m
        for d in divisors(g):
            idx = m * n // (d * d)
            if idx < v:
                continue
            c = f[idx]
            if c:
                s += c * (Fraction(d) ** (k - 1))
        out.append(s)
    return QSeries(start, out, n_out)
