"""Faber polynomials of j and divisor polynomials of level one forms.

psi_m is the monic integer polynomial with psi_m(j) = q^-m + O(q).  The
production path reduces powers of j greedily; the generating function
(E_4^2 E_6 / Delta) / (j - x) is kept as an independent check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .context import DEFAULT_CONTEXT, PrecisionContext
from .polynomial import Poly
from .qseries import (
    QSeries,
    TruncationError,
    delta,
    eisenstein,
    hecke_holomorphic,
    jfunction,
)


def _bucket(m: int) -> int:
    b = 16
    while b < m:
        b *= 2
    return b


@lru_cache(maxsize=8)
def _psi_table(M: int) -> tuple[Poly, ...]:
    # j^e loses one known term per factor; j^M must still be known through q^0
    j = jfunction(N=M + 1)
    powers = [QSeries.constant(1, M + 2)]
    for e in range(1, M + 1):
        powers.append(powers[-1] * j)
    table: list[Poly] = []
    for m in range(M + 1):
        coeffs = [0] * (m + 1)
        coeffs[m] = 1
        resid = powers[m]
        for e in range(m - 1, -1, -1):
            c = resid[-e]
            if c:
                coeffs[e] -= int(c)
                resid = resid - powers[e].scale(c)
        table.append(Poly(coeffs))
    return tuple(table)


def faber_psi(m: int, ctx: PrecisionContext | None = None) -> Poly:
    """psi_m: monic, degree m, integer coefficients, psi_m(j) = q^-m + O(q)."""
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"faber_psi: m must be a nonnegative integer, got {m!r}")
    return _psi_table(_bucket(m))[m]


def faber_psi_range(m_max: int) -> list[Poly]:
    """psi_0, ..., psi_{m_max}."""
    table = _psi_table(_bucket(m_max))
    return list(table[: m_max + 1])


# --- generating-function oracle -------------------------------------------
# Two-variable series: list index = power of q, entries are integer
# coefficient lists in x.


def _padd(a: list[int], b: list[int], s: int = 1) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + s * (b[i] if i < len(b) else 0) for i in range(n)]


def _pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                out[i + k] += x * y
    return out


def faber_via_generating(m_max: int, ctx: PrecisionContext | None = None) -> list[Poly]:
    """psi_0..psi_{m_max} read off sum psi_m(x) q^m = (E_4^2 E_6/Delta) / (j(q) - x)."""
    ctx = ctx or DEFAULT_CONTEXT
    if ctx.series_order <= m_max:
        raise TruncationError(
            f"generating function to q^{m_max} needs series order > {m_max}", m_max + 1
        )
    n = m_max + 1
    j = jfunction(N=n)
    # q*(j - x) = 1 + (744 - x) q + c(1) q^2 + ...  (unit with coefficients in Z[x])
    unit = []
    for i in range(n):
        c = int(j[i - 1])
        unit.append([c, -1] if i == 1 else [c])
    inv = [[1]]
    for k in range(1, n):
        acc: list[int] = []
        for i in range(1, k + 1):
            acc = _padd(acc, _pmul(unit[i], inv[k - i]))
        inv.append([-c for c in acc])
    # E_4^2 E_6 / Delta = q^-1 * w(q) with w integral; 1/(j-x) = q * inv
    w = eisenstein(4, N=n + 1) ** 2 * eisenstein(6, N=n + 1) * delta(N=n + 2).inverse()
    wq = [int(w[i - 1]) for i in range(n)]
    out = []
    for m in range(n):
        acc = []
        for i in range(m + 1):
            if wq[i]:
                acc = _padd(acc, [wq[i] * c for c in inv[m - i]])
        out.append(Poly(acc))
    return out


# --- evaluation and Hecke images -------------------------------------------


def evaluate_poly_at_series(p: Poly, s: QSeries) -> QSeries:
    """Horner evaluation of p at the series s, in the exact series ring."""
    if p.is_zero():
        return QSeries.constant(0, s.truncation)
    v = s.valuation
    # exact constant: give it enough known terms not to limit the product
    acc = QSeries.constant(p.leading(), max(s.truncation - min(v or 0, 0), 1))
    for c in reversed(p.coeffs[:-1]):
        acc = acc * s + c
    if s.start < 0 and acc.truncation <= s.start * p.degree:
        raise TruncationError(
            f"evaluating a degree {p.degree} polynomial at a series known below q^{s.truncation} "
            "leaves no known coefficients",
            None,
        )
    return acc


def hecke_image_j1(m: int, ctx: PrecisionContext | None = None, n_out: int | None = None) -> QSeries:
    """m * (j_1 | T_0(m)) with j_1 = j - 744, known below q^n_out."""
    if m < 1:
        raise ValueError(f"hecke_image_j1: m must be positive, got {m}")
    ctx = ctx or DEFAULT_CONTEXT
    N = ctx.series_order
    if n_out is None:
        n_out = (N - 1) // m + 1
    j1 = jfunction(ctx) - 744
    return hecke_holomorphic(j1, 0, m, n_out).scale(m)


# --- divisor polynomials ----------------------------------------------------


def _check_even(k: int, name: str):
    if not isinstance(k, int) or k % 2:
        raise ValueError(f"{name}: k must be an even integer, got {k!r}")


def m_exp(k: int) -> int:
    """m(k) = floor(k/12), minus one when k = 2 (mod 12)."""
    _check_even(k, "m_exp")
    return k // 12 - (1 if k % 12 == 2 else 0)


def h_k(k: int) -> Poly:
    """Polynomial recording the forced zeros at omega (x = 0) and i (x = 1728)."""
    _check_even(k, "h_k")
    x = Poly.x()
    table = {
        0: Poly([1]),
        2: x * x * (x - 1728),
        4: x,
        6: x - 1728,
        8: x * x,
        10: x * (x - 1728),
    }
    return table[k % 12]


def tilde_e(k: int, ctx: PrecisionContext | None = None, N: int | None = None) -> QSeries:
    """The low weight Eisenstein product carrying the trivial zeros of weight k forms."""
    _check_even(k, "tilde_e")
    N = N if N is not None else (ctx or DEFAULT_CONTEXT).series_order
    e4 = eisenstein(4, N=N)
    e6 = eisenstein(6, N=N)
    r = k % 12
    if r == 0:
        return QSeries.constant(1, N)
    return {2: e4 * e4 * e6, 4: e4, 6: e6, 8: e4 * e4, 10: e4 * e6}[r]


def reduce_to_j_polynomial(g: QSeries) -> Poly:
    """Express a modular function given by its q-expansion as a polynomial in j.

    Every known coefficient after removing the polynomial part must vanish;
    otherwise the series is not a polynomial in j and ValueError is raised.
    """
    v = g.valuation
    if v is None:
        return Poly()
    if g.truncation < 1:
        raise TruncationError("need coefficients through q^0 at least", 1)
    top = max(-v, 0)
    # greedy reduction against powers of j, highest pole first
    j = jfunction(N=g.truncation + top)
    powers = [QSeries.constant(1, g.truncation + top + 1)]
    for _ in range(top):
        powers.append(powers[-1] * j)
    coeffs = [Fraction(0)] * (top + 1)
    resid = g
    for e in range(top, -1, -1):
        c = resid[-e]
        if c:
            coeffs[e] = c
            resid = resid - powers[e].truncate(g.truncation).scale(c)
    poly = Poly(coeffs)
    for e, c in resid.items():
        if c:
            raise ValueError(
                f"not a polynomial in j: residual coefficient {c} at q^{e} "
                "(input is not a holomorphic modular form of the stated weight)"
            )
    return poly


def divisor_polynomial(f: QSeries, k: int, ctx: PrecisionContext | None = None) -> Poly:
    """F(f; x) = h_k(x) * F~(f; x) with F~(f; j) = f / (Delta^m(k) * E~_k)."""
    _check_even(k, "divisor_polynomial")
    if k < 4:
        raise ValueError(f"divisor_polynomial: weight must be >= 4, got {k}")
    N = f.truncation
    mk = m_exp(k)
    denom = tilde_e(k, N=N + 2 * mk)
    if mk:
        denom = denom * delta(N=N + 2 * mk) ** mk
    g = f * denom.inverse()
    if g.truncation < 2:
        raise TruncationError(
            f"weight {k} form needs more than {N} known coefficients to check holomorphy", N + 2
        )
    return h_k(k) * reduce_to_j_polynomial(g)
