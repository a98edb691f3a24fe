"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .qseries import _as_fraction


class Poly:
    """Polynomial sum c_i x^i with ``coeffs[i] = c_i`` (exact rationals).

    Trailing zeros are stripped, so ``degree`` is -1 only for the zero
    polynomial.  Integral polynomials keep ``int`` coefficients.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        cs = []
        for c in coeffs:
            f = _as_fraction(c)
            cs.append(f.numerator if f.denominator == 1 else f)
        while cs and cs[-1] == 0:
            cs.pop()
        self._c = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        p = cls([1])
        for r in roots:
            p = p * cls([-_as_fraction(r), 1])
        return p

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def leading(self):
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"polynomial {self} has non-integral coefficients")
        return list(self._c)

    def __getitem__(self, i: int):
        return self._c[i] if 0 <= i < len(self._c) else 0

    # ------------------------------------------------------------ arithmetic
    def _coerce(self, other) -> Poly:
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self._c), len(other._c))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self._c), len(other._c))
        return Poly(self[i] - other[i] for i in range(n))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Poly(-c for c in self._c)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _as_fraction(other)
            return Poly(a * c for a in self._c)
        if not self._c or not other._c:
            return Poly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for k, b in enumerate(other._c):
                    out[i + k] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        out = Poly([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self._c]
        d = other.degree
        lead = Fraction(other.leading())
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - d] = c
                for k in range(d + 1):
                    rem[i - d + k] -= c * other[k]
        return Poly(quot), Poly(rem[:d] if d > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self._c) if i)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    # ----------------------------------------------------------------- text
    def __str__(self):
        return format_poly(self._c)

    def __repr__(self):
        return f"Poly({list(self._c)!r})"


def _fmt_num(c) -> str:
    return str(c)


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    """Human form, highest degree first: ``x^2 - 1728x``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if i == 0:
            body = _fmt_num(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{_fmt_num(a)}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
