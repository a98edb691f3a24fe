"""Precision settings threaded through the exact and numeric layers."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

import mpmath


@dataclass(frozen=True)
class PrecisionContext:
    """Working parameters shared by every operation.

    ``series_order`` is the q-expansion truncation N (coefficients known for
    exponents < N), ``c_max`` caps Kloosterman/Bessel sums, ``work_precision``
    is in decimal digits, ``root_tol`` is the width target for root
    refinement, and ``n_max`` is the minimum number of Fourier terms used when
    evaluating Poincare series (more are added until the tail is negligible).
    """

    series_order: int = 64
    c_max: int = 10_000
    work_precision: int = 60
    root_tol: Fraction = Fraction(1, 10**30)
    n_max: int = 40

    def __post_init__(self):
        if self.series_order < 2:
            raise ValueError(f"series_order must be >= 2, got {self.series_order}")
        if self.c_max < 1:
            raise ValueError(f"c_max must be >= 1, got {self.c_max}")
        if self.work_precision < 30:
            raise ValueError(f"work_precision must be >= 30, got {self.work_precision}")
        tol = Fraction(self.root_tol)
        if tol <= 0:
            raise ValueError("root_tol must be positive")
        object.__setattr__(self, "root_tol", tol)
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")

    def replace(self, **changes) -> PrecisionContext:
        return dataclasses.replace(self, **changes)

    def at_least(self, series_order: int) -> PrecisionContext:
        """Same context with the series order raised to ``series_order`` if needed."""
        if series_order <= self.series_order:
            return self
        return self.replace(series_order=series_order)

    def workdps(self, extra: int = 0):
        """``mpmath.workdps`` context manager at this context's precision."""
        return mpmath.workdps(self.work_precision + extra)


DEFAULT_CONTEXT = PrecisionContext()
