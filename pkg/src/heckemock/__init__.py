"""Hecke polynomials attached to the mock modular form M_Delta of weight -10."""

from .context import DEFAULT_CONTEXT, PrecisionContext
from .faber import divisor_polynomial, faber_psi
from .heckepoly import hecke_poly_f, hecke_poly_f_oracle
from .polynomial import Poly
from .qseries import QSeries, delta, eisenstein, jfunction, tau

__all__ = [
    "DEFAULT_CONTEXT",
    "PrecisionContext",
    "Poly",
    "QSeries",
    "delta",
    "divisor_polynomial",
    "eisenstein",
    "faber_psi",
    "hecke_poly_f",
    "hecke_poly_f_oracle",
    "jfunction",
    "tau",
]

__version__ = "0.1.0"
