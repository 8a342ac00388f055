"""Scalar special functions: error function pair and the Gumbel law.

All functions reject NaN and are otherwise pure; they are safe for
unrestricted concurrent use.
"""
from __future__ import annotations

import math

from .errors import DomainError

__all__ = ["erf", "erfc", "gumbel_cdf", "gumbel_pdf"]


def _reject_nan(x: float, name: str) -> float:
    x = float(x)
    if math.isnan(x):
        raise DomainError(f"{name}: NaN input")
    return x


def erf(x: float) -> float:
    """Error function, odd-symmetric, absolute error below 1e-15."""
    return math.erf(_reject_nan(x, "erf"))


def erfc(x: float) -> float:
    """Complementary error function with full relative accuracy in the tail.

    Unlike 1 - erf(x), this keeps relative precision for large positive x
    (down to where the true value underflows double precision).
    """
    return math.erfc(_reject_nan(x, "erfc"))


def gumbel_cdf(x: float) -> float:
    """Gumbel distribution function exp(-exp(-x))."""
    return math.exp(-math.exp(-_reject_nan(x, "gumbel_cdf")))


def gumbel_pdf(x: float) -> float:
    """Gumbel density exp(-x - exp(-x))."""
    x = _reject_nan(x, "gumbel_pdf")
    return math.exp(-x - math.exp(-x))
