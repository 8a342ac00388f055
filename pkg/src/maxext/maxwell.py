"""The Maxwell distribution: density, distribution, stable tails, sampling.

The survival function is always evaluated through erfc so that it keeps
relative accuracy deep into the tail; it is never computed as 1 - cdf.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfcx

from .errors import DomainError
from .special import erf, erfc

__all__ = [
    "MaxwellParams",
    "pdf",
    "cdf",
    "survival",
    "tail_expansion",
    "tail_remainder",
    "sample",
]

_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)
_SQRT2 = math.sqrt(2.0)

# Coefficients of the tail series 1 + (s/x)^2 - (s/x)^4 + 3 (s/x)^6; the first
# omitted term is -15 (s/x)^8.
_TAIL_COEFFS = (1.0, 1.0, -1.0, 3.0)


@dataclass(frozen=True)
class MaxwellParams:
    """Scale parameter of the Maxwell law."""

    sigma: float

    def __post_init__(self):
        s = self.sigma
        if not (isinstance(s, (int, float)) and math.isfinite(s) and s > 0):
            raise DomainError(f"sigma must be a positive finite real, got {s!r}")
        object.__setattr__(self, "sigma", float(s))


def _check_x(x: float, name: str) -> float:
    x = float(x)
    if math.isnan(x):
        raise DomainError(f"{name}: NaN input")
    return x


def pdf(x: float, p: MaxwellParams) -> float:
    """Density sqrt(2/pi) x^2 sigma^-3 exp(-x^2 / 2 sigma^2); zero for x <= 0."""
    x = _check_x(x, "pdf")
    if x <= 0.0:
        return 0.0
    s = p.sigma
    z = x / s
    return _SQRT_2_OVER_PI * z * z / s * math.exp(-0.5 * z * z)


def cdf(x: float, p: MaxwellParams) -> float:
    """Distribution function erf(x / sigma sqrt(2)) - sqrt(2/pi)(x/sigma) e^{-x^2/2s^2}."""
    x = _check_x(x, "cdf")
    if x <= 0.0:
        return 0.0
    z = x / p.sigma
    return erf(z / _SQRT2) - _SQRT_2_OVER_PI * z * math.exp(-0.5 * z * z)


def survival(x: float, p: MaxwellParams) -> float:
    """Tail probability 1 - F(x), accurate in relative terms for large x.

    Both summands of the erfc-based form are nonnegative, so the result can
    never go negative through cancellation.
    """
    x = _check_x(x, "survival")
    if x <= 0.0:
        return 1.0
    z = x / p.sigma
    return erfc(z / _SQRT2) + _SQRT_2_OVER_PI * z * math.exp(-0.5 * z * z)


def _leading_factor(x: float, p: MaxwellParams) -> float:
    # sigma^2 x^-1 f(x) = sqrt(2/pi) (x/sigma) exp(-x^2 / 2 sigma^2)
    z = x / p.sigma
    return _SQRT_2_OVER_PI * z * math.exp(-0.5 * z * z)


def _tail_partial_sum(x: float, p: MaxwellParams, terms: int) -> float:
    r = (p.sigma / x) ** 2
    total = 0.0
    for coef in reversed(_TAIL_COEFFS[:terms]):
        total = total * r + coef
    return total


def tail_expansion(x: float, p: MaxwellParams, terms: int = 4) -> float:
    """Asymptotic tail approximation sigma^2 x^-1 f(x) (1 + (s/x)^2 - (s/x)^4 + 3(s/x)^6).

    `terms` truncates the bracketed series after 1..4 terms; the remainder of
    the full 4-term form is O((sigma/x)^8).
    """
    x = _check_x(x, "tail_expansion")
    if x <= 0.0:
        raise DomainError(f"tail_expansion requires x > 0, got {x}")
    if terms not in (1, 2, 3, 4):
        raise DomainError(f"terms must be in 1..4, got {terms}")
    return _leading_factor(x, p) * _tail_partial_sum(x, p, terms)


def tail_remainder(x: float, p: MaxwellParams) -> float:
    """Relative remainder survival(x)/(sigma^2 x^-1 f(x)) minus the 4-term series.

    Evaluated through the scaled complementary error function, so it stays
    meaningful even where survival itself underflows double precision
    (x beyond roughly 37 sigma). Scaled by (x/sigma)^8 it tends to -15.
    """
    x = _check_x(x, "tail_remainder")
    if x <= 0.0:
        raise DomainError(f"tail_remainder requires x > 0, got {x}")
    z = x / (p.sigma * _SQRT2)
    # survival / leading = 1 + sqrt(pi) erfcx(z) / (2 z)
    ratio = 1.0 + math.sqrt(math.pi) * float(erfcx(z)) / (2.0 * z)
    return ratio - _tail_partial_sum(x, p, 4)


def sample(rng: np.random.Generator, p: MaxwellParams, size=None):
    """Draw Maxwell variates as sigma * chi(3 d.f.).

    A Maxwell variate is the length of a 3-vector of independent standard
    normals; the chi-square(3) primitive of the generator realises the same
    law in a single stream draw per variate. The caller owns the generator:
    concurrent sampling must use independently seeded substreams.
    """
    q = rng.chisquare(3.0, size=size)
    out = p.sigma * np.sqrt(q)
    if size is None:
        return float(out)
    return out
