"""Normalizing constants for maxima of Maxwell samples.

The base constant b_n solves

    sqrt(pi/2) (sigma / b) exp(b^2 / 2 sigma^2) = n         (b > sigma)

and a_n = sigma^2 / b_n. Powered maxima |M_n|^t use linear constants
(c_n, d_n) that depend on whether t equals 2; at t = 2 two competing
choices exist (the variance-style pair below marked "optimal" converges
faster than the "alternative" one).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ConfigurationError, DegenerateError, DomainError, NoRootError

__all__ = [
    "Scheme",
    "NormingBase",
    "PoweredNorming",
    "HallConstants",
    "solve_bn",
    "equation_residual",
    "powered_constants",
    "hall_constants",
    "hall_base",
    "validate_scheme",
]

# Minimum of sqrt(pi/2) (sigma/b) exp(b^2/2s^2) over b > 0 is sqrt(pi/2) e^0.5
# ~ 2.066, attained at b = sigma; a root with b > sigma exists iff n > that.
_MIN_N = 3


class Scheme(str, enum.Enum):
    """Norming scheme for the powered maximum."""

    GENERAL_POWER = "general-power"
    SQUARE_OPTIMAL = "square-optimal"
    SQUARE_ALTERNATIVE = "square-alternative"


@dataclass(frozen=True)
class NormingBase:
    """Solved base constants (b_n, a_n) for sample size n and scale sigma."""

    n: int
    sigma: float
    b_n: float
    a_n: float


@dataclass(frozen=True)
class PoweredNorming:
    """Linear norming (c_n, d_n) for |M_n|^t under a given scheme."""

    t: float
    scheme: Scheme
    c_n: float
    d_n: float


@dataclass(frozen=True)
class HallConstants:
    """Closed-form norming constants a_hat, b_hat.

    b_hat agrees with the solved b_n only to first asymptotic order; the two
    differ by O(log(log n)^2 / log n) effects in the resulting maxima law.
    """

    a_hat: float
    b_hat: float


def _check_n_sigma(n, sigma, minimum=_MIN_N):
    if not isinstance(n, (int,)) or isinstance(n, bool):
        if isinstance(n, float) and n.is_integer():
            n = int(n)
        else:
            raise DomainError(f"n must be an integer, got {n!r}")
    sigma = float(sigma)
    if not (math.isfinite(sigma) and sigma > 0):
        raise DomainError(f"sigma must be a positive finite real, got {sigma!r}")
    return n, sigma


def equation_residual(b: float, n: int, sigma: float) -> float:
    """Relative residual (LHS - n)/n of the norming equation, in log space.

    exp(h) - 1 where h = log LHS - log n; exact for assessing the solve and
    immune to overflow of exp(b^2/2 sigma^2) at astronomical n.
    """
    h = (
        0.5 * math.log(math.pi / 2.0)
        + math.log(sigma)
        - math.log(b)
        + b * b / (2.0 * sigma * sigma)
        - math.log(n)
    )
    return math.expm1(h)


def solve_bn(n: int, sigma: float = 1.0) -> NormingBase:
    """Solve the norming equation for b_n on the b > sigma branch.

    Newton iteration on the log-form residual, seeded with the closed-form
    constant and safeguarded by bisection on [sigma, 4 sigma sqrt(log n)].
    The returned root satisfies |relative residual| <= 1e-13.
    """
    n, sigma = _check_n_sigma(n, sigma)
    if n < _MIN_N:
        raise NoRootError(
            f"no root with b > sigma exists for n = {n}; need n >= {_MIN_N}"
        )
    log_n = math.log(n)
    s2 = sigma * sigma

    def h(b):
        return (
            0.5 * math.log(math.pi / 2.0)
            + math.log(sigma)
            - math.log(b)
            + b * b / (2.0 * s2)
            - log_n
        )

    lo = sigma
    hi = 4.0 * sigma * math.sqrt(max(1.0, log_n))
    b = hall_constants(n, sigma).b_hat
    b = min(max(b, lo * 1.0001), hi * 0.9999)
    for _ in range(100):
        val = h(b)
        if abs(val) < 1e-15:
            break
        if val > 0.0:
            hi = b
        else:
            lo = b
        step = val / (b / s2 - 1.0 / b)  # h'(b) = b/s^2 - 1/b > 0 on b > sigma
        b_new = b - step
        if not (lo < b_new < hi):
            b_new = 0.5 * (lo + hi)
        if b_new == b:
            break
        b = b_new
    return NormingBase(n=n, sigma=sigma, b_n=b, a_n=s2 / b)


def hall_constants(n: int, sigma: float = 1.0) -> HallConstants:
    """Closed-form constants a_hat = sigma/sqrt(2 log n) and the matching b_hat."""
    n, sigma = _check_n_sigma(n, sigma)
    if n < _MIN_N:
        raise DomainError(f"closed-form constants need n >= {_MIN_N}, got {n}")
    log_n = math.log(n)
    root = math.sqrt(2.0 * log_n)
    a_hat = sigma / root
    b_hat = sigma * root + sigma * (math.log(2.0 * log_n) + math.log(2.0 / math.pi)) / (
        2.0 * root
    )
    return HallConstants(a_hat=a_hat, b_hat=b_hat)


def hall_base(n: int, sigma: float = 1.0) -> NormingBase:
    """A NormingBase built from the closed-form b_hat instead of the exact root.

    This is the convention behind the golden reference error tables; it does
    not satisfy the norming-equation residual contract of solve_bn.
    """
    hc = hall_constants(n, sigma)
    return NormingBase(n=n, sigma=float(sigma), b_n=hc.b_hat, a_n=sigma * sigma / hc.b_hat)


def validate_scheme(t: float, scheme: Scheme) -> float:
    """Check scheme/power compatibility; returns t as float."""
    t = float(t)
    if not (math.isfinite(t) and t > 0):
        raise DomainError(f"power index t must be positive and finite, got {t}")
    scheme = Scheme(scheme)
    if scheme is Scheme.GENERAL_POWER and t == 2.0:
        raise ConfigurationError(
            "general-power constants are undefined at t = 2; use a square scheme"
        )
    if scheme is not Scheme.GENERAL_POWER and t != 2.0:
        raise ConfigurationError(f"scheme {scheme.value} requires t = 2, got t = {t}")
    return t


def powered_constants(base: NormingBase, t: float, scheme: Scheme) -> PoweredNorming:
    """Construct (c_n, d_n) for |M_n|^t from solved base constants."""
    scheme = Scheme(scheme)
    t = validate_scheme(t, scheme)
    b = base.b_n
    s2 = base.sigma * base.sigma
    if scheme is Scheme.GENERAL_POWER:
        c = s2 * t * b ** (t - 2.0)
        d = b**t
    elif scheme is Scheme.SQUARE_OPTIMAL:
        c = 2.0 * s2 * (1.0 + s2 / (b * b))
        d = b * b + 2.0 * s2 * s2 / (b * b)
    else:
        c = 2.0 * s2 * (1.0 - s2 / (b * b))
        d = b * b - 2.0 * s2 * s2 / (b * b)
        if c <= 0.0:
            raise DegenerateError(
                f"alternative square constants degenerate: c_n = {c} <= 0 at b_n = {b}"
            )
    return PoweredNorming(t=t, scheme=scheme, c_n=c, d_n=d)
