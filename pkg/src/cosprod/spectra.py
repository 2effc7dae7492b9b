"""Midpoint-rule cosine-transform pipeline for the random harmonic series.

The density of sum_k t_k/k (fair random signs) has no closed form, but it
equals (1/pi) * integral over [0, inf) of cos(w*x) * prod_k cos(x/k) dx.
This module evaluates that integral with the product truncated at N terms
and the integral cut at `upper`, using the midpoint rule with compensated
summation.  The default configuration (upper=15, dx=0.02, N=1000) pins the
reference table the tests reproduce to six decimals.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import BadStep

#: Omega grid of the reference table: 0.0, 0.1, 0.2, then 0.4..3.8 step 0.2.
DEFAULT_OMEGAS: tuple[float, ...] = tuple(j / 10 for j in (0, 1, 2, *range(4, 40, 2)))


@dataclass(frozen=True)
class QuadratureConfig:
    """Integration cutoff, midpoint step, and product truncation length."""

    upper: float = 15.0
    dx: float = 0.02
    truncation: int = 1000

    def __post_init__(self):
        if self.upper <= 0 or self.dx <= 0:
            raise BadStep(f"need upper > 0 and dx > 0, got {self.upper}, {self.dx}")
        if self.truncation < 1:
            raise ValueError("truncation must be >= 1")
        self.subintervals  # validate divisibility up front

    @property
    def subintervals(self) -> int:
        return _subinterval_count(0.0, self.upper, self.dx)


def _subinterval_count(a: float, b: float, dx: float) -> int:
    ratio = (b - a) / dx
    m = round(ratio)
    if m < 1 or abs(ratio - m) > 1e-9:
        raise BadStep(f"step {dx} does not evenly divide [{a}, {b}]")
    return m


def midpoint_integrate(f: Callable[[float], float], a: float, b: float, dx: float) -> float:
    """Midpoint Riemann sum of f over [a, b] with step dx.

    The step must divide the interval into a whole number of subintervals
    (within 1e-9), else BadStep.  Terms are accumulated in order of
    increasing midpoint with Kahan compensation, so results are
    reproducible and the accumulation error stays well under the O(dx^2)
    rule error.
    """
    if not a < b:
        raise BadStep(f"empty interval [{a}, {b}]")
    m = _subinterval_count(a, b, dx)
    s = 0.0
    comp = 0.0
    for j in range(m):
        y = f(a + (j + 0.5) * dx) - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return dx * s


def harmonic_char(x: float, n: int) -> float:
    """prod_{k<=n} cos(x/k), multiplied in increasing k.

    Factors have modulus <= 1, so the plain product is stable; once it
    underflows to exactly 0 the loop stops early.
    """
    if n < 1:
        raise ValueError("need at least one factor")
    r = 1.0
    for k in range(1, n + 1):
        r *= math.cos(x / k)
        if r == 0.0:
            break
    return r


@functools.lru_cache(maxsize=8)
def _char_at_midpoints(cfg: QuadratureConfig) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Midpoints of cfg's grid and harmonic_char there; shared across omegas."""
    mids = tuple((j + 0.5) * cfg.dx for j in range(cfg.subintervals))
    return mids, tuple(harmonic_char(x, cfg.truncation) for x in mids)


def _cosine_transform(omega: float, cfg: QuadratureConfig) -> float:
    # Same arithmetic as midpoint_integrate(lambda x: cos(omega*x)*H(x), ...)
    # with the char values reused across omega rows.
    mids, chars = _char_at_midpoints(cfg)
    s = 0.0
    comp = 0.0
    for x, h in zip(mids, chars):
        y = math.cos(omega * x) * h - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return cfg.dx * s


def harmonic_density(omega: float, cfg: QuadratureConfig) -> float:
    """Density of the random harmonic sum at omega.

    (1/pi) times the midpoint integral of cos(omega*x) * harmonic_char(x, N)
    over [0, upper].  Even in omega by construction.
    """
    return _cosine_transform(omega, cfg) / math.pi


@dataclass(frozen=True)
class DensityTable:
    rows: tuple[tuple[float, float], ...]

    def __post_init__(self):
        omegas = [w for w, _ in self.rows]
        if any(omegas[i] >= omegas[i + 1] for i in range(len(omegas) - 1)):
            raise ValueError("omegas must be strictly increasing")


def density_table(omegas: Sequence[float], cfg: QuadratureConfig) -> DensityTable:
    """Evaluate harmonic_density row by row over a strictly increasing grid."""
    return DensityTable(tuple((w, harmonic_density(w, cfg)) for w in omegas))


def conjecture_integrals(cfg: QuadratureConfig) -> tuple[float, float]:
    """The two truncated integrals suspected of equalling pi/4 and pi/8.

    i0 integrates prod cos(x/k) alone, i2 the same with a cos(2x) factor,
    both over [0, upper].  Callers report how close they come to pi/4 and
    pi/8; nothing here asserts equality.
    """
    i0 = _cosine_transform(0.0, cfg)
    i2 = _cosine_transform(2.0, cfg)
    return i0, i2
