"""Truncated Cantor sets, the uniform measures on them, and their transforms.

Level n keeps the 2^n points of [0, 1) whose ternary expansion uses only
digits 0 and 2 in the first n places.  The uniform measure on those points
is a finite convolution of two-point factors, its characteristic function a
finite complex product, and the limiting CDF is the Cantor function.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DepthTooLarge, OutOfDomain
from .measure import ATOM_CAP, DiscreteMeasure, shifted_coin_sum_measure

# 3^20 keeps every point's denominator (and sums of them) inside 64 bits.
MAX_DEPTH = 20


@dataclass(frozen=True)
class TernaryPoint:
    """A point sum_k digits[k] / 3^(k+1) with every digit 0 or 2."""

    digits: tuple[int, ...]

    def __post_init__(self):
        if any(d not in (0, 2) for d in self.digits):
            raise ValueError("digits must be 0 or 2")

    @property
    def value(self) -> Fraction:
        num = 0
        for d in self.digits:
            num = 3 * num + d
        return Fraction(num, 3 ** len(self.digits))


def cantor_points(n: int) -> list[Fraction]:
    """All 2^n level-n points, ascending, as exact rationals over 3^n."""
    if not 1 <= n <= MAX_DEPTH:
        raise DepthTooLarge(f"level must be in 1..{MAX_DEPTH}, got {n}")
    pts = [Fraction(0)]
    for k in range(1, n + 1):
        step = Fraction(2, 3**k)
        pts += [p + step for p in pts]
    pts.sort()
    return pts


def cantor_measure(n: int) -> DiscreteMeasure:
    """Uniform probability measure on the level-n points: weight 2^-n each.

    Identical, atom for atom, to the convolution product of the factors
    (1/2)(delta_0 + delta_{2/3^k}) for k = 1..n.
    """
    if not 1 <= n <= MAX_DEPTH:
        raise DepthTooLarge(f"level must be in 1..{MAX_DEPTH}, got {n}")
    return shifted_coin_sum_measure([(0, Fraction(2, 3**k)) for k in range(1, n + 1)])


def cantor_cdf(x: float | Fraction | int, depth: int) -> float:
    """Cantor function value at x in [0, 1], from a ternary digit scan.

    Each ternary digit t in {0, 2} emits the binary digit t/2; the first
    digit 1 emits binary 1 and stops (the function is constant across the
    gap that digit opens).  The scan runs `depth` digits, so the result is
    within 2^-depth of the exact value.

    The scan is exact for any input: floats are dyadic rationals and are
    converted losslessly, so deep digits never suffer drift.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    q = Fraction(x)
    if q < 0 or q > 1:
        raise OutOfDomain(f"x must lie in [0, 1], got {x}")
    if q == 1:
        return 1.0
    num, den = q.numerator, q.denominator
    acc = 0.0
    for k in range(1, depth + 1):
        num *= 3
        digit, num = divmod(num, den)
        if digit == 1:
            acc += 2.0**-k
            break
        if digit == 2:
            acc += 2.0**-k
    return acc


def cantor_char_complex(x: float, n: int) -> complex:
    """Finite product prod_{k<=n} (1/2)(1 + exp(2*x*i/3^k))."""
    if n < 0:
        raise ValueError(f"depth must be >= 0, got {n}")
    z = complex(1.0)
    for k in range(1, n + 1):
        z *= 0.5 * (1.0 + cmath.exp(complex(0.0, 2.0 * x / 3**k)))
    return z


def cantor_cos_product(x: float, n: int) -> float:
    """Finite product prod_{k<=n} cos(2*x/3^k)."""
    if n < 0:
        raise ValueError(f"depth must be >= 0, got {n}")
    r = 1.0
    for k in range(1, n + 1):
        r *= math.cos(2.0 * x / 3**k)
    return r


def affine_phase_identity(x: float, n: int) -> float:
    """Deviation in the phase identity linking the two finite products.

    Since (1/2)(1 + e^(i*t)) = e^(i*t/2) * cos(t/2), the complex product at
    argument 2x carries the accumulated phase x * (1 - 3^-n) on top of the
    cosine product:

        cantor_char_complex(2x, n) * exp(-i*x*(1 - 3^-n))
            = cantor_cos_product(x, n).

    Returns |lhs - rhs|, which is floating-point noise for all x and n.
    """
    if n < 1:
        raise ValueError(f"depth must be >= 1, got {n}")
    phase = cmath.exp(complex(0.0, -x * (1.0 - 3.0**-n)))
    return abs(cantor_char_complex(2.0 * x, n) * phase - cantor_cos_product(x, n))
