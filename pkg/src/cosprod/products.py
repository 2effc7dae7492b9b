"""Partial cosine products converging to sin(x)/x, and their spectra.

For an integer base p >= 2, the level-k factor is the characteristic
function of p equally spaced point masses, and the n-fold product of these
factors converges to sinc quadratically in p^(-n).  Base 2 recovers the
classical half-angle product behind Vieta's nested radicals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import AtomCapExceeded, BadBase
from .measure import ATOM_CAP, DiscreteMeasure, convolve, dirac

TWO_OVER_PI = 2.0 / math.pi


@dataclass(frozen=True)
class ProductSpec:
    """A base p and depth n identifying the partial product of n factors."""

    base: int
    depth: int

    def __post_init__(self):
        if self.base < 2:
            raise BadBase(f"base must be >= 2, got {self.base}")
        if self.depth < 0:
            raise ValueError(f"depth must be >= 0, got {self.depth}")


def sinc(x: float) -> float:
    """sin(x)/x with the removable singularity filled in at 0.

    Below |x| = 1e-4 the direct ratio is replaced by the Taylor expansion
    1 - x^2/6 + x^4/120; at the switch point the branches agree to < 1e-16.
    """
    if abs(x) < 1e-4:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return math.sin(x) / x


def basep_factor(p: int, k: int, x: float) -> float:
    """Level-k factor of the base-p product.

    Even p:  (1/p) * sum over odd m in [1, p-1] of 2*cos(m*x/p^k).
    Odd p:   (1/p) * (1 + sum over even m in [2, p-1] of 2*cos(m*x/p^k)).
    """
    if p < 2:
        raise BadBase(f"base must be >= 2, got {p}")
    if k < 1:
        raise ValueError(f"factor index must be >= 1, got {k}")
    pk = float(p**k)
    if p % 2 == 0:
        s = 0.0
        for m in range(1, p, 2):
            s += 2.0 * math.cos(m * x / pk)
    else:
        s = 1.0
        for m in range(2, p, 2):
            s += 2.0 * math.cos(m * x / pk)
    return s / p


def basep_partial(spec: ProductSpec, x: float) -> float:
    """Product of the first `spec.depth` base-p factors; depth 0 gives 1."""
    r = 1.0
    for k in range(1, spec.depth + 1):
        r *= basep_factor(spec.base, k, x)
    return r


def telescoping_check(n: int, x: float) -> float:
    """Residual of the double-angle telescope at depth n.

    Returns 2^n * sin(x/2^n) * prod_{k<=n} cos(x/2^k) - sin(x), which is an
    exact identity, so anything nonzero is floating-point noise.
    """
    if n < 0:
        raise ValueError(f"depth must be >= 0, got {n}")
    prod = 1.0
    for k in range(1, n + 1):
        prod *= math.cos(x / 2.0**k)
    return 2.0**n * math.sin(x / 2.0**n) * prod - math.sin(x)


def basep_spectrum(spec: ProductSpec, atom_cap: int = ATOM_CAP) -> DiscreteMeasure:
    """The measure whose characteristic function is basep_partial.

    Built as the convolution of the level factors
    (1/p) * sum_{l=0}^{p-1} delta_{(2l+1-p)/p^k}, k = 1..n, giving p^n atoms
    of weight p^(-n) equally spaced from -1+1/p^n to 1-1/p^n.
    """
    p, n = spec.base, spec.depth
    if p**n > atom_cap:
        raise AtomCapExceeded(f"{p}^{n} atoms exceeds cap {atom_cap}")
    m = dirac(0)
    w = 1.0 / p
    for k in range(1, n + 1):
        den = p**k
        factor = DiscreteMeasure.from_pairs(
            (Fraction(2 * l + 1 - p, den), w) for l in range(p)
        )
        m = convolve(m, factor, atom_cap)
    return m


def vieta_partial(n: int) -> tuple[list[float], float]:
    """First n nested-radical terms sqrt(2 + ...)/2 and their product.

    terms[0] = sqrt(2)/2 and a_{k+1} = sqrt(2 + a_k) iteratively; the
    product converges to 2/pi.  Term k equals cos(pi/2^(k+1)), but the
    radical recurrence is the implementation and that equality is left to
    the tests.
    """
    if n < 1:
        raise ValueError(f"need at least one term, got {n}")
    terms: list[float] = []
    a = 0.0
    prod = 1.0
    for _ in range(n):
        a = math.sqrt(2.0 + a)
        t = a / 2.0
        terms.append(t)
        prod *= t
    return terms, prod


def riemann_factor(p: int, x: float) -> float:
    """First base-p factor on its own.

    As p grows this single factor already approaches sinc(x): it is a
    midpoint Riemann sum of (1/2) * integral of cos(w*x) over [-1, 1],
    with O(p^-2) error.
    """
    return basep_factor(p, 1, x)
