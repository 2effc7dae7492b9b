"""Finite discrete measures: weighted point masses at exact rational locations.

Locations are `fractions.Fraction` values kept within the signed 64-bit
range for numerator and denominator; arithmetic that would leave that range
raises `LocationOverflow` instead of silently growing.  Weights are floats.
Atoms at coinciding locations are merged by exact rational equality, never
by an epsilon, so constructions with very close but distinct support points
(Cantor-type sets) stay intact.

All values are immutable after construction and every operation is a pure
function, so measures can be shared freely across threads.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import AtomCapExceeded, EmptyMeasure, LocationOverflow

#: Default limit on the number of pairwise products a convolution may form.
ATOM_CAP = 1 << 24

_INT64_MAX = (1 << 63) - 1
_INT64_MIN = -(1 << 63)

RationalLoc = Fraction


def checked_loc(value: Fraction | int) -> Fraction:
    """Return `value` as a Fraction, verifying it fits 64-bit num/den."""
    q = Fraction(value)
    if not (_INT64_MIN <= q.numerator <= _INT64_MAX) or q.denominator > _INT64_MAX:
        raise LocationOverflow(f"rational {q} exceeds the 64-bit location range")
    return q


class Atom(NamedTuple):
    location: Fraction
    weight: float


@dataclass(frozen=True)
class DiscreteMeasure:
    """A finite list of atoms, strictly increasing by location."""

    atoms: tuple[Atom, ...]

    def __post_init__(self):
        for i, atom in enumerate(self.atoms):
            if atom.weight < 0:
                raise ValueError(f"negative weight at {atom.location}")
            if i and self.atoms[i - 1].location >= atom.location:
                raise ValueError("atoms must be strictly increasing by location")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Fraction | int, float]]) -> "DiscreteMeasure":
        """Build a measure, merging coincident locations by exact equality."""
        acc: dict[tuple[int, int], float] = {}
        locs: dict[tuple[int, int], Fraction] = {}
        for loc, w in pairs:
            q = checked_loc(loc)
            key = (q.numerator, q.denominator)
            if key in acc:
                acc[key] += w
            else:
                acc[key] = w
                locs[key] = q
        ordered = sorted(locs.values())
        return cls(tuple(Atom(q, acc[(q.numerator, q.denominator)]) for q in ordered))

    @property
    def total_mass(self) -> float:
        return sum(a.weight for a in self.atoms)

    def locations(self) -> tuple[Fraction, ...]:
        return tuple(a.location for a in self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)


def dirac(loc: Fraction | int) -> DiscreteMeasure:
    """Unit point mass at `loc`; the identity element for convolve()."""
    return DiscreteMeasure((Atom(checked_loc(loc), 1.0),))


def convolve(a: DiscreteMeasure, b: DiscreteMeasure, atom_cap: int = ATOM_CAP) -> DiscreteMeasure:
    """Convolution of two measures: atoms at all pairwise location sums.

    Weights multiply and coincident sums merge, so the total mass of the
    result is mass(a) * mass(b).  Raises AtomCapExceeded if the pairwise
    product would exceed `atom_cap`, LocationOverflow if a location sum
    leaves the 64-bit range.
    """
    if len(a) * len(b) > atom_cap:
        raise AtomCapExceeded(f"{len(a)} x {len(b)} atoms exceeds cap {atom_cap}")
    acc: dict[tuple[int, int], float] = {}
    locs: dict[tuple[int, int], Fraction] = {}
    for loc_a, w_a in a.atoms:
        for loc_b, w_b in b.atoms:
            q = checked_loc(loc_a + loc_b)
            key = (q.numerator, q.denominator)
            if key in acc:
                acc[key] += w_a * w_b
            else:
                acc[key] = w_a * w_b
                locs[key] = q
    ordered = sorted(locs.values())
    return DiscreteMeasure(tuple(Atom(q, acc[(q.numerator, q.denominator)]) for q in ordered))


def coin_sum_measure(steps: Sequence[Fraction | int], atom_cap: int = ATOM_CAP) -> DiscreteMeasure:
    """Distribution of sum_k s_k * steps[k] over independent fair signs s_k = +-1.

    Equals the convolution product of the two-point measures
    (1/2)(delta_{c} + delta_{-c}) for each step c.
    """
    if not steps:
        raise ValueError("steps must be nonempty")
    if 2 ** len(steps) > atom_cap:
        raise AtomCapExceeded(f"2^{len(steps)} atoms exceeds cap {atom_cap}")
    m = dirac(0)
    for c in steps:
        q = checked_loc(c)
        factor = DiscreteMeasure.from_pairs([(q, 0.5), (-q, 0.5)])
        m = convolve(m, factor, atom_cap)
    return m


def shifted_coin_sum_measure(
    offsets: Sequence[tuple[Fraction | int, Fraction | int]],
    atom_cap: int = ATOM_CAP,
) -> DiscreteMeasure:
    """Convolution product of (1/2)(delta_{u} + delta_{v}) over the offset pairs."""
    if 2 ** len(offsets) > atom_cap:
        raise AtomCapExceeded(f"2^{len(offsets)} atoms exceeds cap {atom_cap}")
    m = dirac(0)
    for u, v in offsets:
        factor = DiscreteMeasure.from_pairs([(checked_loc(u), 0.5), (checked_loc(v), 0.5)])
        m = convolve(m, factor, atom_cap)
    return m


def char_fn_eval(m: DiscreteMeasure, x: float) -> complex:
    """Characteristic function sum_j w_j * exp(i*x*loc_j), in floating point."""
    z = 0j
    for loc, w in m.atoms:
        z += w * cmath.exp(complex(0.0, x * float(loc)))
    return z


def char_fn_grid(m: DiscreteMeasure, xs: Sequence[float]) -> np.ndarray:
    """Vectorized char_fn_eval over a grid of x values.

    Same sum as char_fn_eval up to summation order (numpy accumulates
    pairwise); agreement is at the 1e-14 level for probability measures.
    """
    locs = np.array([float(a.location) for a in m.atoms])
    ws = np.array([a.weight for a in m.atoms])
    out = np.empty(len(xs), dtype=complex)
    for i, x in enumerate(xs):
        out[i] = (ws * np.exp(1j * x * locs)).sum()
    return out


def cdf_eval(m: DiscreteMeasure, x: Fraction | int | float) -> float:
    """Total weight at locations <= x.  Comparison against x is exact."""
    if not m.atoms or m.total_mass <= 0.0:
        raise EmptyMeasure("cdf of a measure with no mass")
    total = 0.0
    for loc, w in m.atoms:
        if loc <= x:
            total += w
        else:
            break
    return total


def moments(m: DiscreteMeasure) -> tuple[float, float]:
    """Weighted mean and variance, computed in exact rational arithmetic.

    Exactness matters: sign-symmetric measures get mean 0.0 exactly, with
    no cancellation noise from float summation order.
    """
    if not m.atoms:
        raise EmptyMeasure("moments of an empty measure")
    m0 = Fraction(0)
    m1 = Fraction(0)
    m2 = Fraction(0)
    for loc, w in m.atoms:
        wq = Fraction(w)
        m0 += wq
        m1 += wq * loc
        m2 += wq * loc * loc
    if m0 <= 0:
        raise EmptyMeasure("moments of a measure with no mass")
    mean = m1 / m0
    var = m2 / m0 - mean * mean
    return float(mean), float(var)


def dump_csv(m: DiscreteMeasure) -> str:
    """Measure dump: `numerator,denominator,weight` rows, sorted by location."""
    lines = ["numerator,denominator,weight"]
    for loc, w in m.atoms:
        lines.append(f"{loc.numerator},{loc.denominator},{w:.17g}")
    return "\n".join(lines) + "\n"
