"""Random-sign series sum_k t_k * c_k: exact laws, sampling, histograms.

The exact route builds the distribution of a finite partial sum as a
convolution of two-point measures.  The Monte Carlo route draws signs from
a fixed, documented generator so that runs are bit-identical across
platforms:

* Generator: SplitMix64.  One trial uses the substream seeded with
  (seed XOR trial_index), trial_index 0-based, so trials can be split
  across workers without changing the output.
* One 64-bit word is consumed per term, in term order; the sign is +1 when
  the top bit (bit 63) is 0, else -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AtomCapExceeded, BadRange, LocationOverflow
from .measure import ATOM_CAP, DiscreteMeasure, coin_sum_measure

# Exact partial-sum measures refuse beyond this many terms for coefficient
# kinds whose denominators grow like lcm(1..n); use simulate() instead.
MAX_EXACT_TERMS = 20

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


@dataclass(frozen=True)
class CoeffSeries:
    """Coefficient rule c_k for a random-sign series, truncated at `length`.

    Kinds: geometric (scale/base^k), cantor (2/3^k), harmonic (1/k) and
    explicit (a fixed list).  Coefficients are exact rationals; all must be
    positive.
    """

    kind: str
    length: int
    base: int = 0
    scale: Fraction = Fraction(1)
    values: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.kind not in ("geometric", "cantor", "harmonic", "explicit"):
            raise ValueError(f"unknown series kind {self.kind!r}")
        if self.length < 1:
            raise ValueError("series length must be >= 1")
        if self.kind == "geometric":
            if self.base < 2:
                raise ValueError("geometric base must be >= 2")
            if self.scale <= 0:
                raise ValueError("geometric scale must be positive")
        if self.kind == "explicit":
            if len(self.values) < self.length:
                raise ValueError("explicit series needs at least `length` values")
            if any(v <= 0 for v in self.values):
                raise ValueError("coefficients must be positive")

    @classmethod
    def geometric(cls, base: int, length: int, scale: Fraction | int = 1) -> "CoeffSeries":
        return cls("geometric", length, base=base, scale=Fraction(scale))

    @classmethod
    def cantor(cls, length: int) -> "CoeffSeries":
        return cls("cantor", length)

    @classmethod
    def harmonic(cls, length: int) -> "CoeffSeries":
        return cls("harmonic", length)

    @classmethod
    def explicit(cls, values: Sequence[Fraction | int]) -> "CoeffSeries":
        vals = tuple(Fraction(v) for v in values)
        return cls("explicit", len(vals), values=vals)

    def coefficient(self, k: int) -> Fraction:
        """Exact k-th coefficient, 1-based."""
        if k < 1:
            raise ValueError("coefficient index is 1-based")
        if self.kind == "geometric":
            return self.scale / self.base**k
        if self.kind == "cantor":
            return Fraction(2, 3**k)
        if self.kind == "harmonic":
            return Fraction(1, k)
        return self.values[k - 1]

    def coefficients(self, count: int | None = None) -> tuple[Fraction, ...]:
        n = self.length if count is None else count
        return tuple(self.coefficient(k) for k in range(1, n + 1))


@dataclass(frozen=True)
class SimConfig:
    trials: int
    terms: int
    seed: int

    def __post_init__(self):
        if self.trials < 1 or self.terms < 1:
            raise ValueError("trials and terms must be >= 1")


@dataclass(frozen=True)
class Histogram:
    edges: tuple[float, ...]
    counts: tuple[int, ...]
    underflow: int
    overflow: int

    @property
    def total(self) -> int:
        return sum(self.counts) + self.underflow + self.overflow


def partial_sum_measure(series: CoeffSeries, atom_cap: int = ATOM_CAP) -> DiscreteMeasure:
    """Exact distribution of the length-n partial sum with fair signs."""
    if series.kind in ("harmonic", "explicit") and series.length > MAX_EXACT_TERMS:
        raise LocationOverflow(
            f"exact path limited to {MAX_EXACT_TERMS} {series.kind} terms; "
            "use simulate() beyond that"
        )
    if 2**series.length > atom_cap:
        raise AtomCapExceeded(f"2^{series.length} atoms exceeds cap {atom_cap}")
    return coin_sum_measure(series.coefficients(), atom_cap)


def variance_of(series: CoeffSeries) -> float:
    """sum of c_k^2 over the series: the exact variance of the partial sum."""
    total = 0.0
    for k in range(1, series.length + 1):
        c = float(series.coefficient(k))
        total += c * c
    return total


def simulate(series: CoeffSeries, cfg: SimConfig) -> list[float]:
    """Draw cfg.trials independent realizations of sum_{k<=terms} t_k c_k.

    Signs come from the documented SplitMix64 substream discipline, so
    identical (series, cfg) always produces the identical float vector.
    The coefficient rule is extended to cfg.terms terms; an explicit series
    must carry at least that many values.
    """
    if series.kind == "explicit" and cfg.terms > len(series.values):
        raise ValueError("explicit series shorter than cfg.terms")
    coeffs = [float(series.coefficient(k)) for k in range(1, cfg.terms + 1)]
    seed = cfg.seed & _MASK64
    out: list[float] = []
    for trial in range(cfg.trials):
        state = (seed ^ trial) & _MASK64
        total = 0.0
        for c in coeffs:
            state, word = _splitmix64(state)
            total += c if (word >> 63) == 0 else -c
        out.append(total)
    return out


def histogram(samples: Sequence[float], bins: int, lo: float, hi: float) -> Histogram:
    """Count samples into `bins` equal-width bins on [lo, hi).

    Samples below lo and at or above hi land in underflow/overflow, so
    counts always conserve len(samples).
    """
    if bins < 1:
        raise BadRange(f"need at least one bin, got {bins}")
    if not lo < hi:
        raise BadRange(f"empty range [{lo}, {hi})")
    width = (hi - lo) / bins
    edges = tuple(lo + j * width for j in range(bins)) + (hi,)
    if any(edges[j] >= edges[j + 1] for j in range(bins)):
        raise BadRange("bin width underflows at this scale")
    counts = [0] * bins
    under = over = 0
    for x in samples:
        if x < lo:
            under += 1
        elif x >= hi:
            over += 1
        else:
            idx = int((x - lo) / width)
            if idx >= bins:  # right-edge rounding guard
                idx = bins - 1
            counts[idx] += 1
    return Histogram(edges, tuple(counts), under, over)
