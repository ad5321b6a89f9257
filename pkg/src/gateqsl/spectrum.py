"""Energy spectra and the summary statistics that drive every bound.

Conventions (ħ = 1 throughout): levels are stored sorted ascending,
``e_above_ground`` is the mean energy measured from the ground level,
``variance_sqrt`` uses population normalization 1/N, and ``width`` is
the full spread of the spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class EnergySpectrum:
    """Sorted real energy levels E_0 <= ... <= E_{n-1}; repeats allowed."""

    levels: np.ndarray

    def __post_init__(self):
        arr = np.sort(np.asarray(self.levels, dtype=np.float64))
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("a spectrum needs at least one level")
        if not np.all(np.isfinite(arr)):
            raise ValueError("energy levels must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "levels", arr)

    def __eq__(self, other):
        return isinstance(other, EnergySpectrum) and np.array_equal(self.levels, other.levels)

    def __hash__(self):
        return hash(self.levels.tobytes())

    @property
    def n(self) -> int:
        return self.levels.size


@dataclass(frozen=True)
class EnergyStats:
    """Derived statistics of a spectrum.

    ``e_above_ground + e_below_top == width`` up to rounding, and
    Popoviciu's inequality ``2 * variance_sqrt <= width`` always holds.
    """

    mean: float
    e_above_ground: float
    variance_sqrt: float
    width: float
    e_below_top: float

    def __post_init__(self):
        if min(self.e_above_ground, self.variance_sqrt, self.width, self.e_below_top) < 0:
            raise ValueError("energy statistics cannot be negative")
        # Rounding slack scales with the level magnitudes the gaps came from.
        slack = 1e-12 * (1.0 + self.width + abs(self.mean))
        if abs((self.e_above_ground + self.e_below_top) - self.width) > slack:
            raise ValueError("e_above_ground + e_below_top must equal width")
        if 2.0 * self.variance_sqrt > self.width + slack:
            raise ValueError("Popoviciu violated: 2*variance_sqrt exceeds width")


def compute_stats(s: EnergySpectrum) -> EnergyStats:
    """Mean, mean-above-ground, population std, width and top gap."""
    lv = s.levels
    mean = float(lv.mean())
    # The mean of identical large levels can round an ulp past the
    # extremes; the gap statistics are nonnegative by definition.
    return EnergyStats(
        mean=mean,
        e_above_ground=max(0.0, mean - float(lv[0])),
        variance_sqrt=float(lv.std()),
        width=float(lv[-1] - lv[0]),
        e_below_top=max(0.0, float(lv[-1]) - mean),
    )


def shift(s: EnergySpectrum, c: float) -> EnergySpectrum:
    """Add ``c`` to every level; all statistics except the mean are unchanged."""
    if not np.isfinite(c):
        raise ValueError("shift must be finite")
    return EnergySpectrum(s.levels + c)
