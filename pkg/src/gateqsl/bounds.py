"""Trace-based lower bounds on the time needed to enact a unitary gate.

All bounds depend on the gate only through ``r = |tr U| / N`` and on the
generating spectrum only through its gross statistics, so they are
invariant under global phases and basis changes of the gate:

* ML form:        T >= (pi / 2E) (1 - r sqrt(1 + 4/pi^2))
* MT form:        T >= sqrt(1 - r^2) / dE        (dE = sqrt of variance)
* dual ML form:   as ML with E_max - mean in place of E
* width forms:    T >= (pi / width)(1 - r sqrt(1 + 4/pi^2))
                  T >= (2 / width) sqrt(1 - r^2)

Negative raw ML values clamp to zero (a vacuous time bound).  A zero
denominator with a genuine trace deficit has no finite answer and raises
:class:`UndefinedBoundError` instead of returning infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .spectrum import EnergyStats

ML_TRACE_FACTOR = math.sqrt(1.0 + 4.0 / math.pi**2)


class UndefinedBoundError(ValueError):
    """Degenerate energy statistics make the requested bound undefined."""


@dataclass(frozen=True)
class TraceInput:
    """Gate dimension and trace modulus, the only gate data the bounds use."""

    n: int
    trace_abs: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be at least 1")
        t = float(self.trace_abs)
        # Absorb numerical overshoot from computed traces.
        if -1e-9 * self.n <= t < 0.0:
            t = 0.0
        elif self.n < t <= self.n * (1.0 + 1e-9):
            t = float(self.n)
        if not 0.0 <= t <= self.n:
            raise ValueError(f"|tr U| = {self.trace_abs} outside [0, {self.n}]")
        object.__setattr__(self, "trace_abs", t)

    @property
    def ratio(self) -> float:
        return self.trace_abs / self.n


@dataclass(frozen=True)
class BoundSet:
    """All five bound values for one gate/spectrum pair, plus their max."""

    ml: float
    mt: float
    dual_ml: float
    width_ml: float
    width_mt: float
    combined: float

    def __post_init__(self):
        if min(self.ml, self.mt, self.dual_ml, self.width_ml, self.width_mt) < 0:
            raise ValueError("bounds cannot be negative")
        if self.combined != max(self.ml, self.mt):
            raise ValueError("combined must equal max(ml, mt)")


def ml_product(ratio: float) -> float:
    """Dimensionless ML bound: lower limit on E*T (equally on (E_max - mean)*T)."""
    return max(0.0, 0.5 * math.pi * (1.0 - ratio * ML_TRACE_FACTOR))


def mt_product(ratio: float) -> float:
    """Dimensionless MT bound: lower limit on dE*T."""
    return math.sqrt(max(0.0, 1.0 - ratio * ratio))


def _scaled(raw: float, denom: float, what: str) -> float:
    if denom > 0.0:
        return raw / denom
    if raw == 0.0:
        return 0.0
    raise UndefinedBoundError(
        f"{what} is zero but the gate has a trace deficit; no finite bound exists"
    )


def ml_bound(t: TraceInput, stats: EnergyStats) -> float:
    return _scaled(ml_product(t.ratio), stats.e_above_ground, "mean energy above ground")


def mt_bound(t: TraceInput, stats: EnergyStats) -> float:
    return _scaled(mt_product(t.ratio), stats.variance_sqrt, "energy spread (std)")


def dual_ml_bound(t: TraceInput, stats: EnergyStats) -> float:
    return _scaled(ml_product(t.ratio), stats.e_below_top, "mean energy below the top level")


def width_bounds(t: TraceInput, stats: EnergyStats) -> tuple[float, float]:
    """The two spectrum-width bounds ``(width_ml, width_mt)``."""
    raw_ml = 2.0 * ml_product(t.ratio)
    raw_mt = 2.0 * mt_product(t.ratio)
    if stats.width > 0.0:
        return raw_ml / stats.width, raw_mt / stats.width
    if raw_mt == 0.0:
        return 0.0, 0.0
    raise UndefinedBoundError(
        "spectrum width is zero but the gate has a trace deficit; no finite bound exists"
    )


def bound_set(t: TraceInput, stats: EnergyStats) -> BoundSet:
    ml = ml_bound(t, stats)
    mt = mt_bound(t, stats)
    w_ml, w_mt = width_bounds(t, stats)
    return BoundSet(
        ml=ml,
        mt=mt,
        dual_ml=dual_ml_bound(t, stats),
        width_ml=w_ml,
        width_mt=w_mt,
        combined=max(ml, mt),
    )


def state_pair_bound(e: float, delta_e: float) -> float:
    """Classic bound for driving a state to an orthogonal one (reference only)."""
    if e <= 0.0 or delta_e <= 0.0:
        raise ValueError("state-pair bound needs positive energy statistics")
    return max(0.5 * math.pi / delta_e, 0.5 * math.pi / e)
