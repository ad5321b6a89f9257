"""Named unitaries with closed-form traces.

Constructors for the gate families used throughout the verification
suite: discrete Fourier transforms, Grover iterations, permutations,
Hadamard tensor powers, general single-qubit gates and the two
two-parameter families of qutrit basis changes that map the
computational basis to a mutually unbiased one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

_MAX_HADAMARD_QUBITS = 10


class MubFamily(enum.Enum):
    ONE = 1
    TWO = 2


@dataclass(frozen=True)
class QubitParams:
    """Angles (radians) of the general 2x2 unitary
    ``e^{i phi} [[e^{i alpha} cos th, e^{i beta} sin th],
                 [-e^{-i beta} sin th, e^{-i alpha} cos th]]``."""

    phi: float
    alpha: float
    beta: float
    theta: float

    def __post_init__(self):
        if not all(map(math.isfinite, (self.phi, self.alpha, self.beta, self.theta))):
            raise ValueError("qubit parameters must be finite")


@dataclass(frozen=True)
class QutritMubParams:
    """Reduced coordinates (x, y) of a qutrit MUB transformation family."""

    family: MubFamily
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("qutrit parameters must be finite")


def fourier(n: int) -> np.ndarray:
    """Discrete Fourier transform matrix F[k,l] = w^{kl} / sqrt(n)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    k = np.arange(n)
    return np.exp(2j * np.pi * np.outer(k, k) / n) / np.sqrt(n)


def gauss_trace(n: int) -> float:
    """|tr fourier(n)| in closed form (quadratic Gauss sum): depends on n mod 4."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return (math.sqrt(2.0), 1.0, 0.0, 1.0)[n % 4]


def grover(n: int, target: int) -> np.ndarray:
    """Grover iteration (2|s><s| - I)(I - 2|t><t|) with uniform |s>."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if not 0 <= target < n:
        raise ValueError(f"target {target} out of range for dimension {n}")
    s = np.full(n, 1.0 / math.sqrt(n))
    reflect_s = 2.0 * np.outer(s, s) - np.eye(n)
    reflect_t = np.eye(n)
    reflect_t[target, target] = -1.0
    return (reflect_s @ reflect_t).astype(np.complex128)


def permutation(perm) -> np.ndarray:
    """Permutation matrix sending basis state j to perm[j]; trace counts fixed points."""
    perm = list(perm)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("permutation must be a bijection on 0..n-1")
    p = np.zeros((n, n), dtype=np.complex128)
    for j, image in enumerate(perm):
        p[image, j] = 1.0
    return p


def hadamard_power(q: int) -> np.ndarray:
    """q-fold tensor power of the 2x2 Hadamard (dimension 2**q, trace 0)."""
    if q < 1:
        raise ValueError("need at least one qubit")
    if q > _MAX_HADAMARD_QUBITS:
        raise ValueError(f"q = {q} exceeds the size guard ({_MAX_HADAMARD_QUBITS})")
    h = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2.0)
    out = h
    for _ in range(q - 1):
        out = np.kron(out, h)
    return out


def qubit_unitary(p: QubitParams) -> np.ndarray:
    """General single-qubit gate; |tr| = 2 |cos(theta) cos(alpha)|."""
    ct, st = math.cos(p.theta), math.sin(p.theta)
    m = np.array(
        [
            [np.exp(1j * p.alpha) * ct, np.exp(1j * p.beta) * st],
            [-np.exp(-1j * p.beta) * st, np.exp(-1j * p.alpha) * ct],
        ]
    )
    return np.exp(1j * p.phi) * m


def qubit_exact_time(p: QubitParams) -> float:
    """Exact dimensionless product E*T for a single-qubit gate: arccos(|tr U| / 2)."""
    return math.acos(min(1.0, abs(math.cos(p.theta) * math.cos(p.alpha))))


def _omega_column(first_power: complex) -> np.ndarray:
    return np.array([1.0, first_power, np.conj(first_power)])


def qutrit_mub(p: QutritMubParams) -> np.ndarray:
    """Qutrit gate mapping the computational basis to a MUB partner basis.

    Family ONE has columns (1,1,1), e^{ix}(1, w~, w), e^{iy}(1, w, w~)
    over sqrt(3) with w = e^{2 pi i / 3}; family TWO swaps w and w~.
    Every entry has modulus 1/sqrt(3).
    """
    w = np.exp(2j * np.pi / 3.0)
    if p.family is MubFamily.ONE:
        c1, c2 = _omega_column(np.conj(w)), _omega_column(w)
    else:
        c1, c2 = _omega_column(w), _omega_column(np.conj(w))
    cols = np.stack(
        [np.ones(3, dtype=np.complex128), np.exp(1j * p.x) * c1, np.exp(1j * p.y) * c2],
        axis=1,
    )
    return cols / math.sqrt(3.0)


class PhaseReduction(NamedTuple):
    """Output of :func:`qutrit_phase_reduce`.

    The five-parameter family member reconstructs as
    ``exp(i * global_phase) * conjugator† @ qutrit_mub(params) @ conjugator``.
    """

    params: QutritMubParams
    global_phase: float
    conjugator: np.ndarray


def qutrit_phase_reduce(phis, alpha: float, beta: float, family: MubFamily) -> PhaseReduction:
    """Strip the three row phases from the five-parameter qutrit family.

    A global phase ``phi_1`` and the diagonal conjugation by
    ``diag(1, e^{i(phi_1-phi_2)}, e^{i(phi_1-phi_3)})`` absorb the row
    phases, leaving the two-parameter form with ``x = phi_2 - phi_1 - alpha``
    and ``y = phi_3 - phi_1 - beta``.
    """
    p1, p2, p3 = (float(v) for v in phis)
    params = QutritMubParams(family=family, x=p2 - p1 - alpha, y=p3 - p1 - beta)
    conjugator = np.diag([1.0, np.exp(1j * (p1 - p2)), np.exp(1j * (p1 - p3))]).astype(
        np.complex128
    )
    return PhaseReduction(params=params, global_phase=p1, conjugator=conjugator)


def mub_trace_cap(n: int) -> float:
    """Upper limit sqrt(n) on |tr U| for any basis-to-MUB transformation."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    return math.sqrt(n)


def prior_mub_bound(n: int) -> float:
    """Earlier published MUB-change bound, in units of 1/E, for comparison."""
    if n < 3:
        raise ValueError("defined for dimension 3 and up")
    if n == 3:
        return 2.0 * math.pi / 9.0
    return math.pi * (n - 1) / (4.0 * n)
