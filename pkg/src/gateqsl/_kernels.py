"""Cyclic-Jacobi eigensolver kernels for dense complex Hermitian matrices.

Two interchangeable implementations of the sweep driver:

* an explicit-loop kernel compiled with numba ``@njit`` (the fast path),
* a vectorized pure-numpy fallback.

The active path is chosen at import time: numba is used when it imports
successfully, unless the environment variable ``QSL_NO_NUMBA`` is set to
anything other than ``""`` or ``"0"``.  Both drivers stay importable so
tests and the benchmark can compare them head to head.
"""

from __future__ import annotations

import os

import numpy as np

MAX_SWEEPS = 60


def _numba_disabled() -> bool:
    return os.environ.get("QSL_NO_NUMBA", "") not in ("", "0")


def _sweep_loops(a, v, stop_off):
    """Run cyclic Jacobi sweeps in place until the off-diagonal Frobenius
    norm drops below ``stop_off``.

    ``a`` is overwritten with a (numerically) diagonal matrix and ``v``
    accumulates the rotations so that ``a_in = v @ diag(a_out) @ v†``.
    Returns the number of sweeps used, or -1 if MAX_SWEEPS was hit.
    """
    n = a.shape[0]
    # Entries this small are zeroed instead of rotated; the total mass
    # discarded per sweep stays below stop_off / 2.
    drop = stop_off / (2.0 * n * n)
    for sweep in range(MAX_SWEEPS):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                x = a[p, q]
                off2 += x.real * x.real + x.imag * x.imag
        if np.sqrt(2.0 * off2) <= stop_off:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= drop:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phase = apq / r
                tau = (aqq - app) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - np.conj(sp) * aiq
                    a[i, q] = sp * aip + c * aiq
                    a[p, i] = np.conj(a[i, p])
                    a[q, i] = np.conj(a[i, q])
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - np.conj(sp) * viq
                    v[i, q] = sp * vip + c * viq
    return -1


def _sweep_numpy(a, v, stop_off):
    """Vectorized twin of :func:`_sweep_loops` (same contract).

    Each rotation is applied as a column update followed by a row update,
    touching whole slices at once instead of looping over entries.
    """
    n = a.shape[0]
    drop = stop_off / (2.0 * n * n)
    iu = np.triu_indices(n, 1)
    for sweep in range(MAX_SWEEPS):
        if np.sqrt(2.0 * np.sum(np.abs(a[iu]) ** 2)) <= stop_off:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= drop:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phase = apq / r
                tau = (aqq - app) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - np.conj(sp) * cq
                a[:, q] = sp * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - sp * rq
                a[q, :] = np.conj(sp) * rp + c * rq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - np.conj(sp) * vq
                v[:, q] = sp * vp + c * vq
    return -1


try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

if HAVE_NUMBA:
    _sweep_numba = njit(cache=True)(_sweep_loops)
else:  # pragma: no cover
    _sweep_numba = None

USE_NUMBA = HAVE_NUMBA and not _numba_disabled()


def jacobi_eigh(a, stop_off, use_numba=None):
    """Diagonalize the Hermitian matrix ``a`` (overwritten in place).

    Returns ``(w, v, sweeps)`` with unsorted real eigenvalues ``w``,
    unitary eigenvector columns ``v`` and the sweep count (-1 means the
    sweep cap was exhausted; the caller decides how to fail).

    ``use_numba`` forces a specific driver; ``None`` takes the module
    default chosen at import time.
    """
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return a.diagonal().real.copy(), v, 0
    if use_numba is None:
        use_numba = USE_NUMBA
    driver = _sweep_numba if use_numba else _sweep_numpy
    sweeps = driver(a, v, stop_off)
    return a.diagonal().real.copy(), v, sweeps
