"""Dense complex linear algebra for small unitary and Hermitian problems.

Everything here is a pure function: matrices go in, matrices come out,
and the only randomness (Haar sampling, the unitary eigensolver's mixing
coefficients) is driven by an explicit seed.  Matrices are plain numpy
``complex128`` arrays; :func:`complex_matrix` is the validating
constructor used wherever input may be hostile (files, user code).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ._kernels import jacobi_eigh


class Tolerances(NamedTuple):
    """Package-wide numerical tolerances.

    ``structural`` gates predicate checks (unitarity, Hermiticity) and
    eigendecomposition residuals; ``reconstruction`` is the looser limit
    accepted for round trips through a unitary eigendecomposition.
    """

    structural: float = 1e-10
    reconstruction: float = 1e-9


TOL = Tolerances()

_RETRY_CAP = 12


class ConvergenceError(RuntimeError):
    """An iterative eigensolver failed to converge within its cap."""


class EigenDecomposition(NamedTuple):
    values: np.ndarray
    vectors: np.ndarray


def complex_matrix(entries) -> np.ndarray:
    """Coerce ``entries`` to a square complex128 matrix with finite entries."""
    a = np.asarray(entries, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def _maxabs(a) -> float:
    return float(np.max(np.abs(a)))


def is_hermitian(a, tol: float = TOL.structural) -> bool:
    """Max-abs-entry of ``a - a†`` is at most ``tol``."""
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and _maxabs(a - a.conj().T) <= tol


def is_unitary(u, tol: float = TOL.structural) -> bool:
    """Max-abs-entry of ``u†u - I`` is at most ``tol``."""
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return _maxabs(u.conj().T @ u - np.eye(u.shape[0])) <= tol


def matmul(a, b) -> np.ndarray:
    a = complex_matrix(a)
    b = complex_matrix(b)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def trace_abs(u) -> float:
    """Modulus of the trace; lies in [0, n] for an n-dimensional unitary."""
    u = complex_matrix(u)
    return float(abs(np.trace(u)))


def eig_hermitian(a) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.

    Eigenvalues are real and sorted ascending, eigenvector columns are
    orthonormal, and ``a ≈ V diag(w) V†`` to the structural tolerance.
    """
    a = complex_matrix(a)
    if not is_hermitian(a):
        raise ValueError(f"matrix is not Hermitian to tolerance {TOL.structural:g}")
    scale = 1.0 + _maxabs(a)
    work = 0.5 * (a + a.conj().T)
    # Stop an order below the structural residual target: the final
    # residual is bounded by the remaining off-diagonal Frobenius mass.
    w, v, sweeps = jacobi_eigh(work, stop_off=0.1 * TOL.structural * scale)
    if sweeps < 0:
        raise ConvergenceError("Jacobi sweeps exhausted without converging")
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], np.ascontiguousarray(v[:, order]))


def _phase_lex_order(values: np.ndarray, vectors: np.ndarray) -> list[int]:
    # Principal phase in [0, 2π); exact phase ties fall back to a
    # lexicographic comparison of the eigenvector columns.
    phases = np.angle(values) % (2.0 * np.pi)

    def key(k: int):
        col = vectors[:, k]
        return (phases[k], *(x for z in col for x in (z.real, z.imag)))

    return sorted(range(values.size), key=key)


def eig_unitary(u, seed: int) -> EigenDecomposition:
    """Eigendecomposition of a unitary matrix.

    A random Hermitian combination ``t1 (U+U†)/2 + t2 (U-U†)/(2i)`` shares
    eigenvectors with ``U`` for generic ``(t1, t2)``; its Jacobi
    eigenvectors are kept and the unitary's eigenvalues recovered as
    Rayleigh quotients.  A degenerate draw (two distinct eigenvalues of U
    colliding in the combination) shows up as a large reconstruction
    residual and triggers a redraw, up to a fixed retry cap.
    """
    u = complex_matrix(u)
    if not is_unitary(u, TOL.reconstruction):
        raise ValueError(f"matrix is not unitary to tolerance {TOL.reconstruction:g}")
    n = u.shape[0]
    scale = 1.0 + _maxabs(u)
    herm = 0.5 * (u + u.conj().T)
    anti = -0.5j * (u - u.conj().T)
    rng = np.random.default_rng(seed)
    for _ in range(_RETRY_CAP):
        t1, t2 = rng.standard_normal(2)
        _, vectors = eig_hermitian(t1 * herm + t2 * anti)
        values = np.sum(vectors.conj() * (u @ vectors), axis=0)
        values = values / np.abs(values)
        residual = _maxabs(u - (vectors * values) @ vectors.conj().T)
        if residual <= TOL.structural * scale:
            order = _phase_lex_order(values, vectors)
            return EigenDecomposition(values[order], np.ascontiguousarray(vectors[:, order]))
    raise ConvergenceError(
        f"eig_unitary retry cap ({_RETRY_CAP}) exhausted; persistent degenerate combinations"
    )


def expm_hermitian_scaled(h, t: float) -> np.ndarray:
    """``exp(-i h t)`` for Hermitian ``h``, via its eigendecomposition."""
    if not np.isfinite(t):
        raise ValueError("time parameter must be finite")
    w, v = eig_hermitian(h)
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def random_unitary(n: int, seed: int) -> np.ndarray:
    """Haar-distributed n-by-n unitary, deterministic for a fixed seed.

    QR factorization of a complex Ginibre matrix, with the R diagonal's
    phases absorbed into Q so the distribution is exactly Haar.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
