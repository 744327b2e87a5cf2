"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The cyclic Jacobi iteration below is written once in njit-compatible style;
when numba is importable (and not disabled) the same source is compiled.
Selection: LINKSIG_BACKEND=numba|numpy, default numba when available.
"""

from __future__ import annotations

import os

import numpy as np


def _cyclic_jacobi(a, rel_tol, max_sweeps):
    # a: square complex128 Hermitian, overwritten in place.
    # Returns (eigenvalues, converged flag); convergence means the Frobenius
    # norm of the off-diagonal part is below rel_tol * ||a||_F.
    n = a.shape[0]
    fro2 = 0.0
    for i in range(n):
        for j in range(n):
            fro2 += a[i, j].real ** 2 + a[i, j].imag ** 2
    target = rel_tol * np.sqrt(fro2)
    converged = fro2 == 0.0
    for _ in range(max_sweeps):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off2 += a[i, j].real ** 2 + a[i, j].imag ** 2
        if np.sqrt(2.0 * off2) <= target:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = abs(apq)
                if m == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                d = apq.conjugate() / m  # phase making the pivot real
                tau = (aqq - app) / (2.0 * m)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                upp = c + 0.0j
                upq = s + 0.0j
                uqp = -d * s
                uqq = d * c
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = aip * upp + aiq * uqp
                    a[i, q] = aip * upq + aiq * uqq
                for i in range(n):
                    api = a[p, i]
                    aqi = a[q, i]
                    a[p, i] = upp.conjugate() * api + uqp.conjugate() * aqi
                    a[q, i] = upq.conjugate() * api + uqq.conjugate() * aqi
                a[p, q] = 0.0j
                a[q, p] = 0.0j
                a[p, p] = a[p, p].real + 0.0j
                a[q, q] = a[q, q].real + 0.0j
    eig = np.empty(n, dtype=np.float64)
    for i in range(n):
        eig[i] = a[i, i].real
    return eig, converged


try:  # pragma: no cover - exercised through backend dispatch
    from numba import njit

    _cyclic_jacobi_numba = njit(cache=True, nogil=True)(_cyclic_jacobi)
except ImportError:  # pragma: no cover
    _cyclic_jacobi_numba = None


def available_backends() -> tuple[str, ...]:
    if _cyclic_jacobi_numba is None:
        return ("numpy",)
    return ("numba", "numpy")


def default_backend() -> str:
    choice = os.environ.get("LINKSIG_BACKEND", "").strip().lower()
    if choice in ("numba", "numpy"):
        if choice == "numba" and _cyclic_jacobi_numba is None:
            return "numpy"
        return choice
    return "numba" if _cyclic_jacobi_numba is not None else "numpy"


def jacobi_eigenvalues(a: np.ndarray, rel_tol: float = 1e-14, max_sweeps: int = 100,
                       backend: str | None = None) -> tuple[np.ndarray, bool]:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    The input is copied; the returned flag reports convergence of the
    off-diagonal norm below rel_tol times the Frobenius norm.
    """
    work = np.array(a, dtype=np.complex128, order="C", copy=True)
    if work.shape[0] == 0:
        return np.empty(0, dtype=np.float64), True
    name = backend or default_backend()
    if name == "numba" and _cyclic_jacobi_numba is not None:
        return _cyclic_jacobi_numba(work, rel_tol, max_sweeps)
    return _cyclic_jacobi(work, rel_tol, max_sweeps)
