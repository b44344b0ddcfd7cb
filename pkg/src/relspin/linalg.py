"""Dense complex linear algebra for 2- and 4-dimensional spin/momentum spaces.

Matrices are plain ``numpy`` complex arrays. The global basis ordering is
``{|p1 up>, |p1 down>, |p2 up>, |p2 down>}``: momentum is the slow (first)
tensor slot and spin the fast (second) one.

Hermitian eigenproblems go through a cyclic Jacobi solver. A compiled
Cython kernel is used when it was built; otherwise the pure-Python
implementation in :mod:`relspin._jacobi_py` is selected at import time.
Set ``RELSPIN_PURE_PYTHON=1`` to force the fallback.
"""

import os

import numpy as np

from . import _jacobi_py

try:
    from . import _jacobi_ext
except ImportError:  # extension not built
    _jacobi_ext = None

__all__ = [
    "BACKEND",
    "I2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "NotPSDError",
    "available_backends",
    "dagger",
    "hermitian_eig",
    "make_density",
    "partial_trace_first",
    "partial_trace_second",
    "psd_sqrt",
    "set_backend",
    "tensor_product",
    "validate_density",
]

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

HERMITIAN_TOL = 1e-10
CLAMP_TOL = 1e-10
NOT_PSD_TOL = 1e-8
JACOBI_TOL = 1e-15
JACOBI_MAX_SWEEPS = 60

_KERNELS = {"python": _jacobi_py.jacobi_eigh}
if _jacobi_ext is not None:
    _KERNELS["cython"] = _jacobi_ext.jacobi_eigh

if _jacobi_ext is not None and not os.environ.get("RELSPIN_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"
_kernel = _KERNELS[BACKEND]


class NotPSDError(ValueError):
    """Raised when a matrix that must be positive semidefinite is not."""


def available_backends():
    return sorted(_KERNELS)


def set_backend(name):
    """Switch the Jacobi kernel (``"cython"`` or ``"python"``)."""
    global BACKEND, _kernel
    if name not in _KERNELS:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}")
    BACKEND = name
    _kernel = _KERNELS[name]


def _square(m, name="matrix"):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    return m


def dagger(m):
    return np.conj(np.asarray(m)).T


def tensor_product(a, b):
    """Kronecker product ``a (x) b`` with ``a``'s index slow."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace_first(m, dims=(2, 2)):
    """Trace out the first (momentum) factor of a ``dims[0]*dims[1]`` square matrix."""
    da, db = dims
    m = _square(m)
    if m.shape[0] != da * db:
        raise ValueError(f"expected a {da * db}x{da * db} matrix, got {m.shape}")
    return np.einsum("ijik->jk", m.reshape(da, db, da, db))


def partial_trace_second(m, dims=(2, 2)):
    """Trace out the second (spin) factor."""
    da, db = dims
    m = _square(m)
    if m.shape[0] != da * db:
        raise ValueError(f"expected a {da * db}x{da * db} matrix, got {m.shape}")
    return np.einsum("ijkj->ik", m.reshape(da, db, da, db))


def hermitian_eig(m):
    """Eigen-decomposition of a Hermitian matrix.

    Returns ``(w, v)`` with real eigenvalues ``w`` sorted in descending order
    (stable for ties) and eigenvectors as the columns of ``v``.
    """
    m = _square(m)
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if np.abs(m - dagger(m)).max(initial=0.0) > HERMITIAN_TOL * scale:
        raise ValueError("matrix is not Hermitian")
    m = 0.5 * (m + dagger(m))
    w, v, _ = _kernel(m, JACOBI_TOL, JACOBI_MAX_SWEEPS)
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def _clamped_spectrum(m):
    w, v = hermitian_eig(m)
    if w.size and w[-1] < -NOT_PSD_TOL:
        raise NotPSDError(f"matrix is not PSD (min eigenvalue {w[-1]:.3e})")
    w = np.where(w < 0.0, 0.0, w)
    # eigenvalues at the roundoff floor of the solver are treated as exact zeros
    floor = 4 * m.shape[0] * np.finfo(float).eps * (w[0] if w.size else 0.0)
    w = np.where(w <= floor, 0.0, w)
    return w, v


def psd_sqrt(m):
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in ``[-1e-8, 0)`` are clamped to zero; anything more
    negative raises :class:`NotPSDError`.
    """
    m = _square(m)
    w, v = _clamped_spectrum(m)
    s = (v * np.sqrt(w)) @ dagger(v)
    return 0.5 * (s + dagger(s))


def make_density(kets, weights=None):
    """Density matrix ``sum_k w_k |k><k|`` from (normalized) kets.

    A single 1-D ket gives its projector.
    """
    kets = np.asarray(kets, dtype=complex)
    if kets.ndim == 1:
        kets = kets[None, :]
    if weights is None:
        if len(kets) != 1:
            raise ValueError("weights are required for more than one ket")
        weights = [1.0]
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (len(kets),):
        raise ValueError("one weight per ket is required")
    if np.any(weights < 0) or abs(weights.sum() - 1.0) > 1e-12:
        raise ValueError("weights must be non-negative and sum to 1")
    norms = np.linalg.norm(kets, axis=1)
    if np.any(norms == 0):
        raise ValueError("zero ket")
    kets = kets / norms[:, None]
    rho = np.einsum("k,ki,kj->ij", weights, kets, kets.conj())
    return 0.5 * (rho + dagger(rho))


def validate_density(rho, tol=1e-8):
    """Return ``rho`` as an array, raising ``ValueError`` if it is not a density matrix."""
    rho = _square(rho, "density matrix")
    if np.abs(rho - dagger(rho)).max() > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > tol:
        raise ValueError(f"density matrix trace is {np.trace(rho).real:.12g}, expected 1")
    w, _ = hermitian_eig(rho)
    if w[-1] < -tol:
        raise ValueError(f"density matrix has negative eigenvalue {w[-1]:.3e}")
    return rho
