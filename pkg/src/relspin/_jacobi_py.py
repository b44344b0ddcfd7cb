"""Pure-Python cyclic Jacobi eigensolver (fallback for the compiled kernel)."""

import numpy as np


def _rotate(a, v, p, q):
    g = abs(a[p, q])
    if g == 0.0:
        return
    e = a[p, q] / g
    zeta = (a[q, q].real - a[p, p].real) / (2.0 * g)
    if zeta == 0.0:
        t = 1.0
    else:
        t = np.copysign(1.0, zeta) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    j = np.array([[c, s], [-s * e.conjugate(), c * e.conjugate()]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ j
    a[idx, :] = j.conj().T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, idx] = v[:, idx] @ j


def jacobi_eigh(a_in, tol, max_sweeps):
    """Same contract as the compiled kernel: (w, v, sweeps), unsorted."""
    a = np.array(a_in, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    fro = np.linalg.norm(a)
    off_mask = ~np.eye(n, dtype=bool)
    sweep = 0
    while sweep < max_sweeps and fro > 0.0 and np.linalg.norm(a[off_mask]) > tol * fro:
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweep += 1
    return a.diagonal().real.copy(), v, sweep
