# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cyclic complex Jacobi eigensolver for small Hermitian matrices."""

import numpy as np

from libc.math cimport sqrt, hypot, fabs


cdef inline double _cabs(double complex z) nogil:
    return hypot(z.real, z.imag)


cdef double _off_norm(double complex[:, ::1] a, Py_ssize_t n) nogil:
    cdef double s = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i, j].real * a[i, j].real + a[i, j].imag * a[i, j].imag
    return sqrt(s)


cdef void _rotate(double complex[:, ::1] a, double complex[:, ::1] v,
                  Py_ssize_t n, Py_ssize_t p, Py_ssize_t q) nogil:
    cdef double g = _cabs(a[p, q])
    cdef double zeta, t, c, s
    cdef double complex e, ec, akp, akq, apk, aqk
    cdef Py_ssize_t k
    if g == 0.0:
        return
    e = a[p, q] / g
    ec = e.conjugate()
    zeta = (a[q, q].real - a[p, p].real) / (2.0 * g)
    if zeta == 0.0:
        t = 1.0
    elif zeta > 0.0:
        t = 1.0 / (zeta + sqrt(1.0 + zeta * zeta))
    else:
        t = -1.0 / (-zeta + sqrt(1.0 + zeta * zeta))
    c = 1.0 / sqrt(1.0 + t * t)
    s = t * c
    # A <- A J with J = [[c, s], [-s e*, c e*]] on columns (p, q)
    for k in range(n):
        akp = a[k, p]
        akq = a[k, q]
        a[k, p] = c * akp - s * ec * akq
        a[k, q] = s * akp + c * ec * akq
    # A <- J^H A on rows (p, q)
    for k in range(n):
        apk = a[p, k]
        aqk = a[q, k]
        a[p, k] = c * apk - s * e * aqk
        a[q, k] = s * apk + c * e * aqk
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    for k in range(n):
        akp = v[k, p]
        akq = v[k, q]
        v[k, p] = c * akp - s * ec * akq
        v[k, q] = s * akp + c * ec * akq


def jacobi_eigh(a_in, double tol, int max_sweeps):
    """Diagonalize a Hermitian matrix in place; return (w, v, sweeps), unsorted."""
    cdef double complex[:, ::1] a = np.array(a_in, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a.shape[0]
    v_arr = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] v = v_arr
    cdef double fro = 0.0
    cdef Py_ssize_t i, j, p, q
    cdef int sweep = 0
    for i in range(n):
        for j in range(n):
            fro += a[i, j].real * a[i, j].real + a[i, j].imag * a[i, j].imag
    fro = sqrt(fro)
    with nogil:
        while sweep < max_sweeps and fro > 0.0 and _off_norm(a, n) > tol * fro:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    _rotate(a, v, n, p, q)
            sweep += 1
    w = np.empty(n, dtype=np.float64)
    for i in range(n):
        w[i] = a[i, i].real
    return w, v_arr, sweep
