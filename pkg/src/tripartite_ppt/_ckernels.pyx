# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures and semantics as ``_pykernels``."""
import numpy as np

from libc.math cimport sqrt, hypot

cdef double OFF_TOL = 1e-14
cdef int MAX_SWEEPS = 100


cdef inline double _abs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


def eigvalsh(m):
    cdef Py_ssize_t n = m.shape[0]
    cdef double complex[:, ::1] a = np.array(m, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t p, q, k
    cdef int sweep, converged = 0
    cdef double fro2 = 0.0, off2, thresh, g, app, aqq, tau, t, c, s
    cdef double complex ph, spq, sqp, akp, akq, apk, aqk

    with nogil:
        for p in range(n):
            a[p, p] = a[p, p].real
            for q in range(n):
                fro2 += _abs2(a[p, q])
        thresh = OFF_TOL * (sqrt(fro2) if fro2 > 1.0 else 1.0)

        for sweep in range(MAX_SWEEPS + 1):
            off2 = 0.0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    off2 += 2.0 * _abs2(a[p, q])
            if sqrt(off2) <= thresh:
                converged = 1
                break
            if sweep == MAX_SWEEPS:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    g = hypot(a[p, q].real, a[p, q].imag)
                    if g == 0.0:
                        continue
                    app = a[p, p].real
                    aqq = a[q, q].real
                    tau = (aqq - app) / (2.0 * g)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    ph = a[p, q] / g
                    spq = s * ph
                    sqp = -s * ph.conjugate()
                    for k in range(n):
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = akp * c + akq * sqp
                        a[k, q] = akp * spq + akq * c
                    for k in range(n):
                        apk = a[p, k]
                        aqk = a[q, k]
                        a[p, k] = c * apk + sqp.conjugate() * aqk
                        a[q, k] = spq.conjugate() * apk + c * aqk
                    a[p, p] = app - t * g
                    a[q, q] = aqq + t * g
                    a[p, q] = 0.0
                    a[q, p] = 0.0

    w = np.sort(np.array([a[p, p].real for p in range(n)]))
    return w, (sweep if converged else -1)


def partial_transpose_second(m):
    cdef double complex[:, ::1] src = np.ascontiguousarray(m, dtype=np.complex128)
    out = np.empty((4, 4), dtype=np.complex128)
    cdef double complex[:, ::1] dst = out
    cdef int mm, nn, r, s
    for mm in range(2):
        for nn in range(2):
            for r in range(2):
                for s in range(2):
                    dst[2 * mm + nn, 2 * r + s] = src[2 * mm + s, 2 * r + nn]
    return out


def partial_trace(rho, int traced):
    cdef double complex[:, ::1] src = np.ascontiguousarray(rho, dtype=np.complex128)
    out = np.zeros((4, 4), dtype=np.complex128)
    cdef double complex[:, ::1] dst = out
    cdef int x, y, r, s, k
    for x in range(2):
        for y in range(2):
            for r in range(2):
                for s in range(2):
                    for k in range(2):
                        if traced == 0:
                            dst[2 * x + y, 2 * r + s] += src[4 * k + 2 * x + y, 4 * k + 2 * r + s]
                        elif traced == 1:
                            dst[2 * x + y, 2 * r + s] += src[4 * x + 2 * k + y, 4 * r + 2 * k + s]
                        else:
                            dst[2 * x + y, 2 * r + s] += src[4 * x + 2 * y + k, 4 * r + 2 * s + k]
    return out


cdef inline int _idx(int i, int j, int k) nogil:
    return 4 * i + 2 * j + k


def special_reduction(rho, int kind):
    cdef double complex[:, ::1] src = np.ascontiguousarray(rho, dtype=np.complex128)
    out = np.empty((4, 4), dtype=np.complex128)
    cdef double complex[:, ::1] dst = out
    cdef int i, j, r, s
    for i in range(2):
        for j in range(2):
            for r in range(2):
                for s in range(2):
                    if kind == 0:
                        dst[2 * i + j, 2 * r + s] = (
                            src[_idx(i, j, j), _idx(r, s, s)]
                            + src[_idx(i, j, 1 - j), _idx(r, s, 1 - s)]
                        )
                    elif kind == 1:
                        dst[2 * i + j, 2 * r + s] = (
                            src[_idx(j, i, j), _idx(s, r, s)]
                            + src[_idx(1 - j, i, j), _idx(1 - s, r, s)]
                        )
                    else:
                        dst[2 * i + j, 2 * r + s] = (
                            src[_idx(j, j, i), _idx(s, s, r)]
                            + src[_idx(j, 1 - j, i), _idx(s, 1 - s, r)]
                        )
    return out
