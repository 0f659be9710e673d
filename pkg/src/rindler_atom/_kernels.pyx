# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Same signatures as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp, sqrt, lgamma, M_PI

cnp.import_array()

BACKEND = "cython"


cdef inline double _laguerre(int k, int j, double x) nogil:
    cdef double prev = 1.0, cur, nxt
    cdef int i
    if j == 0:
        return 1.0
    cur = 1.0 + k - x
    for i in range(1, j):
        nxt = ((2 * i + 1 + k - x) * cur - (i + k) * prev) / (i + 1)
        prev = cur
        cur = nxt
    return cur


cdef inline double _legendre(int l, double x) nogil:
    cdef double prev = 1.0, cur = x, nxt
    cdef int i
    if l == 0:
        return 1.0
    for i in range(1, l):
        nxt = ((2 * i + 1) * x * cur - i * prev) / (i + 1)
        prev = cur
        cur = nxt
    return cur


cdef inline double _norm(int n, int l) nogil:
    return sqrt((2.0 / n) ** 3 / (2.0 * n) * exp(lgamma(n - l) - lgamma(n + l + 1)))


cdef inline double _radial(int n, int l, double norm, double r) nogil:
    cdef double rho = 2.0 * r / n
    cdef double p = 1.0
    cdef int i
    for i in range(l):
        p *= rho
    return norm * exp(-0.5 * rho) * p * _laguerre(2 * l + 1, n - l - 1, rho)


def laguerre(int k, int j, x):
    cdef cnp.ndarray[double, ndim=1] flat = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef cnp.ndarray[double, ndim=1] out = np.empty_like(flat)
    cdef Py_ssize_t i
    for i in range(flat.shape[0]):
        out[i] = _laguerre(k, j, flat[i])
    return out.reshape(np.shape(x))


def radial_norm(int n, int l):
    return _norm(n, l)


def radial_values(int n, int l, r):
    cdef cnp.ndarray[double, ndim=1] flat = np.ascontiguousarray(r, dtype=np.float64).ravel()
    cdef cnp.ndarray[double, ndim=1] out = np.empty_like(flat)
    cdef double norm = _norm(n, l)
    cdef Py_ssize_t i
    for i in range(flat.shape[0]):
        out[i] = _radial(n, l, norm, flat[i])
    return out.reshape(np.shape(r))


def legendre(int l, x):
    cdef cnp.ndarray[double, ndim=1] flat = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef cnp.ndarray[double, ndim=1] out = np.empty_like(flat)
    cdef Py_ssize_t i
    for i in range(flat.shape[0]):
        out[i] = _legendre(l, flat[i])
    return out.reshape(np.shape(x))


def plane_density(ns, ls, coeffs, xs, zs):
    cdef cnp.int64_t[::1] n_v = np.ascontiguousarray(ns, dtype=np.int64)
    cdef cnp.int64_t[::1] l_v = np.ascontiguousarray(ls, dtype=np.int64)
    cdef double[::1] c_v = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef double[::1] x_v = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] z_v = np.ascontiguousarray(zs, dtype=np.float64)
    cdef Py_ssize_t nterm = n_v.shape[0], nx = x_v.shape[0], nz = z_v.shape[0]
    cdef cnp.ndarray[double, ndim=2] out = np.empty((nz, nx), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef double[::1] norms = np.empty(nterm, dtype=np.float64)
    cdef double[::1] ynorm = np.empty(nterm, dtype=np.float64)
    cdef Py_ssize_t i, j, k
    cdef double x, z, r, ct, psi
    for k in range(nterm):
        norms[k] = _norm(<int>n_v[k], <int>l_v[k])
        ynorm[k] = sqrt((2 * l_v[k] + 1) / (4.0 * M_PI))
    # density depends on |x| only: columns that are exact negatives share a value
    cdef Py_ssize_t[::1] mirror = np.full(nx, -1, dtype=np.intp)
    for j in range(nx // 2):
        if x_v[nx - 1 - j] == -x_v[j]:
            mirror[nx - 1 - j] = j
    with nogil:
        for i in range(nz):
            z = z_v[i]
            for j in range(nx):
                if mirror[j] >= 0:
                    o[i, j] = o[i, mirror[j]]
                    continue
                x = x_v[j]
                r = sqrt(x * x + z * z)
                ct = z / r if r > 0 else 1.0
                psi = 0.0
                for k in range(nterm):
                    psi += c_v[k] * _radial(<int>n_v[k], <int>l_v[k], norms[k], r) * ynorm[k] * _legendre(<int>l_v[k], ct)
                o[i, j] = psi * psi
    return out
