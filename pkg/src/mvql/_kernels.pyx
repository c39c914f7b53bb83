# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled numeric hot kernels.

Same four functions as ``mvql._kernels_py``; these versions avoid the
per-call array machinery that dominates on the small matrices (dim 2..8)
hammered by the sampling verifier.
"""

import numpy as np

from libc.math cimport sqrt

BACKEND_NAME = "compiled"


def quad_forms(const double complex[:, :] matrix, const double complex[:, :] states):
    """Real quadratic forms ``Re <s|M|s>`` for every row ``s`` of ``states``."""
    cdef Py_ssize_t n = states.shape[0]
    cdef Py_ssize_t d = states.shape[1]
    if matrix.shape[0] != d or matrix.shape[1] != d:
        raise ValueError("matrix and states have mismatched dimensions")
    out = np.empty(n, dtype=np.float64)
    cdef double[:] out_view = out
    cdef Py_ssize_t s, i, j
    cdef double complex acc, row
    for s in range(n):
        acc = 0
        for i in range(d):
            row = 0
            for j in range(d):
                row = row + matrix[i, j] * states[s, j]
            acc = acc + states[s, i].conjugate() * row
        out_view[s] = acc.real
    return out


def mgs_orthonormalize(const double complex[:, :] vectors, double tol):
    """Orthonormal basis of the row span, by modified Gram-Schmidt.

    Residuals with norm at most ``tol`` are dropped; two orthogonalization
    passes guard against cancellation.  Returns a (rank, d) array.
    """
    cdef Py_ssize_t k = vectors.shape[0]
    cdef Py_ssize_t d = vectors.shape[1]
    cdef Py_ssize_t capacity = k if k < d else d
    basis_arr = np.zeros((capacity, d), dtype=np.complex128)
    work_arr = np.empty(d, dtype=np.complex128)
    cdef double complex[:, :] basis = basis_arr
    cdef double complex[:] v = work_arr
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t i, j, t, p
    cdef double complex coef
    cdef double norm
    for i in range(k):
        if rank == capacity:
            break
        for j in range(d):
            v[j] = vectors[i, j]
        for p in range(2):
            for t in range(rank):
                coef = 0
                for j in range(d):
                    coef = coef + basis[t, j].conjugate() * v[j]
                for j in range(d):
                    v[j] = v[j] - coef * basis[t, j]
        norm = 0
        for j in range(d):
            norm += v[j].real * v[j].real + v[j].imag * v[j].imag
        norm = sqrt(norm)
        if norm > tol:
            for j in range(d):
                basis[rank, j] = v[j] / norm
            rank += 1
    return basis_arr[:rank].copy()


def hermitian_defect(const double complex[:, :] matrix):
    """Largest entrywise deviation ``max |M - M^H|``."""
    cdef Py_ssize_t d = matrix.shape[0]
    if matrix.shape[1] != d:
        raise ValueError("matrix must be square")
    cdef Py_ssize_t i, j
    cdef double complex diff
    cdef double worst = 0.0, mag
    for i in range(d):
        for j in range(d):
            diff = matrix[i, j] - matrix[j, i].conjugate()
            mag = sqrt(diff.real * diff.real + diff.imag * diff.imag)
            if mag > worst:
                worst = mag
    return worst


def idempotency_defect(const double complex[:, :] matrix):
    """Frobenius norm of ``M @ M - M``."""
    cdef Py_ssize_t d = matrix.shape[0]
    if matrix.shape[1] != d:
        raise ValueError("matrix must be square")
    cdef Py_ssize_t i, j, t
    cdef double complex acc
    cdef double total = 0.0
    for i in range(d):
        for j in range(d):
            acc = -matrix[i, j]
            for t in range(d):
                acc = acc + matrix[i, t] * matrix[t, j]
            total += acc.real * acc.real + acc.imag * acc.imag
    return sqrt(total)
