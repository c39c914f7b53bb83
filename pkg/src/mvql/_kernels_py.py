"""Numpy implementations of the numeric hot kernels.

This is the fallback backend; ``mvql._kernels`` (Cython) implements the
same four functions with identical semantics.  Both are exercised by the
backend-parity tests and compared in ``benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def quad_forms(matrix, states):
    """Real quadratic forms ``Re <s|M|s>`` for every row ``s`` of ``states``.

    ``matrix`` is (d, d) complex, ``states`` is (n, d) complex; returns a
    (n,) float64 array.
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    states = np.asarray(states, dtype=np.complex128)
    transformed = states @ matrix.T
    return np.einsum("nd,nd->n", states.conj(), transformed).real


def mgs_orthonormalize(vectors, tol):
    """Orthonormal basis of the row span, by modified Gram-Schmidt.

    Residuals with norm at most ``tol`` are treated as rank-deficient and
    dropped.  A second orthogonalization pass guards against cancellation.
    Returns a (rank, d) complex128 array.
    """
    vectors = np.asarray(vectors, dtype=np.complex128)
    n_vectors, dim = vectors.shape
    capacity = min(n_vectors, dim)
    basis = np.empty((capacity, dim), dtype=np.complex128)
    rank = 0
    for row in vectors:
        if rank == capacity:
            break
        v = row.copy()
        for _ in range(2):
            for j in range(rank):
                v -= np.vdot(basis[j], v) * basis[j]
        norm = np.linalg.norm(v)
        if norm > tol:
            basis[rank] = v / norm
            rank += 1
    return basis[:rank].copy()


def hermitian_defect(matrix):
    """Largest entrywise deviation ``max |M - M^H|``."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    return float(np.abs(matrix - matrix.conj().T).max())


def idempotency_defect(matrix):
    """Frobenius norm of ``M @ M - M``."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    return float(np.linalg.norm(matrix @ matrix - matrix))
