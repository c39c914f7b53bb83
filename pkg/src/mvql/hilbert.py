"""Finite-dimensional complex Hilbert space engine.

States, projectors, the lattice of closed subspaces (join / meet /
orthocomplement / containment), Born-rule valuation, and multi-qubit
Pauli embeddings.  Subspaces are stored as projector matrices: that makes
the Born value and the spectral exclusivity test a single matrix
operation each, and bases stay recoverable by eigendecomposition.

All matrices are dense complex128.  A single rank/construction tolerance
(default 1e-9, see :func:`set_atol`) keeps orthonormalization, ``meet``,
``join`` and ``leq`` mutually coherent.
"""

from __future__ import annotations

import json
import numbers

import numpy as np

from . import _backend
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotHermitian,
    NumericRange,
    ValidationError,
    ZeroVector,
)

__all__ = [
    "StateVector",
    "Projector",
    "HermitianOperator",
    "get_atol",
    "set_atol",
    "state_new",
    "random_state",
    "random_states",
    "zero_projector",
    "identity_projector",
    "projector_from_vectors",
    "orthocomplement",
    "join",
    "meet",
    "leq",
    "born_value",
    "born_values",
    "expectation",
    "lambda_max",
    "pauli_embed",
    "load_state",
    "load_projector",
]

_DEFAULT_ATOL = 1e-9
_atol = _DEFAULT_ATOL

PAULI = {
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def get_atol() -> float:
    """Current construction / rank tolerance."""
    return _atol


def set_atol(value: float) -> None:
    """Override the construction / rank tolerance (one global knob)."""
    global _atol
    if not (isinstance(value, numbers.Real) and value > 0):
        raise ValidationError(f"tolerance must be a positive real, got {value!r}")
    _atol = float(value)


def _resolve_atol(atol) -> float:
    return _atol if atol is None else float(atol)


def _as_square_matrix(matrix, what: str) -> np.ndarray:
    arr = np.array(matrix, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ValidationError(f"{what} must be a square matrix of dimension >= 1")
    return arr


class StateVector:
    """A unit vector in C^dim (norm 1 within the construction tolerance)."""

    __slots__ = ("_amplitudes",)

    def __init__(self, amplitudes, *, atol=None):
        arr = np.array(amplitudes, dtype=np.complex128)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise ValidationError("amplitudes must be a non-empty 1-D sequence")
        norm = np.linalg.norm(arr)
        if abs(norm - 1.0) > _resolve_atol(atol):
            raise ValidationError(
                f"state vector is not normalized: |norm - 1| = {abs(norm - 1.0):.3e}"
            )
        arr.setflags(write=False)
        self._amplitudes = arr

    @property
    def dim(self) -> int:
        return self._amplitudes.shape[0]

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "amplitudes": [[z.real, z.imag] for z in self._amplitudes],
        }

    def __repr__(self) -> str:
        return f"StateVector(dim={self.dim})"


class Projector:
    """Orthogonal projector: Hermitian and idempotent within tolerance.

    The two constructor checks bound the spectrum as well: eigenvalues of
    a matrix passing them lie within ~tolerance of {0, 1}.
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix, *, atol=None):
        arr = _as_square_matrix(matrix, "projector")
        tol = _resolve_atol(atol)
        defect = _backend.kernels.hermitian_defect(arr)
        if defect > tol:
            raise ValidationError(f"matrix is not Hermitian: defect {defect:.3e}")
        defect = _backend.kernels.idempotency_defect(arr)
        if defect > tol:
            raise ValidationError(f"matrix is not idempotent: defect {defect:.3e}")
        arr.setflags(write=False)
        self._matrix = arr

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def rank(self) -> int:
        return int(round(float(np.trace(self._matrix).real)))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "matrix": [[[z.real, z.imag] for z in row] for row in self._matrix],
        }

    def __repr__(self) -> str:
        return f"Projector(dim={self.dim}, rank={self.rank})"


class HermitianOperator:
    """A Hermitian matrix; the home of observables such as Pauli products."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix, *, atol=None):
        arr = _as_square_matrix(matrix, "operator")
        defect = _backend.kernels.hermitian_defect(arr)
        if defect > _resolve_atol(atol):
            raise NotHermitian(f"matrix is not Hermitian: defect {defect:.3e}")
        arr.setflags(write=False)
        self._matrix = arr

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __repr__(self) -> str:
        return f"HermitianOperator(dim={self.dim})"


def state_new(amplitudes) -> StateVector:
    """Normalize ``amplitudes`` into a unit state.

    Raises :class:`ZeroVector` for the zero vector.
    """
    arr = np.array(amplitudes, dtype=np.complex128)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise ValidationError("amplitudes must be a non-empty 1-D sequence")
    norm = np.linalg.norm(arr)
    if norm == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    return StateVector(arr / norm)


def random_states(dim: int, n: int, seed: int) -> np.ndarray:
    """(n, dim) array of unit rows, Haar-uniform, deterministic per seed.

    Each row takes 2*dim independent standard normals as real and
    imaginary parts and is then normalized.
    """
    if dim < 1:
        raise ValidationError(f"dimension must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    parts = rng.standard_normal((n, 2, dim))
    amps = parts[:, 0, :] + 1j * parts[:, 1, :]
    norms = np.linalg.norm(amps, axis=1, keepdims=True)
    return amps / norms


def random_state(dim: int, seed: int) -> StateVector:
    """One Haar-uniform unit vector, deterministic per (dim, seed)."""
    return StateVector(random_states(dim, 1, seed)[0])


def zero_projector(dim: int) -> Projector:
    return Projector(np.zeros((dim, dim), dtype=np.complex128))


def identity_projector(dim: int) -> Projector:
    return Projector(np.eye(dim, dtype=np.complex128))


def _projector_from_basis(basis: np.ndarray, dim: int) -> Projector:
    if basis.shape[0] == 0:
        return zero_projector(dim)
    matrix = basis.T @ basis.conj()
    matrix = (matrix + matrix.conj().T) / 2.0
    return Projector(matrix)


def projector_from_vectors(vectors, dim: int | None = None) -> Projector:
    """Orthogonal projector onto the span of a family of states.

    The family is orthonormalized with the rank tolerance, so duplicates
    and linear dependencies collapse; the result's rank is the numerical
    rank of the family.  ``dim`` is only needed for an empty family.
    """
    vectors = list(vectors)
    if not vectors:
        if dim is None:
            raise ValidationError("an empty family needs an explicit dim")
        return zero_projector(dim)
    dims = {v.dim for v in vectors}
    if len(dims) != 1:
        raise DimensionMismatch(f"vectors span several dimensions: {sorted(dims)}")
    space_dim = dims.pop()
    if dim is not None and dim != space_dim:
        raise DimensionMismatch(f"vectors have dim {space_dim}, expected {dim}")
    rows = np.array([v.amplitudes for v in vectors], dtype=np.complex128)
    basis = _backend.kernels.mgs_orthonormalize(rows, get_atol())
    return _projector_from_basis(basis, space_dim)


def _check_same_dim(a, b) -> int:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    return a.dim


def orthocomplement(p: Projector) -> Projector:
    """Projector onto the orthogonal complement: ``I - P``."""
    return Projector(np.eye(p.dim, dtype=np.complex128) - p.matrix)


def join(p: Projector, q: Projector) -> Projector:
    """Projector onto the closed span of the union of the two ranges."""
    dim = _check_same_dim(p, q)
    columns = np.vstack([p.matrix.T, q.matrix.T])
    basis = _backend.kernels.mgs_orthonormalize(columns, get_atol())
    return _projector_from_basis(basis, dim)


def meet(p: Projector, q: Projector) -> Projector:
    """Projector onto the intersection of ranges, via De Morgan duality."""
    _check_same_dim(p, q)
    return orthocomplement(join(orthocomplement(p), orthocomplement(q)))


def leq(p: Projector, q: Projector, *, atol=None) -> bool:
    """Subspace containment range(P) <= range(Q), i.e. ``QP = P``."""
    _check_same_dim(p, q)
    defect = np.linalg.norm(q.matrix @ p.matrix - p.matrix)
    return bool(defect <= _resolve_atol(atol))


def born_values(p: Projector, states: np.ndarray, *, atol=None) -> np.ndarray:
    """Batched Born values ``<s|P|s>`` for unit rows of ``states``.

    Values are clamped into [0, 1] when within tolerance of the interval;
    anything further out raises :class:`NumericRange`.
    """
    raw = _backend.kernels.quad_forms(p.matrix, np.asarray(states, dtype=np.complex128))
    tol = _resolve_atol(atol)
    if raw.size and (raw.min() < -tol or raw.max() > 1.0 + tol):
        worst = raw.min() if abs(raw.min() - 0.5) > abs(raw.max() - 0.5) else raw.max()
        raise NumericRange(f"Born value {worst!r} outside [-{tol}, 1+{tol}]")
    return np.clip(raw, 0.0, 1.0)


def born_value(p: Projector, psi: StateVector, *, atol=None) -> float:
    """Born-rule truth value of the subspace property P in state psi."""
    _check_same_dim(p, psi)
    return float(born_values(p, psi.amplitudes[np.newaxis, :], atol=atol)[0])


def expectation(op: HermitianOperator, psi: StateVector) -> float:
    """Expectation value ``<psi|A|psi>`` of a Hermitian operator."""
    _check_same_dim(op, psi)
    return float(_backend.kernels.quad_forms(op.matrix, psi.amplitudes[np.newaxis, :])[0])


def lambda_max(a, *, atol=None) -> float:
    """Largest eigenvalue of a Hermitian operator or matrix."""
    matrix = a.matrix if isinstance(a, (HermitianOperator, Projector)) else np.asarray(a, dtype=np.complex128)
    defect = _backend.kernels.hermitian_defect(matrix)
    if defect > _resolve_atol(atol):
        raise NotHermitian(f"matrix is not Hermitian: defect {defect:.3e}")
    return float(np.linalg.eigvalsh(matrix)[-1])


def pauli_embed(axis: str, site: int, n_sites: int) -> HermitianOperator:
    """Single-site Pauli operator on an n-qubit register.

    Returns ``I x ... x sigma_axis x ... x I`` with the Pauli at
    1-based ``site``; site 1 is the leftmost tensor factor (big-endian
    ordering, |0> = (1, 0) is the sigma_Z "+1" eigenvector).
    """
    if axis not in PAULI:
        raise ValidationError(f"axis must be one of X, Y, Z, got {axis!r}")
    if n_sites < 1:
        raise ValidationError(f"n_sites must be >= 1, got {n_sites}")
    if not 1 <= site <= n_sites:
        raise IndexOutOfRange(f"site {site} outside 1..{n_sites}")
    op = np.eye(1, dtype=np.complex128)
    eye2 = np.eye(2, dtype=np.complex128)
    for k in range(1, n_sites + 1):
        op = np.kron(op, PAULI[axis] if k == site else eye2)
    return HermitianOperator(op)


def _load_json(path: str, what: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {what} file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{what} file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError(f"{what} file {path!r} must hold a JSON object")
    return data


def _complex_from_pair(entry, what: str) -> complex:
    if (
        not isinstance(entry, (list, tuple))
        or len(entry) != 2
        or not all(isinstance(x, numbers.Real) for x in entry)
    ):
        raise ValidationError(f"{what} entries must be [re, im] pairs, got {entry!r}")
    return complex(entry[0], entry[1])


def load_state(path: str) -> StateVector:
    """Read a state file ``{"dim": n, "amplitudes": [[re, im], ...]}``."""
    data = _load_json(path, "state")
    dim = data.get("dim")
    amps = data.get("amplitudes")
    if not isinstance(dim, int) or dim < 1:
        raise ValidationError("state file: 'dim' must be a positive integer")
    if not isinstance(amps, list) or len(amps) != dim:
        raise ValidationError("state file: 'amplitudes' must list exactly dim entries")
    arr = np.array([_complex_from_pair(e, "amplitude") for e in amps], dtype=np.complex128)
    return StateVector(arr)


def load_projector(path: str) -> Projector:
    """Read a projector file ``{"dim": n, "matrix": [[[re, im], ...], ...]}``."""
    data = _load_json(path, "projector")
    dim = data.get("dim")
    matrix = data.get("matrix")
    if not isinstance(dim, int) or dim < 1:
        raise ValidationError("projector file: 'dim' must be a positive integer")
    if not isinstance(matrix, list) or len(matrix) != dim:
        raise ValidationError("projector file: 'matrix' must list exactly dim rows")
    rows = []
    for row in matrix:
        if not isinstance(row, list) or len(row) != dim:
            raise ValidationError("projector file: each matrix row must list dim entries")
        rows.append([_complex_from_pair(e, "matrix") for e in row])
    return Projector(np.array(rows, dtype=np.complex128))
