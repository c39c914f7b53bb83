"""Truth-valued propositional functions over unit states.

A closed subspace, held as its projector P, induces the function
``psi -> <psi|P|psi>`` from unit vectors to [0, 1].  Under this reading
the subspace lattice becomes a family of many-valued propositional
functions that is closed under complement-negation, closed under
bounded-sum disjunction of pairwise exclusive members (where the bounded
sum never clips, because orthogonal Born values add), and in which the
zero subspace is the only member exclusive with itself.

:func:`verify_conditions` checks those four closure conditions by seeded
random sampling and reports worst-case residuals; it never proves them,
it produces falsifiable numerical evidence reproducible from the seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend, hilbert
from .errors import (
    DimensionMismatch,
    NotExclusive,
    NumericalInconsistency,
    ValidationError,
)
from .hilbert import Projector, StateVector, _projector_from_basis

__all__ = [
    "PropFunction",
    "always_false",
    "always_true",
    "pf_eval",
    "pf_neg",
    "pf_exclusive",
    "pf_disj_exclusive",
    "only_F_self_exclusive",
    "ConditionResult",
    "ConditionsReport",
    "verify_conditions",
]


@dataclass(frozen=True)
class PropFunction:
    """A propositional function on unit states, wrapped around a projector."""

    projector: Projector
    label: str | None = None

    @property
    def dim(self) -> int:
        return self.projector.dim


def always_false(dim: int) -> PropFunction:
    """The constant-0 function F (zero subspace)."""
    return PropFunction(hilbert.zero_projector(dim), label="F")


def always_true(dim: int) -> PropFunction:
    """The constant-1 function V (whole space)."""
    return PropFunction(hilbert.identity_projector(dim), label="V")


def pf_eval(p: PropFunction, psi: StateVector) -> float:
    """Truth value of ``p`` at the state ``psi`` (the Born value)."""
    return hilbert.born_value(p.projector, psi)


def pf_neg(p: PropFunction) -> PropFunction:
    """Pointwise complement-negation: wraps ``I - P``."""
    label = None if p.label is None else f"~{p.label}"
    return PropFunction(hilbert.orthocomplement(p.projector), label=label)


def pf_exclusive(p: PropFunction, q: PropFunction, *, atol=None) -> bool:
    """Whether ``v(p) + v(q) <= 1`` at every state.

    Decided spectrally (largest eigenvalue of P + Q at most 1) and
    cross-checked against range orthogonality (``PQ = 0``); the two tests
    are equivalent for projectors, and a disagreement raises
    :class:`NumericalInconsistency`.
    """
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimensions differ: {p.dim} vs {q.dim}")
    tol = hilbert.get_atol() if atol is None else float(atol)
    spectral = hilbert.lambda_max(p.projector.matrix + q.projector.matrix) <= 1.0 + tol
    algebraic = float(np.linalg.norm(p.projector.matrix @ q.projector.matrix)) <= tol
    if spectral != algebraic:
        raise NumericalInconsistency(
            "spectral and range-orthogonality exclusivity tests disagree"
        )
    return spectral


def pf_disj_exclusive(ps) -> PropFunction:
    """Bounded-sum disjunction of pairwise exclusive functions.

    For pairwise exclusive members the projectors sum to a projector, and
    the pointwise bounded sum ``min(sum v_i, 1)`` never clips, so the
    disjunction is again a member of the family.  A non-exclusive pair
    raises :class:`NotExclusive` naming the offending indices.
    """
    ps = list(ps)
    if not ps:
        raise ValidationError("disjunction needs at least one member")
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if not pf_exclusive(ps[i], ps[j]):
                raise NotExclusive(i, j)
    total = sum(p.projector.matrix for p in ps)
    return PropFunction(Projector(total))


def only_F_self_exclusive(p: PropFunction, *, atol=None) -> bool:
    """Check the 'only F is exclusive with itself' property at ``p``.

    Returns True iff self-exclusivity of ``p`` implies that its projector
    is zero.  Projectors have spectrum {0, 1}, so any nonzero ``p`` has
    ``lambda_max(2P) = 2`` and is not self-exclusive.
    """
    tol = hilbert.get_atol() if atol is None else float(atol)
    self_exclusive = hilbert.lambda_max(2.0 * p.projector.matrix) <= 1.0 + tol
    return (not self_exclusive) or p.projector.rank == 0


@dataclass
class ConditionResult:
    passed: bool
    worst_residual: float

    def to_json(self) -> dict:
        return {"passed": self.passed, "worst_residual": self.worst_residual}


@dataclass
class ConditionsReport:
    """Sampling evidence for the four closure conditions of the family."""

    dim: int
    n_state_samples: int
    n_family_samples: int
    seed: int
    condition1: ConditionResult
    condition2: ConditionResult
    condition3: ConditionResult
    condition4: ConditionResult

    @property
    def all_passed(self) -> bool:
        return all(
            c.passed
            for c in (self.condition1, self.condition2, self.condition3, self.condition4)
        )

    @property
    def worst_residual(self) -> float:
        return max(
            c.worst_residual
            for c in (self.condition1, self.condition2, self.condition3, self.condition4)
        )

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "n_state_samples": self.n_state_samples,
            "n_family_samples": self.n_family_samples,
            "seed": self.seed,
            "condition1": self.condition1.to_json(),
            "condition2": self.condition2.to_json(),
            "condition3": self.condition3.to_json(),
            "condition4": self.condition4.to_json(),
        }


def _random_states(rng: np.random.Generator, dim: int, n: int) -> np.ndarray:
    parts = rng.standard_normal((n, 2, dim))
    amps = parts[:, 0, :] + 1j * parts[:, 1, :]
    return amps / np.linalg.norm(amps, axis=1, keepdims=True)


def _random_projector(rng: np.random.Generator, dim: int) -> Projector:
    rank = int(rng.integers(0, dim + 1))
    if rank == 0:
        return hilbert.zero_projector(dim)
    parts = rng.standard_normal((rank, 2, dim))
    rows = parts[:, 0, :] + 1j * parts[:, 1, :]
    basis = _backend.kernels.mgs_orthonormalize(rows, hilbert.get_atol())
    return _projector_from_basis(basis, dim)


def _random_orthogonal_family(rng: np.random.Generator, dim: int) -> list[Projector]:
    total = int(rng.integers(0, dim + 1))
    if total == 0:
        return [hilbert.zero_projector(dim)]
    gauss = rng.standard_normal((dim, 2, dim))
    unitary, _ = np.linalg.qr((gauss[:, 0, :] + 1j * gauss[:, 1, :]).T)
    members = []
    start = 0
    remaining = total
    while remaining > 0:
        size = int(rng.integers(1, remaining + 1))
        block = unitary[:, start : start + size].T
        members.append(_projector_from_basis(np.ascontiguousarray(block), dim))
        start += size
        remaining -= size
    if rng.integers(0, 4) == 0:
        members.append(hilbert.zero_projector(dim))
    return members


def verify_conditions(
    dim: int,
    n_state_samples: int,
    n_family_samples: int,
    seed: int,
    *,
    match_atol: float = 1e-12,
) -> ConditionsReport:
    """Sample-check the four closure conditions at the given dimension.

    Draws ``n_state_samples`` Haar-random states and ``n_family_samples``
    random projectors (rank uniform over 0..dim) plus random orthogonal
    families, all deterministically from ``seed``.  Checks:

    1. F evaluates to 0 at every sampled state.
    2. The complement of each sampled projector is a valid member
       (Hermitian/idempotent within the construction tolerance) and its
       valuation matches ``1 - v`` pointwise within ``match_atol``.
    3. The orthogonal sum of each sampled family is a valid member whose
       valuation matches the bounded sum ``min(sum v_i, 1)`` pointwise
       within ``match_atol``.
    4. Only zero-rank members are self-exclusive.

    Failures are reported in the returned :class:`ConditionsReport`, not
    raised.
    """
    if dim < 1:
        raise ValidationError(f"dim must be >= 1, got {dim}")
    if n_state_samples < 1 or n_family_samples < 1:
        raise ValidationError("sample counts must be >= 1")
    atol = hilbert.get_atol()
    kernels = _backend.kernels
    rng = np.random.default_rng(seed)
    states = _random_states(rng, dim, n_state_samples)

    # Condition 1: the constant F.
    res1 = float(np.abs(hilbert.born_values(hilbert.zero_projector(dim), states)).max())
    cond1 = ConditionResult(res1 <= match_atol, res1)

    ok2, worst2 = True, 0.0
    ok3, worst3 = True, 0.0
    ok4, worst4 = True, 0.0
    identity = np.eye(dim, dtype=np.complex128)
    for _ in range(n_family_samples):
        # Condition 2: closure under complement-negation, pointwise match.
        proj = _random_projector(rng, dim)
        neg_matrix = identity - proj.matrix
        defect = max(kernels.hermitian_defect(neg_matrix), kernels.idempotency_defect(neg_matrix))
        worst2 = max(worst2, defect)
        if defect <= atol:
            values = hilbert.born_values(proj, states)
            neg_values = hilbert.born_values(Projector(neg_matrix), states)
            mismatch = float(np.abs(neg_values - (1.0 - values)).max())
            worst2 = max(worst2, mismatch)
            ok2 = ok2 and mismatch <= match_atol
        else:
            ok2 = False

        # Condition 4: only F is self-exclusive.
        ok4 = ok4 and only_F_self_exclusive(PropFunction(proj))

        # Condition 3: closure under bounded-sum disjunction of an
        # orthogonal family, pointwise match against the bounded sum.
        family = _random_orthogonal_family(rng, dim)
        orth = max(
            (
                float(np.linalg.norm(family[i].matrix @ family[j].matrix))
                for i in range(len(family))
                for j in range(i + 1, len(family))
            ),
            default=0.0,
        )
        total = sum(member.matrix for member in family)
        defect = max(kernels.hermitian_defect(total), kernels.idempotency_defect(total))
        worst3 = max(worst3, orth, defect)
        if orth <= atol and defect <= atol:
            sum_values = hilbert.born_values(Projector(total), states)
            member_sum = np.zeros(n_state_samples)
            for member in family:
                member_sum += hilbert.born_values(member, states)
            mismatch = float(np.abs(sum_values - np.minimum(member_sum, 1.0)).max())
            worst3 = max(worst3, mismatch)
            ok3 = ok3 and mismatch <= match_atol
        else:
            ok3 = False

    worst4 = 0.0 if ok4 else 1.0
    return ConditionsReport(
        dim=dim,
        n_state_samples=n_state_samples,
        n_family_samples=n_family_samples,
        seed=seed,
        condition1=cond1,
        condition2=ConditionResult(ok2, worst2),
        condition3=ConditionResult(ok3, worst3),
        condition4=ConditionResult(ok4, worst4),
    )
