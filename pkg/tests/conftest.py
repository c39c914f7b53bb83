"""Shared test helpers: random AST/projector generators and oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from mvql import hilbert
from mvql.formulas import (
    Atom,
    ConstFalse,
    ConstTrue,
    LukConj,
    LukDisj,
    MaxDisj,
    MinConj,
    Neg,
    Xor,
)
from mvql.hilbert import Projector, state_new

ATOM_NAMES = ("p", "q", "r", "s", "t", "u")

_BINARY_NODES = (LukConj, LukDisj, MinConj, MaxDisj, Xor)


def random_formula(rng: random.Random, depth: int, atom_names=ATOM_NAMES):
    """Random AST of depth at most ``depth`` over the given atom names."""
    if depth == 0 or rng.random() < 0.2:
        kind = rng.randrange(8)
        if kind == 0:
            return ConstTrue()
        if kind == 1:
            return ConstFalse()
        return Atom(rng.choice(atom_names))
    kind = rng.randrange(6)
    if kind == 0:
        return Neg(random_formula(rng, depth - 1, atom_names))
    node = _BINARY_NODES[kind - 1]
    return node(
        random_formula(rng, depth - 1, atom_names),
        random_formula(rng, depth - 1, atom_names),
    )


def crisp_oracle(f, env: dict[str, bool]) -> bool:
    """Independent classical evaluation of an AST under a boolean env."""
    if isinstance(f, Atom):
        return env[f.name]
    if isinstance(f, ConstTrue):
        return True
    if isinstance(f, ConstFalse):
        return False
    if isinstance(f, Neg):
        return not crisp_oracle(f.child, env)
    left, right = crisp_oracle(f.left, env), crisp_oracle(f.right, env)
    if isinstance(f, (LukConj, MinConj)):
        return left and right
    if isinstance(f, (LukDisj, MaxDisj)):
        return left or right
    return left != right


def random_complex_rows(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    parts = rng.standard_normal((n, 2, dim))
    return parts[:, 0, :] + 1j * parts[:, 1, :]


def random_projector(rng: np.random.Generator, dim: int, rank: int | None = None) -> Projector:
    """Random projector with the given rank (uniform over 0..dim if None)."""
    if rank is None:
        rank = int(rng.integers(0, dim + 1))
    if rank == 0:
        return hilbert.zero_projector(dim)
    vectors = [state_new(row) for row in random_complex_rows(rng, rank, dim)]
    return hilbert.projector_from_vectors(vectors, dim=dim)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    gauss = random_complex_rows(rng, dim, dim)
    unitary, _ = np.linalg.qr(gauss)
    return unitary


def projector_from_columns(columns: np.ndarray) -> Projector:
    """Projector onto the span of orthonormal columns."""
    return Projector(columns @ columns.conj().T)


def random_nested_pair(rng: np.random.Generator, dim: int):
    """A random pair (P, Q) of projectors with range(P) contained in range(Q)."""
    unitary = random_unitary(rng, dim)
    q_rank = int(rng.integers(1, dim + 1))
    p_rank = int(rng.integers(0, q_rank + 1))
    q = projector_from_columns(unitary[:, :q_rank])
    p = (
        hilbert.zero_projector(dim)
        if p_rank == 0
        else projector_from_columns(unitary[:, :p_rank])
    )
    return p, q


def farey_values(max_denominator: int) -> list[Fraction]:
    """All reduced rationals p/q in [0, 1] with q <= max_denominator."""
    values = {Fraction(p, q) for q in range(1, max_denominator + 1) for p in range(q + 1)}
    return sorted(values)


def random_fraction(rng: random.Random, max_denominator: int = 10**6) -> Fraction:
    den = rng.randrange(1, max_denominator + 1)
    return Fraction(rng.randrange(0, den + 1), den)
