"""The GHZ contradiction, end to end, three ways.

Quantum side: the three-qubit state ``(|000> + phase*|111>)/sqrt(2)`` is a
simultaneous eigenvector of the four X/Y pattern observables; with the
default ``phase=-1`` and the conventions fixed in :mod:`mvql.hilbert` the
expectations come out (+1, +1, +1, -1).

Classical side: no assignment of fixed +-1 outcomes to the six
single-site measurements satisfies all four product equations (exhaustive
search over the 64 cases), and the parity argument shows why: every
symbol appears squared in the product of the left-hand sides (+1) while
the right-hand sides multiply to -1.  The same contradiction re-derived
in 2-valued logic: encode outcome +1 as true, so each product equation
becomes an XOR chain (a three-factor product is +1 iff an even number of
factors are -1, i.e. an odd number of true inputs), and the four-equation
system is unsatisfiable over all 64 crisp assignments.

Many-valued side: the Born degrees of all six single-site "spin up"
propositions equal 1/2, as do their negations, so the propositions are
not crisp and the 2-valued premise behind the contradiction never holds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import formulas, hilbert
from .errors import DimensionMismatch, ValidationError
from .hilbert import HermitianOperator, StateVector

__all__ = [
    "PATTERNS",
    "GHZ_CONSTRAINTS",
    "GhzObservable",
    "ClassicalAssignment",
    "XorSystemReport",
    "GhzReport",
    "ghz_observable",
    "ghz_state",
    "ghz_expectations",
    "satisfying_assignments",
    "classical_exhaustive",
    "parity_summary",
    "xor_system_check",
    "elementary_degrees",
    "ghz_report",
]

PATTERNS = ("XYY", "YXY", "YYX", "XXX")
GHZ_CONSTRAINTS = (("XYY", +1), ("YXY", +1), ("YYX", +1), ("XXX", -1))

DEGREE_KEYS = ("X1", "X2", "X3", "Y1", "Y2", "Y3")


@dataclass(frozen=True)
class GhzObservable:
    """A three-site X/Y pattern, e.g. "XYY", with its dim-8 operator."""

    pattern: str
    operator: HermitianOperator


class ClassicalAssignment(NamedTuple):
    """Preassigned +-1 outcomes for the six single-site measurements."""

    x1: int
    x2: int
    x3: int
    y1: int
    y2: int
    y3: int


def ghz_observable(pattern: str) -> GhzObservable:
    """Build the product observable for a three-character X/Y pattern."""
    if len(pattern) != 3 or any(axis not in "XY" for axis in pattern):
        raise ValidationError(f"pattern must be three characters from X/Y, got {pattern!r}")
    matrix = np.eye(8, dtype=np.complex128)
    for site, axis in enumerate(pattern, start=1):
        matrix = matrix @ hilbert.pauli_embed(axis, site, 3).matrix
    return GhzObservable(pattern, HermitianOperator(matrix))


def ghz_state(phase: int = -1) -> StateVector:
    """The entangled state ``(|000> + phase*|111>)/sqrt(2)``.

    The default phase -1 is the sign for which the four expectations come
    out (+1, +1, +1, -1) under this package's basis conventions; phase +1
    flips all four signs.
    """
    if phase not in (+1, -1):
        raise ValidationError(f"phase must be +1 or -1, got {phase!r}")
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = 1.0 / np.sqrt(2.0)
    amps[7] = phase / np.sqrt(2.0)
    return StateVector(amps)


def ghz_expectations(psi: StateVector) -> dict[str, float]:
    """Expectation of each pattern observable, keyed "XYY".."XXX"."""
    return {
        pattern: hilbert.expectation(ghz_observable(pattern).operator, psi)
        for pattern in PATTERNS
    }


def _pattern_product(assignment: ClassicalAssignment, pattern: str) -> int:
    product = 1
    for site, axis in enumerate(pattern, start=1):
        product *= getattr(assignment, f"{axis.lower()}{site}")
    return product


def satisfying_assignments(constraints=GHZ_CONSTRAINTS) -> list[ClassicalAssignment]:
    """All of the 64 +-1 preassignments satisfying the given product
    equations, in lexicographic order over (x1, x2, x3, y1, y2, y3) with
    +1 before -1."""
    found = []
    for values in itertools.product((+1, -1), repeat=6):
        assignment = ClassicalAssignment(*values)
        if all(_pattern_product(assignment, pat) == rhs for pat, rhs in constraints):
            found.append(assignment)
    return found


def classical_exhaustive() -> list[ClassicalAssignment]:
    """Preassignments satisfying all four GHZ equations (there are none)."""
    return satisfying_assignments(GHZ_CONSTRAINTS)


def parity_summary() -> dict[str, int]:
    """The parity argument: the product of the four left-hand sides is
    identically +1 (every symbol appears an even number of times), while
    the right-hand sides multiply to -1."""
    exponents = {key: 0 for key in DEGREE_KEYS}
    for pattern, _ in GHZ_CONSTRAINTS:
        for site, axis in enumerate(pattern, start=1):
            exponents[f"{axis}{site}"] += 1
    assert all(count % 2 == 0 for count in exponents.values())
    rhs_product = 1
    for _, rhs in GHZ_CONSTRAINTS:
        rhs_product *= rhs
    return {"lhs_product": 1, "rhs_product": rhs_product}


def _xor_chain(atom_names) -> str:
    return " ^ ".join(atom_names)


def _equation_atoms(pattern: str) -> list[str]:
    return [f"{axis.lower()}{site}" for site, axis in enumerate(pattern, start=1)]


@dataclass
class XorSystemReport:
    """Exhaustive truth-table analysis of the XOR form of the system."""

    equations: tuple[str, ...]
    targets: tuple[int, ...]
    n_assignments: int
    n_satisfying: int
    lhs_chain: str
    lhs_chain_always_zero: bool
    vvvf_value: int

    def to_json(self) -> dict:
        return {
            "equations": list(self.equations),
            "targets": list(self.targets),
            "n_assignments": self.n_assignments,
            "n_satisfying": self.n_satisfying,
            "lhs_chain": self.lhs_chain,
            "lhs_chain_always_zero": self.lhs_chain_always_zero,
            "vvvf_value": self.vvvf_value,
        }


def xor_system_check() -> XorSystemReport:
    """Check the 2-valued XOR form of the four equations exhaustively.

    Encoding outcome +1 as true, each product equation becomes an XOR
    chain whose target is V for right-hand side +1 and F for -1.  The
    system has no satisfying crisp assignment; the XOR of all four chains
    evaluates to 0 under every assignment (each atom occurs twice) even
    though the XOR of the four targets, ``V ^ V ^ V ^ F``, evaluates to 1.
    """
    equation_texts = tuple(_xor_chain(_equation_atoms(pat)) for pat, _ in GHZ_CONSTRAINTS)
    targets = tuple((rhs + 1) // 2 for _, rhs in GHZ_CONSTRAINTS)  # +1 -> 1, -1 -> 0
    equation_asts = [formulas.parse(text) for text in equation_texts]
    atom_names = [f"{axis}{site}" for axis in "xy" for site in (1, 2, 3)]

    chain_text = _xor_chain(itertools.chain.from_iterable(
        _equation_atoms(pat) for pat, _ in GHZ_CONSTRAINTS
    ))
    chain_ast = formulas.parse(chain_text)

    n_satisfying = 0
    chain_always_zero = True
    for bits in itertools.product((0, 1), repeat=6):
        env = dict(zip(atom_names, bits))
        if all(
            formulas.evaluate(ast, env) == target
            for ast, target in zip(equation_asts, targets)
        ):
            n_satisfying += 1
        if formulas.evaluate(chain_ast, env) != 0:
            chain_always_zero = False
    vvvf = int(formulas.evaluate(formulas.parse("V ^ V ^ V ^ F"), {}))

    return XorSystemReport(
        equations=equation_texts,
        targets=targets,
        n_assignments=64,
        n_satisfying=n_satisfying,
        lhs_chain=chain_text,
        lhs_chain_always_zero=chain_always_zero,
        vvvf_value=vvvf,
    )


def _spin_up_projector(axis: str, site: int) -> hilbert.Projector:
    matrix = (np.eye(8, dtype=np.complex128) + hilbert.pauli_embed(axis, site, 3).matrix) / 2.0
    return hilbert.Projector(matrix)


def elementary_degrees(psi: StateVector) -> dict[str, float]:
    """Born degree of "spin up along D at site i" for all six propositions."""
    if psi.dim != 8:
        raise DimensionMismatch(f"expected a three-qubit state (dim 8), got dim {psi.dim}")
    return {
        f"{axis}{site}": hilbert.born_value(_spin_up_projector(axis, site), psi)
        for axis in "XY"
        for site in (1, 2, 3)
    }


def format_degree(value: float, *, atol: float = 1e-9) -> str:
    """Render a degree as a small exact rational when one is within
    tolerance (e.g. "1/2"), falling back to the float repr.

    The denominator cap is deliberately small so that only genuinely
    simple degrees snap; a generic float stays a float.
    """
    snapped = Fraction(value).limit_denominator(64)
    if abs(float(snapped) - value) <= atol:
        return str(snapped)
    return repr(value)


@dataclass
class GhzReport:
    """Aggregated quantum / classical / many-valued analysis."""

    state: StateVector
    expectations: dict[str, float]
    classical_solutions: int
    parity: dict[str, int]
    degrees: dict[str, float]
    xor_system: XorSystemReport

    def to_json(self) -> dict:
        return {
            "state": self.state.to_json(),
            "expectations": self.expectations,
            "classical_solutions": self.classical_solutions,
            "parity": self.parity,
            "degrees": {key: format_degree(val) for key, val in self.degrees.items()},
            "xor_system": self.xor_system.to_json(),
        }


def ghz_report(phase: int = -1) -> GhzReport:
    """Run the full demonstration for the given state phase.

    A 2-valued preassignment of the six outcomes contradicts the four
    quantum expectations (0 of 64 assignments survive, in both the
    product and the XOR form), while the many-valued degrees, all 1/2,
    describe the pre-measurement state consistently.
    """
    psi = ghz_state(phase)
    return GhzReport(
        state=psi,
        expectations=ghz_expectations(psi),
        classical_solutions=len(classical_exhaustive()),
        parity=parity_summary(),
        degrees=elementary_degrees(psi),
        xor_system=xor_system_check(),
    )
