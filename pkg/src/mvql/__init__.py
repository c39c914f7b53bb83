"""Many-valued truth degrees for quantum propositions.

The package has an exact side and a numerical side.  The exact side
(:mod:`mvql.logic`, :mod:`mvql.formulas`) works with rational truth
values in [0, 1] and the bounded-sum connectives, so algebraic laws hold
with equality.  The numerical side (:mod:`mvql.hilbert`,
:mod:`mvql.propfunctions`) represents propositions about a quantum
system as projectors, values them through the Born rule, and verifies by
sampling that the subspace lattice behaves as a family of many-valued
propositional functions.  :mod:`mvql.ghz` ties both sides together in
the GHZ demonstrator, and :mod:`mvql.cli` exposes everything as the
``mvql`` command.

Hot numeric kernels run on a compiled extension when it is built, with a
numpy fallback selected at import (see :func:`kernel_backend`).
"""

from . import _backend
from .formulas import atoms, evaluate, format, parse
from .ghz import ghz_report
from .hilbert import (
    HermitianOperator,
    Projector,
    StateVector,
    born_value,
    pauli_embed,
    state_new,
)
from .logic import (
    TruthValue,
    bald_membership,
    luk_conj,
    luk_disj,
    luk_neg,
    max_disj,
    min_conj,
    xor_crisp,
)
from .propfunctions import PropFunction, verify_conditions

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return _backend.BACKEND
