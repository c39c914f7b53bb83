"""Exact many-valued truth values and their connectives.

Truth values are rationals in [0, 1] and all arithmetic here is exact, so
the algebraic laws of the bounded-sum connectives (De Morgan dualities,
excluded middle, non-contradiction) can be asserted with ``==`` rather
than with a tolerance.  Floating-point only enters at the Hilbert-space
boundary, via :func:`from_float` / ``float(tv)``.

Two connective pairs are provided and kept deliberately distinct:

* ``luk_conj`` / ``luk_disj`` -- bounded difference ``max(a + b - 1, 0)``
  and bounded sum ``min(a + b, 1)``.  These satisfy excluded middle and
  non-contradiction for every truth value.
* ``min_conj`` / ``max_disj`` -- pointwise ``min`` / ``max``.  These do
  not: ``max_disj(1/2, 1 - 1/2) == 1/2``.

Classical XOR is defined only on crisp values (exactly 0 or 1); applying
it to a genuinely many-valued operand raises :class:`NonCrispOperand`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonCrispOperand, TruthRangeError

__all__ = [
    "TruthValue",
    "FALSE",
    "TRUE",
    "luk_neg",
    "luk_conj",
    "luk_disj",
    "min_conj",
    "max_disj",
    "xor_crisp",
    "is_crisp",
    "bald_membership",
    "from_float",
]


class TruthValue(Fraction):
    """An exact rational truth value, constrained to [0, 1].

    Behaves like :class:`fractions.Fraction` in every other respect;
    arithmetic results degrade to plain ``Fraction`` and must be wrapped
    again to re-assert the range invariant.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        value = super().__new__(cls, numerator, denominator)
        if value < 0 or value > 1:
            raise TruthRangeError(f"truth value {value} lies outside [0, 1]")
        return value


FALSE = TruthValue(0)
TRUE = TruthValue(1)


def _coerce(v) -> TruthValue:
    return v if isinstance(v, TruthValue) else TruthValue(v)


def luk_neg(v) -> TruthValue:
    """Negation by complement: ``1 - v``."""
    return TruthValue(1 - _coerce(v))


def luk_conj(v1, v2) -> TruthValue:
    """Bounded-difference conjunction: ``max(v1 + v2 - 1, 0)``."""
    return TruthValue(max(_coerce(v1) + _coerce(v2) - 1, Fraction(0)))


def luk_disj(v1, v2) -> TruthValue:
    """Bounded-sum disjunction: ``min(v1 + v2, 1)``."""
    return TruthValue(min(_coerce(v1) + _coerce(v2), Fraction(1)))


def min_conj(v1, v2) -> TruthValue:
    """Pointwise-minimum conjunction: ``min(v1, v2)``."""
    return TruthValue(min(_coerce(v1), _coerce(v2)))


def max_disj(v1, v2) -> TruthValue:
    """Pointwise-maximum disjunction: ``max(v1, v2)``."""
    return TruthValue(max(_coerce(v1), _coerce(v2)))


def is_crisp(v) -> bool:
    """True iff ``v`` is exactly 0 or exactly 1."""
    v = _coerce(v)
    return v == 0 or v == 1


def xor_crisp(v1, v2) -> TruthValue:
    """Classical exclusive OR, defined on crisp operands only.

    Folding this operation over n crisp values yields 1 iff an odd number
    of them are 1.  There is no many-valued extension here on purpose;
    a non-crisp operand raises :class:`NonCrispOperand`.
    """
    a, b = _coerce(v1), _coerce(v2)
    for operand in (a, b):
        if operand != 0 and operand != 1:
            raise NonCrispOperand(operand)
    return TRUE if (a == 1) != (b == 1) else FALSE


def bald_membership(n_hairs: int) -> TruthValue:
    """Degree to which a person with ``n_hairs`` hairs is bald.

    1 for at most 100 hairs, 0 for at least 1000, and the exact rational
    ``(1000 - n) / 900`` in between.
    """
    if n_hairs < 0:
        raise ValueError(f"hair count must be non-negative, got {n_hairs}")
    if n_hairs <= 100:
        return TRUE
    if n_hairs >= 1000:
        return FALSE
    return TruthValue(1000 - n_hairs, 900)


def from_float(x: float) -> TruthValue:
    """Exact conversion of a float in [0, 1] to a rational truth value.

    The binary expansion is preserved bit for bit; no rounding happens,
    so e.g. ``from_float(0.5) == Fraction(1, 2)`` but ``from_float(0.1)``
    is the exact binary rational closest to one tenth.
    """
    return TruthValue(Fraction(x))
