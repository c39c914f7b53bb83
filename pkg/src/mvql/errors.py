"""Exception types shared across the package.

Two families matter for exit-code mapping in the CLI: :class:`InputError`
covers everything a caller can fix (bad files, bad formulas, violated
preconditions), :class:`NumericError` covers internal numerical failures.
"""

from __future__ import annotations


class MvqlError(Exception):
    """Base class for all package errors."""


class InputError(MvqlError):
    """A problem with caller-supplied data (validation or parse failure)."""


class NumericError(MvqlError):
    """An internal numerical computation left its contracted range."""


class ValidationError(InputError, ValueError):
    """An input file or constructor argument violates a stated invariant."""


class TruthRangeError(ValidationError):
    """Truth value outside the closed interval [0, 1]."""


class ZeroVector(InputError, ValueError):
    """The zero vector cannot be normalized into a state."""


class DimensionMismatch(InputError, ValueError):
    """Operands live in spaces of different dimensions."""


class IndexOutOfRange(InputError, IndexError):
    """A site index lies outside 1..n_sites."""


class NotExclusive(InputError, ValueError):
    """A family member pair fails the exclusivity criterion."""

    def __init__(self, i: int, j: int, message: str | None = None):
        self.i = i
        self.j = j
        super().__init__(message or f"members {i} and {j} are not exclusive")


class NonCrispOperand(InputError, ValueError):
    """Classical XOR applied to a truth value that is not exactly 0 or 1."""

    def __init__(self, value, span=None, context: str | None = None):
        self.value = value
        self.span = span
        self.context = context
        message = f"XOR requires crisp operands, got {value}"
        if context is not None:
            message += f" in {context!r}"
        if span is not None:
            message += f" at {span}"
        super().__init__(message)


class ParseError(InputError, ValueError):
    """Formula text does not conform to the grammar.

    Carries the 1-based ``line`` and ``column`` of the offending token and
    the token text itself (``"end of input"`` when the input ran out).
    """

    def __init__(self, message: str, line: int, column: int, token: str):
        self.line = line
        self.column = column
        self.token = token
        super().__init__(f"{line}:{column}: {message}")


class UnboundAtom(InputError, KeyError):
    """Evaluation hit an atom that the assignment does not bind."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self) -> str:
        return f"atom {self.name!r} is not bound in the assignment"


class NumericRange(NumericError, ArithmeticError):
    """A computed value fell outside its mathematically allowed range."""


class NotHermitian(NumericError, ValueError):
    """An operator expected to be Hermitian is not, within tolerance."""


class NumericalInconsistency(NumericError, ArithmeticError):
    """Two equivalent numerical tests disagreed; results are untrustworthy."""
