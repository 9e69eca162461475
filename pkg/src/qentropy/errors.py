"""Exception hierarchy for the package.

Two branches matter for the CLI: InputError maps to exit code 2 (bad or
inconsistent input) and EvaluationError maps to exit code 3 (valid objects
queried at a point where the result is undefined).
"""


class QentropyError(Exception):
    """Base class for all package errors."""


class InputError(QentropyError):
    """Invalid construction parameters or malformed input data."""


class EvaluationError(QentropyError):
    """Evaluation failed at the requested point."""


class NegativeEntry(InputError):
    """A probability entry is negative."""


class NotNormalized(InputError):
    """Entries do not sum to one within tolerance (strict mode)."""


class ZeroSum(InputError):
    """All entries are zero, nothing to normalize."""


class NonPositiveK(InputError):
    """The entropy unit constant k must be positive."""


class InvalidFamilySpec(InputError):
    """A deformation family spec is inconsistent or incomplete."""


class InvalidWeierstrassParams(InputError):
    """Weierstrass series parameters violate their constraints."""


class ZeroMarginal(EvaluationError):
    """Conditional distribution requested on a zero-probability row."""


class OutOfTableRange(EvaluationError):
    """Tabulated deformation function queried outside its grid."""


class PhiVanishes(EvaluationError):
    """phi(q) is zero away from q = 1, the entropy quotient is undefined."""


class ZeroWithNonpositiveExponent(EvaluationError):
    """A zero probability was raised to a nonpositive exponent."""


class DomainError(EvaluationError):
    """Argument outside the mathematical domain of the operation."""


class NegativeEntropy(EvaluationError):
    """A family claimed valid produced an entropy below -1e-12."""
