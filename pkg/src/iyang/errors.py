"""Exception types raised across the package.

Every error signals a violated precondition or a broken internal invariant;
none of them are recoverable conditions that callers are expected to silence.
"""


class IyangError(Exception):
    """Base class for all package-specific errors."""


class NotDivisible(IyangError):
    """Exact polynomial division has no quotient."""


class BadConstantTerm(IyangError):
    """Series log/exp called with the wrong constant term."""


class RepeatedPole(IyangError):
    """Partial-fraction truncation requires pairwise distinct poles."""


class MirrorViolation(IyangError):
    """A partition's listing fails the mirror-pairing property."""


class ShiftOutOfRange(IyangError):
    """A block shift would move an index past the first or last block."""


class ShapeMismatch(IyangError):
    """A polynomial was read through a partition of the wrong shape."""


class NotASubgroup(IyangError):
    """Coset enumeration requires the first group to sit inside the second."""


class NotInvariantUnderW1(IyangError):
    """Coset summation requires the summand to be invariant under the subgroup."""


class IndexOutOfRange(IyangError):
    """A matrix or generator index lies outside its admissible range."""


class RowColMismatch(IyangError):
    """Orbit composition requires co(A) = ro(B)."""


class NoUniqueMax(IyangError):
    """A composition set unexpectedly lacks a unique maximal element."""


class IncompatibleFlags(IyangError):
    """Relative position of flags over different spaces is undefined."""


class TooLarge(IyangError):
    """A finite-field enumeration exceeds the configured budget."""


class InvarianceViolation(IyangError):
    """A module element is not fixed by its component's Weyl group."""


class DenominatorNotCleared(IyangError):
    """A rational function expected to be polynomial still has a denominator."""


class NotAConstant(IyangError):
    """A symmetrized sum expected to be constant has variable dependence."""


class ParameterMismatch(IyangError):
    """A relation was instantiated outside its applicability condition."""
