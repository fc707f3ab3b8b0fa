"""Exception hierarchy.

Input/usage problems derive from :class:`AlgebraInputError`; math-level
failures that should never happen on valid input derive from
:class:`InternalMathError` so callers can tell the two apart.
"""

from __future__ import annotations


class CrossmodError(Exception):
    pass


class AlgebraInputError(CrossmodError):
    """Malformed or invalid user-supplied structure."""


class NotPrime(AlgebraInputError):
    pass


class ShapeMismatch(AlgebraInputError):
    pass


class NotCommutative(AlgebraInputError):
    def __init__(self, i: int, j: int):
        super().__init__(f"x{i}*x{j} != x{j}*x{i}")
        self.where = (i, j)


class NotAssociative(AlgebraInputError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"(x{i}*x{j})*x{k} != x{i}*(x{j}*x{k})")
        self.where = (i, j, k)


class BadUnit(AlgebraInputError):
    def __init__(self, i: int):
        super().__init__(f"designated unit does not fix basis element x{i}")
        self.where = (i,)


class NotMultiplicative(AlgebraInputError):
    def __init__(self, i: int, j: int):
        super().__init__(f"f(x{i}*x{j}) != f(x{i})*f(x{j})")
        self.where = (i, j)


class NotAnIdeal(AlgebraInputError):
    pass


class PreconditionFailed(AlgebraInputError):
    pass


class ActionNotRestrictable(AlgebraInputError):
    pass


class NotMono(AlgebraInputError):
    """Raised for pullbacks along a morphism with nonzero kernel.

    ``witness`` carries the element showing the naive pullback is not a complex.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class IsMono(AlgebraInputError):
    pass


class NotEpi(AlgebraInputError):
    pass


class EndpointMismatch(AlgebraInputError):
    pass


class SearchSpaceTooLarge(CrossmodError):
    def __init__(self, size: int, limit: int):
        super().__init__(f"search space of {size} candidates exceeds limit {limit}")
        self.size = size
        self.limit = limit


class InternalMathError(CrossmodError):
    pass


class WellDefinednessFailure(InternalMathError):
    pass


class NotCommutativeMultipliers(InternalMathError):
    pass


class BijectionFailure(InternalMathError):
    pass


class NoIsomorphismFound(InternalMathError):
    pass
