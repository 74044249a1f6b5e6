# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Exceptions
----------

"""


class PlaneForgeError(Exception):
    """Base class of every error raised by planeforge."""


class FieldValidationError(PlaneForgeError, ValueError):
    """Invalid parameters for a finite field."""


class NotPrimeError(FieldValidationError):
    pass


class DegreeError(FieldValidationError):
    pass


class FieldTooLargeError(FieldValidationError):
    pass


class DomainError(PlaneForgeError, ValueError):
    """A mathematical precondition does not hold for the given input."""


class FieldZeroDivisionError(DomainError, ZeroDivisionError):
    pass


class UsageError(PlaneForgeError, TypeError):
    """Operands or arguments that cannot be combined."""


class QueryError(UsageError):
    """Inconsistent search query."""


class BudgetExceededError(PlaneForgeError):
    """The search space (or the visited nodes) exceed the node budget."""


class ConstructionExhaustedError(PlaneForgeError, RuntimeError):
    """A construction ran out of admissible choices."""


class VerificationError(PlaneForgeError, AssertionError):
    """A search result failed re-verification."""
