from __future__ import annotations

from typing import Optional


class QJacobiError(Exception):
    """Base exception for all qjacobi errors."""
    pass


class InvalidArgumentError(QJacobiError, ValueError):
    """Raised when an option value (algebra id, bracket family, ...) is not recognised."""
    pass


class ConfigurationError(QJacobiError):
    """Raised when an environment override cannot be parsed."""
    pass


class ZeroFormError(QJacobiError, ValueError):
    """Raised when the depth of the zero form is requested."""
    pass


class EmptyBasisError(QJacobiError, ValueError):
    """Raised when a graded piece has no basis monomial to sample from."""
    pass


class InvalidWeightError(QJacobiError, ValueError):
    """Raised when an Eisenstein weight is odd or below 2."""
    pass


class InvalidOrderError(QJacobiError, ValueError):
    """Raised when a bracket order is outside the range an identity is stated for."""
    pass


class InhomogeneousFormError(QJacobiError, ValueError):
    """Raised when an operation needs a homogeneous form and gets a mixed one."""
    pass


class NumericDomainError(QJacobiError):
    """Raised when a point lies outside the guarded domain of a series evaluator."""
    pass


class PoleError(NumericDomainError):
    """Raised when z is too close to a lattice point."""
    pass


class ExpressionError(QJacobiError):
    """Raised when a form expression cannot be turned into a Form."""

    def __init__(self, message: str, position: Optional[int] = None, text: str = ""):
        super().__init__(message)
        self.position = position
        self.text = text


class ExpressionSyntaxError(ExpressionError):
    """Raised when the expression does not match the grammar."""
    pass


class UnknownIdentifierError(ExpressionError):
    """Raised when a name other than P, Pz, E4, E1, E2 or c is used."""
    pass
