"""
trisolid.errors - Custom exception types for the verification library.
"""

from __future__ import annotations

from typing import Iterable


class TrisolidError(Exception):
    """Base class for all trisolid errors."""

    pass


class BasisMismatchError(TrisolidError):
    """Raised when two classes from different models are combined."""

    def __init__(self, operation: str, left: str, right: str):
        self.operation = operation
        self.left = left
        self.right = right
        super().__init__(f"{operation}: class on '{left}' combined with '{right}'")


class UnsupportedModelError(TrisolidError):
    """Raised when an operation needs a basis or a built-in model."""

    def __init__(self, operation: str, model: str):
        self.operation = operation
        self.model = model
        super().__init__(f"{operation}: unsupported model '{model}'")


class NonDivisibleClassError(TrisolidError):
    """Raised when a divisor class is not divisible by an integer."""

    def __init__(self, operation: str, divisor: int):
        self.operation = operation
        self.divisor = divisor
        super().__init__(f"{operation}: class is not divisible by {divisor}")


class NonIntegralGenusError(TrisolidError):
    """Raised when (K+L).L is odd, so the sectional genus is not an integer."""

    def __init__(self, operation: str, numerator: int):
        self.operation = operation
        self.numerator = numerator
        super().__init__(
            f"{operation}: (K+L).L = {numerator} is odd, genus is not integral"
        )


class IntegralityError(TrisolidError):
    """Raised when a derived invariant (p_g, g) is not an integer."""

    def __init__(self, quantity: str, numerator: int, denominator: int):
        self.quantity = quantity
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{quantity} = {numerator}/{denominator} is not an integer")


class InvalidInputError(TrisolidError):
    """Raised when an operation's preconditions are violated."""

    def __init__(self, operation: str, message: str):
        self.operation = operation
        super().__init__(f"{operation}: {message}")


class InfeasibleConditionsError(TrisolidError):
    """Raised when t independent conditions exceed the s points imposing them."""

    def __init__(self, t: int, s: int):
        self.t = t
        self.s = s
        super().__init__(
            f"{s} points cannot impose {t} independent linear conditions"
        )


class InternalConsistencyError(TrisolidError):
    """Raised when two parameterisations of the same data disagree."""

    def __init__(self, operation: str, message: str):
        self.operation = operation
        super().__init__(f"{operation}: internal consistency check failed: {message}")


class ReiderPreconditionError(TrisolidError):
    """Raised when M^2 <= 5, so the numeric Reider criterion does not apply."""

    def __init__(self, m_squared: int):
        self.m_squared = m_squared
        super().__init__(f"Reider search needs M^2 > 5, got {m_squared}")


class UnknownVerifierError(TrisolidError):
    """Raised when a verifier id is not registered."""

    def __init__(self, name: str, valid: Iterable[str]):
        self.name = name
        self.valid = tuple(valid)
        super().__init__(
            f"Unknown verifier: {name} (valid: {', '.join(self.valid)})"
        )
