from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from ..exceptions import InvalidArgumentError
from .form import Form


class BracketFamily(str, Enum):
    RC = "rc"
    RC_D = "rcd"
    TV = "tv"

    @property
    def weight_shift(self) -> int:
        return 3 if self is BracketFamily.TV else 2

    def normalization(self, n: int) -> Fraction:
        if self is BracketFamily.TV:
            return Fraction(1, math.factorial(n))
        return Fraction(1)

    @classmethod
    def validate(cls, value: str) -> "BracketFamily":
        try:
            return cls(value.lower())
        except ValueError as exc:
            raise InvalidArgumentError(f"'{value}' is not a supported bracket family.") from exc


@dataclass(frozen=True)
class StarSeries:
    """Coefficients of hbar^0 .. hbar^N of a truncated star product."""

    family: BracketFamily
    coefficients: Tuple[Form, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> Form:
        if 0 <= n < len(self.coefficients):
            return self.coefficients[n]
        return Form()
