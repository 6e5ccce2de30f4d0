from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

from .types import RationalLike

# Numeric value of the formal constant c.
TWO_PI_I = 2j * math.pi


def _term_text(value: Fraction, exponent: int) -> str:
    if exponent == 0:
        return str(value)
    power = "c" if exponent == 1 else f"c^{exponent}"
    if value == 1:
        return power
    if value == -1:
        return f"-{power}"
    return f"{value}*{power}"


@dataclass(frozen=True)
class Scalar:
    """Exact Laurent polynomial in the constant c (which stands for 2*pi*i).

    ``terms`` holds ``(c_exponent, rational)`` pairs sorted by exponent with no
    zero coefficient, so equal scalars compare and hash equal.
    """

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, RationalLike]) -> "Scalar":
        items = sorted(
            (exp, Fraction(value)) for exp, value in mapping.items() if value != 0
        )
        return cls(tuple(items))

    @classmethod
    def rational(cls, value: RationalLike) -> "Scalar":
        value = Fraction(value)
        return cls(((0, value),)) if value else cls()

    @classmethod
    def c_power(cls, exponent: int, value: RationalLike = 1) -> "Scalar":
        value = Fraction(value)
        return cls(((exponent, value),)) if value else cls()

    @classmethod
    def coerce(cls, value: Union["Scalar", RationalLike]) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls.rational(value)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self.terms)

    def __add__(self, other: Union["Scalar", RationalLike]) -> "Scalar":
        other = Scalar.coerce(other)
        acc = dict(self.terms)
        for exp, value in other.terms:
            acc[exp] = acc.get(exp, Fraction(0)) + value
        return Scalar.from_mapping(acc)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(tuple((exp, -value) for exp, value in self.terms))

    def __sub__(self, other: Union["Scalar", RationalLike]) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: RationalLike) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: Union["Scalar", RationalLike]) -> "Scalar":
        other = Scalar.coerce(other)
        if len(self.terms) == 1 and len(other.terms) == 1:
            (e1, v1), (e2, v2) = self.terms[0], other.terms[0]
            return Scalar(((e1 + e2, v1 * v2),))
        acc: Dict[int, Fraction] = {}
        for e1, v1 in self.terms:
            for e2, v2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, Fraction(0)) + v1 * v2
        return Scalar.from_mapping(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            if len(self.terms) != 1:
                raise ValueError("only a single c-power term can be inverted")
            exp, value = self.terms[0]
            return Scalar(((exp * exponent, value**exponent),))
        result = Scalar.rational(1)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, c: complex = TWO_PI_I) -> complex:
        return sum((float(value) * c**exp for exp, value in self.terms), 0j)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = [_term_text(value, exp) for exp, value in self.terms]
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __str__(self) -> str:
        return self.to_text()


ZERO = Scalar()
ONE = Scalar.rational(1)

