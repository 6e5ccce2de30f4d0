from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Any

import sympy


def to_fraction(value: Any) -> Fraction:
    """Convert a sympy Rational (or int) to a Fraction without going through floats."""
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


@lru_cache(maxsize=None)
def binomial(m: int, j: int) -> int:
    """C(m, j), zero for j < 0; falling-factorial generalization when m < 0."""
    if j < 0:
        return 0
    return int(sympy.binomial(m, j))


def nearest_integer(value: Fraction) -> int:
    """Nearest integer with halves rounded down, so ||n + 1/2|| = n."""
    floor = math.floor(value)
    return floor + 1 if value - floor > Fraction(1, 2) else floor
