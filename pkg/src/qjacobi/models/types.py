from __future__ import annotations

from fractions import Fraction
from typing import Tuple, Union

RationalLike = Union[int, Fraction]
Depth = Tuple[int, int]
