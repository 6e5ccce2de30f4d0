from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict

from ..exceptions import InvalidArgumentError


@dataclass(frozen=True)
class JacobiGroupElement:
    """Element ((a, b), (c, d)) of SL(2, Z) paired with a translation (lam, mu)."""

    a: int
    b: int
    c: int
    d: int
    lam: int = 0
    mu: int = 0

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise InvalidArgumentError(
                f"matrix (({self.a}, {self.b}), ({self.c}, {self.d})) has determinant "
                f"{self.a * self.d - self.b * self.c}, expected 1."
            )

    @classmethod
    def identity(cls) -> "JacobiGroupElement":
        return cls(1, 0, 0, 1)

    @classmethod
    def s(cls) -> "JacobiGroupElement":
        return cls(0, -1, 1, 0)

    @classmethod
    def t(cls) -> "JacobiGroupElement":
        return cls(1, 1, 0, 1)

    @classmethod
    def translation(cls, lam: int, mu: int) -> "JacobiGroupElement":
        return cls(1, 0, 0, 1, lam, mu)

    def with_translation(self, lam: int, mu: int) -> "JacobiGroupElement":
        return JacobiGroupElement(self.a, self.b, self.c, self.d, lam, mu)

    def compose(self, other: "JacobiGroupElement") -> "JacobiGroupElement":
        """(g, L)(g', L') = (gg', Lg' + L')."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        lam = self.lam * other.a + self.mu * other.c + other.lam
        mu = self.lam * other.b + self.mu * other.d + other.mu
        return JacobiGroupElement(a, b, c, d, lam, mu)

    def __mul__(self, other: "JacobiGroupElement") -> "JacobiGroupElement":
        return self.compose(other)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "matrix": [[self.a, self.b], [self.c, self.d]],
            "translation": [self.lam, self.mu],
        }
