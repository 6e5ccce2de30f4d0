from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

from ..exceptions import InvalidArgumentError

DEFAULT_N_Q = 30
DEFAULT_N_Z = 20
DEFAULT_TOLERANCE = 1e-9
Q_GUARD = 0.7
Z_GUARD = 0.8
POLE_DISTANCE = 1e-3


@dataclass(frozen=True)
class NumericContext:
    """Truncation orders, domain guards and tolerance for series evaluation."""

    n_q: int = DEFAULT_N_Q
    n_z: int = DEFAULT_N_Z
    q_guard: float = Q_GUARD
    z_guard: float = Z_GUARD
    pole_distance: float = POLE_DISTANCE
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        if self.n_q < 1 or self.n_z < 1:
            raise InvalidArgumentError("truncation orders must be positive.")
        if not 0 < self.q_guard < 1:
            raise InvalidArgumentError("q guard must lie in (0, 1).")
        if not 0 < self.z_guard < 1:
            raise InvalidArgumentError("z guard must lie in (0, 1).")
        if self.tolerance <= 0:
            raise InvalidArgumentError("tolerance must be positive.")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nq": self.n_q,
            "nz": self.n_z,
            "q_guard": self.q_guard,
            "z_guard": self.z_guard,
            "pole_distance": self.pole_distance,
            "tol": self.tolerance,
        }


@dataclass(frozen=True)
class SamplePoint:
    tau: complex
    z: complex = field(default=0j)

    def __post_init__(self) -> None:
        if self.tau.imag <= 0:
            raise InvalidArgumentError(f"tau = {self.tau} is not in the upper half-plane.")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tau": [self.tau.real, self.tau.imag],
            "z": [self.z.real, self.z.imag],
        }


class Representation(str, Enum):
    """Series used for P, Pz and E1."""

    AUTO = "auto"
    LAURENT = "laurent"
    FOURIER = "fourier"

    @classmethod
    def validate(cls, value: str) -> "Representation":
        try:
            return cls(value.lower())
        except ValueError as exc:
            raise InvalidArgumentError(
                f"Invalid representation '{value}'. Expected one of: "
                f"{', '.join(r.value for r in cls)}."
            ) from exc
