from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, Optional, Tuple

from ..exceptions import InvalidArgumentError
from .form import Generator
from .types import Depth


class Subalgebra(str, Enum):
    JS = "js"
    JS0INF = "js0inf"
    JSINF0 = "jsinf0"
    JSINF = "jsinf"

    @property
    def generators(self) -> FrozenSet[Generator]:
        base = {Generator.P, Generator.PZ, Generator.E4}
        mapping = {
            Subalgebra.JS: base,
            Subalgebra.JS0INF: base | {Generator.E1},
            Subalgebra.JSINF0: base | {Generator.E2},
            Subalgebra.JSINF: base | {Generator.E1, Generator.E2},
        }
        return frozenset(mapping[self])

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(sorted(g.weight for g in self.generators))

    @property
    def label(self) -> str:
        mapping = {
            Subalgebra.JS: "JS",
            Subalgebra.JS0INF: "JS^{0,inf}",
            Subalgebra.JSINF0: "JS^{inf,0}",
            Subalgebra.JSINF: "JS^inf",
        }
        return mapping[self]

    def admits(self, depth: Depth) -> bool:
        s1, s2 = depth
        if self is Subalgebra.JS:
            return s1 == 0 and s2 == 0
        if self is Subalgebra.JS0INF:
            return s1 == 0
        if self is Subalgebra.JSINF0:
            return s2 == 0
        return True

    @classmethod
    def validate(cls, value: str) -> "Subalgebra":
        try:
            return cls(value.lower())
        except ValueError as exc:
            raise InvalidArgumentError(f"'{value}' is not a supported subalgebra.") from exc


@dataclass(frozen=True)
class DepthProfile:
    weight: Optional[int]
    depth: Depth

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"depth": list(self.depth)}
        if self.weight is not None:
            payload["weight"] = self.weight
        payload["subalgebras"] = [s.value for s in Subalgebra if s.admits(self.depth)]
        return payload
