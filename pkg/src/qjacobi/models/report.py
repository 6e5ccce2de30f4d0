from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Tuple

from .depth import Subalgebra


@dataclass(frozen=True)
class ReportRecord:
    command: str
    inputs: Mapping[str, Any]
    result: Any
    residual: Optional[float] = None
    passed: Optional[bool] = None
    seed: Optional[int] = None
    context: Optional[Mapping[str, Any]] = None

    @property
    def sort_key(self) -> Tuple[str, str]:
        return (self.command, repr(sorted(self.inputs.items())))

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "command": self.command,
            "inputs": dict(self.inputs),
            "result": self.result,
        }
        if self.residual is not None:
            payload["residual"] = self.residual
        if self.passed is not None:
            payload["pass"] = self.passed
        if self.seed is not None:
            payload["seed"] = self.seed
        if self.context is not None:
            payload["context"] = dict(self.context)
        return payload


@dataclass(frozen=True)
class DimensionReport:
    algebra: Subalgebra
    k: int
    routes: Mapping[str, int] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.routes.values())) <= 1

    @property
    def value(self) -> int:
        return self.routes["enumeration"]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra.value,
            "k": self.k,
            "routes": dict(self.routes),
            "agree": self.agree,
        }
