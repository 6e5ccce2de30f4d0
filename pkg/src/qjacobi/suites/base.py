from __future__ import annotations

from typing import TYPE_CHECKING, Any, List, Optional

import numpy as np

from ..models.form import Form
from ..models.numeric import NumericContext
from ..models.report import ReportRecord

if TYPE_CHECKING:
    from ..workbench import Workbench


class Suite:
    """A named batch of checks sharing the workbench seed and numeric context."""

    name = ""

    def __init__(self, workbench: "Workbench") -> None:
        self._workbench = workbench

    @property
    def seed(self) -> int:
        return self._workbench.seed

    @property
    def context(self) -> NumericContext:
        return self._workbench.context

    @property
    def tolerance(self) -> float:
        return self._workbench.tolerance

    def seeds(self, salt: int, count: int) -> List[int]:
        rng = np.random.default_rng([abs(self.seed), salt])
        return [int(s) for s in rng.integers(0, 2**31, size=count)]

    def record(
        self,
        check: str,
        result: Any,
        *,
        passed: bool,
        residual: Optional[float] = None,
        **inputs: Any,
    ) -> ReportRecord:
        return ReportRecord(
            command="verify",
            inputs={"suite": self.name, "check": check, **inputs},
            result=result,
            residual=residual,
            passed=passed,
            seed=self.seed,
            context=self.context.to_dict(),
        )

    def exact(self, check: str, defect: Form, **inputs: Any) -> ReportRecord:
        """Record an identity whose defect must vanish exactly."""
        return self.record(check, defect.to_text(), passed=defect.is_zero, **inputs)

    def numeric(
        self, check: str, residual: float, threshold: float, **inputs: Any
    ) -> ReportRecord:
        return self.record(
            check,
            {"threshold": threshold},
            passed=bool(residual <= threshold),
            residual=float(residual),
            **inputs,
        )

    def run(self) -> List[ReportRecord]:
        raise NotImplementedError
