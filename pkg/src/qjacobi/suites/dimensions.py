from __future__ import annotations

from typing import List

from ..dimensions import (
    compact_formula_check,
    dimension_table,
    dims_by_series,
    ds_recurrences_check,
    ds_vs_alcuin_check,
)
from ..models.depth import Subalgebra
from ..models.report import ReportRecord
from .base import Suite

AGREEMENT_KMAX = 100
RECURRENCE_KMAX = 200
ALCUIN_KMAX = 500
COMPACT_KMAX = 300

# dim JS_k at k = 0, 1, 2, 4, 6, 8, 10, 12.
JS_TABLE = {0: 1, 1: 0, 2: 1, 4: 2, 6: 3, 8: 4, 10: 5, 12: 7}


class DimensionsSuite(Suite):
    """Integer dimension identities; independent of the seed."""

    name = "dimensions"

    def run(self) -> List[ReportRecord]:
        series = dims_by_series(Subalgebra.JS, max(JS_TABLE))
        observed = {k: series[k] for k in JS_TABLE}
        records = [
            self.record(
                "js-table",
                {str(k): v for k, v in observed.items()},
                passed=observed == JS_TABLE,
            )
        ]
        for which in Subalgebra:
            table = dimension_table(which, AGREEMENT_KMAX)
            disagreeing = [report.k for report in table if not report.agree]
            records.append(
                self.record(
                    "route-agreement",
                    {"kmax": AGREEMENT_KMAX, "disagreeing": disagreeing},
                    passed=not disagreeing,
                    algebra=which.value,
                )
            )
        records.append(
            self.record(
                "recurrences",
                {"kmax": RECURRENCE_KMAX},
                passed=ds_recurrences_check(RECURRENCE_KMAX),
            )
        )
        records.append(
            self.record("alcuin", {"kmax": ALCUIN_KMAX}, passed=ds_vs_alcuin_check(ALCUIN_KMAX))
        )
        records.append(
            self.record(
                "compact-formulas",
                {"kmax": COMPACT_KMAX},
                passed=compact_formula_check(COMPACT_KMAX),
            )
        )
        return records
