from __future__ import annotations

import logging
from typing import List

from ..algebra import random_homogeneous
from ..brackets import (
    associativity_defect,
    e1_exchange_defect,
    symmetry_defect,
    tv_recurrence_defect,
)
from ..models.bracket import BracketFamily
from ..models.depth import Subalgebra
from ..models.form import Form
from ..models.report import ReportRecord
from .base import Suite

logger = logging.getLogger(__name__)

TRIPLES = 20
MAX_WEIGHT = 8
MAX_TERMS = 3
TV_MAX_TERMS = 2
IDENTITY_ORDER = 3

# Orders through which each star product is checked.
STAR_ORDERS = {
    BracketFamily.TV: 4,
    BracketFamily.RC: 3,
    BracketFamily.RC_D: 3,
}


class AssociativitySuite(Suite):
    """Formal-deformation checks: star associativity and the transvectant identities."""

    name = "associativity"

    def _forms(self, salt: int, count: int, max_terms: int = MAX_TERMS) -> List[Form]:
        return [
            random_homogeneous(1 + i % MAX_WEIGHT, Subalgebra.JSINF, seed, max_terms)
            for i, seed in enumerate(self.seeds(salt, count))
        ]

    def run(self) -> List[ReportRecord]:
        records: List[ReportRecord] = []
        for family, order in STAR_ORDERS.items():
            terms = TV_MAX_TERMS if family is BracketFamily.TV else MAX_TERMS
            forms = self._forms(50 + list(BracketFamily).index(family), 3 * TRIPLES, terms)
            worst = -1
            for t in range(TRIPLES):
                f, g, h = forms[3 * t : 3 * t + 3]
                defects = associativity_defect(order, f, g, h, family)
                nonzero = [n for n, d in enumerate(defects) if not d.is_zero]
                if nonzero:
                    worst = max(worst, min(nonzero))
            logger.debug(f"{family.value} star checked through order {order}")
            records.append(
                self.record(
                    "star-associativity",
                    {"triples": TRIPLES, "first_failing_order": None if worst < 0 else worst},
                    passed=worst < 0,
                    family=family.value,
                    order=order,
                )
            )
        pairs = self._forms(60, 2 * TRIPLES)
        for n in range(IDENTITY_ORDER + 1):
            for t in range(TRIPLES):
                f, g = pairs[2 * t], pairs[2 * t + 1]
                records.append(
                    self.exact("tv-recurrence", tv_recurrence_defect(n, f, g), n=n, pair=t)
                )
                if n >= 1:
                    records.append(self.exact("e1-exchange", e1_exchange_defect(n, f, g), n=n, pair=t))
                for family in BracketFamily:
                    records.append(
                        self.exact(
                            "symmetry",
                            symmetry_defect(family, n, f, g),
                            family=family.value,
                            n=n,
                            pair=t,
                        )
                    )
        return records
