from __future__ import annotations

import logging
from typing import Callable, Dict, List, Tuple

from ..algebra import in_subalgebra, random_homogeneous, random_modular
from ..brackets import rc_bracket, rc_d_bracket, stability_witnesses, transvectant
from ..calculus import (
    STABILITY_COLUMNS,
    STABILITY_COUNTEREXAMPLES,
    STABILITY_ROWS,
    STABILITY_TABLE,
    image_stays_in_row,
    is_modular,
    row_contains,
)
from ..exceptions import EmptyBasisError
from ..models.depth import Subalgebra
from ..models.form import E1, Form
from ..models.report import ReportRecord
from .base import Suite

logger = logging.getLogger(__name__)

MEMBERS_PER_ROW = 4
PAIRS = 20
MAX_ORDER = 4
MAX_WEIGHT = 12
MAX_TERMS = 3

Sampler = Callable[[int, int], Form]


def _sampler(which: Subalgebra) -> Sampler:
    return lambda k, seed: random_homogeneous(k, which, seed, MAX_TERMS)


ROW_SAMPLERS: Dict[str, Sampler] = {
    "M": lambda k, seed: random_modular(k, seed, MAX_TERMS),
    "JS": _sampler(Subalgebra.JS),
    "M^inf": lambda k, seed: random_modular(k, seed, MAX_TERMS, quasi=True),
    "JS^{0,inf}": _sampler(Subalgebra.JS0INF),
    "JS^{inf,0}": _sampler(Subalgebra.JSINF0),
    "JS^inf": _sampler(Subalgebra.JSINF),
}

ALGEBRA_SAMPLERS: Dict[Subalgebra, Sampler] = {
    which: _sampler(which) for which in Subalgebra
}

BracketCase = Tuple[str, Callable[[int, Form, Form], Form], Subalgebra]

BRACKET_CASES: Tuple[BracketCase, ...] = (
    ("rc", rc_bracket, Subalgebra.JS0INF),
    ("rcd", rc_d_bracket, Subalgebra.JS),
    ("tv", transvectant, Subalgebra.JSINF0),
    ("rcd", rc_d_bracket, Subalgebra.JSINF0),
)


def _members(sampler: Sampler, seeds: List[int], count: int) -> List[Form]:
    found: List[Form] = []
    k = 1
    for seed in seeds:
        if len(found) == count:
            break
        while True:
            k = k % MAX_WEIGHT + 1
            try:
                found.append(sampler(k, seed))
                break
            except EmptyBasisError:
                continue
    return found


class StabilitySuite(Suite):
    """Membership of derivation and bracket images in the subalgebras."""

    name = "stability"

    def run(self) -> List[ReportRecord]:
        records = self._derivations()
        records.extend(self._brackets())
        records.extend(self._modular())
        for label, form, must_fail in stability_witnesses():
            escaped = [w.value for w in must_fail if not in_subalgebra(form, w)]
            records.append(
                self.record(
                    "witness",
                    {"outside": escaped},
                    passed=len(escaped) == len(must_fail),
                    bracket=label,
                )
            )
        return records

    def _derivations(self) -> List[ReportRecord]:
        records = []
        for r, row in enumerate(STABILITY_ROWS):
            seeds = self.seeds(10 + r, 4 * MEMBERS_PER_ROW)
            members = _members(ROW_SAMPLERS[row], seeds, MEMBERS_PER_ROW)
            for column in STABILITY_COLUMNS:
                expected = STABILITY_TABLE[(row, column)]
                if expected:
                    passed = all(image_stays_in_row(row, column, f) for f in members)
                    result = {"stable": True, "members": len(members)}
                else:
                    witness = STABILITY_COUNTEREXAMPLES[(row, column)]
                    passed = row_contains(row, witness) and not image_stays_in_row(
                        row, column, witness
                    )
                    result = {"stable": False, "witness": witness.to_text()}
                records.append(
                    self.record(
                        "derivation", result, passed=passed, row=row, derivation=column
                    )
                )
        return records

    def _brackets(self) -> List[ReportRecord]:
        records = []
        for c, (family, bracket, which) in enumerate(BRACKET_CASES):
            seeds = self.seeds(30 + c, 8 * PAIRS)
            members = _members(ALGEBRA_SAMPLERS[which], seeds, 2 * PAIRS)
            failures = 0
            for n in range(1, MAX_ORDER + 1):
                for i in range(PAIRS):
                    f, g = members[2 * i], members[2 * i + 1]
                    if not in_subalgebra(bracket(n, f, g), which):
                        failures += 1
                    if family == "tv" and not in_subalgebra(bracket(n, f, E1), which):
                        failures += 1
            records.append(
                self.record(
                    "bracket",
                    {"pairs": PAIRS, "orders": MAX_ORDER, "failures": failures},
                    passed=failures == 0,
                    family=family,
                    algebra=which.value,
                )
            )
        return records

    def _modular(self) -> List[ReportRecord]:
        members = _members(ROW_SAMPLERS["M"], self.seeds(40, 8 * PAIRS), 2 * PAIRS)
        failures = 0
        for n in range(1, MAX_ORDER + 1):
            for i in range(PAIRS):
                f, g = members[2 * i], members[2 * i + 1]
                rc = rc_bracket(n, f, g)
                if rc != rc_d_bracket(n, f, g) or not is_modular(rc):
                    failures += 1
                if not transvectant(n, f, g).is_zero:
                    failures += 1
        return [
            self.record(
                "modular-brackets",
                {"pairs": PAIRS, "orders": MAX_ORDER, "failures": failures},
                passed=failures == 0,
            )
        ]
