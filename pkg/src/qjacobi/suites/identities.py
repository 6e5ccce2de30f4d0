from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from ..algebra import depth_of, e6, random_homogeneous
from ..calculus import (
    D_DERIV,
    DTAU,
    DZ,
    OBERDIECK,
    THETA,
    commutator_defects,
    depth_within,
    dtau,
    dz,
    eisenstein,
    leibniz_defect,
    oberdieck,
    q_dtau_defect,
    q_dz_defect,
    q_oberdieck_defect,
    ramanujan_defects,
    weierstrass_relation,
)
from ..models.depth import Subalgebra
from ..models.form import E1, E2, E4, GENERATORS, PZ, Form, P
from ..models.report import ReportRecord
from .base import Suite

logger = logging.getLogger(__name__)

LEIBNIZ_PAIRS = 50
COMMUTATOR_FORMS = 20
FORMS_PER_PROFILE = 20
MAX_PROFILE = 3
MAX_WEIGHT = 16
MAX_TERMS = 5

OBERDIECK_CATALOG = (
    ("P", P, -2 * (P * P - 10 * E4)),
    ("Pz", PZ, -3 * P * PZ),
    ("E4", E4, -14 * e6()),
    ("E1", E1, Fraction(1, 2) * PZ - E1 * E2),
    ("E2", E2, -E2 * E2 - 5 * E4),
)


class IdentitiesSuite(Suite):
    """Exact identities of the derivation calculus."""

    name = "identities"

    def run(self) -> List[ReportRecord]:
        records: List[ReportRecord] = []
        for index, defect in enumerate(ramanujan_defects()):
            records.append(self.exact("ramanujan", defect, index=index))
        for label, form, expected in OBERDIECK_CATALOG:
            records.append(self.exact("oberdieck", oberdieck(form) - expected, form=label))
        records.append(
            self.exact("eisenstein", eisenstein(8) - Fraction(3, 7) * E4 * E4, k=8)
        )
        records.append(
            self.exact("eisenstein", eisenstein(10) - Fraction(5, 11) * E4 * e6(), k=10)
        )
        records.append(self.exact("weierstrass", weierstrass_relation()))
        for generator in GENERATORS:
            g = Form.generator(generator)
            records.append(
                self.exact("commute", dtau(dz(g)) - dz(dtau(g)), generator=generator.value)
            )
        records.extend(self._leibniz())
        records.extend(self._commutators())
        records.extend(self._depth_profiles())
        logger.debug(f"identities suite produced {len(records)} records")
        return records

    def _leibniz(self) -> List[ReportRecord]:
        records = []
        seeds = self.seeds(1, 2 * LEIBNIZ_PAIRS)
        for table in (DZ, DTAU, D_DERIV, THETA, OBERDIECK):
            failures = 0
            for i in range(LEIBNIZ_PAIRS):
                f = random_homogeneous(2 + i % 5, Subalgebra.JSINF, seeds[2 * i], MAX_TERMS)
                g = random_homogeneous(1 + i % 4, Subalgebra.JSINF, seeds[2 * i + 1], MAX_TERMS)
                if not leibniz_defect(table, f, g).is_zero:
                    failures += 1
            records.append(
                self.record(
                    "leibniz",
                    {"pairs": LEIBNIZ_PAIRS, "failures": failures},
                    passed=failures == 0,
                    derivation=table.name,
                )
            )
        return records

    def _commutators(self) -> List[ReportRecord]:
        failures = 0
        noncommuting = 0
        for i, seed in enumerate(self.seeds(2, COMMUTATOR_FORMS)):
            f = random_homogeneous(1 + i % 7, Subalgebra.JSINF, seed, MAX_TERMS)
            if not all(d.is_zero for d in commutator_defects(f)):
                failures += 1
            if not (dtau(dz(f)) - dz(dtau(f))).is_zero:
                noncommuting += 1
        return [
            self.record(
                "delta-commutators",
                {"forms": COMMUTATOR_FORMS, "failures": failures},
                passed=failures == 0,
            ),
            self.record(
                "commute",
                {"forms": COMMUTATOR_FORMS, "failures": noncommuting},
                passed=noncommuting == 0,
                generator="random",
            ),
        ]

    def _depth_profiles(self) -> List[ReportRecord]:
        records = []
        for s1 in range(MAX_PROFILE + 1):
            for s2 in range(MAX_PROFILE + 1):
                bounds_failures = 0
                q_failures = 0
                seeds = self.seeds(100 + 10 * s1 + s2, FORMS_PER_PROFILE)
                for i, seed in enumerate(seeds):
                    k = 4 + (seed + i) % (MAX_WEIGHT - 3)
                    f = random_homogeneous(
                        k, Subalgebra.JSINF, seed, MAX_TERMS, max_depth=(s1, s2)
                    )
                    if not _depth_bounds_hold(f):
                        bounds_failures += 1
                    a, b = depth_of(f)
                    for j1 in range(a + 2):
                        for j2 in range(b + 2):
                            if not (
                                q_dz_defect(j1, j2, f).is_zero
                                and q_dtau_defect(j1, j2, f).is_zero
                                and q_oberdieck_defect(j1, j2, f).is_zero
                            ):
                                q_failures += 1
                records.append(
                    self.record(
                        "depth-bounds",
                        {"forms": FORMS_PER_PROFILE, "failures": bounds_failures},
                        passed=bounds_failures == 0,
                        profile=f"{s1},{s2}",
                    )
                )
                records.append(
                    self.record(
                        "q-recurrences",
                        {"forms": FORMS_PER_PROFILE, "failures": q_failures},
                        passed=q_failures == 0,
                        profile=f"{s1},{s2}",
                    )
                )
        return records


def _depth_bounds_hold(f: Form) -> bool:
    """dz, dtau and Ob* move the depth (s1, s2) only as far as allowed."""
    s1, s2 = depth_of(f)
    return (
        depth_within(dz(f), ((s1 + 1, s2 - 1), (s1, s2)))
        and depth_within(dtau(f), ((s1 + 1, s2), (s1, s2 + 1)))
        and depth_within(oberdieck(f), ((s1 + 1, s2),))
    )
