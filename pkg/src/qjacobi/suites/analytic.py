from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from ..algebra import e6, random_homogeneous
from ..analytic import (
    action_composition_residual,
    cocycle_relation_residual,
    dual_representation_residual,
    eval_eisenstein,
    eval_form,
    finite_difference_residual,
    fourier_admission_residual,
    sample_points,
    transformation_residual,
    translation_residual,
)
from ..calculus import eisenstein
from ..models.depth import Subalgebra
from ..models.form import E1, E2, E4, GENERATORS, PZ, Form, Generator, P
from ..models.group import JacobiGroupElement
from ..models.numeric import SamplePoint
from ..models.report import ReportRecord
from .base import Suite

logger = logging.getLogger(__name__)

POINTS = 5
RANDOM_FORMS = 10
RANDOM_PAIRS = 4
MAX_WEIGHT = 6
MAX_TERMS = 4
COCYCLE_THRESHOLD = 1e-10
DUAL_THRESHOLD = 1e-10
Z_DIFFERENCE_THRESHOLD = 1e-6
TAU_DIFFERENCE_THRESHOLD = 1e-5

S = JacobiGroupElement.s()
T = JacobiGroupElement.t()

GROUP_ELEMENTS: Tuple[Tuple[str, JacobiGroupElement], ...] = (
    ("S", S),
    ("T", T),
    ("ST", S * T),
    ("(I,(1,0))", JacobiGroupElement.translation(1, 0)),
    ("(I,(0,1))", JacobiGroupElement.translation(0, 1)),
    ("(S,(1,-1))", S.with_translation(1, -1)),
)


def random_group_element(rng: np.random.Generator) -> JacobiGroupElement:
    """A short word in S, T and T^-1 followed by a small translation."""
    t_inverse = JacobiGroupElement(1, -1, 0, 1)
    element = JacobiGroupElement.identity()
    for _ in range(int(rng.integers(1, 5))):
        element = element * (S, T, t_inverse)[int(rng.integers(0, 3))]
    lam, mu = (int(v) for v in rng.integers(-1, 2, size=2))
    return element.with_translation(lam, mu)


class AnalyticSuite(Suite):
    """Numeric residuals tying the symbolic layer to the analytic functions."""

    name = "analytic"

    def _points(self) -> List[SamplePoint]:
        return sample_points(self.seed, POINTS, self.context)

    def run(self) -> List[ReportRecord]:
        points = self._points()
        records = self._transformations(points)
        records.extend(self._cocycles(points))
        records.extend(self._representations(points))
        records.extend(self._eisenstein(points))
        records.extend(self._differences(points))
        logger.debug(f"analytic suite produced {len(records)} records")
        return records

    def _forms(self) -> List[Tuple[str, Form]]:
        forms = [(g.value, Form.generator(g)) for g in GENERATORS]
        for i, seed in enumerate(self.seeds(70, RANDOM_FORMS)):
            k = 1 + (seed + i) % MAX_WEIGHT
            forms.append(
                (f"random[{i}]", random_homogeneous(k, Subalgebra.JSINF, seed, MAX_TERMS))
            )
        return forms

    def _transformations(self, points: List[SamplePoint]) -> List[ReportRecord]:
        records = []
        for label, f in self._forms():
            for name, element in GROUP_ELEMENTS:
                residual = transformation_residual(f, element, points, self.context)
                records.append(
                    self.numeric(
                        "transformation", residual, self.tolerance, form=label, element=name
                    )
                )
        return records

    def _cocycles(self, points: List[SamplePoint]) -> List[ReportRecord]:
        rng = np.random.default_rng([abs(self.seed), 80])
        pairs = [(S, S)] + [
            (random_group_element(rng), random_group_element(rng)) for _ in range(RANDOM_PAIRS)
        ]
        records = []
        for i, (a, b) in enumerate(pairs):
            records.append(
                self.numeric(
                    "cocycle", cocycle_relation_residual(a, b, points), COCYCLE_THRESHOLD, pair=i
                )
            )
            records.append(
                self.numeric(
                    "action-composition",
                    action_composition_residual(a, b, points),
                    COCYCLE_THRESHOLD,
                    pair=i,
                )
            )
        return records

    def _representations(self, points: List[SamplePoint]) -> List[ReportRecord]:
        records = []
        for which in (Generator.P, Generator.PZ, Generator.E1):
            records.append(
                self.numeric(
                    "dual-representation",
                    dual_representation_residual(which, points, self.context),
                    DUAL_THRESHOLD,
                    generator=which.value,
                )
            )
            for shift in ((1, 0), (0, 1)):
                records.append(
                    self.numeric(
                        "translation",
                        translation_residual(which, shift, points, self.context),
                        self.tolerance,
                        generator=which.value,
                        shift=f"{shift[0]},{shift[1]}",
                    )
                )
        for which in (Generator.P, Generator.E1):
            for point in points[:2]:
                records.append(
                    self.numeric(
                        "fourier-admission",
                        fourier_admission_residual(which, point.tau, self.context),
                        self.tolerance,
                        generator=which.value,
                        tau=f"{point.tau:.6f}",
                    )
                )
        return records

    def _eisenstein(self, points: List[SamplePoint]) -> List[ReportRecord]:
        records = [
            self.numeric(
                "e6-at-i", abs(eval_eisenstein(6, 1j, self.context)), 1e-8
            )
        ]
        worst_e6 = worst_e8 = 0.0
        for p in points:
            e4 = eval_eisenstein(4, p.tau, self.context)
            direct = eval_eisenstein(6, p.tau, self.context)
            symbolic = eval_form(e6(), p.tau, p.z, self.context)
            worst_e6 = max(worst_e6, abs(direct - symbolic) / max(1.0, abs(direct)))
            e8 = eval_form(eisenstein(8), p.tau, p.z, self.context)
            expected = float(Fraction(3, 7)) * e4**2
            worst_e8 = max(worst_e8, abs(e8 - expected) / max(1.0, abs(expected)))
        records.append(self.numeric("e6-symbolic", worst_e6, self.tolerance))
        records.append(self.numeric("e8-symbolic", worst_e8, self.tolerance))
        return records

    def _differences(self, points: List[SamplePoint]) -> List[ReportRecord]:
        records = []
        for label, f in (("P", P), ("Pz", PZ), ("E1", E1), ("E2", E2), ("E4", E4)):
            for variable, threshold in (
                ("z", Z_DIFFERENCE_THRESHOLD),
                ("tau", TAU_DIFFERENCE_THRESHOLD),
            ):
                if variable == "z" and label in ("E2", "E4"):
                    continue
                records.append(
                    self.numeric(
                        "finite-difference",
                        finite_difference_residual(f, points, self.context, variable),
                        threshold,
                        form=label,
                        variable=variable,
                    )
                )
        return records
