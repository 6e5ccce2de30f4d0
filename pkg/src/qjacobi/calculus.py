"""Derivations on Forms as Leibniz extensions of generator tables, plus the
Eisenstein recursion."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from .algebra import e6, in_subalgebra, q_op, weight_components
from .exceptions import InvalidWeightError
from .models.depth import Subalgebra
from .models.form import (
    E1,
    E2,
    E4,
    GENERATORS,
    PZ,
    Accumulator,
    Form,
    Generator,
    Monomial,
    P,
    accumulate_term,
)
from .models.scalar import Scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DerivationTable:
    """A derivation given by its values on the five generators.

    When ``weight_factor`` is set, the weight-k component of the argument also
    receives ``k * weight_factor * f_k``.
    """

    name: str
    images: Mapping[Generator, Form]
    weight_factor: Optional[Form] = None
    # Images are pure functions of the monomial, so concurrent fills store equal values.
    _cache: Dict[Monomial, Form] = field(default_factory=dict, repr=False)

    def on_monomial(self, monomial: Monomial) -> Form:
        cached = self._cache.get(monomial)
        if cached is not None:
            return cached
        acc: Accumulator = {}
        for generator, exponent in zip(GENERATORS, monomial):
            image = self.images[generator]
            if not exponent or image.is_zero:
                continue
            rest = monomial.lowered(generator.index)
            factor = Scalar.rational(exponent)
            for m, s in image:
                accumulate_term(acc, m.times(rest), s, factor)
        result = Form.from_accumulator(acc)
        self._cache[monomial] = result
        return result

    def apply(self, f: Form) -> Form:
        acc: Accumulator = {}
        for monomial, scalar in f:
            for m, s in self.on_monomial(monomial):
                accumulate_term(acc, m, s, scalar)
        if self.weight_factor is not None:
            for k, component in weight_components(f).items():
                if k == 0:
                    continue
                for m, s in self.weight_factor * component:
                    accumulate_term(acc, m, s, Scalar.rational(k))
        return Form.from_accumulator(acc)

    def __call__(self, f: Form) -> Form:
        return self.apply(f)

    def power(self, f: Form, r: int) -> Form:
        for _ in range(r):
            f = self.apply(f)
        return f


def _table(
    name: str, images: Mapping[Generator, Form], weight_factor: Optional[Form] = None
) -> DerivationTable:
    return DerivationTable(name=name, images=dict(images), weight_factor=weight_factor)


_QUARTER = Fraction(1, 4)

DZ_IMAGES: Dict[Generator, Form] = {
    Generator.P: PZ,
    Generator.PZ: 6 * P * P - 30 * E4,
    Generator.E4: Form(),
    Generator.E1: -P - E2,
    Generator.E2: Form(),
}

DTAU_IMAGES: Dict[Generator, Form] = {
    Generator.P: -_QUARTER * (E1 * PZ + 2 * P * P - 2 * E2 * P - 20 * E4),
    Generator.PZ: Fraction(3, 2) * (5 * E4 - P * P) * E1 + Fraction(3, 4) * (E2 - P) * PZ,
    Generator.E4: Fraction(-1, 10) * P**3
    + Fraction(1, 40) * PZ * PZ
    + Fraction(3, 2) * P * E4
    + E4 * E2,
    Generator.E1: _QUARTER * (E1 * E2 + P * E1 + Fraction(1, 2) * PZ),
    Generator.E2: _QUARTER * (E2 * E2 - 5 * E4),
}

DZ = _table("dz", DZ_IMAGES)
DTAU = _table("dtau", DTAU_IMAGES)
OBERDIECK = _table(
    "ob", {g: 4 * DTAU_IMAGES[g] + E1 * DZ_IMAGES[g] for g in GENERATORS}, -E2
)
DELTA = _table("delta", {g: Form() for g in GENERATORS}, Form.constant(Fraction(1, 2)))
THETA = _table("theta", DTAU_IMAGES, -_QUARTER * E2)
D_DERIV = _table("d", {g: DTAU_IMAGES[g] + _QUARTER * E1 * DZ_IMAGES[g] for g in GENERATORS})
THETA_PRIME = _table("theta_prime", D_DERIV.images, -_QUARTER * E2)

DERIVATIONS: Dict[str, DerivationTable] = {
    table.name: table for table in (DZ, DTAU, OBERDIECK, DELTA, THETA, D_DERIV, THETA_PRIME)
}


def dz(f: Form) -> Form:
    return DZ.apply(f)


def dtau(f: Form) -> Form:
    """Normalized modular derivation (pi / 2i) d/dtau."""
    return DTAU.apply(f)


def raw_dz(f: Form) -> Form:
    return DZ.apply(f)


def raw_dtau(f: Form) -> Form:
    """Plain d/dtau, i.e. (-4/c) * dtau since c stands for 2 pi i."""
    return DTAU.apply(f).scaled(Scalar.c_power(-1, -4))


def oberdieck(f: Form) -> Form:
    """Ob*(f) = 4 dtau f + E1 dz f - k E2 f on weight-k components."""
    return OBERDIECK.apply(f)


def delta(f: Form) -> Form:
    return DELTA.apply(f)


def theta(f: Form) -> Form:
    return THETA.apply(f)


def theta_prime(f: Form) -> Form:
    return THETA_PRIME.apply(f)


def d_deriv(f: Form) -> Form:
    return D_DERIV.apply(f)


# e_4, e_6, e_8, ... filled in order of weight.
_EISENSTEIN: Dict[int, Form] = {}


def eisenstein(k: int) -> Form:
    """e_k as a Form, solving the dtau recursion for e_{2n+4}.

    Raises:
        InvalidWeightError: If k is odd or below 2.
    """
    if k < 2 or k % 2:
        raise InvalidWeightError(f"Eisenstein weight must be even and >= 2, got {k}")
    if k == 2:
        return E2
    if not _EISENSTEIN:
        _EISENSTEIN.update({4: E4, 6: e6()})
    for weight in range(max(_EISENSTEIN) + 2, k + 1, 2):
        _EISENSTEIN[weight] = _next_eisenstein(weight)
    return _EISENSTEIN[k]


def _next_eisenstein(k: int) -> Form:
    n = (k - 4) // 2
    previous = _EISENSTEIN[k - 2]
    pieces: List[Tuple[Fraction, Form]] = [
        (Fraction((n + 1) * (2 * n + 1)), previous * E2),
        (Fraction(-2 * (2 * n + 1)), dtau(previous)),
    ]
    for a in range(1, n):
        b = n - a
        pieces.append(
            (
                Fraction((2 * a + 1) * (a - 2 * b - 1)),
                _EISENSTEIN[2 * a + 2] * _EISENSTEIN[2 * b + 2],
            )
        )
    result = Form.linear_combination(pieces) * Fraction(1, (n + 2) * (2 * n + 5))
    logger.debug(f"eisenstein({k}) computed with {len(result)} terms")
    return result


def is_modular(f: Form) -> bool:
    """Membership in M: no E1, no E2 and annihilated by dz."""
    return in_subalgebra(f, Subalgebra.JS) and dz(f).is_zero


def is_quasimodular(f: Form) -> bool:
    """Membership in M^inf: no E1 and annihilated by dz."""
    return in_subalgebra(f, Subalgebra.JSINF0) and dz(f).is_zero


def ramanujan_defects() -> List[Form]:
    return [
        dtau(E4) - (E4 * E2 - Fraction(7, 2) * e6()),
        dtau(e6()) - (Fraction(3, 2) * e6() * E2 - Fraction(15, 7) * E4 * E4),
        dtau(E2) - _QUARTER * (E2 * E2 - 5 * E4),
    ]


def weierstrass_relation() -> Form:
    """Pz^2 - 4P^3 + 60 E4 P + 140 e6, identically zero."""
    return PZ * PZ - 4 * P**3 + 60 * E4 * P + 140 * e6()


STABILITY_ROWS: Tuple[str, ...] = ("M", "JS", "M^inf", "JS^{0,inf}", "JS^{inf,0}", "JS^inf")
STABILITY_COLUMNS: Tuple[str, ...] = ("dz", "dtau", "ob")

STABILITY_TABLE: Dict[Tuple[str, str], bool] = {
    ("M", "dz"): True,
    ("M", "dtau"): False,
    ("M", "ob"): True,
    ("JS", "dz"): True,
    ("JS", "dtau"): False,
    ("JS", "ob"): True,
    ("M^inf", "dz"): True,
    ("M^inf", "dtau"): True,
    ("M^inf", "ob"): True,
    ("JS^{0,inf}", "dz"): False,
    ("JS^{0,inf}", "dtau"): False,
    ("JS^{0,inf}", "ob"): False,
    ("JS^{inf,0}", "dz"): True,
    ("JS^{inf,0}", "dtau"): False,
    ("JS^{inf,0}", "ob"): True,
    ("JS^inf", "dz"): True,
    ("JS^inf", "dtau"): True,
    ("JS^inf", "ob"): True,
}

# Members whose image leaves the row, one per "False" entry.
STABILITY_COUNTEREXAMPLES: Dict[Tuple[str, str], Form] = {
    ("M", "dtau"): E4,
    ("JS", "dtau"): P,
    ("JS^{0,inf}", "dz"): E1,
    ("JS^{0,inf}", "dtau"): E1,
    ("JS^{0,inf}", "ob"): E1,
    ("JS^{inf,0}", "dtau"): P,
}

_ROW_MEMBERSHIP: Dict[str, Callable[[Form], bool]] = {
    "M": is_modular,
    "JS": lambda f: in_subalgebra(f, Subalgebra.JS),
    "M^inf": is_quasimodular,
    "JS^{0,inf}": lambda f: in_subalgebra(f, Subalgebra.JS0INF),
    "JS^{inf,0}": lambda f: in_subalgebra(f, Subalgebra.JSINF0),
    "JS^inf": lambda f: True,
}


def stability_matrix() -> Dict[Tuple[str, str], bool]:
    """(row, derivation) -> whether the derivation maps the row into itself."""
    return dict(STABILITY_TABLE)


def row_contains(row: str, f: Form) -> bool:
    return _ROW_MEMBERSHIP[row](f)


def image_stays_in_row(row: str, derivation: str, f: Form) -> bool:
    return row_contains(row, DERIVATIONS[derivation].apply(f))


def depth_within(f: Form, bounds: Tuple[Tuple[int, int], ...]) -> bool:
    """True when every monomial of f has depth below one of ``bounds``."""
    if f.is_zero:
        return True
    return all(
        any(m.e2 <= s1 and m.e1 <= s2 for s1, s2 in bounds) for m in f.monomials()
    )


def _per_weight(f: Form, defect: Callable[[Form, int], Form]) -> Form:
    return Form.linear_combination(
        (1, defect(fk, k)) for k, fk in weight_components(f).items()
    )


def q_dz_defect(j1: int, j2: int, f: Form) -> Form:
    """Q(raw_dz f) - raw_dz Q(f) - (j2 + 1) Q_{j1-1, j2+1}(f)."""
    return (
        q_op(j1, j2, raw_dz(f))
        - raw_dz(q_op(j1, j2, f))
        - (j2 + 1) * q_op(j1 - 1, j2 + 1, f)
    )


def q_dtau_defect(j1: int, j2: int, f: Form) -> Form:
    """Q(raw_dtau f) - raw_dtau Q(f) - raw_dz Q_{j1, j2-1}(f) - (k - j1 + 1) Q_{j1-1, j2}(f),
    taken on each weight-k component."""

    def component(fk: Form, k: int) -> Form:
        return (
            q_op(j1, j2, raw_dtau(fk))
            - raw_dtau(q_op(j1, j2, fk))
            - raw_dz(q_op(j1, j2 - 1, fk))
            - (k - j1 + 1) * q_op(j1 - 1, j2, fk)
        )

    return _per_weight(f, component)


def q_oberdieck_defect(j1: int, j2: int, f: Form) -> Form:
    """Q_{j1,j2}(Ob* f) minus its expression through the Q_{i,j}(f)."""
    c = Scalar.c_power(1)

    def component(fk: Form, k: int) -> Form:
        q = q_op(j1, j2, fk)
        expected = Form.linear_combination(
            [
                (4, dtau(q)),
                (1, E1 * dz(q)),
                (-k, E2 * q),
                (c * (j1 + j2 - 1), q_op(j1 - 1, j2, fk)),
                (j2 + 1, E1 * q_op(j1 - 1, j2 + 1, fk)),
            ]
        )
        return q_op(j1, j2, oberdieck(fk)) - expected

    return _per_weight(f, component)


def commutator_defects(f: Form) -> List[Form]:
    """delta theta - theta delta - theta and the same with theta_prime, applied to f."""
    return [
        delta(theta(f)) - theta(delta(f)) - theta(f),
        delta(theta_prime(f)) - theta_prime(delta(f)) - theta_prime(f),
    ]


def leibniz_defect(table: DerivationTable, f: Form, g: Form) -> Form:
    return table.apply(f * g) - (table.apply(f) * g + f * table.apply(g))
