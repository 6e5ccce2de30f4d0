"""Rankin-Cohen brackets (for dtau and for d), transvectants, their star
products and the defects that check the deformation identities."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from .algebra import weight_components
from .calculus import D_DERIV, DTAU, DZ, DerivationTable
from .models.bracket import BracketFamily, StarSeries
from .models.depth import Subalgebra
from .models.form import E1, E4, Form, P
from .utils.rational import binomial
from .utils.validation import require_order

logger = logging.getLogger(__name__)


class _DerivativeGrid:
    """Memoized dtau^i dz^j f."""

    def __init__(self, f: Form) -> None:
        self._grid: Dict[Tuple[int, int], Form] = {(0, 0): f}

    def get(self, i: int, j: int) -> Form:
        cached = self._grid.get((i, j))
        if cached is not None:
            return cached
        if i == 0:
            result = DZ.apply(self.get(0, j - 1))
        else:
            result = DTAU.apply(self.get(i - 1, j))
        self._grid[(i, j)] = result
        return result


def _iterates(table: DerivationTable, f: Form, n: int) -> List[Form]:
    result = [f]
    for _ in range(n):
        result.append(table.apply(result[-1]))
    return result


def _rankin_cohen(table: DerivationTable, n: int, f: Form, g: Form) -> Form:
    require_order(n)
    f_parts = {k: _iterates(table, fk, n) for k, fk in weight_components(f).items()}
    g_parts = {ell: _iterates(table, gl, n) for ell, gl in weight_components(g).items()}
    pieces: List[Tuple[Fraction, Form]] = []
    for k, f_iter in f_parts.items():
        for ell, g_iter in g_parts.items():
            for r in range(n + 1):
                coefficient = (-1) ** r * binomial(k + n - 1, n - r) * binomial(ell + n - 1, r)
                if coefficient:
                    pieces.append((Fraction(coefficient), f_iter[r] * g_iter[n - r]))
    return Form.linear_combination(pieces)


def rc_bracket(n: int, f: Form, g: Form) -> Form:
    """[f, g]_n = sum_r (-1)^r C(k+n-1, n-r) C(l+n-1, r) dtau^r f dtau^(n-r) g."""
    return _rankin_cohen(DTAU, n, f, g)


def rc_d_bracket(n: int, f: Form, g: Form) -> Form:
    """The Rankin-Cohen bracket with d = dtau + E1 dz / 4 in place of dtau."""
    return _rankin_cohen(D_DERIV, n, f, g)


def _transvectant(n: int, f: _DerivativeGrid, g: _DerivativeGrid) -> Form:
    return Form.linear_combination(
        (
            Fraction((-1) ** r * binomial(n, r)),
            f.get(n - r, r) * g.get(r, n - r),
        )
        for r in range(n + 1)
    )


def transvectant(n: int, f: Form, g: Form) -> Form:
    """{f, g}_n = sum_r (-1)^r C(n, r) dtau^(n-r) dz^r f * dtau^r dz^(n-r) g."""
    require_order(n)
    return _transvectant(n, _DerivativeGrid(f), _DerivativeGrid(g))


def bracket(family: BracketFamily, n: int, f: Form, g: Form) -> Form:
    if family is BracketFamily.RC:
        return rc_bracket(n, f, g)
    if family is BracketFamily.RC_D:
        return rc_d_bracket(n, f, g)
    return transvectant(n, f, g)


def _normalized(family: BracketFamily, n: int, f: Form, g: Form) -> Form:
    return bracket(family, n, f, g) * family.normalization(n)


def star_truncated(order: int, f: Form, g: Form, family: BracketFamily) -> StarSeries:
    require_order(order)
    coefficients = tuple(_normalized(family, n, f, g) for n in range(order + 1))
    return StarSeries(family=family, coefficients=coefficients)


def associativity_defect(
    order: int, f: Form, g: Form, h: Form, family: BracketFamily
) -> List[Form]:
    """Coefficients of hbar^0..hbar^order in (f * g) * h - f * (g * h)."""
    fg = star_truncated(order, f, g, family).coefficients
    gh = star_truncated(order, g, h, family).coefficients
    defects: List[Form] = []
    for n in range(order + 1):
        left = Form.linear_combination(
            (1, _normalized(family, n - a, fg[a], h)) for a in range(n + 1)
        )
        right = Form.linear_combination(
            (1, _normalized(family, n - a, f, gh[a])) for a in range(n + 1)
        )
        defects.append(left - right)
    logger.debug(
        f"associativity defect for {family.value} up to order {order}: "
        f"{[len(d) for d in defects]} surviving terms"
    )
    return defects


def tv_recurrence_defect(n: int, f: Form, g: Form) -> Form:
    """{f,g}_{n+1} - ({dtau f, dz g}_n - {dz f, dtau g}_n)."""
    require_order(n)
    right = transvectant(n, DTAU.apply(f), DZ.apply(g)) - transvectant(
        n, DZ.apply(f), DTAU.apply(g)
    )
    return transvectant(n + 1, f, g) - right


def e1_exchange_defect(n: int, f: Form, g: Form) -> Form:
    """Left minus right side of the E1-exchange identity for transvectants.

    {f E1, g}_n - {f, g E1}_n
        = f {E1, g}_n + (-1)^(n-1) g {E1, f}_n
          - sum_{0<i<n} C(n, i) ({{f, E1}_i, g}_(n-i) + (-1)^(n-1) {{g, E1}_i, f}_(n-i))
    """
    require_order(n, minimum=1)
    sign = (-1) ** (n - 1)
    left = transvectant(n, f * E1, g) - transvectant(n, f, g * E1)
    pieces: List[Tuple[int, Form]] = [
        (1, f * transvectant(n, E1, g)),
        (sign, g * transvectant(n, E1, f)),
    ]
    for i in range(1, n):
        weight = binomial(n, i)
        pieces.append((-weight, transvectant(n - i, transvectant(i, f, E1), g)))
        pieces.append((-weight * sign, transvectant(n - i, transvectant(i, g, E1), f)))
    return left - Form.linear_combination(pieces)


def symmetry_defect(family: BracketFamily, n: int, f: Form, g: Form) -> Form:
    return bracket(family, n, f, g) - bracket(family, n, g, f) * (-1) ** n


def stability_witnesses() -> List[Tuple[str, Form, Tuple[Subalgebra, ...]]]:
    """Brackets that leave the subalgebra their family does not stabilize."""
    return [
        ("[E4, P]_1", rc_bracket(1, E4, P), (Subalgebra.JSINF0, Subalgebra.JS)),
        ("[[E1, E4]]_1", rc_d_bracket(1, E1, E4), (Subalgebra.JS0INF,)),
        ("{E4, P}_1", transvectant(1, E4, P), (Subalgebra.JS0INF,)),
    ]
