"""Dimensions of the weight-k pieces of JS, JS^{0,inf}, JS^{inf,0} and JS^inf,
computed by independent routes that are expected to agree."""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from .algebra import basis_monomials
from .models.depth import Subalgebra
from .models.report import DimensionReport
from .utils.rational import nearest_integer, to_fraction

logger = logging.getLogger(__name__)

ALCUIN_SHIFT = 3

_K = sympy.Symbol("k", integer=True)
_J = sympy.Rational(-1, 2) + sympy.sqrt(3) * sympy.I / 2

# Arguments: k, (-1)^k, i^k, j^k, j^(2k), P(k), I(k).
QuasiPolynomial = Callable[..., sympy.Expr]


def _ds(k, sign, ik, jk, j2k, even, odd):  # type: ignore[no-untyped-def]
    R = sympy.Rational
    return (
        R(107, 288)
        + R(3, 16) * k
        + R(1, 48) * k**2
        + R(9, 32) * sign
        + R(1, 16) * sign * k
        + R(1, 8) * (even + odd * sympy.I) * ik
        + R(1, 9) * (jk + j2k)
    )


def _ds_0inf(k, sign, ik, jk, j2k, even, odd):  # type: ignore[no-untyped-def]
    R = sympy.Rational
    return (
        R(175, 288)
        + R(15, 32) * k
        + R(5, 48) * k**2
        + R(1, 144) * k**3
        + R(5, 32) * sign
        + R(1, 32) * sign * k
        + R(1, 8) * even * ik
        + R(1, 27) * (1 - _J) * jk
        + R(1, 27) * (2 + _J) * j2k
    )


def _ds_inf0(k, sign, ik, jk, j2k, even, odd):  # type: ignore[no-untyped-def]
    R = sympy.Rational
    return (
        R(121, 288)
        + R(55, 192) * k
        + R(11, 192) * k**2
        + R(1, 288) * k**3
        + R(13, 32) * sign
        + R(11, 64) * sign * k
        + R(1, 64) * sign * k**2
        + R(1, 16) * (even + odd * sympy.I) * ik
        + R(1, 27) * (2 + _J) * jk
        + R(1, 27) * (1 - _J) * j2k
    )


def _ds_inf(k, sign, ik, jk, j2k, even, odd):  # type: ignore[no-untyped-def]
    R = sympy.Rational
    return (
        R(4267, 6912)
        + R(55, 96) * k
        + R(199, 1152) * k**2
        + R(1, 48) * k**3
        + R(1, 1152) * k**4
        + R(63, 256) * sign
        + R(3, 32) * sign * k
        + R(1, 128) * sign * k**2
        + R(1, 16) * even * ik
        + R(1, 27) * (jk + j2k)
    )


QUASI_POLYNOMIALS: Dict[Subalgebra, QuasiPolynomial] = {
    Subalgebra.JS: _ds,
    Subalgebra.JS0INF: _ds_0inf,
    Subalgebra.JSINF0: _ds_inf0,
    Subalgebra.JSINF: _ds_inf,
}


@lru_cache(maxsize=None)
def residue_polynomials(which: Subalgebra) -> Tuple[Tuple[Fraction, ...], ...]:
    """For r = 0..11, the rational coefficients (constant first) of the
    polynomial that gives the dimension for k = r mod 12."""
    formula = QUASI_POLYNOMIALS[which]
    table = []
    for r in range(12):
        sign = (-1) ** r
        expression = sympy.expand(
            formula(
                _K,
                sign,
                sympy.I**r,
                _J**r,
                _J ** (2 * r),
                sympy.Rational(1 + sign, 2),
                sympy.Rational(1 - sign, 2),
            )
        )
        real, imaginary = expression.as_real_imag()
        if sympy.simplify(imaginary) != 0:
            raise ArithmeticError(f"non-real quasi-polynomial for {which.value} at r = {r}")
        poly = sympy.Poly(sympy.nsimplify(sympy.simplify(real)), _K)
        coefficients = tuple(to_fraction(c) for c in reversed(poly.all_coeffs()))
        table.append(coefficients)
    logger.debug(f"residue polynomials for {which.value} precomputed")
    return tuple(table)


def dims_closed_form(which: Subalgebra, k: int) -> int:
    coefficients = residue_polynomials(which)[k % 12]
    value = sum((c * k**i for i, c in enumerate(coefficients)), Fraction(0))
    if value.denominator != 1:
        raise ArithmeticError(f"closed form for {which.value} is not integral at k = {k}")
    return int(value)


def _series(weights: Sequence[int], kmax: int, shift: int = 0) -> List[int]:
    coefficients = [0] * (kmax + 1)
    if shift <= kmax:
        coefficients[shift] = 1
    for w in weights:
        for i in range(w, kmax + 1):
            coefficients[i] += coefficients[i - w]
    return coefficients


def dims_by_series(which: Subalgebra, kmax: int) -> List[int]:
    """Coefficients 0..kmax of 1 / prod(1 - z^w) over the generator weights."""
    if kmax < 0:
        return []
    return _series(which.weights, kmax)


def dims_by_enumeration(which: Subalgebra, k: int) -> int:
    return len(basis_monomials(k, which))


def enumeration_counts(which: Subalgebra, kmax: int) -> List[int]:
    """dims_by_enumeration for every k <= kmax from one walk over exponent tuples.

    A weight-1 generator completes any tuple of lower weight, so when E1 is
    present the walk skips it and takes prefix sums instead.
    """
    weights = sorted((w for w in which.weights if w != 1), reverse=True)
    counts = [0] * (kmax + 1)

    def walk(index: int, total: int) -> None:
        if index == len(weights):
            counts[total] += 1
            return
        while total <= kmax:
            walk(index + 1, total)
            total += weights[index]

    if kmax >= 0:
        walk(0, 0)
    if 1 in which.weights:
        for i in range(1, kmax + 1):
            counts[i] += counts[i - 1]
    return counts


def ds_closed(k: int) -> int:
    """||(k + 3 eta)^2 / 48|| with eta = 1 for odd k and 2 for even k."""
    eta = 1 if k % 2 else 2
    return nearest_integer(Fraction((k + 3 * eta) ** 2, 48))


def modular_dimension(j: int) -> int:
    """dim M_j of level-one modular forms."""
    if j < 0 or j % 2:
        return 0
    return j // 12 + (0 if (j - 2) % 12 == 0 else 1)


def ds_by_modular_sum(k: int) -> int:
    """dim JS_k as sum over c of dim M_{2k - 8c}."""
    return sum(modular_dimension(2 * k - 8 * c) for c in range(k // 4 + 1))


def ds_recurrences_check(kmax: int) -> bool:
    d = dims_by_series(Subalgebra.JS, kmax)
    for k in range(kmax + 1):
        if 2 * k + 3 <= kmax and d[2 * k + 3] != d[2 * k]:
            return False
        if 2 * k + 13 <= kmax and d[2 * k + 13] != d[2 * k + 1] + k + 5:
            return False
    return True


def alcuin_sequence(nmax: int) -> List[int]:
    """Coefficients of z^3 / ((1 - z^2)(1 - z^3)(1 - z^4)) up to z^nmax."""
    if nmax < 0:
        return []
    return _series((2, 3, 4), nmax, shift=ALCUIN_SHIFT)


def alcuin(n: int) -> int:
    return alcuin_sequence(n)[n] if n >= 0 else 0


def ds_vs_alcuin_check(kmax: int) -> bool:
    t = alcuin_sequence(kmax + ALCUIN_SHIFT)
    d = dims_by_series(Subalgebra.JS, kmax)
    return all(
        d[k] == t[k + ALCUIN_SHIFT] == ds_closed(k) for k in range(kmax + 1)
    )


def compact_formulas(k: int) -> Tuple[int, int]:
    """The two compact expressions of dim JS^{0,inf}_k."""
    if k % 2 == 0:
        factored = Fraction((k + 3) * (k + 6) ** 2, 144)
        cubic = Fraction(k**3 + 15 * k**2 + 72 * k + 144, 144)
    else:
        factored = Fraction((k + 3) ** 2 * (k + 9), 144)
        cubic = Fraction(k**3 + 15 * k**2 + 63 * k + 65, 144)
    return nearest_integer(factored), nearest_integer(cubic)


def compact_formula_check(kmax: int) -> bool:
    counts = enumeration_counts(Subalgebra.JS0INF, kmax)
    return all(compact_formulas(k) == (counts[k], counts[k]) for k in range(kmax + 1))


def dimension_table(
    which: Subalgebra, kmax: int, routes: Optional[Sequence[str]] = None
) -> List[DimensionReport]:
    """One report per weight 0..kmax with the value of each applicable route."""
    available: Dict[str, Callable[[int], int]] = {}
    counts = enumeration_counts(which, kmax)
    series = dims_by_series(which, kmax)
    available["enumeration"] = counts.__getitem__
    available["series"] = series.__getitem__
    available["closed"] = lambda k: dims_closed_form(which, k)
    if which is Subalgebra.JS:
        t = alcuin_sequence(kmax + ALCUIN_SHIFT)
        available["ds_closed"] = ds_closed
        available["alcuin"] = lambda k: t[k + ALCUIN_SHIFT]
        available["modular_sum"] = ds_by_modular_sum
    selected = list(available) if routes is None else [r for r in routes if r in available]
    return [
        DimensionReport(
            algebra=which,
            k=k,
            routes={name: available[name](k) for name in selected},
        )
        for k in range(kmax + 1)
    ]


def dimension_report(which: Subalgebra, k: int) -> DimensionReport:
    return dimension_table(which, k)[k]
