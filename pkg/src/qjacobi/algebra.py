"""Exact arithmetic in Q[c, 1/c][P, Pz, E4, E1, E2]: grading, double depth and
the depth-expansion operators Q_{j1,j2}."""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .exceptions import EmptyBasisError, ZeroFormError
from .models.depth import DepthProfile, Subalgebra
from .models.form import (
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
from .models.types import Depth, RationalLike
from .utils.rational import binomial

logger = logging.getLogger(__name__)

Expansion = Dict[Tuple[int, int], Form]


def add(f: Form, g: Form) -> Form:
    return f + g


def mul(f: Form, g: Form) -> Form:
    return f * g


def weight_of(f: Form) -> Optional[int]:
    weights = {monomial.weight for monomial, _ in f}
    return weights.pop() if len(weights) == 1 else None


def weight_components(f: Form) -> Dict[int, Form]:
    grouped: Dict[int, List[Tuple[Monomial, Scalar]]] = {}
    for monomial, scalar in f:
        grouped.setdefault(monomial.weight, []).append((monomial, scalar))
    return {k: Form(terms) for k, terms in sorted(grouped.items())}


def depth_of(f: Form) -> Depth:
    if f.is_zero:
        raise ZeroFormError("depth undefined for zero")
    return (
        max(monomial.e2 for monomial, _ in f),
        max(monomial.e1 for monomial, _ in f),
    )


def depth_profile(f: Form) -> DepthProfile:
    if f.is_zero:
        return DepthProfile(weight=None, depth=(0, 0))
    return DepthProfile(weight=weight_of(f), depth=depth_of(f))


def depth_expand(f: Form) -> Expansion:
    """Substitute E2 -> E2 - cX and E1 -> E1 + cY and collect in X, Y.

    The coefficient of X^j1 Y^j2 is Q_{j1,j2}(f).
    """
    accumulators: Dict[Tuple[int, int], Accumulator] = {}
    for monomial, scalar in f:
        for i in range(monomial.e2 + 1):
            for j in range(monomial.e1 + 1):
                factor = Scalar.c_power(
                    i + j, (-1) ** i * binomial(monomial.e2, i) * binomial(monomial.e1, j)
                )
                reduced = monomial._replace(e2=monomial.e2 - i, e1=monomial.e1 - j)
                accumulate_term(accumulators.setdefault((i, j), {}), reduced, scalar, factor)
    expansion = {key: Form.from_accumulator(acc) for key, acc in accumulators.items()}
    return {key: form for key, form in sorted(expansion.items()) if not form.is_zero}


def q_op(j1: int, j2: int, f: Form) -> Form:
    if j1 < 0 or j2 < 0:
        return Form()
    acc: Accumulator = {}
    for monomial, scalar in f:
        if monomial.e2 < j1 or monomial.e1 < j2:
            continue
        factor = Scalar.c_power(
            j1 + j2, (-1) ** j1 * binomial(monomial.e2, j1) * binomial(monomial.e1, j2)
        )
        reduced = monomial._replace(e2=monomial.e2 - j1, e1=monomial.e1 - j2)
        accumulate_term(acc, reduced, scalar, factor)
    return Form.from_accumulator(acc)


def evaluate_expansion(
    expansion: Mapping[Tuple[int, int], Form], x: RationalLike, y: RationalLike
) -> Form:
    x, y = Fraction(x), Fraction(y)
    return Form.linear_combination(
        (x**j1 * y**j2, form) for (j1, j2), form in expansion.items()
    )


def in_subalgebra(f: Form, which: Subalgebra) -> bool:
    if f.is_zero:
        return True
    return which.admits(depth_of(f))


@lru_cache(maxsize=None)
def e6() -> Form:
    return Form.linear_combination(
        [
            (Fraction(-1, 140), PZ * PZ),
            (Fraction(1, 35), P * P * P),
            (Fraction(-3, 7), P * E4),
        ]
    )


@lru_cache(maxsize=None)
def _basis(k: int, generators: Tuple[Generator, ...]) -> Tuple[Monomial, ...]:
    found: List[Monomial] = []
    exponents = [0] * 5

    def extend(position: int, remaining: int) -> None:
        if position == len(generators):
            if remaining == 0:
                found.append(Monomial(*exponents))
            return
        generator = generators[position]
        for power in range(remaining // generator.weight + 1):
            exponents[generator.index] = power
            extend(position + 1, remaining - power * generator.weight)
        exponents[generator.index] = 0

    if k >= 0:
        extend(0, k)
    found.sort(key=lambda monomial: monomial.sort_key, reverse=True)
    return tuple(found)


def basis_monomials(
    k: int, which: Subalgebra, max_depth: Optional[Depth] = None
) -> List[Monomial]:
    allowed = tuple(g for g in GENERATORS if g in which.generators)
    monomials = list(_basis(k, allowed))
    if max_depth is not None:
        s1, s2 = max_depth
        monomials = [m for m in monomials if m.e2 <= s1 and m.e1 <= s2]
    return monomials


def _rng(seed: int, *salt: int) -> np.random.Generator:
    return np.random.default_rng([abs(seed), *salt])


def _random_coefficients(rng: np.random.Generator, count: int) -> List[Fraction]:
    numerators = rng.integers(1, 10, size=count)
    signs = rng.choice([-1, 1], size=count)
    denominators = rng.integers(1, 6, size=count)
    return [
        Fraction(int(s) * int(n), int(d))
        for s, n, d in zip(signs, numerators, denominators)
    ]


def _pick(rng: np.random.Generator, items: Sequence[object], max_terms: Optional[int]) -> List[int]:
    if max_terms is None or len(items) <= max_terms:
        return list(range(len(items)))
    return sorted(int(i) for i in rng.choice(len(items), size=max_terms, replace=False))


def random_homogeneous(
    k: int,
    which: Subalgebra,
    seed: int,
    max_terms: Optional[int] = None,
    max_depth: Optional[Depth] = None,
) -> Form:
    """Seeded rational combination of the weight-k basis monomials of ``which``.

    Args:
        k: Weight.
        which: Subalgebra whose generator support the result respects.
        seed: Integer seed; equal seeds give identical forms.
        max_terms: Keep at most this many basis monomials (all when None).
        max_depth: Restrict to monomials of depth at most (s1, s2).

    Raises:
        EmptyBasisError: If no monomial of weight k qualifies.
    """
    basis = basis_monomials(k, which, max_depth)
    if not basis:
        raise EmptyBasisError(f"no basis monomial of weight {k} in {which.label}")
    rng = _rng(seed, k, list(Subalgebra).index(which))
    chosen = [basis[i] for i in _pick(rng, basis, max_terms)]
    coefficients = _random_coefficients(rng, len(chosen))
    logger.debug(f"random form of weight {k} in {which.label} from {len(chosen)} monomials")
    return Form.from_terms(
        {m: Scalar.rational(v) for m, v in zip(chosen, coefficients)}
    )


def _modular_exponents(k: int, quasi: bool) -> List[Tuple[int, int, int]]:
    found: List[Tuple[int, int, int]] = []
    for c in range(k // 2 + 1 if quasi else 1):
        rest = k - 2 * c
        for a in range(rest // 4 + 1):
            if (rest - 4 * a) % 6 == 0:
                found.append((a, (rest - 4 * a) // 6, c))
    return found


def random_modular(
    k: int, seed: int, max_terms: Optional[int] = None, quasi: bool = False
) -> Form:
    """Seeded rational combination of E4^a e6^b (times E2^c when ``quasi``)."""
    exponents = _modular_exponents(k, quasi) if k >= 0 else []
    if not exponents:
        kind = "quasimodular" if quasi else "modular"
        raise EmptyBasisError(f"no {kind} form of weight {k}")
    rng = _rng(seed, k, 7 if quasi else 5)
    chosen = [exponents[i] for i in _pick(rng, exponents, max_terms)]
    coefficients = _random_coefficients(rng, len(chosen))
    return Form.linear_combination(
        (v, E4**a * e6() ** b * E2**c) for (a, b, c), v in zip(chosen, coefficients)
    )
