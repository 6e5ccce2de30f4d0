from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qjacobi import (
    E1,
    E2,
    E4,
    P,
    PZ,
    EmptyBasisError,
    Form,
    Scalar,
    Subalgebra,
    ZeroFormError,
    basis_monomials,
    depth_expand,
    depth_of,
    depth_profile,
    e6,
    in_subalgebra,
    q_op,
    random_homogeneous,
    random_modular,
    weight_of,
)
from qjacobi.algebra import add, evaluate_expansion, mul, weight_components
from qjacobi.models.form import Monomial

seeds = st.integers(min_value=0, max_value=2**31 - 1)

C = Form.constant(Scalar.c_power(1))


def test_arithmetic_is_canonical() -> None:
    assert (P + E4) - E4 == P
    assert P * E4 == E4 * P
    assert P**0 == Form.constant(1)
    assert (P - P).is_zero
    assert Fraction(1, 2) * (2 * P) == P
    assert hash(P * PZ) == hash(PZ * P)


def test_weight_of_homogeneous_and_mixed() -> None:
    assert weight_of(P * E4) == 6
    assert weight_of(E1 * PZ) == 4
    assert weight_of(P + E4) is None
    assert weight_of(Form.constant(3)) == 0
    assert set(weight_components(P + E4 + E1)) == {1, 2, 4}


def test_depth_reads_e2_and_e1_degrees() -> None:
    assert depth_of(E2**2 * E1 + P) == (2, 1)
    assert depth_of(P * PZ) == (0, 0)


def test_depth_of_zero_raises() -> None:
    with pytest.raises(ZeroFormError):
        depth_of(Form())


def test_depth_profile_of_zero() -> None:
    profile = depth_profile(Form())
    assert profile.weight is None
    assert profile.depth == (0, 0)


def test_depth_profile_lists_subalgebras() -> None:
    payload = depth_profile(E1 * P).to_dict()
    assert payload["weight"] == 3
    assert payload["depth"] == [0, 1]
    assert payload["subalgebras"] == ["js0inf", "jsinf"]


def test_depth_expand_of_e2_and_e1() -> None:
    assert depth_expand(E2) == {(0, 0): E2, (1, 0): -C}
    assert depth_expand(E1) == {(0, 0): E1, (0, 1): C}
    assert q_op(1, 0, E2) == -C
    assert q_op(0, 1, E1 * E1) == 2 * C * E1
    assert q_op(0, 2, E1 * E1) == C * C


def test_q_op_outside_range_is_zero() -> None:
    assert q_op(-1, 0, E2).is_zero
    assert q_op(2, 0, E2).is_zero
    assert q_op(0, 0, P) == P


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_expansion_at_origin_returns_form(seed: int) -> None:
    f = random_homogeneous(7, Subalgebra.JSINF, seed, max_terms=6)
    assert evaluate_expansion(depth_expand(f), 0, 0) == f


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_q_op_is_expansion_coefficient(seed: int) -> None:
    f = random_homogeneous(6, Subalgebra.JSINF, seed, max_terms=6)
    for (j1, j2), q in depth_expand(f).items():
        assert q_op(j1, j2, f) == q


def test_subalgebra_membership() -> None:
    assert in_subalgebra(E1 * P, Subalgebra.JS0INF)
    assert not in_subalgebra(E1 * P, Subalgebra.JSINF0)
    assert in_subalgebra(E2 * P, Subalgebra.JSINF0)
    assert not in_subalgebra(E2, Subalgebra.JS)
    assert in_subalgebra(Form(), Subalgebra.JS)


def test_basis_monomials() -> None:
    assert set(basis_monomials(4, Subalgebra.JS)) == {Monomial(p=2), Monomial(e4=1)}
    assert basis_monomials(1, Subalgebra.JS) == []
    assert len(basis_monomials(12, Subalgebra.JS)) == 7
    restricted = basis_monomials(4, Subalgebra.JSINF, max_depth=(0, 0))
    assert set(restricted) == {Monomial(p=2), Monomial(e4=1)}


def test_random_homogeneous_is_seeded() -> None:
    f = random_homogeneous(6, Subalgebra.JSINF, 42)
    assert f == random_homogeneous(6, Subalgebra.JSINF, 42)
    assert weight_of(f) == 6
    assert len(random_homogeneous(9, Subalgebra.JSINF, 42, max_terms=3)) <= 3


def test_random_homogeneous_respects_depth_bound() -> None:
    f = random_homogeneous(8, Subalgebra.JSINF, 3, max_depth=(1, 2))
    s1, s2 = depth_of(f)
    assert s1 <= 1 and s2 <= 2


def test_random_homogeneous_empty_basis() -> None:
    with pytest.raises(EmptyBasisError):
        random_homogeneous(1, Subalgebra.JS, 0)


def test_random_modular() -> None:
    f = random_modular(12, 5)
    assert weight_of(f) == 12
    assert in_subalgebra(f, Subalgebra.JS)
    with pytest.raises(EmptyBasisError):
        random_modular(2, 0)
    assert depth_of(random_modular(2, 0, quasi=True)) == (1, 0)


def test_e6_has_weight_six() -> None:
    assert weight_of(e6()) == 6
    assert in_subalgebra(e6(), Subalgebra.JS)


weights = st.integers(min_value=1, max_value=7)


@settings(max_examples=25, deadline=None)
@given(seeds, seeds, weights, weights)
def test_mul_adds_weights_and_depths(seed_f: int, seed_g: int, kf: int, kg: int) -> None:
    f = random_homogeneous(kf, Subalgebra.JSINF, seed_f, max_terms=4)
    g = random_homogeneous(kg, Subalgebra.JSINF, seed_g, max_terms=4)
    product = mul(f, g)
    assert product == f * g
    assert weight_of(product) == kf + kg
    (a1, b1), (a2, b2) = depth_of(f), depth_of(g)
    assert depth_of(product) == (a1 + a2, b1 + b2)
    assert add(f, g) == f + g
    assert add(f, -1 * f).is_zero


@settings(max_examples=20, deadline=None)
@given(seeds, seeds, st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2))
def test_q_op_product_rule(seed_f: int, seed_g: int, j1: int, j2: int) -> None:
    f = random_homogeneous(5, Subalgebra.JSINF, seed_f, max_terms=4)
    g = random_homogeneous(4, Subalgebra.JSINF, seed_g, max_terms=4)
    expected = Form()
    for a in range(j1 + 1):
        for b in range(j2 + 1):
            expected = expected + q_op(a, b, f) * q_op(j1 - a, j2 - b, g)
    assert q_op(j1, j2, f * g) == expected


@settings(max_examples=20, deadline=None)
@given(
    seeds,
    seeds,
    st.integers(min_value=2, max_value=8),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
)
def test_q_op_at_full_depth_is_singular_form(
    seed_g: int, seed_rest: int, m: int, s1: int, s2: int
) -> None:
    g = random_homogeneous(m, Subalgebra.JS, seed_g, max_terms=3)
    k = m + 2 * s1 + s2
    f = g * E2**s1 * E1**s2
    if s1:
        f = f + random_homogeneous(k, Subalgebra.JSINF, seed_rest, 4, max_depth=(s1 - 1, s2))
    if s2:
        f = f + random_homogeneous(k, Subalgebra.JSINF, seed_rest, 4, max_depth=(s1, s2 - 1))
    assert depth_of(f) == (s1, s2)
    top = q_op(s1, s2, f)
    assert top == (-1) ** s1 * C ** (s1 + s2) * g
    assert depth_of(top) == (0, 0)
    assert weight_of(top) == k - 2 * s1 - s2
    assert q_op(s1 + 1, s2, f).is_zero
    assert q_op(s1, s2 + 1, f).is_zero
