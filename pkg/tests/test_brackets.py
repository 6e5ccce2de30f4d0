import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qjacobi import (
    E1,
    E4,
    P,
    PZ,
    BracketFamily,
    InvalidArgumentError,
    InvalidOrderError,
    Subalgebra,
    associativity_defect,
    bracket,
    dtau,
    dz,
    e6,
    in_subalgebra,
    random_homogeneous,
    random_modular,
    rc_bracket,
    rc_d_bracket,
    star_truncated,
    transvectant,
    weight_of,
)
from qjacobi.brackets import (
    e1_exchange_defect,
    stability_witnesses,
    symmetry_defect,
    tv_recurrence_defect,
)

seeds = st.integers(min_value=0, max_value=2**31 - 1)


def test_family_validation() -> None:
    assert BracketFamily.validate("RC") is BracketFamily.RC
    assert BracketFamily.validate("rcd") is BracketFamily.RC_D
    with pytest.raises(InvalidArgumentError):
        BracketFamily.validate("moyal")


def test_order_zero_is_product() -> None:
    for family in BracketFamily:
        assert bracket(family, 0, P, E1) == P * E1


def test_first_transvectant() -> None:
    assert transvectant(1, P, E1) == dtau(P) * dz(E1) - dz(P) * dtau(E1)


def test_first_rankin_cohen() -> None:
    # [f, g]_1 = k f dtau g - l dtau f g
    assert rc_bracket(1, E4, P) == 4 * E4 * dtau(P) - 2 * dtau(E4) * P


def test_negative_order_rejected() -> None:
    with pytest.raises(InvalidOrderError):
        rc_bracket(-1, P, E4)
    with pytest.raises(InvalidOrderError):
        e1_exchange_defect(0, P, E4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_modular_forms(n: int) -> None:
    f, g = random_modular(4, 1), random_modular(6, 2)
    assert rc_bracket(n, f, g) == rc_d_bracket(n, f, g)
    assert transvectant(n, f, g).is_zero
    assert transvectant(n, E4, e6()).is_zero


@settings(max_examples=10, deadline=None)
@given(seeds, seeds, st.integers(min_value=0, max_value=3))
def test_symmetry(seed_f: int, seed_g: int, n: int) -> None:
    f = random_homogeneous(3, Subalgebra.JSINF, seed_f, max_terms=3)
    g = random_homogeneous(2, Subalgebra.JSINF, seed_g, max_terms=3)
    for family in BracketFamily:
        assert symmetry_defect(family, n, f, g).is_zero


@pytest.mark.parametrize(
    "family, which",
    [
        (BracketFamily.RC, Subalgebra.JS0INF),
        (BracketFamily.RC_D, Subalgebra.JS),
        (BracketFamily.TV, Subalgebra.JSINF0),
        (BracketFamily.RC_D, Subalgebra.JSINF0),
    ],
)
def test_bracket_stability(family: BracketFamily, which: Subalgebra) -> None:
    f = random_homogeneous(4, which, 11, max_terms=3)
    g = random_homogeneous(3, which, 12, max_terms=3)
    for n in range(1, 4):
        assert in_subalgebra(bracket(family, n, f, g), which)


def test_transvectant_with_e1_stays_in_quasimodular_part() -> None:
    f = random_homogeneous(4, Subalgebra.JSINF0, 5, max_terms=3)
    for n in range(1, 4):
        assert in_subalgebra(transvectant(n, f, E1), Subalgebra.JSINF0)


def test_witnesses_escape() -> None:
    for label, form, must_fail in stability_witnesses():
        assert all(not in_subalgebra(form, which) for which in must_fail), label


def test_star_series() -> None:
    series = star_truncated(2, P, PZ, BracketFamily.TV)
    assert series.order == 2
    assert series.coefficient(0) == P * PZ
    assert series.coefficient(2) == transvectant(2, P, PZ) * BracketFamily.TV.normalization(2)
    assert series.coefficient(5).is_zero


@pytest.mark.parametrize(
    "family, order",
    [(BracketFamily.TV, 3), (BracketFamily.RC, 2), (BracketFamily.RC_D, 2)],
)
def test_star_product_is_associative(family: BracketFamily, order: int) -> None:
    defects = associativity_defect(order, P, E1, PZ, family)
    assert len(defects) == order + 1
    assert all(d.is_zero for d in defects)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_transvectant_recurrence(n: int) -> None:
    assert tv_recurrence_defect(n, P * E1, E4).is_zero


@pytest.mark.parametrize("n", [1, 2, 3])
def test_e1_exchange_identity(n: int) -> None:
    assert e1_exchange_defect(n, P, PZ).is_zero


def test_family_weight_shift() -> None:
    assert BracketFamily.RC.weight_shift == 2
    assert BracketFamily.RC_D.weight_shift == 2
    assert BracketFamily.TV.weight_shift == 3


@settings(max_examples=15, deadline=None)
@given(
    seeds,
    seeds,
    st.sampled_from(list(BracketFamily)),
    st.integers(min_value=0, max_value=3),
)
def test_bracket_shifts_weight(seed_f: int, seed_g: int, family: BracketFamily, n: int) -> None:
    f = random_homogeneous(4, Subalgebra.JSINF, seed_f, 3)
    g = random_homogeneous(3, Subalgebra.JSINF, seed_g, 3)
    result = bracket(family, n, f, g)
    if not result.is_zero:
        assert weight_of(result) == 7 + family.weight_shift * n
