import inspect
import sys
from concurrent.futures import ThreadPoolExecutor
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
    Form,
    InvalidWeightError,
    Subalgebra,
    d_deriv,
    delta,
    dtau,
    dz,
    e6,
    eisenstein,
    oberdieck,
    random_homogeneous,
    theta,
    theta_prime,
)
from qjacobi import calculus
from qjacobi.algebra import depth_of, in_subalgebra, weight_of
from qjacobi.calculus import (
    D_DERIV,
    DERIVATIONS,
    DTAU,
    DZ,
    OBERDIECK,
    DerivationTable,
    STABILITY_COUNTEREXAMPLES,
    STABILITY_TABLE,
    THETA,
    commutator_defects,
    depth_within,
    image_stays_in_row,
    is_modular,
    is_quasimodular,
    leibniz_defect,
    q_dtau_defect,
    q_dz_defect,
    q_oberdieck_defect,
    ramanujan_defects,
    raw_dtau,
    raw_dz,
    row_contains,
    stability_matrix,
    weierstrass_relation,
)
from qjacobi.models.scalar import Scalar

seeds = st.integers(min_value=0, max_value=2**31 - 1)


def test_generator_images() -> None:
    assert dz(P) == PZ
    assert dz(E4).is_zero
    assert dz(E2).is_zero
    assert dz(E1) == -P - E2
    assert dtau(E2) == Fraction(1, 4) * (E2 * E2 - 5 * E4)


def test_ramanujan_and_weierstrass_identities() -> None:
    assert all(defect.is_zero for defect in ramanujan_defects())
    assert weierstrass_relation().is_zero


@pytest.mark.parametrize(
    "form, expected",
    [
        (P, -2 * (P * P - 10 * E4)),
        (PZ, -3 * P * PZ),
        (E4, -14 * e6()),
        (E1, Fraction(1, 2) * PZ - E1 * E2),
        (E2, -E2 * E2 - 5 * E4),
    ],
)
def test_oberdieck_catalog(form: Form, expected: Form) -> None:
    assert oberdieck(form) == expected


def test_eisenstein_recursion() -> None:
    assert eisenstein(2) == E2
    assert eisenstein(4) == E4
    assert eisenstein(6) == e6()
    assert eisenstein(8) == Fraction(3, 7) * E4 * E4
    assert eisenstein(10) == Fraction(5, 11) * E4 * e6()


def test_eisenstein_builds_high_weights_iteratively(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(calculus, "_EISENSTEIN", {})
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(len(inspect.stack(0)) + 25)
    try:
        e64 = eisenstein(64)
    finally:
        sys.setrecursionlimit(limit)
    assert weight_of(e64) == 64
    assert in_subalgebra(e64, Subalgebra.JS)
    assert sorted(calculus._EISENSTEIN) == list(range(4, 66, 2))
    assert eisenstein(8) == Fraction(3, 7) * E4 * E4


@pytest.mark.parametrize("k", [0, 3, -2])
def test_eisenstein_rejects_bad_weight(k: int) -> None:
    with pytest.raises(InvalidWeightError):
        eisenstein(k)


def test_dtau_and_dz_commute_on_generators() -> None:
    for g in (P, PZ, E4, E1, E2):
        assert dtau(dz(g)) == dz(dtau(g))


def test_raw_derivatives_scale() -> None:
    c = Scalar.c_power(1)
    assert raw_dz(P) == PZ
    assert raw_dtau(E2) == dtau(E2) * (Scalar.rational(-4) * c ** -1)


def test_delta_is_half_the_weight() -> None:
    assert delta(P) == P
    assert delta(E1) == Fraction(1, 2) * E1
    assert delta(P + E4) == P + 2 * E4
    assert delta(Form.constant(5)).is_zero


def test_theta_prime_is_quarter_oberdieck() -> None:
    for g in (P, PZ, E4, E1, E2, P * E1 + E2 * E4):
        assert theta_prime(g) == Fraction(1, 4) * oberdieck(g)


def test_d_deriv_on_e1() -> None:
    assert d_deriv(E1) == dtau(E1) + Fraction(1, 4) * E1 * dz(E1)


def test_derivation_registry() -> None:
    assert {"dz", "dtau", "ob", "delta", "theta", "d", "theta_prime"} <= set(DERIVATIONS)
    assert DERIVATIONS["ob"] is OBERDIECK


@settings(max_examples=15, deadline=None)
@given(seeds, seeds)
def test_leibniz_rule(seed_f: int, seed_g: int) -> None:
    f = random_homogeneous(4, Subalgebra.JSINF, seed_f, max_terms=4)
    g = random_homogeneous(3, Subalgebra.JSINF, seed_g, max_terms=4)
    for table in (DZ, DTAU, D_DERIV, THETA, OBERDIECK):
        assert leibniz_defect(table, f, g).is_zero


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_commutators_with_delta(seed: int) -> None:
    f = random_homogeneous(5, Subalgebra.JSINF, seed, max_terms=5)
    assert all(d.is_zero for d in commutator_defects(f))


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_dtau_dz_commute_on_random_forms(seed: int) -> None:
    f = random_homogeneous(6, Subalgebra.JSINF, seed, max_terms=5)
    assert dtau(dz(f)) == dz(dtau(f))


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_q_recurrences(seed: int) -> None:
    f = random_homogeneous(6, Subalgebra.JSINF, seed, max_terms=5, max_depth=(2, 2))
    s1, s2 = depth_of(f)
    for j1 in range(s1 + 2):
        for j2 in range(s2 + 2):
            assert q_dz_defect(j1, j2, f).is_zero
            assert q_dtau_defect(j1, j2, f).is_zero
            assert q_oberdieck_defect(j1, j2, f).is_zero


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_depth_bounds(seed: int) -> None:
    f = random_homogeneous(7, Subalgebra.JSINF, seed, max_terms=5)
    s1, s2 = depth_of(f)
    assert depth_within(dz(f), ((s1 + 1, s2 - 1), (s1, s2)))
    assert depth_within(dtau(f), ((s1 + 1, s2), (s1, s2 + 1)))
    assert depth_within(oberdieck(f), ((s1 + 1, s2),))


def test_modular_predicates() -> None:
    assert is_modular(E4)
    assert is_modular(e6())
    assert not is_modular(P)
    assert not is_modular(E2)
    assert is_quasimodular(E2 * E4)
    assert not is_quasimodular(E1)


def test_stability_counterexamples_leave_their_row() -> None:
    for (row, column), witness in STABILITY_COUNTEREXAMPLES.items():
        assert not STABILITY_TABLE[(row, column)]
        assert row_contains(row, witness)
        assert not image_stays_in_row(row, column, witness)


def test_stability_matrix_shape() -> None:
    matrix = stability_matrix()
    assert len(matrix) == 18
    assert sum(not stable for stable in matrix.values()) == len(STABILITY_COUNTEREXAMPLES)
    assert matrix[("JS^inf", "dtau")]


def test_stable_rows_on_generators() -> None:
    assert image_stays_in_row("M^inf", "dtau", E2)
    assert image_stays_in_row("JS", "ob", P)
    assert image_stays_in_row("JS^{inf,0}", "dz", E2 * P)


def test_derivation_memo_is_consistent_across_threads() -> None:
    forms = [random_homogeneous(1 + i % 6, Subalgebra.JSINF, i, 5) for i in range(24)]
    expected = [DZ.apply(f) for f in forms]
    fresh = DerivationTable("dz", DZ.images)
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(fresh.apply, forms))
    assert results == expected
