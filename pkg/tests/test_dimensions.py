import pytest

from qjacobi import Subalgebra, dimension_table, dims_by_enumeration, dims_by_series
from qjacobi.dimensions import (
    alcuin,
    alcuin_sequence,
    compact_formula_check,
    compact_formulas,
    dimension_report,
    dims_closed_form,
    ds_by_modular_sum,
    ds_closed,
    ds_recurrences_check,
    ds_vs_alcuin_check,
    enumeration_counts,
    modular_dimension,
    residue_polynomials,
)


@pytest.mark.parametrize(
    "k, expected", [(0, 1), (1, 0), (2, 1), (4, 2), (6, 3), (8, 4), (10, 5), (12, 7)]
)
def test_js_table(k: int, expected: int) -> None:
    assert dims_by_series(Subalgebra.JS, 12)[k] == expected
    assert dims_by_enumeration(Subalgebra.JS, k) == expected
    assert ds_closed(k) == expected
    assert ds_by_modular_sum(k) == expected


def test_js0inf_small_weights() -> None:
    assert dims_by_series(Subalgebra.JS0INF, 6) == [1, 1, 2, 3, 5, 6, 9]


@pytest.mark.parametrize("which", list(Subalgebra))
def test_enumeration_routes_agree(which: Subalgebra) -> None:
    counts = enumeration_counts(which, 24)
    assert counts == [dims_by_enumeration(which, k) for k in range(25)]
    assert counts == dims_by_series(which, 24)


@pytest.mark.parametrize("which", list(Subalgebra))
def test_closed_forms_match_series(which: Subalgebra) -> None:
    series = dims_by_series(which, 80)
    assert [dims_closed_form(which, k) for k in range(81)] == series


def test_residue_polynomials_shape() -> None:
    table = residue_polynomials(Subalgebra.JSINF)
    assert len(table) == 12
    assert all(len(coefficients) == 5 for coefficients in table)


@pytest.mark.parametrize("which", list(Subalgebra))
def test_dimension_table_agrees(which: Subalgebra) -> None:
    table = dimension_table(which, 60)
    assert len(table) == 61
    assert all(report.agree for report in table)
    expected_routes = {"enumeration", "series", "closed"}
    if which is Subalgebra.JS:
        expected_routes |= {"ds_closed", "alcuin", "modular_sum"}
    assert set(table[0].routes) == expected_routes


def test_dimension_table_route_selection() -> None:
    table = dimension_table(Subalgebra.JS0INF, 5, routes=["series", "ds_closed"])
    assert [set(r.routes) for r in table] == [{"series"}] * 6


def test_dimension_report() -> None:
    report = dimension_report(Subalgebra.JS, 12)
    assert report.k == 12
    assert report.value == 7
    assert report.to_dict()["agree"] is True


def test_recurrences_and_alcuin() -> None:
    assert ds_recurrences_check(200)
    assert ds_vs_alcuin_check(500)
    assert alcuin_sequence(9) == [0, 0, 0, 1, 0, 1, 1, 2, 1, 3]
    assert alcuin(7) == 2
    assert alcuin(-1) == 0


def test_compact_formulas() -> None:
    assert compact_formulas(4) == (5, 5)
    assert compact_formulas(5) == (6, 6)
    assert compact_formula_check(300)


def test_modular_dimension() -> None:
    assert [modular_dimension(j) for j in (0, 2, 4, 12, 14, 24)] == [1, 0, 1, 2, 1, 3]
    assert modular_dimension(7) == 0
    assert modular_dimension(-4) == 0


def test_dimensions_grow_with_the_algebra() -> None:
    js = dims_by_series(Subalgebra.JS, 60)
    js0inf = dims_by_series(Subalgebra.JS0INF, 60)
    jsinf0 = dims_by_series(Subalgebra.JSINF0, 60)
    jsinf = dims_by_series(Subalgebra.JSINF, 60)
    for k in range(61):
        assert js[k] <= js0inf[k] <= jsinf[k]
        assert js[k] <= jsinf0[k] <= jsinf[k]
