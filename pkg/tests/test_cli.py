import json
from pathlib import Path

import pytest

from qjacobi import ReportRecord, Workbench
from qjacobi.cli import (
    EXIT_NUMERIC_DOMAIN,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    exit_code_for,
    main,
)
from qjacobi.exceptions import (
    ConfigurationError,
    PoleError,
    UnknownIdentifierError,
    ZeroFormError,
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ("QJACOBI_TOL", "QJACOBI_NQ", "QJACOBI_NZ", "QJACOBI_SEED"):
        monkeypatch.delenv(name, raising=False)


def run(capsys: pytest.CaptureFixture, *argv: str) -> tuple:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


def test_derive(capsys: pytest.CaptureFixture) -> None:
    assert run(capsys, "derive", "--op", "dz", "P") == (EXIT_OK, "Pz", "")


def test_bracket_order_zero(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "bracket", "--family", "tv", "--n", "0", "P", "E1")
    assert code == EXIT_OK
    assert out == "P*E1"


def test_depth_json(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "depth", "E1*E2", "--json")
    record = json.loads(out)
    assert code == EXIT_OK
    assert record["command"] == "depth"
    assert record["inputs"] == {"expr": "E1*E2"}
    assert record["result"]["depth"] == [1, 1]
    assert record["result"]["weight"] == 3


def test_qop(capsys: pytest.CaptureFixture) -> None:
    assert run(capsys, "qop", "1", "0", "E2")[1] == "-c"


def test_eisenstein(capsys: pytest.CaptureFixture) -> None:
    assert run(capsys, "eisenstein", "--k", "8")[1] == "3/7*E4^2"


def test_global_flags_before_or_after_command(capsys: pytest.CaptureFixture) -> None:
    before = run(capsys, "--json", "eisenstein", "--k", "4")[1]
    after = run(capsys, "eisenstein", "--k", "4", "--json")[1]
    assert before == after
    assert json.loads(before)["result"] == "E4"


def test_basis(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "basis", "--k", "4", "--algebra", "js")
    assert code == EXIT_OK
    assert sorted(out.splitlines()) == ["E4", "P^2"]


def test_dims_csv(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(
        capsys, "dims", "--algebra", "js", "--kmax", "12", "--route", "all", "--csv"
    )
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "k,enumeration,series,closed,ds_closed,alcuin,modular_sum,agree"
    assert lines[-1] == "12,7,7,7,7,7,7,true"
    assert len(lines) == 14


def test_dims_agreement_table(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "dims", "--algebra", "jsinf", "--kmax", "100", "--route", "all")
    rows = out.splitlines()
    assert code == EXIT_OK
    assert rows[0].split() == ["k", "enumeration", "series", "closed", "agree"]
    assert all(row.split()[-1] == "true" for row in rows[1:])


def test_dims_unavailable_route(capsys: pytest.CaptureFixture) -> None:
    code, _, err = run(capsys, "dims", "--algebra", "js0inf", "--kmax", "4", "--route", "ds_closed")
    assert code == EXIT_USAGE
    assert "ds_closed" in err


def test_series_ek(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "series", "--what", "ek", "--k", "4", "--terms", "2", "--json")
    result = json.loads(out)["result"]
    assert code == EXIT_OK
    assert result["multiplier"] == "1/45"
    assert result["coefficients"] == ["1", "240", "2160"]


def test_series_ek_needs_weight(capsys: pytest.CaptureFixture) -> None:
    assert run(capsys, "series", "--what", "ek")[0] == EXIT_USAGE


def test_series_wp(capsys: pytest.CaptureFixture) -> None:
    out = run(capsys, "series", "--what", "wp", "--terms", "2", "--json")[1]
    assert json.loads(out)["result"] == [
        {"power": 2, "eisenstein": 4, "factor": 3},
        {"power": 4, "eisenstein": 6, "factor": 5},
    ]


def test_star(capsys: pytest.CaptureFixture) -> None:
    out = run(capsys, "star", "--family", "rc", "--order", "2", "P", "E4", "--json")[1]
    coefficients = json.loads(out)["result"]
    assert len(coefficients) == 3
    assert coefficients[0] == "P*E4"


def test_parse_error_exit_code(capsys: pytest.CaptureFixture) -> None:
    code, _, err = run(capsys, "depth", "P + Q")
    assert code == EXIT_USAGE
    assert "unknown identifier" in err
    assert "    ^" in err


def test_bad_exponent_diagnostic_shows_source(capsys: pytest.CaptureFixture) -> None:
    code, _, err = run(capsys, "depth", "E4 + P^-1")
    assert code == EXIT_USAGE
    assert "  E4 + P^-1\n" in err
    assert "\n        ^" in err


def test_eval(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "eval", "--tau", "2j", "--z", "0.2-0.1j", "P", "--json")
    result = json.loads(out)["result"]
    assert code == EXIT_OK
    assert result["representation"] == "laurent"


def test_eval_modular_form_ignores_z(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "eval", "--tau", "1j", "E4", "--json")
    assert code == EXIT_OK
    assert "representation" not in json.loads(out)["result"]


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--tau", "2j", "P"),
        ("eval", "--tau", "0.05j", "E4"),
        ("eval", "--tau", "2j", "--z", "3j", "P"),
    ],
)
def test_numeric_domain_exit_code(capsys: pytest.CaptureFixture, argv: tuple) -> None:
    assert run(capsys, *argv)[0] == EXIT_NUMERIC_DOMAIN


def test_bad_complex_literal(capsys: pytest.CaptureFixture) -> None:
    assert run(capsys, "eval", "--tau", "two", "E4")[0] == EXIT_USAGE


def test_bad_tolerance(capsys: pytest.CaptureFixture) -> None:
    assert run(capsys, "eval", "--tau", "2j", "E4", "--tol", "0")[0] == EXIT_USAGE


def test_unknown_choice_is_argparse_error() -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["derive", "--op", "curl", "P"])
    assert excinfo.value.code == 2


def test_verify_suite(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "verify", "--suite", "dimensions", "--seed", "3")
    assert code == EXIT_OK
    assert out.splitlines()[-1].endswith("checks, 0 failed")
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_failure_exit_code(
    capsys: pytest.CaptureFixture, monkeypatch: pytest.MonkeyPatch
) -> None:
    failing = ReportRecord(
        command="verify",
        inputs={"suite": "identities", "check": "demo"},
        result="E4",
        passed=False,
    )
    monkeypatch.setattr(Workbench, "verify", lambda self, name="all": [failing])
    code, out, _ = run(capsys, "verify")
    assert code == EXIT_VERIFICATION_FAILED
    assert out.splitlines() == ["FAIL identities/demo", "1 checks, 1 failed"]


def test_out_file(capsys: pytest.CaptureFixture, tmp_path: Path) -> None:
    target = tmp_path / "e4.json"
    code, out, _ = run(capsys, "eisenstein", "--k", "4", "--json", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text())["result"] == "E4"


def test_exit_code_mapping() -> None:
    assert exit_code_for(PoleError("near a pole")) == EXIT_NUMERIC_DOMAIN
    assert exit_code_for(UnknownIdentifierError("Q", 0, "Q")) == EXIT_USAGE
    assert exit_code_for(ConfigurationError("bad")) == EXIT_USAGE
    assert exit_code_for(ZeroFormError("zero")) == EXIT_USAGE
