import json

import pytest

from lenspec.cli import main, parse_quadratic, render
from lenspec.algnum import QuadraticElement
from lenspec.errors import DomainError
from lenspec.quatarith import TraceSpectrum
from lenspec.rootsys import RootSystem
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# exit-code contract
# ---------------------------------------------------------------------------

def test_success_exit_zero(capsys):
    code, out, err = run(capsys, "ratio", "--n", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["ratio"] == "sqrt(8/5)"
    assert err == ""


def test_domain_error_exit_two_with_json_on_stderr(capsys):
    code, out, err = run(capsys, "hyperbolic-weyl", "--d", "3")
    assert code == 2
    assert out == ""
    doc = json.loads(err)
    assert doc["error"]["type"] == "DomainError"


def test_unknown_subcommand_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 64


def test_missing_argument_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["weyl", "--family", "B"])
    assert exc.value.code == 64


def test_no_subcommand_usage(capsys):
    assert main([]) == 64


def test_ratio_rejects_n_below_three(capsys):
    code, _, err = run(capsys, "ratio", "--n", "2")
    assert code == 2
    assert "n >= 3" in json.loads(err)["error"]["message"]


# ---------------------------------------------------------------------------
# determinism and round trips
# ---------------------------------------------------------------------------

def test_byte_identical_reruns(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "experiment", "bc-ratio", "--n-max", "4",
                           "--samples", "5", "--seed", "42")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_roots_round_trip(capsys):
    code, out, _ = run(capsys, "roots", "--family", "G", "--rank", "2")
    assert code == 0
    system = RootSystem.from_json_dict(json.loads(out))
    assert system.family == "G" and len(system.roots) == 12


def test_spectrum_round_trip(capsys):
    code, out, _ = run(capsys, "spectrum", "--a", "2", "--b", "3", "--height", "10")
    assert code == 0
    spec = TraceSpectrum.from_json_dict(json.loads(out))
    assert spec.height == 10
    assert all(e.trace > 2 for e in spec.entries)


def test_formats(capsys):
    for fmt in ("json", "csv", "table"):
        code, out, _ = run(capsys, "weyl", "--family", "B", "--rank", "3",
                           "--format", fmt)
        assert code == 0
        assert "48" in out
    csv_out = run(capsys, "weyl", "--family", "B", "--rank", "3", "--format", "csv")[1]
    assert csv_out.splitlines()[0] == "key,value"


# ---------------------------------------------------------------------------
# subcommand behavior
# ---------------------------------------------------------------------------

def test_weyl_and_classes(capsys):
    assert json.loads(run(capsys, "weyl", "--family", "C", "--rank", "4")[1])["weyl_order"] == 384
    doc = json.loads(run(capsys, "classes", "--family", "B", "--rank", "2")[1])
    assert doc["nontrivial_classes"] == 4


def test_hilbert_and_ramify(capsys):
    doc = json.loads(run(capsys, "hilbert", "--a", "-1", "--b", "-1", "--place", "real")[1])
    assert doc["symbol"] == -1
    doc = json.loads(run(capsys, "ramify", "--a", "-1", "--b", "-1")[1])
    assert doc["ramified"] == ["2", "real"]


def test_mkalg_and_embedfield(capsys):
    doc = json.loads(run(capsys, "mkalg", "--places", "2,real")[1])
    assert doc["algebra"] == {"a": "-1", "b": "-1"}
    doc = json.loads(run(capsys, "embedfield", "--a", "-1", "--b", "-1", "--d", "-1")[1])
    assert doc["embeds"] is True


def test_enumerate_counts(capsys):
    doc = json.loads(run(capsys, "enumerate", "--a", "-1", "--b", "-1", "--height", "2")[1])
    assert doc["count"] == 8


def test_lambda_with_mu_and_trace(capsys):
    doc = json.loads(run(capsys, "lambda", "--family", "B", "--rank", "3",
                         "--mu", "1,0,0")[1])
    assert doc["lambda_squared"] == "10"
    doc = json.loads(run(capsys, "lambda", "--trace", "3")[1])
    assert doc["length_interval"]["lo"].startswith("2.72214515749")


def test_indep_and_contain(capsys):
    doc = json.loads(run(capsys, "indep", "--elements", "1+sqrt(2);3+2*sqrt(2)")[1])
    assert doc["verdict"] == "dependent"
    assert doc["witness"]["status"] == "exact"
    doc = json.loads(run(capsys, "contain", "--side1", "3/2+1/2*sqrt(5)",
                         "--side2", "9+4*sqrt(5)", "--exponent-bound", "5")[1])
    assert doc["witness"]["left_exponents"] == [3]


def test_unscramble_weight_module(capsys):
    doc = json.loads(run(capsys, "unscramble", "--family", "B", "--rank", "2",
                         "--chi", "1,0")[1])
    assert doc["d"] >= 1
    assert doc["containment_verified"] is True


def test_etale_embed_local_and_global(capsys):
    doc = json.loads(run(capsys, "etale-embed", "--degrees", "2", "--index", "2")[1])
    assert doc["embeds"] is True
    etale_doc = json.dumps({"factor_degrees": [2],
                            "local_degrees": {"2": [[2]], "3": [[2]]}})
    csa_doc = json.dumps({"degree": 2, "local_indices": {"2": 2, "3": 2}})
    doc = json.loads(run(capsys, "etale-embed", "--etale-json", etale_doc,
                         "--csa-json", csa_doc)[1])
    assert doc["embeds"] is True


def test_truncate(capsys):
    doc = json.loads(run(capsys, "truncate", "--coeffs", "1,-4,4,-1")[1])
    assert doc["coefficients"] == ["1", "-3", "1"]


def test_experiment_example_7_4_summary(capsys):
    code, out, _ = run(capsys, "experiment", "example-7-4", "--height", "12",
                       "--witness-height", "40")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["forward_all_field_verdicts_true"] is True


def test_experiment_height_one_vacuous(capsys):
    doc = json.loads(run(capsys, "experiment", "example-7-4", "--height", "1",
                         "--witness-height", "1")[1])
    assert doc["summary"]["vacuous"] is True


# ---------------------------------------------------------------------------
# environment precision override
# ---------------------------------------------------------------------------

def test_precision_env_override(capsys, monkeypatch):
    monkeypatch.setenv("LENSPEC_PRECISION", "128")
    doc = json.loads(run(capsys, "spectrum", "--a", "2", "--b", "3", "--height", "6")[1])
    assert doc["precision_bits"] == 128
    monkeypatch.setenv("LENSPEC_PRECISION", "garbage")
    code, _, err = run(capsys, "spectrum", "--a", "2", "--b", "3", "--height", "6")
    assert code == 2
    monkeypatch.delenv("LENSPEC_PRECISION")


def test_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("LENSPEC_PRECISION", "128")
    doc = json.loads(run(capsys, "spectrum", "--a", "2", "--b", "3", "--height", "6",
                         "--precision-bits", "64")[1])
    assert doc["precision_bits"] == 64


# ---------------------------------------------------------------------------
# element parsing
# ---------------------------------------------------------------------------

def test_parse_quadratic_forms():
    assert parse_quadratic("3") == QuadraticElement.from_rational(3)
    assert parse_quadratic("3/2") == QuadraticElement.from_rational(Fraction(3, 2))
    assert parse_quadratic("1+sqrt(2)") == QuadraticElement(1, 1, 2)
    assert parse_quadratic("2-3/2*sqrt(5)") == QuadraticElement(2, Fraction(-3, 2), 5)
    assert parse_quadratic("sqrt(7)") == QuadraticElement(0, 1, 7)
    assert parse_quadratic("-1+2*sqrt(3)") == QuadraticElement(-1, 2, 3)
    with pytest.raises(DomainError):
        parse_quadratic("nonsense(")


def test_render_table_alignment():
    text = render({"b": 1, "a": {"c": "x"}}, "table")
    lines = text.splitlines()
    assert lines[0].startswith("a.c")
