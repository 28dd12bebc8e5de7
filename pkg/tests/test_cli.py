"""Command-line interface: golden outputs, exit codes, error surface."""

import json
import pathlib

import pytest

from ramforge.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"
CASES = sorted(p.stem for p in GOLDEN.glob("*.cmd"))


def run(capsys, argv):
    rc = main(argv)
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


@pytest.mark.parametrize("name", CASES)
def test_golden_byte_identical(name, capsys):
    argv = (GOLDEN / f"{name}.cmd").read_text().splitlines()
    want = (GOLDEN / f"{name}.out").read_text()
    rc1, out1, err1 = run(capsys, argv)
    rc2, out2, err2 = run(capsys, argv)
    assert rc1 == 0 and rc2 == 0
    assert err1 == "" and err2 == ""
    assert out1 == want
    assert out2 == want


@pytest.mark.parametrize("name", [c for c in CASES if c.endswith("json")])
def test_golden_json_parses_compact(name):
    raw = (GOLDEN / f"{name}.out").read_text()
    obj = json.loads(raw)
    assert raw == json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def test_seed_flag_accepted_and_ignored(capsys):
    base = ["analyze", "--p", "2", "x^3+1", "x"]
    _, out1, _ = run(capsys, base + ["--seed", "1"])
    _, out2, _ = run(capsys, base + ["--seed", "2"])
    _, out3, _ = run(capsys, base)
    assert out1 == out2 == out3


# ---------------------------------------------------------------------------
# exit codes and error surface


def test_parse_error_exit_2(capsys):
    rc, out, err = run(capsys, ["analyze", "--p", "2", "x^^"])
    assert rc == 2
    assert out == ""
    assert err.startswith("ramforge: error: ")


def test_wrong_variable_place_exit_2(capsys):
    rc, _, err = run(
        capsys, ["analyze", "--p", "2", "x^3+1", "x", "--at", "u^2+u+1"]
    )
    assert rc == 2
    assert "ramforge: error:" in err


def test_precondition_exit_3(capsys):
    rc, _, err = run(capsys, ["analyze", "--p", "3", "x^3"])
    assert rc == 3
    assert "inseparable" in err
    rc, _, err = run(capsys, ["factor", "--p", "4", "T"])
    assert rc == 3
    assert "not prime" in err
    rc, _, err = run(capsys, ["belyi-tame", "--p", "2", "--places", "x"])
    assert rc == 3


def test_size_bound_exit_4(capsys, monkeypatch):
    monkeypatch.setenv("RAMFORGE_MAX_DEGREE", "2")
    rc, _, err = run(
        capsys, ["belyi-wild", "--p", "2", "--places", "x^2+x+1"]
    )
    assert rc == 4
    assert "ramforge: error:" in err


def test_usage_errors_raise_system_exit():
    with pytest.raises(SystemExit) as e:
        main(["analyze", "x^3"])  # --p missing
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["no-such-verb", "--p", "2"])
    assert e.value.code == 2


# ---------------------------------------------------------------------------
# per-verb behavior not covered by the goldens


def test_analyze_at_unramified_place(capsys):
    rc, out, _ = run(
        capsys, ["analyze", "--p", "2", "x^3+1", "x", "--at", "t^2+t+1"]
    )
    assert rc == 0
    assert out == (
        "fiber over (t^2+t+1=0):\n"
        "  (x^6+x^4+x^2+x+1=0) | e=1 f=3 d=0\n"
    )


def test_analyze_at_ramified_place(capsys):
    rc, out, _ = run(capsys, ["analyze", "--p", "2", "x^3", "--at", "t"])
    assert rc == 0
    assert "(x=0) | e=3 f=1 d=2" in out


def test_pseudotame_witness_when_partner_exists(capsys):
    rc, out, _ = run(
        capsys, ["pseudotame", "--p", "2", "w^2+w^5", "--at", "w"]
    )
    assert rc == 0
    assert "completion z: w" in out
    assert "x+z^2 tame here: yes" in out


def test_pseudotame_no_partner_leaves_witness_null(capsys):
    rc, out, _ = run(
        capsys,
        ["pseudotame", "--p", "2", "w^2/(w+1)", "--at", "w", "--format", "json"],
    )
    assert rc == 0
    assert json.loads(out)["witness"] is None


def test_pseudotame_budget_too_small(capsys):
    rc, out, _ = run(
        capsys,
        ["pseudotame", "--p", "2", "w^4+w^6+w^7", "--at", "w", "--budget", "1"],
    )
    assert rc == 0
    assert "completion unavailable:" in out


def test_pseudotame_sweep_lists_critical_places(capsys):
    rc, out, _ = run(capsys, ["pseudotame", "--p", "2", "w^2+w^5"])
    assert rc == 0
    assert "critical places: (w=0), (w=inf)" in out
    assert "pseudotame everywhere: no" in out


def test_laurent_text_shape(capsys):
    rc, out, _ = run(
        capsys, ["laurent", "--p", "2", "1/(x^2+x)", "--at", "x", "--prec", "6"]
    )
    assert rc == 0
    assert out == (
        "expansion of 1/(x^2+x) at (x=0):\n"
        "u^-1+1+u+u^2+u^3+u^4 + O(u^5)\n"
        "u = x\n"
    )


def test_factor_with_unit(capsys):
    rc, out, _ = run(capsys, ["factor", "--p", "5", "2*T^3+2*T"])
    assert rc == 0
    assert out == "2*T^3+2*T = 2 * (T) * (T+2) * (T+3)\n"


def test_field_text(capsys):
    rc, out, _ = run(capsys, ["field", "--p", "2", "--m", "4"])
    assert rc == 0
    assert "modulus: T^4+T+1" in out
    assert "multiplicative generator: z" in out


def test_analyze_unramified_cover_wording(capsys):
    rc, out, _ = run(capsys, ["analyze", "--p", "2", "x+1"])
    assert rc == 0
    assert "unramified cover" in out
