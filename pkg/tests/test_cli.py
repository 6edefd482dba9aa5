"""End-to-end command line behavior: outputs, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

import hyperzeta.verify
from hyperzeta.cli import main
from hyperzeta.qcomb import gauss_binom_at


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- qbinom -----------------------------------------------------------------


def test_qbinom_at_root(capsys):
    code, out, _ = run_cli(capsys, "qbinom", "--m", "7", "--t", "5", "--ell", "5")
    assert code == 0 and out == "1\n"


def test_qbinom_symbolic(capsys):
    code, out, _ = run_cli(capsys, "qbinom", "--m", "2", "--t", "1", "--symbolic")
    assert code == 0 and out == "q + q^-1\n"
    code, out, _ = run_cli(capsys, "qbinom", "--m", "-2", "--t", "3", "--symbolic")
    assert code == 0 and out == "-(q^3 + q + q^-1 + q^-3)\n"


def test_qbinom_d_power(capsys):
    code, out, _ = run_cli(
        capsys, "qbinom", "--m", "6", "--t", "2", "--ell", "7", "--d", "2"
    )
    assert code == 0 and out.strip() == str(gauss_binom_at(6, 2, 7, 2))


def test_qbinom_usage_errors(capsys):
    assert run_cli(capsys, "qbinom", "--m", "3", "--t", "1")[0] == 2
    assert run_cli(capsys, "qbinom", "--m", "3", "--t", "-1", "--ell", "5")[0] == 2
    assert (
        run_cli(capsys, "qbinom", "--m", "3", "--t", "1", "--ell", "9", "--d", "3")[0]
        == 2
    )


# -- weight -----------------------------------------------------------------


def test_weight_add_with_carry(capsys):
    code, out, _ = run_cli(capsys, "weight", "add", "(3)(0)", "(4)(0)", "--ell", "5")
    assert code == 0
    assert json.loads(out) == {"lam0": [2], "lam1": [1]}


def test_weight_embed_negative(capsys):
    code, out, _ = run_cli(capsys, "weight", "embed", "-7", "--ell", "5")
    assert code == 0
    assert json.loads(out) == {"lam0": [3], "lam1": [-2]}


def test_weight_neg_identity(capsys):
    code, out, _ = run_cli(capsys, "weight", "neg", "(0)(0)", "--ell", "5")
    assert code == 0
    assert json.loads(out) == {"lam0": [0], "lam1": [0]}


def test_weight_leq(capsys):
    assert run_cli(capsys, "weight", "leq", "(0)(0)", "(2)(0)", "--ell", "5")[1:2] == (
        "true\n",
    )
    assert run_cli(capsys, "weight", "leq", "(2)(0)", "(0)(0)", "--ell", "5")[1:2] == (
        "false\n",
    )


def test_weight_rank_two(capsys):
    code, out, _ = run_cli(
        capsys,
        "weight",
        "add",
        "(1,2)(0,0)",
        "(2,1)(0,0)",
        "--type",
        "B",
        "--rank",
        "2",
        "--ell",
        "3",
    )
    assert code == 0
    assert json.loads(out) == {"lam0": [0, 0], "lam1": [1, 1]}


def test_weight_g2_constraint(capsys):
    code, _, err = run_cli(
        capsys, "weight", "embed", "1", "1", "--type", "G", "--rank", "2", "--ell", "9"
    )
    assert code == 2 and "3" in err


def test_weight_operand_errors(capsys):
    assert run_cli(capsys, "weight", "add", "(3)(0)", "--ell", "5")[0] == 2
    assert run_cli(capsys, "weight", "neg", "(3)(", "--ell", "5")[0] == 2
    assert run_cli(capsys, "weight", "embed", "1", "2", "--ell", "5")[0] == 2


# -- nf ---------------------------------------------------------------------


def test_nf_k_to_the_ell_pretty(capsys):
    code, out, _ = run_cli(capsys, "nf", "K^5", "--ell", "5", "--pretty")
    assert code == 0 and out == "1\n"


def test_nf_ef_straightening_json(capsys):
    code, out, _ = run_cli(capsys, "nf", "E F", "--ell", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["ell"] == 5
    keys = {(t["b"], t["c"], t["d"], t["a"]) for t in doc["terms"]}
    assert (1, 0, 0, 1) in keys
    assert all(set(t) == {"b", "c", "d", "a", "coeff"} for t in doc["terms"])


def test_nf_parse_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "nf", "E^(", "--ell", "5")
    assert code == 2 and "offset 3" in err


def test_nf_cap_exit_1(capsys):
    code, _, err = run_cli(
        capsys, "nf", "(E + F + K)^9", "--ell", "5", "--max-terms", "20"
    )
    assert code == 1 and "20" in err


def test_nf_even_order_exit_2(capsys):
    assert run_cli(capsys, "nf", "E", "--ell", "4")[0] == 2


# -- module -----------------------------------------------------------------


def test_module_weights_example(capsys):
    code, out, _ = run_cli(capsys, "module", "--m0", "2", "--ell", "5", "--action", "weights")
    assert code == 0
    assert json.loads(out) == ["((2),(0))", "((0),(0))", "((3),(-1))"]


def test_module_primitive_example(capsys):
    code, out, _ = run_cli(capsys, "module", "--m", "7", "--ell", "3", "--action", "primitive")
    assert code == 0
    lines = json.loads(out)
    assert len(lines) == 1
    assert lines[0]["weight"] == "((1),(2))"
    assert len(lines[0]["vectors"]) == 1


def test_module_trivial_matrices(capsys):
    code, out, _ = run_cli(capsys, "module", "--m0", "0", "--ell", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 1 and doc["weights"] == ["((0),(0))"]
    assert doc["E"] == [[["0", "0", "0", "0"]]]
    assert doc["K"] == [[["1", "0", "0", "0"]]]


def test_module_matrix_entries_are_coeff_vectors(capsys):
    code, out, _ = run_cli(capsys, "module", "--m0", "1", "--ell", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["K"][0][0] == ["0", "1"]
    assert doc["F"][1][0] == ["1", "0"]


def test_module_flag_validation(capsys):
    assert run_cli(capsys, "module", "--m0", "7", "--ell", "5")[0] == 2
    assert run_cli(capsys, "module", "--m", "-1", "--ell", "5")[0] == 2
    with pytest.raises(SystemExit) as info:
        run_cli(capsys, "module", "--m0", "1", "--m", "3", "--ell", "5")
    assert info.value.code == 2


# -- primitive --------------------------------------------------------------


def test_primitive_ell3_pretty(capsys):
    code, out, _ = run_cli(capsys, "primitive", "--ell", "3", "--pretty")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a_0 = 1/3"
    assert lines[-1] == "residual = 0"


def test_primitive_ell5_json(capsys):
    code, out, _ = run_cli(capsys, "primitive", "--ell", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["a"][0] == ["2/5", "0", "0", "0"]
    assert doc["residual"] == "0"


# -- verify -----------------------------------------------------------------


def test_verify_suite_passes_and_sorted(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "uzero", "--ell", "3", "--seed", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True and doc["counts"]["failed"] == 0
    order = [(c["suite"], c["id"]) for c in doc["checks"]]
    assert order == sorted(order)


def test_verify_byte_stable(capsys):
    _, first, _ = run_cli(capsys, "verify", "--suite", "weights", "--ell", "3,5", "--seed", "9")
    _, second, _ = run_cli(capsys, "verify", "--suite", "weights", "--ell", "3,5", "--seed", "9")
    assert first == second


def test_verify_env_seed_fallback(capsys, monkeypatch):
    monkeypatch.setenv("HYPERZETA_SEED", "123")
    _, out, _ = run_cli(capsys, "verify", "--suite", "qcomb", "--ell", "3")
    assert json.loads(out)["seed"] == 123
    monkeypatch.setenv("HYPERZETA_SEED", "x")
    assert run_cli(capsys, "verify", "--suite", "qcomb", "--ell", "3")[0] == 2


def test_verify_failing_check_exit_1(capsys, monkeypatch):
    def broken(ells, seed):
        return [
            {"suite": "qcomb", "id": "rigged", "ok": False, "count": 1, "detail": "x"}
        ]

    monkeypatch.setitem(hyperzeta.verify.SUITES, "qcomb", broken)
    code, out, _ = run_cli(capsys, "verify", "--suite", "qcomb", "--ell", "3")
    assert code == 1
    assert json.loads(out)["counts"]["failed"] == 1


def test_verify_usage_errors(capsys):
    assert run_cli(capsys, "verify", "--ell", "4")[0] == 2
    assert run_cli(capsys, "verify", "--ell", "3;5")[0] == 2
    with pytest.raises(SystemExit) as info:
        run_cli(capsys, "verify", "--suite", "bogus", "--ell", "3")
    assert info.value.code == 2


def test_verify_pretty_lines(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "qcomb", "--ell", "3", "--seed", "0", "--pretty"
    )
    assert code == 0
    assert "[qcomb] lucas: PASS" in out
    assert "checks passed" in out.splitlines()[-1]


def test_cli_subprocess_end_to_end():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperzeta.cli", "verify", "--suite", "pbw", "--ell", "3", "--seed", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["ok"] is True
