import json
import subprocess
import sys

import pytest

from supersat.cli import main
from supersat.core import binom, parse_family, serialize_family, build_b_family
from supersat.counting import count_k_chains
from supersat.bounds import supersat_bound


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_bound_payload(capsys):
    payload = run_json(capsys, "bound", "--n", "4", "--k", "2", "--x", "1")
    assert payload == {"n": 4, "k": 2, "x": 1, "sigma": 6, "bound": 3, "tight_x_max": 4}


def test_sigma_payload(capsys):
    assert run_json(capsys, "sigma", "--n", "4", "--k", "2") == {"n": 4, "k": 2, "sigma": 10}


def test_count_antichain(tmp_path, capsys):
    path = tmp_path / "antichain.fam"
    path.write_text(serialize_family(build_b_family(4, 1)), encoding="utf-8")
    assert run_json(capsys, "count", "--k", "2", "--family", str(path)) == {"count": 0}


def test_construct_pipes_into_count(tmp_path, capsys):
    from supersat.bounds import tight_x_max

    for n in range(2, 11):
        for k in range(2, min(5, n + 2)):
            for x in {1, tight_x_max(n, k)}:
                code, out, err = run_cli(
                    capsys, "construct", "--n", str(n), "--k", str(k), "--x", str(x)
                )
                assert code == 0
                family = parse_family(out)
                assert count_k_chains(family, k) == supersat_bound(n, k, x)


def test_construct_to_file(tmp_path, capsys):
    out_path = tmp_path / "fam.txt"
    payload = run_json(
        capsys, "construct", "--n", "4", "--k", "2", "--x", "1", "--out", str(out_path)
    )
    assert payload["size"] == 7 and payload["out"] == str(out_path)
    family = parse_family(out_path.read_text(encoding="utf-8"))
    assert family.size() == 7


def test_construct_rejects_oversized_x(capsys):
    code, out, err = run_cli(capsys, "construct", "--n", "4", "--k", "2", "--x", "5")
    assert code == 3
    assert "x must be in [0, 4]" in err


def test_count_missing_file(capsys):
    code, _, err = run_cli(capsys, "count", "--k", "2", "--family", "/nonexistent.fam")
    assert code == 4
    assert err


def test_count_malformed_family(tmp_path, capsys):
    path = tmp_path / "bad.fam"
    path.write_text("n=3\n4\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "count", "--k", "2", "--family", str(path))
    assert code == 5
    assert "element 4" in err


def test_unknown_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2


def test_scd_dump_has_one_line_per_chain(capsys):
    code, out, _ = run_cli(capsys, "scd", "--n", "4", "--method", "bracketing")
    assert code == 0
    lines = [line for line in out.splitlines() if line]
    assert len(lines) == binom(4, 2)
    assert any(line.startswith("- -> ") for line in lines)


def test_scd_validate_report(capsys):
    payload = run_json(capsys, "scd", "--n", "6", "--method", "inductive", "--validate")
    assert payload["valid"] is True
    assert payload["chains"] == binom(6, 3)
    assert all(payload["checks"].values())


def test_scd_permuted_still_valid(capsys):
    payload = run_json(
        capsys, "scd", "--n", "4", "--method", "inductive", "--permute", "2,3,4,1", "--validate"
    )
    assert payload["valid"] is True


def test_scd_bad_permutation(capsys):
    code, _, err = run_cli(capsys, "scd", "--n", "3", "--permute", "1,1,2")
    assert code == 3
    assert "bijection" in err


def test_nperm_payload(capsys):
    payload = run_json(capsys, "nperm", "--n", "4", "--levels", "1,2", "--enumerate")
    assert payload == {
        "n": 4,
        "levels": [1, 2],
        "factorial_form": 8,
        "ratio_form": 8,
        "agree": True,
        "enumerated": 8,
    }


def test_nperm_rejects_bad_levels(capsys):
    code, _, err = run_cli(capsys, "nperm", "--n", "4", "--levels", "2,2")
    assert code == 3


def test_oracle_exact_payload(capsys):
    payload = run_json(capsys, "oracle", "--n", "4", "--k", "2", "--size", "7")
    assert payload["min_count"] == 3
    assert payload["exact"] is True
    witness = parse_family(payload["witness"])
    assert witness.size() == 7
    assert count_k_chains(witness, 2) == 3


def test_oracle_heuristic_payload(capsys):
    payload = run_json(
        capsys,
        *"oracle --n 5 --k 2 --size 11 --heuristic --seed 1 --iters 2000".split(),
    )
    assert payload["exact"] is False
    assert payload["min_count"] == supersat_bound(5, 2, 1)


def test_oracle_exact_rejects_n5(capsys):
    code, _, err = run_cli(capsys, "oracle", "--n", "5", "--k", "2", "--size", "3")
    assert code == 3


def test_kleitman_table(capsys):
    code, out, _ = run_cli(capsys, "kleitman", "--n", "4", "--k", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["size", "min_count", "exact", "construction", "equal"]
    assert len(lines) == 18
    assert all(line.split("\t")[4] == "true" for line in lines[1:])


def test_kleitman_json(capsys):
    payload = run_json(capsys, "kleitman", "--n", "3", "--k", "2", "--json")
    assert payload["n"] == 3
    assert len(payload["rows"]) == 9


def test_verify_suites_pass(capsys):
    for suite in ("scd", "counting", "theorem"):
        payload = run_json(capsys, "verify", "--suite", suite)
        assert payload["ok"] is True, payload


def test_determinism_of_repeated_invocations(capsys):
    first = run_cli(capsys, "construct", "--n", "6", "--k", "2", "--x", "3")
    second = run_cli(capsys, "construct", "--n", "6", "--k", "2", "--x", "3")
    assert first == second
    a = run_cli(capsys, *"oracle --n 5 --k 2 --size 13 --heuristic --seed 7 --iters 300".split())
    b = run_cli(capsys, *"oracle --n 5 --k 2 --size 13 --heuristic --seed 7 --iters 300".split())
    assert a == b


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "supersat.cli", "bound", "--n", "5", "--k", "3", "--x", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["bound"] == 2 * supersat_bound(5, 3, 1)


def test_big_integers_serialized_as_strings(capsys):
    payload = run_json(capsys, "bound", "--n", "20", "--k", "21", "--x", "10")
    # 10 * 20! exceeds the 53-bit float-safe range
    assert payload["bound"] == str(10 * supersat_bound(20, 21, 1))
