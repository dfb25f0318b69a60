"""End-to-end command-line checks with frozen outputs."""

import json

import pytest

from bicomm.cli import main

from conftest import QQ


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normalize_and_mul(capsys):
    code, out, _ = run(capsys, "normalize", "(x1*x2)")
    assert (code, out) == (0, "y1*z2\n")
    code, out, _ = run(capsys, "normalize", "x1*(x1*x2) - (x1*x1)*x2 + 3*x2")
    assert (code, out) == (0, "y1^2*z2 - y1*z1*z2 + 3*x2\n")
    code, out, _ = run(capsys, "mul", "x1 + x2", "x1")
    assert (code, out) == (0, "y2*z1 + y1*z1\n")
    code, out, _ = run(capsys, "mul", "x1", "x1", "--field", "fp:2")
    assert (code, out) == (0, "y1*z1\n")


def test_dimension_commands_and_output_modes(capsys):
    code, out, _ = run(capsys, "hilbert", "-d", "2", "-n", "3")
    assert (code, out) == (0, "12\n")
    code, out, _ = run(capsys, "codim", "-n", "4")
    assert (code, out) == (0, "14\n")
    code, out, _ = run(capsys, "codim", "-n", "4", "--output", "tsv")
    assert (code, out) == (0, "dimension\t14\n")
    code, out, _ = run(capsys, "codim", "-n", "4", "--output", "json")
    assert code == 0
    assert json.loads(out) == {"dimension": 14}


def test_order_comparisons(capsys):
    assert run(capsys, "weight-cmp", "y1*z1", "y1*z2")[:2] == (0, "<\n")
    assert run(capsys, "weight-cmp", "y2*z1", "y1*z2")[:2] == (0, ">\n")
    assert run(capsys, "weight-cmp", "y1*z1", "y1*z1")[:2] == (0, "=\n")
    assert run(capsys, "higman-cmp", "y1*z1", "y1^2*z1")[:2] == (0, "LEQ\n")
    assert run(capsys, "higman-cmp", "y1^2*z1", "y1*z1")[:2] == (0, "GEQ\n")
    assert run(capsys, "higman-cmp", "y1*z1", "y1*z1")[:2] == (0, "EQ\n")
    assert run(capsys, "higman-cmp", "y1*z1", "y2*z1")[:2] == (0, "INCOMPARABLE\n")


def test_ideal_member_with_certificates(tmp_path, capsys):
    gens = tmp_path / "gens.txt"
    gens.write_text("# generators\n(x1*x1)\n")
    code, out, _ = run(capsys, "ideal-member", "--gens", str(gens), "--elem", "x1*(x1*x1)", "--verbose")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "MEMBER"
    assert lines[1].startswith("cofactor: b")
    code, out, _ = run(capsys, "ideal-member", "--gens", str(gens), "--elem", "(x2*x2)")
    assert (code, out) == (1, "NOT-MEMBER\n")
    code, out, _ = run(
        capsys, "ideal-member", "--gens", str(gens), "--elem", "x1*(x1*x1)", "--mode", "left"
    )
    assert (code, out) == (0, "MEMBER\n")
    code, out, _ = run(
        capsys, "ideal-member", "--gens", str(gens), "--elem", "x1*(x1*x1)", "--mode", "right"
    )
    assert (code, out) == (1, "NOT-MEMBER\n")


def test_chain_stabilize(tmp_path, capsys):
    chain = tmp_path / "chain.txt"
    chain.write_text("(x1*x1)\n\n(x1*x1)*x1\n\nx1*(x1*x1)\n")
    assert run(capsys, "chain-stabilize", "--chain", str(chain))[:2] == (0, "1\n")
    assert run(capsys, "chain-stabilize", "--chain", str(chain), "--mode", "left")[:2] == (0, "2\n")
    growing = tmp_path / "growing.txt"
    growing.write_text("(x1*x1)*x1\n\n(x1*x1)*(x1*x1)... ")
    growing.write_text("(x1*x1)\n\n(x2*x2)\n")
    code, out, _ = run(capsys, "chain-stabilize", "--chain", str(growing))
    assert (code, out) == (1, "NOT-STABLE-WITHIN-INPUT\n")


def test_tideal_member(tmp_path, capsys):
    gens = tmp_path / "sq.txt"
    gens.write_text("(x1*x1)\n")
    code, out, _ = run(
        capsys, "tideal-member", "--gens", str(gens), "--elem", "(x1*x2) + (x2*x1)",
        "--max-deg", "3", "--max-vars", "2",
    )
    assert (code, out) == (0, "MEMBER\n")
    code, out, _ = run(
        capsys, "tideal-member", "--gens", str(gens), "--elem", "(x1*x2) - (x2*x1)",
        "--max-deg", "3", "--max-vars", "2",
    )
    assert (code, out) == (1, "NOT-MEMBER\n")
    code, out, _ = run(
        capsys, "tideal-member", "--gens", str(gens), "--elem", "(x1*x2) - (x2*x1)",
        "--max-deg", "3", "--max-vars", "2", "--field", "fp:2",
    )
    assert (code, out) == (0, "MEMBER\n")


def test_specht_search(tmp_path, capsys):
    gens = tmp_path / "comm.txt"
    gens.write_text("(x1*x2) - (x2*x1)\n")
    code, out, _ = run(capsys, "specht-search", "--gens", str(gens), "--max-deg", "4", "--max-vars", "2")
    assert code == 0
    assert out == "basis 1: -y2*z1 + y1*z2\nantichain: y2*z1\nVERIFIED\n"
    code, out, _ = run(
        capsys, "specht-search", "--gens", str(gens), "--max-deg", "4", "--max-vars", "2",
        "--output", "json",
    )
    assert code == 0
    assert json.loads(out) == {
        "basis": "-y2*z1 + y1*z2",
        "antichain": "y2*z1",
        "verdict": "VERIFIED",
    }


def test_specht_search_collects_repeated_facts_into_arrays(tmp_path, capsys):
    gens = tmp_path / "two.txt"
    gens.write_text("(x1*x2) - (x2*x1)\n(x1*x1)\n")
    code, out, _ = run(
        capsys, "specht-search", "--gens", str(gens), "--max-deg", "4", "--max-vars", "2",
        "--output", "json",
    )
    obj = json.loads(out)
    assert isinstance(obj["basis"], list) and len(obj["basis"]) == 2
    assert code in (0, 1)


def test_witt_feeds_check_identity(tmp_path, capsys):
    code, out, _ = run(capsys, "witt", "-n", "3")
    assert code == 0
    algebra = tmp_path / "w3.json"
    algebra.write_text(out)
    code, out, _ = run(
        capsys, "check-identity", "--algebra", str(algebra),
        "--identity", "x1*(x2*x3) - x2*(x1*x3)",
    )
    assert (code, out) == (0, "Holds\n")
    code, out, _ = run(
        capsys, "check-identity", "--algebra", str(algebra),
        "--identity", "((x1*x2)*x3) - ((x1*x3)*x2)",
    )
    assert (code, out) == (1, "Fails\nwitness: (e1,e0,e1)\n")
    code, out, _ = run(
        capsys, "check-identity", "--algebra", str(algebra),
        "--identity", "((x1*x2)*x3) - ((x1*x3)*x2)", "--mode", "sample", "--seed", "5",
    )
    assert code == 1
    assert out.splitlines()[0] == "Fails"
    assert out.splitlines()[1].startswith("witness: ({0:")


def test_exit_codes_for_errors(tmp_path, capsys):
    assert run(capsys, "codim")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "normalize", "x1*x2*x3")[0] == 3
    assert run(capsys, "normalize", "(x1*x2)", "--field", "fp:4")[0] == 3
    assert run(capsys, "ideal-member", "--gens", str(tmp_path / "nope.txt"), "--elem", "x1")[0] == 3
    code, _, err = run(capsys, "normalize", "x1*x2*x3")
    assert "column" in err


def test_thread_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("BICOMM_THREADS", "abc")
    code, _, err = run(capsys, "codim", "-n", "3")
    assert code == 3
    assert "BICOMM_THREADS" in err
    monkeypatch.setenv("BICOMM_THREADS", "0")
    assert run(capsys, "codim", "-n", "3")[0] == 3
    monkeypatch.setenv("BICOMM_THREADS", "4")
    assert run(capsys, "codim", "-n", "3")[:2] == (0, "6\n")


def test_outputs_are_deterministic_across_runs_and_threads(tmp_path, monkeypatch, capsys):
    gens = tmp_path / "comm.txt"
    gens.write_text("(x1*x2) - (x2*x1)\n")
    commands = [
        ["normalize", "x1*(x1*x2) - (x1*x1)*x2"],
        ["specht-search", "--gens", str(gens), "--max-deg", "4", "--max-vars", "2"],
        ["ideal-member", "--gens", str(gens), "--elem", "(x1*x2)*x2 - (x2*x1)*x2", "--verbose"],
        ["witt", "-n", "4", "--field", "fp:3"],
    ]
    outputs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("BICOMM_THREADS", threads)
        for _ in range(5):
            snapshot = []
            for argv in commands:
                code, out, _ = run(capsys, *argv)
                snapshot.append((code, out))
            outputs.append(snapshot)
    assert all(snap == outputs[0] for snap in outputs[1:])


def test_generator_files_allow_comments_and_blanks(tmp_path, capsys):
    gens = tmp_path / "gens.txt"
    gens.write_text("# leading comment\n\n(x1*x1)  # inline\n\n")
    code, out, _ = run(capsys, "ideal-member", "--gens", str(gens), "--elem", "(x1*x1)")
    assert (code, out) == (0, "MEMBER\n")
