"""Command-line interface: subcommand behavior, streams, exit codes."""

import pytest

from monocnf import parse
from monocnf.cli import run

SAT_MIXED = "p cnf 3 1\n1 -2 3 0\n"
UNSAT_TINY = "p cnf 1 2\n1 0\n-1 0\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_reduce_then_validate_holds_for_every_target(tmp_path, capsys):
    source = _write(tmp_path, "in.cnf", SAT_MIXED)
    for target in ("mono23sat4", "mono3sat5", "mono3sat4"):
        out = str(tmp_path / f"{target}.cnf")
        assert run(["reduce", "--target", target, source, out]) == 0
        assert run(["validate", "--profile", target, out]) == 0
    capsys.readouterr()


def test_validate_reports_violations_and_exits_1(tmp_path, capsys):
    source = _write(tmp_path, "in.cnf", SAT_MIXED)
    assert run(["validate", "--profile", "mono3sat4", source]) == 1
    out = capsys.readouterr().out
    assert "monotonicity violation" in out


def test_reduce_output_is_byte_stable(tmp_path):
    source = _write(tmp_path, "in.cnf", SAT_MIXED)
    first = str(tmp_path / "a.cnf")
    second = str(tmp_path / "b.cnf")
    assert run(["reduce", "--target", "mono3sat4", "--trace", source, first]) == 0
    assert run(["reduce", "--target", "mono3sat4", "--trace", source, second]) == 0
    assert (tmp_path / "a.cnf").read_bytes() == (tmp_path / "b.cnf").read_bytes()


def test_reduce_trace_comments_cover_every_clause(tmp_path):
    source = _write(tmp_path, "in.cnf", SAT_MIXED)
    out = str(tmp_path / "out.cnf")
    assert run(["reduce", "--target", "mono3sat5", "--trace", source, out]) == 0
    doc = parse((tmp_path / "out.cnf").read_text())
    assert len(doc.comments) == len(doc.formula.clauses)
    assert all(comment.startswith("trace ") for comment in doc.comments)


def test_reduce_without_trace_emits_no_comments(tmp_path):
    source = _write(tmp_path, "in.cnf", SAT_MIXED)
    out = str(tmp_path / "out.cnf")
    assert run(["reduce", "--target", "mono23sat4", source, out]) == 0
    assert parse((tmp_path / "out.cnf").read_text()).comments == ()


def test_reduce_compact_flag_only_applies_to_mono3sat5(tmp_path, capsys):
    source = _write(tmp_path, "in.cnf", SAT_MIXED)
    out = str(tmp_path / "out.cnf")
    assert run(["reduce", "--target", "mono3sat4", "--compact-r3", source, out]) == 2
    assert "compact-r3" in capsys.readouterr().err
    assert run(["reduce", "--target", "mono3sat5", "--compact-r3", source, out]) == 0
    assert len(parse((tmp_path / "out.cnf").read_text()).formula.clauses) == 18


def test_reduce_rejects_out_of_class_input(tmp_path, capsys):
    source = _write(tmp_path, "bad.cnf", "p cnf 2 1\n1 -2 0\n")
    out = str(tmp_path / "out.cnf")
    assert run(["reduce", "--target", "mono3sat5", source, out]) == 3
    assert "error" in capsys.readouterr().err


def test_solve_prints_sat_with_witness(tmp_path, capsys):
    source = _write(tmp_path, "in.cnf", SAT_MIXED)
    assert run(["solve", source]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "SAT"
    assert lines[1].startswith("v ") and lines[1].endswith(" 0")
    literals = [int(tok) for tok in lines[1].split()[1:-1]]
    assert sorted(abs(l) for l in literals) == [1, 2, 3]


def test_solve_prints_unsat(tmp_path, capsys):
    source = _write(tmp_path, "unsat.cnf", UNSAT_TINY)
    assert run(["solve", source]) == 0
    assert capsys.readouterr().out == "UNSAT\n"


def test_solve_methods_agree(tmp_path, capsys):
    source = _write(tmp_path, "in.cnf", SAT_MIXED)
    assert run(["solve", "--method", "exhaustive", source]) == 0
    exhaustive = capsys.readouterr().out
    assert run(["solve", "--method", "dpll", source]) == 0
    dpll = capsys.readouterr().out
    assert exhaustive.splitlines()[0] == dpll.splitlines()[0] == "SAT"


def test_verify_gadget_both_signs(capsys):
    assert run(["verify-gadget"]) == 0
    out = capsys.readouterr().out
    assert "sign: true" in out
    assert "forcing_holds: true" in out
    assert "model_count: 45927" in out

    assert run(["verify-gadget", "--sign", "false"]) == 0
    out = capsys.readouterr().out
    assert "sign: false" in out
    assert "forced_false: 3" in out


def test_gen_writes_valid_instance(tmp_path, capsys):
    out = str(tmp_path / "gen.cnf")
    assert run(["gen", "--vars", "6", "--clauses", "8", "--seed", "42", out]) == 0
    assert run(["validate", "--profile", "3sat4", out]) == 0
    doc = parse((tmp_path / "gen.cnf").read_text())
    assert doc.declared_vars == 6
    assert doc.declared_clauses == 8
    capsys.readouterr()


def test_gen_is_deterministic(tmp_path):
    a = str(tmp_path / "a.cnf")
    b = str(tmp_path / "b.cnf")
    assert run(["gen", "--vars", "9", "--clauses", "12", "--seed", "7", a]) == 0
    assert run(["gen", "--vars", "9", "--clauses", "12", "--seed", "7", b]) == 0
    assert (tmp_path / "a.cnf").read_bytes() == (tmp_path / "b.cnf").read_bytes()


def test_gen_infeasible_budget_is_usage_error(tmp_path, capsys):
    out = str(tmp_path / "gen.cnf")
    assert run(["gen", "--vars", "3", "--clauses", "5", "--seed", "1", out]) == 2
    assert "occurrences" in capsys.readouterr().err


def test_check_equisat_verdicts(tmp_path, capsys):
    original = _write(tmp_path, "orig.cnf", SAT_MIXED)
    reduced = str(tmp_path / "red.cnf")
    assert run(["reduce", "--target", "mono3sat4", original, reduced]) == 0
    assert run(["check-equisat", original, reduced]) == 0
    assert "equisatisfiable" in capsys.readouterr().out

    unsat = _write(tmp_path, "unsat.cnf", UNSAT_TINY)
    assert run(["check-equisat", original, unsat]) == 1
    assert "not equisatisfiable" in capsys.readouterr().out


def test_blowup_emits_csv(capsys):
    assert run(["blowup", "--seeds", "2", "--vars", "6", "--clauses", "8"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "seed,input_vars,input_clauses,mixed,pos2,neg2,pipeline,out_vars,out_clauses,millis"
    assert len(lines) == 1 + 2 * 4  # four pipelines per seed
    assert lines[1].startswith("0,6,8,")
    assert lines[5].startswith("1,6,8,")


def test_missing_input_file_is_input_error(tmp_path, capsys):
    assert run(["solve", str(tmp_path / "nope.cnf")]) == 3
    assert "error" in capsys.readouterr().err


def test_malformed_dimacs_is_input_error(tmp_path, capsys):
    bad = _write(tmp_path, "bad.cnf", "p cnf 1 1\n1\n")
    assert run(["solve", bad]) == 3
    assert "not terminated" in capsys.readouterr().err


def test_usage_errors_exit_2(capsys):
    assert run([]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["reduce", "--target", "nonsense", "a", "b"]) == 2
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert run(["--help"]) == 0
    assert "reduce" in capsys.readouterr().out
