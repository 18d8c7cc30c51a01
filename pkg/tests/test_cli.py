import json
from pathlib import Path

import pytest

from gpsrb.cli import main, parse_decomposition, parse_monoid_spec, parse_window_spec
from gpsrb import FiniteTable, IntLine, NatLine, VectorLex, VectorProduct

TABLES = Path(__file__).resolve().parent.parent / "tables"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mul_basic(capsys):
    code, out, _ = run(capsys, "mul", "3*e^-2 + 5", "e^1")
    assert code == 0
    assert out.strip() == "3*e^-1 + 5*e^1"


def test_add_json(capsys):
    code, out, _ = run(capsys, "add", "e^1", "e^1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [{"exp": "1", "coeff": "2"}]


def test_mul_laurent_mode(capsys):
    code, out, _ = run(capsys, "mul", "e^-1 + O(e^3)", "e^2", "--laurent")
    assert code == 0
    assert out.strip() == "e^1 + O(e^5)"


def test_laurent_mode_needs_int_line(capsys):
    code, _, err = run(capsys, "mul", "e^1", "e^1", "--laurent", "--monoid", "N")
    assert code == 2
    assert "error" in err


def test_rb_check_negatives_passes(capsys):
    code, out, _ = run(capsys, "rb-check", "--monoid", "Z", "--decomp", "negatives", "--window", "-6..6")
    assert code == 0
    assert "pass-on-window" in out


def test_rb_check_odds_fails_with_witness(capsys):
    code, out, _ = run(capsys, "rb-check", "--monoid", "Z", "--decomp", "odds", "--window", "-6..6")
    assert code == 1
    assert "fail" in out and "witness" in out


def test_rb_check_explicit_pair(capsys):
    code, out, _ = run(
        capsys, "rb-check", "--decomp", "odds", "--f", "e^1", "--g", "e^1"
    )
    assert code == 1
    assert "defect: e^2" in out
    code2, out2, _ = run(
        capsys, "rb-check", "--decomp", "negatives", "--f", "e^-2 + e^1", "--g", "e^-1 + e^3"
    )
    assert code2 == 0
    assert "defect: 0" in out2


def test_rb_check_json(capsys):
    code, out, _ = run(
        capsys, "rb-check", "--decomp", "evens", "--window", "-4..4", "--json"
    )
    data = json.loads(out)
    assert data["kept_closed"]["verdict"] == "pass-on-window"
    assert data["defect_scan"]["verdict"] == "fail"
    assert code == 1


def test_cutoff_scan_marks_zero_and_one(capsys):
    code, out, _ = run(capsys, "cutoff-scan", "--monoid", "Z", "--w-range", "-3..4", "--window", "-8..8")
    assert code == 1  # counterexamples exist for most thresholds
    assert "identity holds on window for w in: {0, 1}" in out


def test_cutoff_scan_all_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "cutoff-scan", "--monoid", "Z", "--w-range", "0..1", "--window", "-6..6")
    assert code == 0
    assert "pass-on-window" in out


def test_cutoff_scan_json(capsys):
    code, out, _ = run(
        capsys, "cutoff-scan", "--monoid", "Z", "--w-range", "-1..2", "--window", "-5..5", "--json"
    )
    data = json.loads(out)
    verdicts = {r["w"]: r["verdict"] for r in data["results"]}
    assert verdicts == {"-1": "fail", "0": "pass-on-window", "1": "pass-on-window", "2": "fail"}
    assert code == 1


def test_theorem_verify_table(capsys):
    code, out, _ = run(capsys, "theorem-verify", "--table", str(TABLES / "z3.json"))
    assert code == 0
    assert "mismatches: 0" in out


def test_theorem_verify_json(capsys):
    code, out, _ = run(capsys, "theorem-verify", "--table", str(TABLES / "idem2.json"), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["rb_count"] == 4 and data["mismatches"] == []


def test_theorem_verify_too_large(capsys, tmp_path):
    from gpsrb import cyclic_table

    t = cyclic_table(4)
    p = tmp_path / "z4.json"
    p.write_text(
        json.dumps({"n": 4, "neutral": 0, "add": [list(r) for r in t.add_table]})
    )
    code, _, err = run(capsys, "theorem-verify", "--table", str(p), "--max-size", "3")
    assert code == 2
    assert "error" in err


def test_theorem_verify_missing_file(capsys):
    code, _, err = run(capsys, "theorem-verify", "--table", "no-such-file.json")
    assert code == 2
    assert "error" in err


def test_laurent_demo_seeded(capsys, monkeypatch):
    monkeypatch.setenv("GPS_RB_SEED", "123")
    code, out1, _ = run(capsys, "laurent-demo", "--count", "2")
    assert code == 0
    assert "seed: 123" in out1
    assert "all defects zero: yes" in out1
    code, out2, _ = run(capsys, "laurent-demo", "--count", "2")
    assert out1 == out2  # same seed, same run
    monkeypatch.setenv("GPS_RB_SEED", "124")
    code, out3, _ = run(capsys, "laurent-demo", "--count", "2")
    assert code == 0 and out3 != out1


def test_laurent_demo_json(capsys, monkeypatch):
    monkeypatch.delenv("GPS_RB_SEED", raising=False)
    code, out, _ = run(capsys, "laurent-demo", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["seed"] == 0
    assert data["all_defects_zero"] is True
    assert len(data["pairs"]) == 3
    for pair in data["pairs"]:
        assert pair["defect"]["coeffs"] == []


def test_bad_inputs_exit_two(capsys):
    assert run(capsys, "mul", "e^", "e^1")[0] == 2
    assert run(capsys, "rb-check", "--decomp", "nonsense")[0] == 2
    assert run(capsys, "rb-check", "--decomp", "odds", "--monoid", "Z^2:product")[0] == 2
    assert run(capsys, "cutoff-scan", "--w-range", "5..1")[0] == 2
    assert run(capsys, "mul", "e^1", "e^1", "--monoid", "Z^0:lex")[0] == 2
    assert run(capsys, "mul", "e^1", "e^1", "--ring", "Z/1")[0] == 2
    assert run(capsys, "rb-check", "--decomp", "odds", "--f", "e^1")[0] == 2  # --f without --g


def test_monoid_spec_parsing():
    assert isinstance(parse_monoid_spec("Z"), IntLine)
    assert isinstance(parse_monoid_spec("N"), NatLine)
    assert parse_monoid_spec("Z^3:product") == VectorProduct(3)
    assert parse_monoid_spec("Z^2:lex") == VectorLex(2)
    assert isinstance(parse_monoid_spec(f"table:{TABLES / 'z4.json'}"), FiniteTable)
    for bad in ("q", "Z^x:lex", "Z^2", "Z^2:weird", "table:/does/not/exist.json"):
        with pytest.raises(Exception):
            parse_monoid_spec(bad)


def test_window_spec_parsing():
    assert parse_window_spec(IntLine(), "-2..2") == [-2, -1, 0, 1, 2]
    assert parse_window_spec(NatLine(), "-2..2") == [0, 1, 2]  # clamped at zero
    assert len(parse_window_spec(VectorProduct(2), "-1..1")) == 9
    table = parse_monoid_spec(f"table:{TABLES / 'z4.json'}")
    assert parse_window_spec(table, None) == [0, 1, 2, 3]
    assert parse_window_spec(table, "1..9") == [1, 2, 3]


def test_decomposition_vocab():
    M = IntLine()
    below = parse_decomposition(M, "below(2)")
    assert below.kept([0, 1, 2, 3]) == [0, 1]
    notbelow = parse_decomposition(M, "notbelow(2)")
    assert notbelow.kept([0, 1, 2, 3]) == [2, 3]
    V = VectorProduct(2)
    vb = parse_decomposition(V, "below((0,0))")
    assert vb.member((-1, -1)) and not vb.member((1, -5))
    pos = parse_decomposition(M, "positives")
    assert pos.kept([-1, 0, 1]) == [1]
    nonneg = parse_decomposition(M, "nonnegatives")
    assert nonneg.kept([-1, 0, 1]) == [0, 1]
    # incomparable elements count as "non-negative" under the literal reading
    assert parse_decomposition(V, "nonnegatives").member((1, -1))
    table = parse_monoid_spec(f"table:{TABLES / 'idem2.json'}")
    m = parse_decomposition(table, "mask:0x2")
    assert m.kept([0, 1]) == [1]
    with pytest.raises(Exception):
        parse_decomposition(V, "odds")


def test_decomposition_from_file(capsys, tmp_path):
    p = tmp_path / "split.json"
    p.write_text(json.dumps({"kept": [0, 2]}))
    table = parse_monoid_spec(f"table:{TABLES / 'z4.json'}")
    split = parse_decomposition(table, str(p))
    assert split.kept(range(4)) == [0, 2]
    code, out, _ = run(
        capsys,
        "rb-check",
        "--monoid",
        f"table:{TABLES / 'z4.json'}",
        "--decomp",
        str(p),
    )
    # {0,2} is a subgroup of Z/4 but its complement {1,3} is not closed
    assert code == 1
