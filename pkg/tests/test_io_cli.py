import json

import pytest

from flagcodes.cli import main
from flagcodes.constructions import build_qodfc
from flagcodes.field import make_field
from flagcodes.flags import FlagCode, TypeVector
from flagcodes.io import IOFormatError, flag_code_from_json, flag_code_to_json, load_code, matrix_dump, write_json
from flagcodes.worked_examples import five_flags_n6


@pytest.mark.parametrize("q", [2, 3, 4])
def test_flag_code_round_trip(q):
    F = make_field(2, 2) if q == 4 else make_field(q)
    code = build_qodfc(F, TypeVector(5, (1, 2, 3)))
    back, warnings = flag_code_from_json(json.loads(json.dumps(flag_code_to_json(code))))
    assert warnings == []
    assert back.flags == code.flags and back.field == code.field


def test_non_rref_rows_warn(F2):
    data = flag_code_to_json(FlagCode.of(five_flags_n6(F2)[:2]))
    data["flags"][0][1] = [[1, 1, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
    code, warnings = flag_code_from_json(data)
    assert len(code) == 2 and any("re-reduced" in w for w in warnings)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(format="nope"),
        lambda d: d.update(flags=[]),
        lambda d: d["flags"][0].pop(),
        lambda d: d["flags"][0].__setitem__(0, [[1, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]]),
        lambda d: d["flags"][0].__setitem__(0, [[0, 0, 0, 0, 0, 1]]),
        lambda d: d.pop("field"),
    ],
)
def test_malformed_flag_code(F2, mutate):
    data = flag_code_to_json(FlagCode.of(five_flags_n6(F2)[:2]))
    mutate(data)
    with pytest.raises(IOFormatError):
        flag_code_from_json(data)


def test_matrix_dump(F2):
    text = matrix_dump(FlagCode.of(five_flags_n6(F2)[:1]))
    assert text.startswith("# dim 1\n100000\n")


def test_construct_then_analyze_same_summary(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["construct", "qodfc", "--q", "2", "--n", "5", "--type", "1,2,3,4", "--out", str(out)]) == 0
    built = capsys.readouterr().out
    assert main(["analyze", str(out)]) == 0
    analyzed = capsys.readouterr().out
    assert analyzed.startswith(built)
    assert "QODFC: true (disjoint/" in built


def test_construct_json_format(capsys):
    assert main(["construct", "c-ell", "--q", "3", "--n", "5", "--type", "1,2,3,4", "--ell", "2", "--format", "json"]) == 0
    s = json.loads(capsys.readouterr().out)
    assert s["size"] == 10 and s["distance"] == s["max_distance"] - 4


def test_construct_subspace_codes(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert main(["construct", "sunflower", "--q", "2", "--n", "5", "--k", "2", "--j", "1", "--out", str(out)]) == 0
    assert "sunflower center: <00001>" in capsys.readouterr().out
    code, _ = load_code(out)
    assert len(code) == 5
    assert main(["analyze", str(out)]) == 0


def test_analyze_singleton(tmp_path, capsys, F2):
    path = tmp_path / "one.json"
    write_json(path, flag_code_to_json(FlagCode.of(five_flags_n6(F2)[:1])))
    assert main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out
    assert "single flag" in out and "QODFC: undefined" in out


def test_analyze_table_patterns(tmp_path, capsys, F2):
    path = tmp_path / "c.json"
    write_json(path, flag_code_to_json(FlagCode.of(five_flags_n6(F2))))
    assert main(["analyze", str(path), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["certificates"]["dminus4"]["verdict"] is True


def test_bound_command(capsys):
    assert main(["bound", "--q", "2", "--n", "10", "--type", "2,4,6,8"]) == 0
    out = capsys.readouterr().out
    assert "value: 341" in out and "alternative reading: 4" in out


def test_enumerate_variety(capsys):
    assert main(["enumerate", "variety", "--q", "2", "--n", "3", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)["flags"]) == 21


def test_verify_bounds_suite(capsys):
    assert main(["verify", "bounds"]) == 0
    assert "bounds: PASS" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "qodfc", "--q", "6", "--n", "5", "--type", "1,2"],
        ["construct", "qodfc", "--q", "2", "--n", "5"],
        ["construct", "c-ell", "--q", "2", "--n", "5", "--type", "1,2,3,4"],
        ["construct", "qodfc", "--q", "2", "--n", "5", "--type", "3,2"],
        ["bound", "--q", "2", "--n", "4", "--type", "1,2", "--case", "nondisjoint-variety"],
        ["analyze", "/nonexistent/file.json"],
        ["enumerate", "grassmannian", "--q", "2", "--n", "4"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_malformed_file_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["analyze", str(path)]) == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "bogus"])
    assert exc.value.code == 2


def test_failing_suite_exit_1(monkeypatch, capsys):
    from flagcodes import verify

    def broken():
        res = verify.SuiteResult("bounds")
        res.add("always fails", False, "detail")
        return res

    monkeypatch.setitem(verify.SUITES, "bounds", broken)
    assert main(["verify", "bounds"]) == 1
    assert "FAIL always fails" in capsys.readouterr().out
