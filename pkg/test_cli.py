"""
测试命令行

main() 直接调用，stdout/stderr 用 StringIO 捕获；重点是输出格式与退出码
"""
import io
import json
import sys
from pathlib import Path

# 添加项目路径
sys.path.insert(0, str(Path(__file__).parent))

import pytest

from backend import config
from backend.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from backend.paramfile import ParamFile

MEIXNER_SECOND = {"class": "MeixnerSecond", "alpha": ["1", "1"], "beta": ["1", "-1"], "sigma": "1"}


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    """不读环境里的参数文件，历史库放到临时目录"""
    monkeypatch.setattr(config, "PARAMS_FILE", None)
    monkeypatch.setattr(config, "HISTORY_DB", str(tmp_path / "history.db"))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write_params(tmp_path, data) -> str:
    path = tmp_path / "params.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


# ==================== poly ====================

def test_poly_laguerre():
    code, out, _ = run("poly", "-n", "2")
    assert code == EXIT_OK
    assert out == "index,coefficient\n2,1\n1,-4\n0,2\n"


def test_poly_x_in_sheffer_basis():
    # x = s_1 + s_0
    code, out, _ = run("poly", "-n", "1", "--basis", "sheffer")
    assert code == EXIT_OK
    assert out == "index,coefficient\n1,1\n0,1\n"


def test_poly_json():
    code, out, _ = run("--format", "json", "poly", "-n", "1")
    assert code == EXIT_OK
    assert json.loads(out) == [{"index": "1", "coefficient": "1"}, {"index": "0", "coefficient": "-1"}]


def test_poly_degree_limit():
    code, _, err = run("poly", "-n", "65")
    assert code == EXIT_USAGE
    assert "n=65" in err


def test_poly_with_param_file(tmp_path):
    code, out, _ = run("--params", write_params(tmp_path, MEIXNER_SECOND), "poly", "-n", "1")
    assert code == EXIT_OK
    assert out == "index,coefficient\n1,1\n0,0\n"


# ==================== normal-order ====================

def test_normal_order():
    code, out, _ = run("normal-order", "V*U", "--a", "1", "--b", "0")
    assert code == EXIT_OK
    assert out == "U^1V^1:1\nV^1:1\n"


def test_normal_order_zero():
    code, out, _ = run("normal-order", "U*V - U*V")
    assert code == EXIT_OK
    assert out == "0\n"


def test_normal_order_csv():
    code, out, _ = run("--format", "csv", "normal-order", "V*U", "--b", "2")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "j,k,coefficient"


def test_parse_error_reports_offset():
    code, out, err = run("normal-order", "U*")
    assert code == EXIT_USAGE
    assert out == ""
    assert "偏移 2" in err


def test_symbolic_commutator_rejected():
    code, _, _ = run("normal-order", "V*U", "--a", "x")
    assert code == EXIT_USAGE


# ==================== moments ====================

def test_moments():
    code, out, _ = run("moments", "--n-max", "3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n,exact,numeric,rel_err,status"
    assert [line.split(",")[1] for line in lines[1:]] == ["1", "1", "2", "6"]
    assert all(line.endswith(",ok") for line in lines[1:])


def test_moments_limit():
    code, _, _ = run("moments", "--n-max", "13")
    assert code == EXIT_USAGE


# ==================== eval ====================

def test_eval_coherent_at_origin():
    code, out, _ = run("eval", "--what", "coherent", "--x", "1", "--z", "0")
    assert code == EXIT_OK
    assert out == "value_re,value_im\n1.0,0.0\n"


def test_eval_transform_S():
    # f = s_0 + 2 s_1，z = 0.5 ⇒ 2
    code, out, _ = run("eval", "--what", "transform-S", "--coeffs", "1,2", "--z", "0.5")
    assert code == EXIT_OK
    assert out == "value_re,value_im\n2.0,0.0\n"


def test_eval_domain_error():
    code, out, err = run("eval", "--what", "transform-curlyS", "--z", "-10")
    assert code == EXIT_USAGE
    assert out == ""
    assert "violated" in err


def test_eval_grid_marks_points_outside_domain():
    code, out, _ = run("eval", "--what", "transform-curlyS", "--grid-z-re=-10:0:2")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "x,z_re,z_im,value_re,value_im",
        ",-10.0,0.0,nan,nan",
        ",0.0,0.0,1.0,0.0",
    ]


def test_eval_grid_over_x():
    code, out, _ = run("eval", "--what", "coherent", "--z", "0", "--grid-x", "0.5:1.5:3")
    assert code == EXIT_OK
    rows = out.splitlines()[1:]
    assert [r.split(",")[0] for r in rows] == ["0.5", "1.0", "1.5"]
    assert all(r.endswith(",1.0,0.0") for r in rows)


def test_eval_bad_grid():
    code, _, _ = run("eval", "--what", "coherent", "--x", "1", "--grid-z-re", "0:1")
    assert code == EXIT_USAGE


def test_eval_bad_complex_literal():
    code, _, _ = run("eval", "--what", "coherent", "--x", "one")
    assert code == EXIT_USAGE


# ==================== 参数文件 ====================

def test_missing_param_file(tmp_path):
    code, _, err = run("--params", str(tmp_path / "nope.json"), "poly", "-n", "1")
    assert code == EXIT_USAGE
    assert "nope.json" in err


@pytest.mark.parametrize("data", [
    {**MEIXNER_SECOND, "sigma": 1.0},
    {**MEIXNER_SECOND, "alpha": ["1", "0"]},
    {**MEIXNER_SECOND, "sigma": "1/0"},
    {**MEIXNER_SECOND, "extra": 1},
    {**MEIXNER_SECOND, "quad": {"rel_tol": 0}},
])
def test_invalid_param_file(tmp_path, data):
    code, _, _ = run("--params", write_params(tmp_path, data), "poly", "-n", "1")
    assert code == EXIT_USAGE


# ==================== verify / history ====================

def test_verify_fault_fails():
    code, out, _ = run("verify", "--suite", "exact", "--inject-fault", "stirling")
    assert code == EXIT_FAIL
    assert "status=failed" in out.splitlines()[0]
    assert any(line.startswith("FAIL exact.stirling") for line in out.splitlines())


def test_verify_records_history(tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run("--format", "json", "verify", "--suite", "exact", "--seed", "3",
                       "--record", "--report-json", str(report_path))
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["status"] == "passed" and report["seed"] == 3
    assert json.loads(report_path.read_text(encoding="utf-8")) == report

    code, out, _ = run("history", "--suite", "exact")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("id,suite,seed,status")
    assert len(lines) == 2 and ",exact,3,passed," in lines[1]


# ==================== 用法 ====================

@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["--log-level", "LOUD", "poly", "-n", "1"],
    ["poly"],
])
def test_usage_errors(argv):
    code, _, _ = run(*argv)
    assert code == EXIT_USAGE


def test_log_level_is_case_insensitive():
    code, _, _ = run("--log-level", "debug", "poly", "-n", "0")
    assert code == EXIT_OK


# ==================== 参数文件 schema ====================

def test_schema_examples_load():
    schema = json.loads(config.PARAMFILE_SCHEMA.read_text(encoding="utf-8"))
    assert set(schema["properties"]) == {"class", "alpha", "beta", "sigma", "quad"}
    for example in schema["examples"]:
        pf = ParamFile.from_dict(example)
        assert pf.params.family.value == example["class"]


def test_param_file_round_trip(tmp_path):
    pf = ParamFile.load(write_params(tmp_path, MEIXNER_SECOND))
    assert ParamFile.from_dict(pf.to_dict()).params == pf.params
