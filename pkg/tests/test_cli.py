import json
import math
import subprocess
import sys

import pytest

from coronaqec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_writes_edge_list(capsys):
    code, out, _ = run(capsys, "gen", "cycle", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "6 6"
    assert "0 1" in lines


def test_gen_to_file_then_qec_from_file(tmp_path, capsys):
    path = tmp_path / "p4.txt"
    assert run(capsys, "gen", "path", "4", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "qec", "--file", str(path), "--json")
    assert code == 0
    assert json.loads(out)["qec"] == pytest.approx(math.sqrt(2) - 2, abs=1e-12)


def test_qec_json_fields(capsys):
    code, out, _ = run(capsys, "qec", "--family", "complete", "4", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["qec"] == pytest.approx(-1.0)
    assert d["qe_class"] is True
    assert d["schema"] == "coronaqec.qec/1"
    assert len(d["witness"]) == 4


def test_corona_table(capsys):
    code, out, _ = run(capsys, "corona", "--g", "complete", "2", "--h", "empty", "1")
    assert code == 0
    assert "psi(i)" in out
    assert f"{math.sqrt(2) - 2:.6f}" in out


def test_corona_json(capsys):
    code, out, _ = run(capsys, "corona", "--g", "complete", "2", "--h", "cycle", "6", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["formula_matches"] is True
    assert d["gamma"]["gamma3"] == pytest.approx(0.0, abs=1e-12)


def test_corona_general_route(capsys):
    code, out, _ = run(capsys, "corona", "--g", "path", "3", "--h", "petersen", "--general", "--json")
    assert code == 0
    assert json.loads(out)["profile_kind"] == "general"


def test_corona_reports_absent_as_null(capsys):
    code, out, _ = run(capsys, "corona", "--g", "path", "3", "--h", "complete", "3", "--json")
    d = json.loads(out)
    assert d["gamma"]["gamma2"] is None


def test_verify_passing_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "formula", "--g-family", "path:2-4",
                       "--h-family", "cycle:3-5")
    assert code == 0
    assert "PASS  formula" in out


def test_verify_failing_suite_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "delta2", "--g-family", "path:3",
                       "--h-family", "cycle:4")
    assert code == 1
    assert "failed delta2_biconditional" in out


@pytest.mark.parametrize("argv", [
    ["gen", "cycle", "2"],
    ["gen", "random_regular", "5", "3"],
    ["qec"],
    ["qec", "--file", "/nonexistent/graph.txt"],
    ["corona", "--g", "complete", "1", "--h", "complete", "2"],
    ["corona", "--g", "complete", "2"],
    ["verify", "--g-family", "nonsense:3"],
    ["qec", "--family", "path", "3", "--tol-eig", "0"],
])
def test_bad_input_exits_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("coronaqec: error:")


def test_disconnected_file_names_pair(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("3 1\n0 1\n")
    code, _, err = run(capsys, "qec", "--file", str(path))
    assert code == 2
    assert "2" in err


def test_verify_json_is_byte_identical(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        subprocess.run([sys.executable, "-m", "coronaqec.cli", "verify", "--suite", "formula",
                        "--suite", "cases", "--g-family", "path:2-4", "--h-family", "random_regular:8,3",
                        "--json", "--out", str(path)], check=False)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    d = json.loads(outs[0])
    assert d["schema"] == "coronaqec.verify/1"
    assert d["seed"] == 7
