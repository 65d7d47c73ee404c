import json
import subprocess
import sys

import pytest

from bicliques.cli import run
from bicliques.serialization import dumps


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def inst(tmp_path):
    return write(tmp_path, "g.json", {"n": 2, "weights": [["1", "2"], ["3", "4"]]})


def ok(argv):
    code, out, err = run(argv)
    assert code == 0, out + err
    return out


def test_solve_each_problem(inst):
    doc = json.loads(ok(["solve", "--problem", "wbcbs", "--sense", "max", "-k", "1", "-i", inst]))
    assert doc == {"value": "4", "u": [1], "v": [1]}
    doc = json.loads(ok(["solve", "--problem", "maxwcbs", "-k", "3", "-i", inst]))
    assert doc == {"value": "7", "u": [1], "v": [0, 1]}
    doc = json.loads(ok(["solve", "--problem", "minwcbs", "-k", "2", "-i", inst]))
    assert doc == {"value": "1", "u": [0], "v": [0]}


def test_solve_with_infinite_weights(tmp_path):
    path = write(tmp_path, "g.json", {"n": 2, "weights": [["inf", "1/2"], ["inf", "inf"]]})
    doc = json.loads(ok(["solve", "--problem", "minwcbs", "-k", "2", "-i", path]))
    assert doc == {"value": "1/2", "u": [0], "v": [1]}
    doc = json.loads(ok(["solve", "--problem", "minwcbs", "-k", "4", "-i", path]))
    assert doc["value"] == "inf"


def test_oracle_single_and_random(inst):
    doc = json.loads(ok(["oracle", "--problem", "maxwcbs", "-k", "3", "-i", inst]))
    assert doc["solver_agrees"] is True and doc["value"] == "7"
    doc = json.loads(ok(["oracle", "--problem", "minwcbs", "--trials", "10", "--seed", "5"]))
    assert doc["mismatches"] == [] and doc["checked"] > 10


def test_skeleton_dot_has_36_vertices():
    out = ok(["skeleton", "--balanced", "-n", "4", "-k", "2", "--format", "dot"])
    assert out.startswith("graph")
    assert out.count("[label=") == 36
    assert out.count(" -- ") == 594


def test_skeleton_json_and_csv():
    doc = json.loads(ok(["skeleton", "--balanced", "-n", "3", "-k", "1"]))
    assert len(doc["vertices"]) == 9
    csv = ok(["skeleton", "--balanced", "-n", "3", "-k", "1", "--format", "csv"])
    assert csv.splitlines()[0] == "source,target"
    assert len(csv.splitlines()) == 1 + len(doc["edges"])


def test_skeleton_methods_agree():
    a = json.loads(ok(["skeleton", "--balanced", "-n", "3", "-k", "2", "--method", "criterion"]))
    b = json.loads(ok(["skeleton", "--balanced", "-n", "3", "-k", "2", "--method", "midpoint-lp"]))
    assert a["edges"] == b["edges"]


def test_skeleton_unbalanced_cone():
    doc = json.loads(ok(["skeleton", "--unbalanced", "-n", "2", "-k", "3", "--method", "cone-max"]))
    assert len(doc["vertices"]) == 4


def test_clique_report():
    doc = json.loads(ok(["clique", "--balanced", "-n", "4", "-k", "2"]))
    assert doc["omega"] == 18 and len(doc["members"]) == 18
    assert doc["lower_bound_direct_type"] == 17


def test_family_min_certify():
    doc = json.loads(ok(["family", "--kind", "min", "-n", "10", "-k", "12", "--certify"]))
    assert len(doc["members"]) == 5 and doc["bound"] == 5 and doc["m"] == 5
    assert len(doc["certificates"]) == 10 and doc["all_certified"] is True
    assert {c["value"] for c in doc["certificates"]} == {"6"}
    assert "inf" in doc["certificates"][0]["weights"][0] + doc["certificates"][0]["weights"][9]


def test_family_csv():
    out = ok(["family", "--kind", "balanced", "-n", "3", "-k", "2", "--format", "csv"])
    assert out.splitlines() == ["u,v", "0 1,0 1", "0 2,0 2", "1 2,1 2"]


def test_family_parameter_error():
    code, out, err = run(["family", "--kind", "min", "-n", "10", "-k", "9"])
    assert code == 2
    doc = json.loads(out)
    assert doc["error"] == "ParameterError" and "(9/4)*m < k" in doc["message"]
    assert err.startswith("error:")


def test_certify_roundtrip(tmp_path):
    cert = {"n": 3, "weights": [["1", "1", "-1"], ["0", "0", "-1"], ["0", "0", "-1"]]}
    path = write(tmp_path, "c.json", cert)
    x, y = '{"u": [0, 1], "v": [0, 1]}', '{"u": [0, 2], "v": [0, 1]}'
    doc = json.loads(ok(["certify", "--kind", "balanced", "-k", "2", "-i", path, "--x", x, "--y", y]))
    assert doc["certified"] is True and doc["sense"] == "max"
    z = '{"u": [1, 2], "v": [0, 1]}'
    doc = json.loads(ok(["certify", "--kind", "balanced", "-k", "2", "-i", path, "--x", x, "--y", z]))
    assert doc["certified"] is False


def test_reduce_each_target(tmp_path):
    g = write(tmp_path, "u.json", {"n": 2, "weights": [[1, 1], [0, 1]]})
    doc = json.loads(ok(["reduce", "--to", "maxwcbs", "-k", "2", "-i", g]))
    assert doc["metadata"]["k"] == 4 and doc["metadata"]["threshold"] == "4"
    assert doc["weights"] == [["1", "1"], ["0", "1"]]
    doc = json.loads(ok(["reduce", "--to", "wbcbs", "-k", "1", "-i", g]))
    assert doc["metadata"]["k"] == 1
    w = write(tmp_path, "w.json", {"n": 2, "weights": [["4", "1"], ["1", "4"]]})
    doc = json.loads(ok(["reduce", "--to", "qcover", "-k", "3", "-i", w]))
    assert doc["metadata"] == {"k": 3, "q": 1}
    assert doc["weights"] == [["1", "0"], ["0", "1"]]


def test_matching_command(tmp_path):
    g = write(tmp_path, "u.json", {"n": 3, "weights": [[1, 1, 0], [1, 0, 0], [0, 0, 0]]})
    doc = json.loads(ok(["matching", "-i", g]))
    assert len(doc["matching"]) == 2
    assert len(doc["cover"]["left"]) + len(doc["cover"]["right"]) == 2
    assert doc["max_biclique"] is not None


def test_errors_are_json(tmp_path):
    code, out, _ = run(["solve", "--problem", "wbcbs", "-k", "2", "-i", str(tmp_path / "missing.json")])
    assert code == 2 and json.loads(out)["error"] == "FileNotFoundError"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, _ = run(["solve", "--problem", "wbcbs", "-k", "2", "-i", str(bad)])
    assert code == 2 and json.loads(out)["error"] == "InstanceError"
    float_inst = write(tmp_path, "f.json", {"n": 1, "weights": [[0.5]]})
    code, out, _ = run(["solve", "--problem", "wbcbs", "-k", "1", "-i", float_inst])
    assert code == 2


def test_usage_errors():
    assert run([])[0] == 2
    assert json.loads(run(["solve", "--problem", "nope"])[1])["error"] == "UsageError"
    assert json.loads(run(["skeleton", "--balanced"])[1])["message"] == "--n is required"


def test_output_is_deterministic():
    argv = ["skeleton", "--balanced", "-n", "4", "-k", "2", "--method", "midpoint-lp"]
    first = ok(argv)
    assert ok(argv) == first
    assert ok(argv + ["--threads", "2"]) == first


def test_oracle_seed_reproducible():
    argv = ["oracle", "--problem", "wbcbs", "--trials", "5", "--seed", "11"]
    assert ok(argv) == ok(argv)


def test_dumps_canonical():
    assert dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bicliques.cli", "family", "--kind", "max", "-n", "4", "-k", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["bound"] == 3
