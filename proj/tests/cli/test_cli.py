import json
import os
import subprocess
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "docs" / "schemas" / "v1"
BIN = os.environ.get("RORC_BIN", str(ROOT / "build" / "rorc"))
RUNNING = "7,5,2,3,5,1,2,6,5"


def _registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validate(doc, name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def run(*args, env=None):
    full_env = {k: v for k, v in os.environ.items() if k != "RORC_SEED"}
    full_env.update(env or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def run_json(*args, schema, code=0, env=None):
    proc = run(*args, "--json", env=env)
    assert proc.returncode == code, proc.stderr
    doc = json.loads(proc.stdout)
    validate(doc, schema)
    return doc


def test_schemas_are_well_formed():
    for path in SCHEMAS.glob("*.schema.json"):
        Draft202012Validator.check_schema(json.loads(path.read_text()))


def test_analyze_running_example():
    doc = run_json("analyze", "-d", RUNNING, schema="analyze")
    assert [c["pair"] for c in doc["components"]] == [[1, 8], [2, 5], [3, 7], [5, 9]]
    assert len(doc["gamma"]) == 19
    text = run("analyze", "-d", RUNNING).stdout
    assert "Lambda(d) = {(1,8),(2,5),(3,7),(5,9)}" in text


def test_analyze_all_ones_has_four_codim_one_components():
    doc = run_json("analyze", "-d", "1,1,1,1,1", schema="analyze")
    assert len(doc["components"]) == 4
    assert all(c["codim"] == 1 for c in doc["components"])


def test_analyze_single_block_is_empty():
    doc = run_json("analyze", "-d", "5", schema="analyze")
    assert doc["components"] == []
    assert "empty" in run("analyze", "-d", "5").stdout


@pytest.mark.parametrize("d", ["", "1,,2", "0,1", "-1,2", "a,b", "2.5"])
def test_malformed_d_exits_2(d):
    for sub in ("analyze", "diagram", "tableau"):
        assert run(sub, "-d", d).returncode == 2


def test_diagram_chain_lengths():
    doc = run_json("diagram", "-d", "3,1,2,4", schema="diagram")
    assert doc["chain_lengths"] == [3, 2, 1, 0]
    assert doc["class"] == [4, 3, 2, 1]
    lines = run("diagram", "-d", "3,1,2,4").stdout.splitlines()
    assert lines[0].count("o") == 4


def test_diagram_window():
    doc = run_json("diagram", "-d", "3,1,2,4", "--pair", "2,4", schema="diagram")
    assert doc["window"] == [2, 4]
    assert doc["columns"] == [1, 2, 4]


def test_tableau_minimal_movement_shape():
    doc = run_json("tableau", "-d", RUNNING, "--pair", "2,5", schema="tableau")
    assert doc["shape"] == [9, 8, 6, 5, 4, 3, 1]
    assert doc["codim"] == doc["to_row"] - doc["from_row"]


def test_tableau_of_two_singletons():
    doc = run_json("tableau", "-d", "1,1", schema="tableau")
    assert doc["rows"] == [[1, 2]]
    assert run("tableau", "-d", "1,1").stdout == "1 2\n"


@pytest.mark.parametrize("pair", ["1,3", "2,1", "0,1", "1", "x,y", "1,2,3"])
def test_bad_pair_exits_2(pair):
    assert run("tableau", "-d", "1,1", "--pair", pair).returncode == 2
    assert run("diagram", "-d", "1,1", "--pair", pair).returncode == 2


def test_verify_exhaustive_examples():
    doc = run_json("verify", "-d", "2,1,2", "--mode", "exhaustive", "--field", "2", schema="report")
    assert doc["passed"]
    assert doc["config"] == {"d": [2, 1, 2], "mode": "exhaustive", "field": "Fp:2", "trials": 1000, "seed": 0,
                             "dim_cap": 20}
    theorem = doc["checks"][0]
    assert theorem["counts"]["matrices"] == 256
    assert [k for k in theorem["counts"] if k.startswith("stratum")] == ["stratum(1,3)"]

    doc = run_json("verify", "-d", "1,1,2,1", "--mode", "exhaustive", "--field", "2", schema="report")
    assert doc["passed"]
    assert sorted(k for k in doc["checks"][0]["counts"] if k.startswith("stratum")) == ["stratum(1,2)",
                                                                                         "stratum(2,4)"]


def test_verify_is_deterministic_and_honours_env_seed(tmp_path):
    args = ["verify", "-d", "3,3,3", "--mode", "sample", "--trials", "1000"]
    first = run(*args, "--seed", "7", "--json").stdout
    second = run(*args, "--seed", "7", "--json").stdout
    from_env = run(*args, "--json", env={"RORC_SEED": "7"}).stdout
    assert first == second == from_env
    assert json.loads(first)["config"]["seed"] == 7
    out = tmp_path / "report.json"
    assert run(*args, "--seed", "7", "--out", str(out)).returncode == 0
    assert out.read_text() == first


def test_verify_timing_is_opt_in():
    args = ["verify", "-d", "2,2", "--trials", "10"]
    assert "elapsed_ms" not in run_json(*args, schema="report")
    assert "elapsed_ms" in run_json(*args, "--timing", schema="report")


@pytest.mark.parametrize(
    "args",
    [
        ["--field", "4"],
        ["--field", "Fp:1"],
        ["--trials", "0"],
        ["--mode", "bogus"],
        ["--dim-cap", "40"],
        ["--mode", "exhaustive", "--field", "2", "--dim-cap", "5"],
        ["--checks", "nothing"],
    ],
)
def test_verify_invalid_config_exits_2(args):
    assert run("verify", "-d", "2,1,2", *args).returncode == 2


def test_verify_bad_env_seed_exits_2():
    assert run("verify", "-d", "2,2", env={"RORC_SEED": "seven"}).returncode == 2


def test_verify_reports_lemma_violation_with_exit_1():
    doc = run_json("verify", "-d", "3,1,2,3", "--checks", "lemmas", "--trials", "1000", "--seed", "0",
                   schema="report", code=1)
    failed = {c["name"] for c in doc["checks"] if not c["passed"]}
    assert failed
    assert failed <= {"lemma-below-kappa", "lemma-above-kappa", "lemma-outside-gamma"}


def test_witness_edge_removal():
    doc = run_json("witness", "-d", "1,1,1,1,1", "--pair", "1,2", schema="witness")
    assert doc["components"] == [[1, 2]]
    assert doc["method"] == "edge-removal"
    assert "A = E23+E34+E45" in run("witness", "-d", "1,1,1,1,1", "--pair", "1,2").stdout


def test_witness_sole_component_and_running_example():
    doc = run_json("witness", "-d", "2,1,2", "--pair", "1,3", schema="witness")
    assert doc["components"] == [[1, 3]]
    doc = run_json("witness", "-d", RUNNING, "--pair", "3,7", schema="witness")
    assert doc["components"] == [[3, 7]]


def test_witness_pair_outside_lambda_exits_2():
    assert run("witness", "-d", RUNNING, "--pair", "1,2").returncode == 2
    assert run("witness", "-d", "5", "--pair", "1,2").returncode == 2


def test_witness_budget_exhaustion_exits_1():
    assert run("witness", "-d", RUNNING, "--pair", "3,7", "--budget", "1").returncode == 1


def test_witness_matrix_round_trips_through_verify(tmp_path):
    for d, pair in [("1,1,1,1,1", "2,3"), (RUNNING, "5,9")]:
        doc = run_json("witness", "-d", d, "--pair", pair, schema="witness")
        path = tmp_path / "m.json"
        path.write_text(json.dumps(doc["matrix"]))
        proc = run("verify", "--matrix", str(path), "--json")
        report = json.loads(proc.stdout)
        validate(report, "report")
        assert proc.returncode == (0 if report["passed"] else 1)
        theorem = report["checks"][0]
        assert theorem["passed"]
        i, j = doc["pair"]
        assert theorem["counts"][f"stratum({i},{j})"] == 1
        assert theorem["counts"]["defective"] == 1


def test_verify_matrix_accepts_rational_sparse_input(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"d": [2, 1, 2], "sparse": [[1, 3, "1/2"], [3, 4, -3]]}))
    report = run_json("verify", "--matrix", str(path), schema="report")
    assert report["config"]["field"] == "Q"
    assert report["checks"][0]["counts"]["stratum(1,3)"] == 1


@pytest.mark.parametrize(
    "payload",
    [
        "not json",
        json.dumps({"d": [2, 1, 2]}),
        json.dumps({"d": [1, 1], "entries": [[0, 1], [1, 0]]}),
        json.dumps({"d": [1, 1], "entries": [[0, 1]]}),
        json.dumps({"d": [1, 1], "field": "Fp:4", "entries": [[0, 1], [0, 0]]}),
    ],
)
def test_verify_rejects_bad_matrix_files(tmp_path, payload):
    path = tmp_path / "m.json"
    path.write_text(payload)
    assert run("verify", "--matrix", str(path)).returncode == 2


def test_verify_matrix_rejects_conflicting_d(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"d": [1, 1], "entries": [[0, 1], [0, 0]]}))
    assert run("verify", "--matrix", str(path), "-d", "2").returncode == 2
