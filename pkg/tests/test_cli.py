import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest
from referencing import Registry, Resource

from asmverma.cli import main


def _registry():
    reg = Registry()
    schemas = {}
    for f in resources.files("asmverma").joinpath("schemas").iterdir():
        if f.name.endswith(".json"):
            data = json.loads(f.read_text())
            schemas[f.name.split(".")[0]] = data
            reg = reg.with_resource(data["$id"], Resource.from_contents(data))
    return reg, schemas


REGISTRY, SCHEMAS = _registry()


def validate(data, name):
    jsonschema.Draft202012Validator(SCHEMAS[name], registry=REGISTRY).validate(data)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("kind, n, count", [("perm", 3, 6), ("asm", 3, 7), ("asm", 4, 42), ("tetra", 4, 10), ("verbar", 3, 7), ("verbar", 1, 1)])
def test_enumerate_json(capsys, kind, n, count):
    code, out, _ = run(capsys, "enumerate", kind, "--n", str(n), "--format", "json")
    assert code == 0
    data = json.loads(out)
    validate(data, "enumerate")
    assert data["count"] == count == len(data["items"])


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "perm", "--n", "3")
    assert code == 0
    assert out.splitlines()[0] == "1 2 3"
    assert out.strip().endswith("# 6 items")


def test_intersect(capsys):
    code, out, _ = run(capsys, "intersect", "2 1 3", "1 3 2", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    validate(data, "intersect")
    assert data["asm"]["entries"] == [[0, 1, 0], [1, -1, 1], [0, 1, 0]]
    assert data["element"]["socle"] == [{"i": 1, "j": 1, "g": 1}, {"i": 2, "j": 2, "g": 1}]


def test_intersect_text(capsys):
    code, out, _ = run(capsys, "intersect", "3 1 2", "2 3 1", "--n", "3")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:4]]
    assert rows == [["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]]
    assert "socle: (1,2,2), (2,1,2)" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["intersect", "1 1 2", "--n", "3"], 1),
        (["intersect", "2 1", "--n", "3"], 1),
        (["enumerate", "asm", "--n", "0"], 1),
        (["enumerate", "asm", "--n", "9"], 2),
        (["enumerate", "bogus", "--n", "3"], 1),
        (["verify", "kl-multfree", "--n", "6"], 2),
        (["verify", "macneille", "--n", "5"], 2),
        (["export", "hasse", "--n", "3"], 1),
        (["enumerate", "asm", "--n", "3", "--format", "yaml"], 1),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_verify_failure_exit_3(capsys, monkeypatch):
    from asmverma import verify

    def failing(n, **kw):
        ch = verify.Checks("figures", n)
        ch.add("deliberately false", False)
        return ch.report()

    monkeypatch.setitem(verify.SUITES, "figures", failing)
    code, out, _ = run(capsys, "verify", "figures", "--n", "3")
    assert code == 3
    report = json.loads(out)
    validate(report, "report")
    assert report["passed"] is False


def test_verify_json_is_deterministic(capsys):
    reports = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify", "tetra-iso", "--n", "5", "--format", "json")
        assert code == 0
        reports.append(out)
    assert reports[0] == reports[1]
    validate(json.loads(reports[0]), "report")


def test_export_hasse(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "hasse", "tetra", "--n", "3", "--format", "dot")
    assert code == 0 and out.count("->") == 4
    target = tmp_path / "asm.json"
    code, _, _ = run(capsys, "export", "hasse", "asm", "--n", "3", "--format", "json", "-o", str(target))
    data = json.loads(target.read_text())
    validate(data, "hasse")
    assert len(data["elements"]) == 7 and len(data["covers"]) == 8


def test_export_kl_table(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "kl-table", "--n", "3", "--cache-dir", str(tmp_path))
    assert code == 0
    lines = out.splitlines()
    # one line per comparable pair of S_3 (all with P = 1)
    assert len(lines) == 19
    assert all(line.split("\t")[3] == "1" for line in lines)
    code, out, _ = run(capsys, "export", "kl-table", "--n", "4")
    assert "4\t1 2 3 4\t3 4 1 2\t1,1" in out.splitlines()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "asmverma", "enumerate", "asm", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("# 2 items")


def test_json_roundtrips_against_schemas():
    from asmverma.asm import enumerate_asm
    from asmverma.perm import enumerate_sn
    from asmverma.tetra import tetra_points
    from asmverma.verma import enumerate_verbar

    for w in enumerate_sn(4):
        validate(w.to_json(), "permutation")
    for a in enumerate_asm(4):
        validate(a.to_json(), "asm")
    for p in tetra_points(5):
        validate(p.to_json(), "tetra_point")
    for m in enumerate_verbar(3):
        validate(m.to_json(), "verma_element")
