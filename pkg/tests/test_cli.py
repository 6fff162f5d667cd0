import io
import json

import pytest

from qvarchenko.cli import main
from qvarchenko.matrix import PolyMat
from qvarchenko.models import get_model
from qvarchenko.poly import Q


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_list_formats():
    code, text = run("list")
    assert code == 0 and "octahedron" in text
    code, text = run("list", "--format", "json")
    ids = [e["id"] for e in json.loads(text)]
    assert ids[:2] == ["cyclic", "dihedral"] and "pyramid5" in ids
    code, text = run("list", "--format", "csv")
    assert text.splitlines()[0] == "id,needs_n,description"


@pytest.mark.parametrize("model,n", [("cyclic", 5), ("dihedral", 4), ("tetrahedron", None), ("pyramid4", None)])
def test_build_json_round_trip(model, n):
    argv = ["build", "--model", model, "--format", "json"] + (["--n", str(n)] if n else [])
    code, text = run(*argv)
    assert code == 0
    obj = json.loads(text)
    spec = get_model(model, n)
    assert PolyMat.from_json_obj(obj["matrix"]) == spec.varchenko
    assert obj["size"] == spec.size == len(obj["region_labels"]) == len(obj["claimed_snf"])


def test_build_is_deterministic_across_formats():
    for fmt in ("json", "csv", "pretty"):
        assert run("build", "--model", "cube", "--format", fmt) == run("build", "--model", "cube", "--format", fmt)


def test_verify_exit_codes():
    code, text = run("verify", "--model", "tetrahedron")
    assert code == 0 and "verified" in text
    code, text = run("verify", "--model", "pyramid5", "--format", "json")
    assert code == 2
    assert json.loads(text)["status"] == "verified-with-discrepancy"
    code, text = run("verify", "--model", "cyclic", "--n", "3", "--format", "csv")
    assert code == 0 and text.splitlines()[1].startswith("Cyclic(3),7,verified")


def test_verify_all_sweeps_catalogue():
    code, text = run("verify", "--all", "--format", "csv")
    rows = text.splitlines()[1:]
    assert code == 2
    assert len(rows) == 8 + 4 + 5
    bad = [r.split(",")[0] for r in rows if ",verified-with-discrepancy," in r]
    assert bad == ["Pyramid5"]


@pytest.mark.parametrize("argv", [
    ["verify", "--model", "cyclic", "--n", "2"],
    ["verify", "--model", "cyclic"],
    ["build", "--model", "icosahedron"],
    ["build"],
    ["snf"],
    ["snf", "--file", "/nonexistent.json"],
])
def test_usage_errors_exit_one(argv):
    assert run(*argv)[0] == 1


def test_bad_verb_and_format_exit_one():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"], io.StringIO())
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["list", "--format", "xml"], io.StringIO())
    assert exc.value.code == 1


def test_snf_from_file(tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps(PolyMat([[1, Q], [Q, 1]]).to_json_obj()))
    code, text = run("snf", "--file", str(f), "--format", "json")
    assert code == 0
    assert json.loads(text) == {"invariant_factors": ["1", "-1 + q^2"], "divisibility_chain": True}


def test_snf_rejects_bad_input(tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps(PolyMat([[1, 0, 0]]).to_json_obj()))
    assert run("snf", "--file", str(f))[0] == 1
    f.write_text("{not json")
    assert run("snf", "--file", str(f))[0] == 1
    f.write_text(json.dumps({"rows": 1, "cols": 1, "entries": [[["x"]]]}))
    assert run("snf", "--file", str(f))[0] == 1


def test_oracle_and_poincare_for_model():
    code, text = run("oracle", "--model", "tetrahedron", "--format", "json")
    obj = json.loads(text)
    assert code == 0 and obj["regions"] == 15 and obj["matches_closed_form"] is True
    code, text = run("poincare", "--model", "tetrahedron", "--format", "json")
    assert json.loads(text)["betti"] == [1, 4, 6, 4]


def test_oracle_from_arrangement_file(tmp_path):
    f = tmp_path / "a.json"
    f.write_text(json.dumps({"dim": 2, "hyperplanes": [
        {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": "1/2"},
    ]}))
    code, text = run("oracle", "--file", str(f), "--format", "json")
    assert code == 0 and json.loads(text)["regions"] == 4
    code, text = run("poincare", "--file", str(f))
    assert text.strip() == "1 + 2*t + t^2"
