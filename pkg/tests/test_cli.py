"""Command-line interface: payload shapes, exit codes, determinism."""

import json

import numpy as np
import pytest

from invalg import catalog
from invalg.catalog import pair_to_json
from invalg.cli import main

COMMANDS = {
    "validate": ["validate", "catalog:S3:std"],
    "ideals": ["ideals", "catalog:S3:trivPlusSign"],
    "subalgebras": ["subalgebras", "catalog:Q8:std"],
    "factor": ["factor", "catalog:S3xS3:stdXstd"],
    "lie": ["lie", "--type", "A1xA1", "--weights", "[1];[1]"],
    "catalog": ["catalog"],
}


def _run(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(args + ["--out", str(out)] if "--out" not in args else args)
    return code, out.read_bytes()


def test_validate_payload(tmp_path):
    code, raw = _run(COMMANDS["validate"], tmp_path)
    assert code == 0
    d = json.loads(raw)
    assert d["schema"] == 1
    assert d["valid"] is True
    assert d["max_deviation"] < 1e-10
    assert d["irreducible"] is True


def test_ideals_payload(tmp_path):
    code, raw = _run(COMMANDS["ideals"], tmp_path)
    assert code == 0
    d = json.loads(raw)
    assert d["counts"] == {"left": 4, "right": 4}
    assert d["infinite"] is False
    assert len(d["subspaces"]) == 4
    dims = sorted(i["dim"] for i in d["ideals"]["left"])
    assert dims == [0, 2, 2, 4]


def test_ideals_infinite_lattice_payload(tmp_path):
    code, raw = _run(["ideals", "catalog:S3:regular"], tmp_path)
    assert code == 0
    d = json.loads(raw)
    assert d["infinite"] is True
    assert any(f["multiplicity"] > 1 for f in d["parametrization"])


def test_subalgebras_payload(tmp_path):
    code, raw = _run(COMMANDS["subalgebras"], tmp_path)
    assert code == 0
    d = json.loads(raw)
    assert d["count"] == 5
    assert d["complete"] is True
    assert d["verification"]["ok"] is True
    assert d["verification"]["violations"] == []
    dims = [s["dim"] for s in d["subalgebras"]]
    assert dims == [1, 2, 2, 2, 4]
    cartan = d["subalgebras"][1]
    assert cartan["datum"]["subgroup_order"] == 4
    assert cartan["datum"]["w_dim"] == 1
    assert cartan["unital"] is True


def test_factor_payload(tmp_path):
    code, raw = _run(COMMANDS["factor"], tmp_path)
    assert code == 0
    d = json.loads(raw)
    proper = [f for f in d["factorizations"] if 1 < f["subalgebra_dim"] < 16]
    assert len(proper) == 4
    for f in proper:
        assert (f["a"], f["b"]) == (2, 2)
        assert f["residual"] < 1e-6
        assert f["cocycle_deviation"] < 1e-6
        assert len(f["sigma"]["matrices"]) == 36
        assert f["sigma"]["projective"] in (True, False)


def test_lie_payload(tmp_path):
    code, raw = _run(COMMANDS["lie"], tmp_path)
    assert code == 0
    d = json.loads(raw)
    assert d["count"] == 5
    assert d["total_dim"] == 16
    assert [e["dim"] for e in d["entries"]] == [1, 4, 4, 16]
    assert d["includes_zero_algebra"] is True


def test_catalog_payload(tmp_path):
    code, raw = _run(COMMANDS["catalog"], tmp_path)
    assert code == 0
    d = json.loads(raw)
    keys = [e["key"] for e in d["entries"]]
    assert keys == sorted(keys)
    assert "S3" in keys and "SL23" in keys


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_byte_identical_reruns(name, tmp_path):
    _, first = _run(COMMANDS[name], tmp_path, "a.json")
    _, second = _run(COMMANDS[name], tmp_path, "b.json")
    assert first == second
    assert first.endswith(b"\n")


def test_stdout_matches_file_output(tmp_path, capsys):
    code = main(COMMANDS["validate"])
    assert code == 0
    shown = capsys.readouterr().out
    _, raw = _run(COMMANDS["validate"], tmp_path)
    assert shown.encode() == raw


def test_no_negative_zero_in_output(tmp_path):
    _, raw = _run(COMMANDS["subalgebras"], tmp_path)
    assert b"-0.0," not in raw and b"-0.0]" not in raw


def test_unknown_catalog_key_exits_1(tmp_path, capsys):
    code = main(["validate", "catalog:Z9:std"])
    assert code == 1
    assert capsys.readouterr().err.strip() != ""


def test_malformed_json_exits_1(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"group": [1, 2')
    code = main(["validate", str(path)])
    assert code == 1
    assert "byte" in capsys.readouterr().err


def test_invalid_rep_exits_1(tmp_path, capsys):
    g, rep = catalog.get("S3", "std")
    doc = pair_to_json(g, rep)
    doc["representation"]["matrices"][3][0][0] = [5.0, 0.0]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code = main(["validate", str(path)])
    assert code == 1


def test_subalgebras_on_reducible_exits_1(capsys):
    code = main(["subalgebras", "catalog:S3:trivPlusSign"])
    assert code == 1


def test_cap_exceeded_exits_2(tmp_path, capsys):
    n = 501
    mult = ((np.arange(n)[:, None] + np.arange(n)[None, :]) % n).tolist()
    omega = np.exp(2j * np.pi / n)
    mats = [[[[float((omega ** k).real), float((omega ** k).imag)]]]
            for k in range(n)]
    doc = {"group": {"order": n, "mult_table": mult},
           "representation": {"dim": 1, "matrices": mats, "unitary": True}}
    path = tmp_path / "big.json"
    path.write_text(json.dumps(doc))
    code = main(["subalgebras", str(path)])
    assert code == 2


def test_seed_flag_changes_nothing_material(tmp_path):
    out1 = tmp_path / "s0.json"
    out2 = tmp_path / "s1.json"
    main(["subalgebras", "catalog:S3:std", "--seed", "0", "--out", str(out1)])
    main(["subalgebras", "catalog:S3:std", "--seed", "1", "--out", str(out2)])
    d1 = json.loads(out1.read_text())
    d2 = json.loads(out2.read_text())
    assert [s["dim"] for s in d1["subalgebras"]] == [s["dim"] for s in d2["subalgebras"]]
