"""JSON diagram format, witness serialization, DOT export, and the CLI."""

import json

import pytest

from rdcx import shapes
from rdcx.cli import main
from rdcx.core import FormatError
from rdcx.io import (
    diagram_from_dict,
    diagram_to_dict,
    dump_diagram,
    load_diagram,
    to_dot,
    witness_from_dict,
    witness_to_dict,
)
from rdcx.molecule import recognise


def roundtrip(P):
    return diagram_from_dict(json.loads(json.dumps(diagram_to_dict(P))))


def test_roundtrip_fixtures():
    for mk in shapes.CATALOGUE.values():
        P = mk()
        assert roundtrip(P) == P


def test_grade0_must_be_bare():
    with pytest.raises(FormatError):
        diagram_from_dict({"elements": [[{"in": [0], "out": []}]]})


def test_duplicate_face_index_rejected():
    with pytest.raises(FormatError):
        diagram_from_dict(
            {"elements": [[{"in": [], "out": []}, {"in": [], "out": []}], [{"in": [0, 0], "out": [1]}]]}
        )


def test_in_out_overlap_rejected():
    with pytest.raises(FormatError):
        diagram_from_dict(
            {"elements": [[{"in": [], "out": []}, {"in": [], "out": []}], [{"in": [0], "out": [0, 1]}]]}
        )


def test_bad_json_is_format_error():
    with pytest.raises(FormatError):
        load_diagram("{not json")


def test_witness_roundtrip():
    w = recognise(shapes.merge_whisker())
    assert witness_from_dict(witness_to_dict(w)) == w


def test_dot_hasse_styles():
    text = to_dot(shapes.arrow(), "hasse")
    assert '"(0,0)" -> "(1,0)" [style=dashed];' in text
    assert '"(1,0)" -> "(0,1)" [style=solid];' in text


def test_dot_unknown_graph():
    with pytest.raises(FormatError):
        to_dot(shapes.arrow(), "flow")  # missing level


# -- CLI ----------------------------------------------------------------------------


@pytest.fixture()
def files(tmp_path):
    paths = {}
    for name, mk in shapes.CATALOGUE.items():
        p = tmp_path / f"{name}.json"
        dump_diagram(mk(), path=p)
        paths[name] = str(p)
    return paths


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, out


def test_cli_validate(files, capsys):
    rc, out = run(capsys, ["validate", files["merge_whisker"]])
    assert rc == 0
    data = json.loads(out)
    assert data["regular_directed_complex"] and data["oriented_thin_augmented"]
    rc, out = run(capsys, ["validate", files["bad_edge"]])
    assert rc == 1


def test_cli_validate_cospan_vs_molecule(files, capsys):
    rc, _ = run(capsys, ["validate", files["cospan"]])
    assert rc == 0  # it is a regular directed complex
    rc, out = run(capsys, ["molecule", files["cospan"]])
    assert rc == 1
    assert json.loads(out)["molecule"] is False


def test_cli_molecule_witness(files, capsys):
    rc, out = run(capsys, ["molecule", files["lens_chain"]])
    assert rc == 0
    data = json.loads(out)
    assert data["molecule"] is True and data["atom"] is False
    assert "paste" in json.dumps(data["witness"])


def test_cli_classify_certificates(files, capsys):
    rc, out = run(capsys, ["classify", files["hasse_cycle_atom"]])
    assert rc == 0
    data = json.loads(out)
    assert data["class"] == "strongly-dw-acyclic"
    kinds = {c["graph"] for c in data["certificates"]}
    assert kinds == {"hasse"}


def test_cli_boundary(files, capsys, tmp_path):
    out_path = str(tmp_path / "b.json")
    rc, out = run(capsys, ["boundary", files["merge_whisker"], "--dim", "1", "--sign", "-", "-o", out_path])
    assert rc == 0
    data = json.loads(out)
    assert [1, 0] in data["elements"] and [1, 3] not in data["elements"]
    sub = load_diagram(out_path)
    assert sub.grade_sizes == (4, 3)


def test_cli_layerings_and_orderings(files, capsys):
    rc, out = run(capsys, ["layerings", files["lens_chain"], "--k", "1"])
    assert rc == 0
    assert json.loads(out)["count"] == 2
    rc, out = run(capsys, ["orderings", files["lens_chain"], "--k", "1"])
    assert rc == 0
    assert json.loads(out)["count"] == 2
    rc, out = run(capsys, ["layerings", files["cospan"], "--k", "0"])
    assert rc == 1


def test_cli_constructions(files, capsys, tmp_path):
    out_path = str(tmp_path / "out.json")
    rc, _ = run(capsys, ["paste", files["arrow"], files["arrow"], "--k", "0", "-o", out_path])
    assert rc == 0
    assert load_diagram(out_path) == shapes.path(2)
    rc, _ = run(capsys, ["susp", files["point"], "-o", out_path])
    assert rc == 0
    assert load_diagram(out_path) == shapes.arrow()
    rc, _ = run(capsys, ["gray", files["arrow"], files["arrow"], "-o", out_path])
    assert rc == 0
    assert load_diagram(out_path).grade_sizes == (4, 4, 1)
    rc, _ = run(capsys, ["join", files["point"], files["point"], "-o", out_path])
    assert rc == 0
    assert load_diagram(out_path).grade_sizes == (2, 1)
    rc, _ = run(capsys, ["dual", files["merge_whisker"], "--dims", "1", "-o", out_path])
    assert rc == 0
    rc2, _ = run(capsys, ["dual", out_path, "--dims", "1", "-o", out_path])
    assert rc2 == 0
    assert load_diagram(out_path) == shapes.merge_whisker()


def test_cli_paste_level_error(files, capsys):
    rc, out = run(capsys, ["paste", files["arrow"], files["arrow"], "--k", "1"])
    assert rc == 1
    assert "error" in json.loads(out)


def test_cli_cells(files, capsys):
    rc, out = run(capsys, ["cells", files["merge_whisker"], "--max-dim", "2"])
    assert rc == 0
    data = json.loads(out)
    assert data["complete"] is True
    assert data["counts"] == {"0": 4, "1": 8, "2": 2}
    rc, out = run(capsys, ["cells", files["loop_graph"], "--max-dim", "1"])
    assert json.loads(out)["complete"] is False


def test_cli_chain(files, capsys):
    rc, out = run(capsys, ["chain", files["merge_whisker"]])
    assert rc == 0
    data = json.loads(out)
    assert data["basis"] == [4, 4, 1]
    assert data["unital_basis"] and data["steiner"] and data["strong_steiner"]
    # row-major: rows indexed by the lower grade
    assert len(data["boundary"][0]) == 4 and len(data["boundary"][0][0]) == 4
    assert data["boundary"][1][3][0] == 1 and data["boundary"][1][0][0] == -1


def test_cli_compare_nu(files, capsys):
    rc, out = run(capsys, ["compare-nu", files["merge_whisker"], "--max-dim", "2"])
    assert rc == 0
    assert json.loads(out)["isomorphic"] is True
    rc, out = run(capsys, ["compare-nu", files["loop_graph"], "--max-dim", "1", "--bound", "4"])
    assert rc == 1
    assert json.loads(out)["isomorphic"] is False


def test_cli_dot(files, capsys):
    rc, out = run(capsys, ["dot", files["hasse_cycle_atom"], "--graph", "extflow:2"])
    assert rc == 0
    assert out.startswith("digraph")
    assert '"(3,0)" -> "(1,4)";' in out


def test_cli_format_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"elements": [[{"in": [0], "out": []}]]}')
    rc = main(["validate", str(bad)])
    assert rc == 2
    missing = tmp_path / "missing.json"
    rc = main(["validate", str(missing)])
    assert rc == 2


def test_cli_deterministic_output(files, capsys):
    rc1, out1 = run(capsys, ["classify", files["flow_cycle_atom"]])
    rc2, out2 = run(capsys, ["classify", files["flow_cycle_atom"]])
    assert out1 == out2


def test_cli_byte_identical_across_processes(files):
    import subprocess
    import sys

    cmd = [sys.executable, "-m", "rdcx.cli", "classify", files["hasse_cycle_atom"]]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.returncode == 0
