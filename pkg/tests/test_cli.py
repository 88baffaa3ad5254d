import json

import pytest

from skeincluster.cli import main
from skeincluster.cpg import LabeledGraph, necklace


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, [json.loads(l) for l in out.out.splitlines() if l.strip()], out.err


def test_necklace_command(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, _, _ = run(capsys, "necklace", "--genus", "2", "--out", str(path))
    assert code == 0
    G = LabeledGraph.from_json(json.loads(path.read_text()))
    assert len(G.map.vertices()) == 6
    code, _, _ = run(capsys, "necklace", "--genus", "1", "--out", str(path))
    assert len(LabeledGraph.from_json(json.loads(path.read_text())).map.vertices()) == 4


def test_necklace_genus_zero_is_usage_error(capsys):
    code, _, err = run(capsys, "necklace", "--genus", "0")
    assert code == 2 and "genus" in err


def test_mutate_command(tmp_path, capsys):
    src, dst = tmp_path / "n.json", tmp_path / "m.json"
    src.write_text(necklace(2).dumps())
    edge = necklace(2).find_edge("U_1")
    code, lines, _ = run(capsys, "mutate", "--graph", str(src), "--edge", str(edge), "--sign", "-", "--out", str(dst))
    assert code == 0
    assert lines[0] == {"edge": edge, "old": "U_1", "new": "-U_1"}
    H = LabeledGraph.from_json(json.loads(dst.read_text()))
    assert H.labels == necklace(2).flip_at("U_1", -1).labels


def test_mutate_errors(tmp_path, capsys):
    src = tmp_path / "n.json"
    src.write_text(necklace(2).dumps())
    assert run(capsys, "mutate", "--graph", str(src), "--edge", "99", "--sign", "+")[0] == 2
    assert run(capsys, "mutate", "--graph", str(src), "--edge", "0", "--sign", "x")[0] == 2
    assert run(capsys, "mutate", "--graph", str(tmp_path / "missing.json"), "--edge", "0", "--sign", "+")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["mutate", "--graph", str(src)])
    assert exc.value.code == 2


def test_admissible_command(tmp_path, capsys):
    G = necklace(2)
    steps = tmp_path / "s.json"
    steps.write_text(json.dumps([{"edge": G.find_edge("U_1"), "sign": "+"}]))
    code, lines, _ = run(capsys, "admissible", "--genus", "2", "--steps", str(steps))
    assert code == 0 and lines[-1] == {"admissible": True}
    steps.write_text(json.dumps([[G.find_edge("V_1"), "-"]]))
    code, lines, _ = run(capsys, "admissible", "--genus", "2", "--steps", str(steps))
    assert code == 1 and lines[0]["admissible"] is False


def test_composable_command(tmp_path, capsys):
    G = necklace(2)
    steps = tmp_path / "s.json"
    steps.write_text(json.dumps([[G.find_edge("U_2"), "-"]]))
    weights = tmp_path / "w.json"
    weights.write_text(json.dumps([-1, -1, 0, 0]))
    assert run(capsys, "composable", "--genus", "2", "--steps", str(steps))[0] == 1
    assert run(capsys, "composable", "--genus", "2", "--steps", str(steps), "--weights", str(weights))[0] == 0
    weights.write_text(json.dumps([1, 1]))
    assert run(capsys, "composable", "--genus", "2", "--steps", str(steps), "--weights", str(weights))[0] == 2


def test_pentagon_command(capsys):
    code, lines, _ = run(capsys, "pentagon", "--degree", "8", "--pairing", "-1")
    assert code == 0 and lines == [{"check": "pentagon", "degree": 8, "holds": True}]
    code, lines, _ = run(capsys, "pentagon", "--degree", "3")
    assert code == 1 and "lhs" in lines[0] and "rhs" in lines[0]


def test_five_term_command(capsys):
    code, lines, _ = run(capsys, "five-term", "--degree", "6")
    assert code == 0
    assert lines[0]["paths"]["isomorphic"] is True
    assert lines[-1]["holds"] is True


def test_wavefunction_command(tmp_path, capsys):
    cls = tmp_path / "c.json"
    cls.write_text("[]")
    code, lines, _ = run(capsys, "wavefunction", "--classes", str(cls), "--degree", "4")
    assert code == 0 and lines[0]["text"] == "1"
    cls.write_text(json.dumps({"genus": 2, "classes": ["-U_1", "-U_2"], "scales": ["-q^(-1/2)"] * 2,
                               "weights": [-1, -1, 0, 0]}))
    code, lines, _ = run(capsys, "wavefunction", "--classes", str(cls), "--degree", "2")
    assert code == 0 and len(lines[0]["wavefunction"]["terms"]) > 1


def test_dilog_command(capsys):
    code, lines, _ = run(capsys, "dilog", "--vector", "1,0", "--degree", "3", "--scale=-q^(1/2)")
    assert code == 0 and len(lines[0]["dilog"]["terms"]) == 4


def test_skein_e_command(tmp_path, capsys):
    out = tmp_path / "e.json"
    code, _, _ = run(capsys, "skein-e", "--gamma", "q^(1/2)", "--degree", "4", "--out", str(out))
    assert code == 0
    obj = json.loads(out.read_text())
    assert obj["coeffs"][0]["partition"] == []
    assert obj["coeffs"][0]["coeff"] == {"num": {"terms": [[0, 0, "1"]]}, "den": {"terms": [[0, 0, "1"]]}}
    code, _, _ = run(capsys, "skein-e", "--gamma=-q^(1/2)", "--degree", "2")
    assert code == 0
    assert run(capsys, "skein-e", "--gamma", "1+q", "--degree", "2")[0] == 2


def test_calibrate_is_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "calibrate", "--out", str(a))
    run(capsys, "calibrate", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    code, lines, _ = run(capsys, "calibrate", "--check")
    assert code == 0 and lines == [{"calibration_matches_frozen": True}]


def test_gz_check_command(capsys):
    code, lines, _ = run(capsys, "gz-check", "--bound", "6")
    assert code == 0 and lines == [{"bound": 6, "nonvanishing": True}]


def test_outputs_are_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "necklace", "--genus", "3", "--out", str(a))
    run(capsys, "necklace", "--genus", "3", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
