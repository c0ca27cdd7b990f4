import json

import pytest

from esdec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decide_monotone(tmp_path, capsys):
    pred = tmp_path / "monotone.pred"
    pred.write_text("x1 < x2 ; x1 >= x2\n")
    code, out, _ = run(capsys, "decide", str(pred), "--no-witness")
    assert code == 0
    assert json.loads(out)["answer"] == "YES"


def test_decide_no_with_certificate(tmp_path, capsys):
    pred = tmp_path / "increasing.pred"
    pred.write_text("x1 < x2\n")
    code, out, _ = run(capsys, "decide", str(pred))
    assert code == 10
    payload = json.loads(out)
    assert payload["answer"] == "NO"
    assert payload["transform"] in ("F1", "F2")
    assert "type" in payload and "witness" in payload


def test_decide_malformed(tmp_path, capsys):
    pred = tmp_path / "bad.pred"
    pred.write_text("x1 << x2\n")
    code, _, err = run(capsys, "decide", str(pred))
    assert code == 1
    assert "parse error" in err


def test_qe_commands(capsys):
    code, out, _ = run(capsys, "qe", "forall x. x^2 + 1 > 0")
    assert code == 0 and json.loads(out)["truth"] is True
    code, out, _ = run(capsys, "qe", "exists x. x^2 + 1 = 0")
    assert code == 10
    code, out, _ = run(capsys, "qe", "--smtlib", "exists x. x^2 - 2 = 0")
    assert code == 0 and "(check-sat)" in out


def test_gen_and_roundtrip(tmp_path, capsys):
    seq = tmp_path / "ints.seq"
    code, _, _ = run(capsys, "gen", "--family", "integers", "--N", "32",
                     "--out", str(seq))
    assert code == 0
    lines = seq.read_text().strip().splitlines()
    assert len(lines) == 32 and lines[0] == "1"

    code, out, _ = run(capsys, "gen", "--family", "shifted_reciprocal",
                       "--N", "3", "--A", "3", "--B", "1")
    assert code == 0
    assert out.splitlines() == ["4", "7/2", "10/3"]

    code, out, _ = run(capsys, "gen", "--family", "monotone")
    assert code == 0 and ";" in out


def test_es_exact(tmp_path, capsys):
    pred = tmp_path / "monotone.pred"
    pred.write_text("x1 < x2 ; x1 >= x2\n")
    code, out, _ = run(capsys, "es-exact", str(pred), "--n", "3", "--Nmax", "6")
    assert code == 0
    assert json.loads(out)["value"] == 5


def test_homog(tmp_path, capsys):
    pred = tmp_path / "monotone.pred"
    pred.write_text("x1 < x2 ; x1 >= x2\n")
    seq = tmp_path / "five.seq"
    seq.write_text("3\n1\n4\n1\n5\n")
    code, out, _ = run(capsys, "homog", str(seq), str(pred), "--n", "3")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["values"]) == 3
    assert all(v in ("everywhere", "nowhere") for v in payload["members"].values())


def test_extract_growing(tmp_path, capsys):
    seq = tmp_path / "affine.seq"
    g = [4, 256, 4 ** 16]
    seq.write_text("5\n" + "\n".join(str(5 + 7 * x) for x in g) + "\n")
    code, out, _ = run(capsys, "extract-growing", str(seq), "--R", "4", "--n", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["witness"]["A"] == "5" and payload["witness"]["B"] == "7"

    noise = tmp_path / "noise.seq"
    noise.write_text("1\n-5\n2\n-7\n3\n")
    code, _, err = run(capsys, "extract-growing", str(noise), "--R", "4", "--n", "5")
    assert code == 30 and "extraction failed" in err


def test_feasible_census(tmp_path, capsys):
    pred = tmp_path / "monotone.pred"
    pred.write_text("x1 < x2 ; x1 >= x2\n")
    code, out, _ = run(capsys, "feasible", str(pred), "--transform", "F1",
                       "--witness")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"]["feasible"] == 3
    assert payload["counts"]["total"] == 17
    with_witness = [r for r in payload["types"] if "witness" in r]
    assert len(with_witness) == 3


def test_repro_flag(tmp_path, capsys):
    pred = tmp_path / "monotone.pred"
    pred.write_text("x1 < x2 ; x1 >= x2\n")
    outs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "--repro", "decide", str(pred), "--no-witness")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
