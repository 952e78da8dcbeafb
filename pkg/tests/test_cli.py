import json

import pytest

from properorient.cli import bench, main
from properorient.generators import gen_tightness
from properorient.graph import Graph, format_graph


@pytest.fixture
def tight(tmp_path):
    p = tmp_path / "tight.txt"
    p.write_text(format_graph(gen_tightness()))
    return p


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


C3 = "p 3 3\ne 0 1\ne 1 2\ne 2 0\n"
C5 = "p 5 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n"


def test_orient_then_verify(tmp_path, tight, capsys):
    out = tmp_path / "o.txt"
    assert main(["--json", "orient", str(tight), "--out", str(out)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["mode"] == "2connected" and report["max_indegree"] == 3 and report["proper"]
    assert main(["verify", str(tight), str(out)]) == 0


def test_triangle_is_class_mismatch(tmp_path):
    assert main(["orient", write(tmp_path, "c3", C3)]) == 3


def test_triangle_with_fallback(tmp_path, capsys):
    g = write(tmp_path, "c3", C3)
    assert main(["orient", g, "--fallback", "--json", "--out", str(tmp_path / "o")]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["mode"] == "fallback-delta" and report["max_indegree"] <= 2


def test_verify_cyclic_c5(tmp_path, capsys):
    g = write(tmp_path, "c5", C5)
    o = write(tmp_path, "o", "".join(f"a {i} {(i + 1) % 5}\n" for i in range(5)))
    assert main(["verify", g, o]) == 1
    assert "improper" in capsys.readouterr().out


def test_verify_missing_edge(tmp_path):
    g = write(tmp_path, "c5", C5)
    o = write(tmp_path, "o", "".join(f"a {i} {(i + 1) % 5}\n" for i in range(4)))
    assert main(["verify", g, o]) == 2


def test_parse_error(tmp_path):
    assert main(["orient", write(tmp_path, "bad", "p 2 1\ne 0 9\n")]) == 2
    assert main(["orient", str(tmp_path / "missing")]) == 2


def test_exact(tmp_path, tight, capsys):
    assert main(["exact", write(tmp_path, "c5", C5)]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["exact", str(tight)]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert main(["exact", str(tight), "--k", "2"]) == 0
    assert capsys.readouterr().out.strip() == "no"
    assert main(["exact", str(tight), "--budget", "10"]) == 5


def test_gen_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for p in (a, b):
        assert main(["gen", "random2c", "--seed", "7", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_tightness_and_fan(tmp_path, capsys):
    p = tmp_path / "t"
    assert main(["gen", "tightness", "--out", str(p)]) == 0
    assert p.read_text().startswith("p 20 25")
    assert main(["gen", "fan", "--k", "3", "--out", str(p)]) == 0
    assert main(["gen", "fan", "--k", "-1", "--out", str(p)]) == 2


def test_recognize(tight, capsys):
    assert main(["--json", "recognize", str(tight)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["flags"]["outerplanar"] and len(report["extra"]["embeddings"]) == 1


def test_bench_rows(capsys):
    assert main(["bench"]) == 0
    assert capsys.readouterr().out == ""
    rows = bench([200, 400])
    assert [n for n, _ in rows] == [200, 400] and all(t > 0 for _, t in rows)
