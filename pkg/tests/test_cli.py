import json

import pytest

from s3recog.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def test_recognize_sphere(write, capsys):
    assert main(["recognize", write("s3.txt", "gens: a ; rels: a")]) == 0
    out = capsys.readouterr().out
    assert "TRIVIAL_GROUP" in out


def test_recognize_json(write, capsys):
    assert main(["recognize", "--json", write("s3.txt", "gens: a ; rels: a")]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["decision"] == "TRIVIAL_GROUP" and data["dimension"] == 0


def test_recognize_heegaard(write, capsys):
    path = write("g2.txt", "genus: 2 ; curves: h1, b")
    assert main(["recognize", "--heegaard", path]) == 0
    assert "TRIVIAL_GROUP" in capsys.readouterr().out


def test_force_dimension(write, capsys):
    path = write("free.txt", "gens: a ; rels:")
    assert main(["recognize", "--json", "--force-dimension", path]) == 0
    assert json.loads(capsys.readouterr().out)["dimension"] == 3


def test_inconclusive_exit_code(write, capsys):
    path = write("poincare.txt", "gens: a b ; rels: a b a b a^-3, a b a b b^-5")
    assert main(["recognize", "--max-pairs", "5", path]) == 2
    assert "INCONCLUSIVE_BUDGET" in capsys.readouterr().out


def test_input_errors(write, capsys):
    assert main(["recognize", write("bad.txt", "gens: a ; rels: b")]) == 1
    assert "undeclared generator" in capsys.readouterr().err
    assert main(["recognize", "/nonexistent/file"]) == 1
    assert main(["dim", write("bad.ideal", "vars: x\nx + y")]) == 1


def test_abelianize(write, capsys):
    assert main(["abelianize", write("rp3.txt", "gens: a ; rels: a^2")]) == 0
    out = capsys.readouterr().out
    assert "free rank: 0" in out and "torsion: [2]" in out and "nontrivial" in out


def test_emit_ideal_round_trips_through_dim(write, tmp_path, capsys):
    out = tmp_path / "s3.ideal"
    assert main(["emit-ideal", write("s3.txt", "gens: a ; rels: a"), "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("# 5 equations")
    assert "vars: x1 x2 x3 x4" in text
    assert main(["dim", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_groebner_command(write, capsys):
    path = write("cubic.ideal", "vars: x y z\nx^2 - y\nx^3 - z\n")
    assert main(["groebner", "--order", "lex", path]) == 0
    out = capsys.readouterr().out
    assert "y^3 - z^2" in out


def test_dim_verbose(write, capsys):
    path = write("two.ideal", "vars: x y z\nx*y\nx*z\n")
    assert main(["dim", "--verbose", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "2"
    assert "witness: ['y', 'z']" in lines


def test_groebner_budget(write, capsys):
    path = write("hard.ideal", "vars: x y z\nx^5*y - z^3 + 1\ny^4*z - x^2 + y\nz^5 - x*y*z + 2\n")
    assert main(["groebner", "--max-pairs", "2", path]) == 2
