import glob
import json
import os
import subprocess
import sys

import pytest

from hopfcat.cli import COMMANDS, SCHEMA, main
from hopfcat.model import ModelError, format_model, parse_model, parse_text, signature

FIXTURE_FILES = sorted(glob.glob(os.path.join(os.path.dirname(os.path.dirname(__file__)), "fixtures", "*.model")))


def test_group_section():
    m = parse_text("[group C2]\nelements = e g\ne g\ng e\n")
    G = m.groups["C2"]
    assert G.order == 2 and G.labels == ("e", "g")


def test_enveloping_default_degree():
    m = parse_text("[lie aff2]\nbasis = x y\nbracket x y = y\n\n[hopf U2]\nenveloping = aff2\n")
    U = m.hopfs["U2"]
    assert U.kind == "Enveloping" and U.degree == 4
    assert m.lies["aff2"].structure_constants()[(0, 1)] == {1: 1}


def test_unknown_label_error_position():
    text = "[lie bad]\nbasis = x y\nbracket x y = x + z\n"
    with pytest.raises(ModelError) as exc:
        parse_text(text)
    assert exc.value.message == "unknown basis label z"
    assert exc.value.line == 3
    assert text.splitlines()[2][exc.value.col - 1] == "z"


@pytest.mark.parametrize("text,fragment", [
    ("[widget W]\n", "unknown section kind widget"),
    ("[hopf H]\nenveloping = nope\n", "unknown Lie algebra nope"),
    ("[group G]\ncyclic = 2\n[group G]\ncyclic = 3\n", "duplicate name G"),
    ("[group G]\ncyclic = 2\n[hopf H]\ngroup = G\ndegree = 1\n", "at least 2"),
    ("[group G]\nelements = e g\ne g\ng g\n", "not a permutation"),
    ("[lie L]\nbasis = x y z\nbracket x y = x\nbracket y z = x\nbracket z x = y\n", "Jacobi"),
    ("[group G]\ncyclic = 3\n[hopf A]\ngroup = G\n[hopf B]\ngroup = G\n[morphism f]\nsource = A\ntarget = B\ng = 2*g\n",
     "not grouplike"),
    ("degree = 3\nfoo = 1\n", "unexpected top-level entry foo"),
    ("[lie L]\nbasis = x\nbracket x x = 2 $ x\n", "unexpected character"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ModelError) as exc:
        parse_text(text)
    assert fragment in str(exc.value)
    assert exc.value.line >= 1


@pytest.mark.parametrize("path", FIXTURE_FILES, ids=os.path.basename)
def test_round_trip(path):
    m = parse_model(path)
    again = parse_text(format_model(m))
    assert signature(again) == signature(m)
    assert format_model(again) == format_model(m)


def run(args, tmp_path=None):
    return subprocess.run([sys.executable, "-m", "hopfcat.cli", *args], capture_output=True, text=True)


def test_exit_codes(fixtures_dir):
    h2 = os.path.join(fixtures_dir, "h2.model")
    tampered = os.path.join(fixtures_dir, "tampered.model")
    assert main(["check-axioms", h2, "H2"]) == 0
    assert main(["verify-ses", tampered, "Dbad"]) == 1
    assert main(["verify-ses", tampered, "nope"]) == 2
    assert main(["frobnicate", h2]) == 2
    assert main(["check-axioms", "/no/such/file"]) == 2
    assert main(["check-axioms", h2, "--degree", "1"]) == 2


def test_report_shape(fixtures_dir, tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["decompose", os.path.join(fixtures_dir, "h2.model"), "H2", "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text(encoding="utf-8"))
    assert list(rep) == ["schema", "command", "model", "degree", "passed", "results"]
    assert rep["schema"] == SCHEMA
    r = rep["results"][0]
    assert r["torsion"]["lie_basis"] == ["x"]
    assert r["free"]["group"] == ["e", "g"]
    assert r["maps"]["i"] == {"x": "x"}
    assert r["maps"]["s"] == {"e": "1", "g": "g"}
    assert r["comparison"]["injective_at_d"] and r["comparison"]["surjective_at_d"]


def test_torsion_of_group_algebra(fixtures_dir, capsys):
    assert main(["torsion", os.path.join(fixtures_dir, "h2.model"), "KC2"]) == 0
    rep = json.loads(capsys.readouterr().out)
    r = rep["results"][0]
    assert r["torsion"]["dims_by_degree"] == [1] * 5
    assert r["free"]["group"] == ["e", "g"]


def test_degree_override_and_text(fixtures_dir, capsys):
    assert main(["check-axioms", os.path.join(fixtures_dir, "h2.model"), "H2", "--degree", "2", "--format", "text"]) == 0
    text = capsys.readouterr().out
    assert "(d=2)" in text and text.rstrip().endswith("PASS")


def test_witness_in_failing_report(fixtures_dir, capsys):
    assert main(["verify-diagram", os.path.join(fixtures_dir, "tampered.model")]) == 1
    rep = json.loads(capsys.readouterr().out)
    failing = [c for r in rep["results"] for v in r["verdicts"] for c in v["checks"] if not c["passed"]]
    assert failing and all("witness" in c for c in failing)


def test_truncation_guidance(tmp_path):
    path = tmp_path / "t.model"
    path.write_text("[lie L]\nbasis = t\n[hopf U]\nenveloping = L\n"
                    "[morphism f]\nsource = U\ntarget = U\nt = t^3\n", encoding="utf-8")
    proc = run(["check-axioms", str(path), "--degree", "2"])
    assert proc.returncode == 2
    assert "raise the truncation degree" in proc.stderr


def test_subprocess_entry_point_is_deterministic(fixtures_dir):
    path = os.path.join(fixtures_dir, "aff2.model")
    a = run(["factorize", path])
    b = run(["factorize", path])
    assert a.returncode == 0 and a.stdout == b.stdout


def test_every_command_dispatches(fixtures_dir, capsys):
    path = os.path.join(fixtures_dir, "h2.model")
    for cmd in COMMANDS:
        assert main([cmd, path]) == 0
        json.loads(capsys.readouterr().out)
