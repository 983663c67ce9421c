"""Golden tests for the command line: exit codes and machine-readable output."""

import json

import pytest

from vassred.cli import main
from conftest import MACHINES

FIG1 = str(MACHINES / "fig1.2cm")
LOOP = str(MACHINES / "loop.2cm")
CHEAT = str(MACHINES / "cheat.2cm")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def machine_doc(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "machine-readable")
    return code, json.loads(out)


@pytest.fixture
def built(tmp_path, capsys):
    paths = {}
    for which in "ab":
        paths[which] = tmp_path / f"{which}.vass"
        assert run(capsys, "build", which, FIG1, "--out", str(paths[which]))[0] == 0
    return paths


def test_theorem_figure_one(capsys):
    code, doc = machine_doc(capsys, "theorem", FIG1, "--fuel", "100", "--maxlen", "6")
    assert code == 0
    assert doc["language"] == {"verdict": "Distinguished", "witness": ["inc_1", "z_2", "z_2", "h"], "in_first": True}
    assert all(c["passed"] for c in doc["checks"])


def test_theorem_inconclusive(capsys):
    assert run(capsys, "theorem", CHEAT, "--fuel", "50", "--maxlen", "5")[0] == 4


def test_eq_exit_codes(capsys, built):
    assert run(capsys, "eq", str(built["a"]), str(built["a"]), "--maxlen", "5")[0] == 0
    code, out, _ = run(capsys, "eq", str(built["a"]), str(built["b"]), "--maxlen", "4")
    assert code == 1 and "inc_1·z_2·z_2·h" in out
    code, out, _ = run(capsys, "eq", str(built["a"]), str(built["b"]), "--maxlen", "3")
    assert code == 0 and "no difference up to length 3" in out
    assert run(capsys, "--budget", "2", "eq", str(built["a"]), str(built["b"]), "--maxlen", "6")[0] == 2
    assert run(capsys, "eq", str(built["a"]), str(built["b"]), "--maxlen", "6", "--budget", "2")[0] == 2


def test_eq_cover_semantics(capsys, built):
    assert run(capsys, "eq", str(built["a"]), str(built["b"]), "--maxlen", "4", "--semantics", "cover")[0] == 1


def test_contain(capsys, built):
    assert run(capsys, "contain", str(built["b"]), str(built["a"]), "--maxlen", "8")[0] == 0
    assert run(capsys, "contain", str(built["a"]), str(built["b"]), "--maxlen", "8")[0] == 1


def test_sim_and_twosim(capsys, built):
    code, doc = machine_doc(capsys, "sim", str(built["b"]), str(built["a"]), "--depth", "6")
    assert code == 1 and doc["depth"] == 4 and doc["witness"] == ["inc_1", "z_2", "z_2", "h"]
    assert run(capsys, "sim", str(built["a"]), str(built["b"]), "--depth", "6")[0] == 0
    assert run(capsys, "twosim", str(built["a"]), str(built["b"]), "--depth", "6")[0] == 1


def test_build_dot(capsys, tmp_path):
    dot = tmp_path / "b.dot"
    code, doc = machine_doc(capsys, "build", "b", FIG1, "--dot", str(dot))
    assert code == 0 and doc["states"] == 10 and doc["transitions"] == 11
    nodes = [l for l in dot.read_text().splitlines() if l.startswith('  "') and "->" not in l]
    assert len(nodes) == 10


def test_lang(capsys, built):
    code, doc = machine_doc(capsys, "lang", str(built["a"]), "--maxlen", "2")
    assert code == 0 and doc["words"] == [[], ["inc_1"], ["inc_1", "z_2"]]


def test_validate_and_run(capsys, tmp_path):
    assert run(capsys, "validate", FIG1)[0] == 0
    bad = tmp_path / "bad.2cm"
    bad.write_text("2cm a f\na inc_1 b\nb dec_1 f\nb z_2 f\n")
    assert run(capsys, "validate", str(bad))[0] == 3
    code, _, err = run(capsys, "run", str(bad))
    assert code == 3 and "line 3" in err
    code, doc = machine_doc(capsys, "run", FIG1, "--fuel", "10")
    assert code == 0 and doc["ops"] == ["inc_1", "z_2"]
    assert run(capsys, "run", LOOP, "--fuel", "100")[0] == 1


def test_syntax_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.vass"
    bad.write_text("{ not json")
    code, _, err = run(capsys, "lang", str(bad))
    assert code == 3 and "line 1" in err


def test_resolver_check(capsys):
    assert run(capsys, "resolver-check", FIG1, "--maxlen", "10")[0] == 0


def test_machine_output_is_stable(capsys, built):
    argv = ("eq", str(built["a"]), str(built["b"]), "--maxlen", "6")
    _, first = machine_doc(capsys, *argv)
    _, second = machine_doc(capsys, *argv)
    for doc in (first, second):
        doc["statistics"].pop("wall_time_s")
    assert first == second


def test_fuzz_is_seeded(capsys):
    _, first = machine_doc(capsys, "fuzz", "--count", "6", "--seed", "7", "--maxlen", "6")
    _, second = machine_doc(capsys, "fuzz", "--count", "6", "--seed", "7", "--maxlen", "6")
    assert first["results"] == second["results"]
    assert first["failed"] == 0
