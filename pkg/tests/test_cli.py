import json

import pytest

from cutnumber import __version__
from cutnumber.cli import main


def _error(err: str) -> dict:
    return json.loads(err[err.index("{") :])


def test_certify_prints_certificate(capsys):
    assert main(["-q", "family", "certify", "--m", "4", "--n", "1,1,1,1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "nonsingularity"
    assert data["tool"] == {"name": "cutnumber", "version": __version__}
    assert data["params"] == {"m": 4, "n": [1, 1, 1, 1], "N": 1}


def test_non_primitive_character_is_an_error(capsys):
    assert main(["-q", "family", "certify", "--m", "2", "--n", "2,2"]) == 1
    assert _error(capsys.readouterr().err)["error"] == "phi_not_primitive"


def test_certificate_file_is_reproducible(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for path in (first, second):
        argv = ["-q", "family", "certify", "--m", "3", "--n=-1,2,3", "--json", str(path)]
        assert main(argv) == 0
    assert first.read_bytes() == second.read_bytes()
    assert json.loads(first.read_text())["params"]["n"] == [-1, 2, 3]


def test_relative_json_path_uses_output_dir(tmp_path):
    argv = ["-q", "--output-dir", str(tmp_path), "family", "f4", "--m", "3", "--n", "1,0,1"]
    assert main(argv + ["--json", "f4.json"]) == 0
    assert json.loads((tmp_path / "f4.json").read_text())["kind"] == "f4_obstruction"


def test_unwritable_json_path_is_reported(tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory")
    argv = ["-q", "family", "certify", "--m", "2", "--n", "1,1"]
    assert main(argv + ["--json", str(blocker / "out.json")]) == 1
    error = _error(capsys.readouterr().err)
    assert error["error"] == "output"
    assert error["details"]["path"] == str(blocker / "out.json")
    assert sorted(p.name for p in tmp_path.iterdir()) == ["blocker"]


def test_non_ascii_exponent_is_a_syntax_error(capsys):
    assert main(["-q", "group", "check", "--a", "x^²", "--b", "y", "--c", "z"]) == 1
    error = _error(capsys.readouterr().err)
    assert error["error"] == "syntax"
    assert error["details"]["column"] == 3


def test_case_table(capsys):
    assert main(["-q", "family", "matrix", "--m", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].split() == ["12", "t^{n1}-1", "0", "0", "1-t^{n3}", "1-t^{n4}", "0"]


def test_matrix_for_a_member(capsys, tmp_path):
    path = tmp_path / "jets.json"
    argv = ["-q", "family", "matrix", "--m", "3", "--n", "1,1,1", "--jets", "--json", str(path)]
    assert main(argv) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3
    data = json.loads(path.read_text())
    assert data["jets"][0][0] == [0, 1]
    assert main(["-q", "family", "matrix", "--m", "1", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "[0x0 matrix]"


@pytest.mark.parametrize(
    "argv",
    [
        ["family", "matrix", "--m", "4", "--N", "5"],
        ["family", "matrix", "--m", "4", "--full"],
        ["family", "certify", "--m", "4"],
        ["family", "certify", "--m", "4", "--n", "1,x"],
        ["family", "explode"],
        ["-v", "-q", "group", "check", "--a", "x", "--b", "y", "--c", "z"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 1
    assert _error(capsys.readouterr().err)["error"] == "usage"


def test_missing_command_prints_help(capsys):
    assert main([]) == 1
    assert "usage" in capsys.readouterr().err


def test_version(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_sweep(capsys, tmp_path):
    path = tmp_path / "sweep.json"
    argv = ["-q", "family", "sweep", "--count", "3", "--max-m", "3", "--seed", "5"]
    assert main(argv + ["--json", str(path)]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3
    data = json.loads(path.read_text())
    assert data["seed"] == 5
    assert len(data["certificates"]) == 3


def test_alex_rank(capsys):
    assert main(["-q", "alex", "rank", "--pres", "torus", "--phi", "1,0,0"]) == 0
    assert capsys.readouterr().out.strip() == "rank 0"
    assert main(["-q", "alex", "rank", "--pres", "free2", "--phi", "1,0"]) == 0
    assert capsys.readouterr().out.strip() == "rank 1"
    assert main(["-q", "alex", "rank", "--pres", "torus", "--phi", "2,0,0"]) == 1
    assert _error(capsys.readouterr().err)["error"] == "phi_not_primitive"


def test_alex_rank_of_a_file(tmp_path, capsys):
    path = tmp_path / "klein.txt"
    path.write_text("gens a b\nrel a b a^-1 b\n")
    assert main(["-q", "alex", "rank", "--pres", str(path), "--phi", "1,0"]) == 0
    assert capsys.readouterr().out.strip() == "rank 0"
    path.write_text("gens a b\nrel a b ?\n")
    assert main(["-q", "alex", "rank", "--pres", str(path), "--phi", "1,0"]) == 1
    details = _error(capsys.readouterr().err)["details"]
    assert details["line"] == 2


def test_alex_rank_certificate_covers_only_its_character(tmp_path):
    path = tmp_path / "rank.json"
    argv = ["-q", "alex", "rank", "--pres", "torus", "--phi", "1,0,0", "--json", str(path)]
    assert main(argv) == 0
    data = json.loads(path.read_text())
    assert data["exhaustive"] is False
    statements = [c["statement"] for c in data["conclusions"]]
    assert statements == ["c(X, phi) = 1 for phi = (1,0,0)", "1 <= c(X) <= 3"]


def test_alex_obstruct(capsys):
    assert main(["-q", "alex", "obstruct", "--pres", "torus", "--samples", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["kind"] == "alexander_rank"
    assert main(["-q", "alex", "obstruct", "--pres", "free2", "--samples", "2"]) == 2


def test_group_commands(capsys):
    assert main(["-q", "group", "check", "--a", "xy", "--b", "[y,z]", "--c", "z^-1"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["-q", "group", "fox", "--word", "[x,y]", "--gens", "x,y"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [line.split(":")[0] for line in lines] == ["d/dx", "d/dy"]


def test_magnus_commands(capsys):
    argv = ["-q", "magnus", "weight", "--word", "[x,[x,[x,y]]]", "--gens", "x,y"]
    assert main(argv) == 0
    assert capsys.readouterr().out.strip() == "4"
    equal = ["-q", "magnus", "equal", "--u", "x y", "--v", "y x", "--gens", "x,y"]
    assert main(equal) == 2
    assert capsys.readouterr().out.strip() == "false"
    assert main(equal + ["--k", "2"]) == 0
    assert main(["-q", "magnus", "jacobi", "--m", "4"]) == 0
    assert capsys.readouterr().out.strip().endswith("true")
