import json

import pytest

from spectral_split.constants import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_RESOURCE_CAP,
    FAMILY_CYCLE,
    FAMILY_STAR,
    FAMILY_TILDE_D,
    JOBS_ENV_VAR,
)
from spectral_split.graph_core import NamedFamily, build_graph, make_family, to_graph6
from spectral_split.main import main

STAR_5 = to_graph6(make_family(NamedFamily(FAMILY_STAR, 5)))
TILDE_D_5 = to_graph6(make_family(NamedFamily(FAMILY_TILDE_D, 5)))


def test_family_prints_graph6(capsys):
    assert main(["family", "tilde-d", "5"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == TILDE_D_5
    assert main(["family", "star", "4"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == to_graph6(make_family(NamedFamily(FAMILY_STAR, 4)))


def test_family_rejects_bad_parameter(capsys):
    assert main(["family", "cycle", "2"]) == EXIT_INPUT_ERROR
    assert "ParameterOutOfRange" in capsys.readouterr().err


def test_rho_of_star(capsys):
    assert main(["rho", "D?{"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("rho = ")
    assert float(lines[0].split("=")[1]) == pytest.approx(2.0, abs=1e-9)
    assert lines[1].startswith("enclosure = [")
    assert lines[2].startswith("enclosure_exact = [")


def test_rho_exact(capsys):
    assert main(["rho", "D?{", "--exact"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "char_poly = x**5 - 4*x**3" in out
    assert "largest_root in (" in out


def test_rho_malformed_graph6(capsys):
    assert main(["rho", "~"]) == EXIT_INPUT_ERROR
    assert "MalformedGraph6" in capsys.readouterr().err
    assert main(["rho", "Dé{"]) == EXIT_INPUT_ERROR
    assert "MalformedGraph6" in capsys.readouterr().err


def test_transform_split(capsys):
    assert main(["transform", "split", STAR_5, "--vertex", "0", "--part", "1,2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == to_graph6(build_graph(7, [(0, 1), (0, 2), (0, 6), (3, 6), (4, 6), (5, 6)]))
    assert lines[1].startswith("verdict: Less")


def test_transform_subdivide_tilde_d(capsys):
    assert main(["transform", "subdivide", TILDE_D_5, "--edge", "0,1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == to_graph6(build_graph(7, [(0, 2), (0, 3), (0, 6), (1, 4), (1, 5), (1, 6)]))
    assert lines[1].startswith("verdict: Equal")


def test_transform_expand(capsys):
    star9 = to_graph6(make_family(NamedFamily(FAMILY_STAR, 9)))
    args = ["transform", "expand", star9, "--vertex", "0", "--parts", "1,2,3;4,5,6;7,8,9"]
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[1].startswith("verdict: Equal")


def test_transform_errors(capsys):
    cycle = to_graph6(make_family(NamedFamily(FAMILY_CYCLE, 4)))
    assert main(["transform", "split", cycle, "--vertex", "0", "--part", "1"]) == EXIT_INPUT_ERROR
    assert "DegreeTooSmall" in capsys.readouterr().err
    assert main(["transform", "subdivide", STAR_5]) == EXIT_INPUT_ERROR


def test_witness(capsys):
    assert main(["witness", STAR_5, "--vertex", "0", "--part", "1,2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "case = 2 (two_leaves)" in out
    assert "sound = True  strict = True" in out


def test_enumerate(capsys):
    assert main(["enumerate", "3"]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 4


def test_verify_size_cap(tmp_path, capsys):
    assert main(["verify", "--max-n", "20", "--out", str(tmp_path / "r.json")]) == EXIT_RESOURCE_CAP
    assert "SizeCap" in capsys.readouterr().err


def test_verify_writes_identical_reports(tmp_path, capsys):
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    for path in paths:
        code = main(["verify", "--max-n", "3", "--theorems", "subdivision,split_nonadjacent", "--out", str(path)])
        assert code == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()
    report = json.loads(paths[0].read_text(encoding="utf-8"))
    assert report["summary"]["verified"] is True
    assert report["config"]["max_n"] == 3
    assert "instances=" in capsys.readouterr().out


def test_verify_reads_config_file(tmp_path, capsys):
    config = tmp_path / "campaign.json"
    config.write_text(json.dumps({"max_n": 2, "theorems": ["split_nonadjacent"]}), encoding="utf-8")
    out = tmp_path / "report.json"
    assert main(["verify", "--config", str(config), "--max-n", "3", "--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["config"]["max_n"] == 3
    assert report["config"]["theorems"] == ["split_nonadjacent"]
    assert report["theorems"]["split_nonadjacent"]["instances"] == 6


def test_verify_missing_config_file(tmp_path):
    assert main(["verify", "--config", str(tmp_path / "missing.json")]) == EXIT_INPUT_ERROR


def test_verify_bad_jobs_env(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv(JOBS_ENV_VAR, "many")
    assert main(["verify", "--max-n", "2", "--out", str(tmp_path / "r.json")]) == EXIT_INPUT_ERROR
    assert JOBS_ENV_VAR in capsys.readouterr().err
