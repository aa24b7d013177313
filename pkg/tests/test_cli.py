from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from saxlgraph import __version__
from saxlgraph.catalog import catalog_path
from saxlgraph.cli import main


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_on_catalog_group(capsys):
    code, out, _ = run(capsys, "info", str(catalog_path("M11")), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 7920 and data["degree"] == 11 and data["primitive"] is True


def test_info_reports_blocks(tmp_path: Path, capsys):
    f = tmp_path / "d8.grp"
    f.write_text("degree: 4\ngens:\n(1,2,3,4)\n(1,3)\n")
    code, out, _ = run(capsys, "info", str(f), "--json")
    data = json.loads(out)
    assert code == 0 and data["primitive"] is False
    assert data["minimal_block_systems"][0]["blocks_1indexed"] == [[1, 3], [2, 4]]


def test_saxl_report_is_deterministic(tmp_path: Path, capsys):
    # every invariant is exact on this instance, so two runs must agree byte for byte
    run(capsys, "construct", "pgl2_pairs", "7", "--out", str(tmp_path))
    grp = next(tmp_path.glob("*.grp"))
    code, first, _ = run(capsys, "saxl", str(grp), "--json", "--seed", "3")
    assert code == 0
    code, second, _ = run(capsys, "saxl", str(grp), "--json", "--seed", "3")
    assert first == second
    data = json.loads(first)
    assert data["seed"] == 3 and "timing_s" not in data
    for key in ("clique", "independence", "chromatic", "total_domination", "max_minimal_base"):
        assert data["invariants"][key]["lower"] == data["invariants"][key]["upper"]


def test_saxl_report_on_catalog_cosets(capsys):
    code, out, _ = run(capsys, "saxl", str(catalog_path("S7")), str(catalog_path("S7", "AGL1(7)")), "--json",
                       "--budget-ms", "1000")
    assert code == 0
    data = json.loads(out)
    assert data["saxl"]["n"] == 120 and data["saxl"]["r"] == 1 and data["saxl"]["valency"] == 42
    assert data["probability"]["q2"] == "13/20" and data["probability"]["qhat"] == "73/60"
    assert data["invariants"]["hamiltonian"]["found"] is True
    assert data["invariants"]["common_neighbour"]["holds"] is True
    assert data["version"] == __version__


def test_saxl_text_and_adjacency_file(tmp_path: Path, capsys):
    adj = tmp_path / "adj.txt"
    code, out, _ = run(capsys, "saxl", str(catalog_path("M11")), str(catalog_path("M11", "2.S4")),
                       "--adjacency", str(adj), "--budget-ms", "300")
    assert code == 0
    assert "valency     48" in out
    lines = adj.read_text().splitlines()
    assert len(lines) == 165
    assert all(len(line.split(":")[1].split()) == 48 for line in lines)


def test_natural_action_without_base_two(capsys):
    code, out, _ = run(capsys, "saxl", str(catalog_path("M11")), "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "b(G)>2" and data["saxl"]["valency"] == 0


def test_construct_round_trip(tmp_path: Path, capsys):
    code, out, _ = run(capsys, "construct", "gl2_vectors", "5", "--out", str(tmp_path))
    assert code == 0
    grp = Path(out.strip())
    side = json.loads(grp.with_suffix(".json").read_text())
    assert side["n"] == 24 and side["expected_graph"]["kind"] == "multipartite"
    code, out, _ = run(capsys, "invariants", str(grp), "--json")
    data = json.loads(out)
    assert code == 0
    inv = data["invariants"]
    assert inv["clique"]["lower"] == inv["clique"]["upper"] == 6
    assert inv["total_domination"]["upper"] == 2 and inv["max_minimal_base"]["upper"] == 2


def test_construct_list(capsys):
    code, out, _ = run(capsys, "construct", "--list", "--json")
    assert code == 0 and "paley_affine" in json.loads(out)


@pytest.mark.parametrize("argv", [["construct", "no_such_family"], ["construct", "gl2_vectors", "6"],
                                  ["saxl", "/nonexistent/file.grp"]])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("saxlgraph: error:")


def test_malformed_file_names_the_line(tmp_path: Path, capsys):
    f = tmp_path / "bad.grp"
    f.write_text("# comment\ndegree: 5\ngens:\n(1,2,3)\n(1,7)\n")
    code, _, err = run(capsys, "info", str(f))
    assert code == 2
    assert f"{f}:5:" in err


def test_domain_limit_is_enforced(capsys):
    code, _, err = run(capsys, "saxl", str(catalog_path("M12")), str(catalog_path("M12", "A4xS3")),
                       "--domain-limit", "100")
    assert code == 2 and "domain limit" in err


def test_non_transitive_natural_action(tmp_path: Path, capsys):
    f = tmp_path / "g.grp"
    f.write_text("degree: 4\ngens:\n(1,2)\n")
    code, _, err = run(capsys, "saxl", str(f))
    assert code == 2 and "not transitive" in err


def test_reproduce_exit_code_reflects_claims(capsys):
    code, out, _ = run(capsys, "reproduce", "prime-valency", "--json")
    data = json.loads(out)
    assert data["failed"] == 0 and code == 0


def test_argparse_errors_and_version():
    res = subprocess.run([sys.executable, "-m", "saxlgraph.cli", "bogus"], capture_output=True, text=True)
    assert res.returncode == 2
    res = subprocess.run([sys.executable, "-m", "saxlgraph.cli", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and __version__ in res.stdout
