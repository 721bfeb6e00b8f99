import json

import pytest

from chromacode import example1_spec
from chromacode.cli import main


@pytest.fixture()
def ex1_files(tmp_path):
    spec, pmf = example1_spec()
    spec_path = tmp_path / "f.json"
    pmf_path = tmp_path / "p.json"
    spec_path.write_text(spec.to_json())
    pmf_path.write_text(pmf.to_json())
    return str(spec_path), str(pmf_path)


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out.strip()
    return rc, out


def test_graph_subcommand(capsys):
    rc, out = run(capsys, "graph", "--kind", "cycle", "--size", "4")
    assert rc == 0
    assert json.loads(out) == {"vertices": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}


def test_graph_custom_edges(capsys):
    rc, out = run(capsys, "graph", "--kind", "custom", "--size", "3", "--edges", "0-1,1-2")
    assert rc == 0
    assert json.loads(out)["edges"] == [[0, 1], [1, 2]]


def test_graph_file_roundtrip(tmp_path, capsys):
    p = tmp_path / "g.json"
    p.write_text('{"vertices": 3, "edges": [[0, 1]]}')
    rc, out = run(capsys, "graph", "--graph", str(p))
    assert rc == 0
    assert json.loads(out)["edges"] == [[0, 1]]


def test_chargraph_subcommand(ex1_files, capsys):
    spec_path, pmf_path = ex1_files
    rc, out = run(capsys, "chargraph", "--spec", spec_path, "--pmf", pmf_path, "--source", "1")
    assert rc == 0
    assert json.loads(out)["edges"] == [[0, 1], [0, 3], [1, 2], [2, 3]]
    rc, out = run(capsys, "chargraph", "--spec", spec_path, "--pmf", "uniform", "--source", "2")
    assert rc == 0
    assert json.loads(out)["edges"] == [[0, 1]]


def test_power_subcommand(capsys):
    rc, out = run(capsys, "power", "--kind", "cycle", "--size", "5", "--power", "2")
    assert rc == 0
    d = json.loads(out)
    assert d["vertices"] == 25
    assert len(d["edges"]) == 150


def test_color_exact(capsys):
    rc, out = run(capsys, "color", "--kind", "cycle", "--size", "5", "--scheme", "exact")
    assert rc == 0
    assert json.loads(out)["chi"] == 3


def test_color_odd_cycle_power(capsys):
    rc, out = run(
        capsys, "color", "--kind", "cycle", "--size", "5", "--power", "2",
        "--scheme", "odd-cycle",
    )
    assert rc == 0
    assert json.loads(out)["chi"] == 8


def test_color_fractional(capsys):
    rc, out = run(
        capsys, "color", "--kind", "cycle", "--size", "5", "--scheme", "fractional",
        "--fold", "2",
    )
    assert rc == 0
    d = json.loads(out)
    assert d["chi_b"] == 5 and d["chi_f"] == "5/2"


def test_entropy_brute(capsys):
    rc, out = run(capsys, "entropy", "--kind", "cycle", "--size", "5", "--bound", "brute")
    assert rc == 0
    assert abs(json.loads(out)["lo"] - 1.5219) < 5e-3


def test_entropy_odd_cycle_window(capsys):
    rc, out = run(
        capsys, "entropy", "--kind", "cycle", "--size", "5", "--power", "3",
        "--bound", "odd-cycle",
    )
    assert rc == 0
    d = json.loads(out)
    assert d["alpha_n_window"] == [12, 15]


def test_spectral_eig(capsys):
    rc, out = run(capsys, "spectral", "--kind", "cycle", "--size", "5", "--op", "eig")
    assert rc == 0
    d = json.loads(out)
    assert len(d["eigenvalues"]) == 5
    assert abs(d["eigenvalues"][0] - 2.0) < 1e-9


def test_spectral_block_gct(capsys):
    rc, out = run(
        capsys, "spectral", "--kind", "cycle", "--size", "5", "--power", "2",
        "--op", "gct", "--mode", "block",
    )
    assert rc == 0
    d = json.loads(out)
    assert d["scalar_envelope"] == [-12.0, 12.0]


def test_spectral_bounds(capsys):
    rc, out = run(
        capsys, "spectral", "--kind", "cycle", "--size", "5", "--power", "2",
        "--op", "bounds", "--variant", "lambda1-window",
    )
    assert rc == 0
    d = json.loads(out)
    assert d["lower"] <= 12 <= d["upper"]


def test_expansion_subcommand(capsys):
    rc, out = run(
        capsys, "expansion", "--kind", "cycle", "--size", "5", "--power", "2",
        "--subset", "0,1,2",
    )
    assert rc == 0
    d = json.loads(out)
    assert d["lower"] - 1e-9 <= d["rate_float"] <= d["upper"] + 1e-9


def test_simulate_subcommand(ex1_files, capsys):
    spec_path, pmf_path = ex1_files
    rc, out = run(
        capsys, "simulate", "--spec", spec_path, "--pmf", pmf_path,
        "--n", "1", "--samples", "500", "--seed", "7",
    )
    assert rc == 0
    d = json.loads(out)
    assert d["lossless"] is True
    assert abs(d["rates"][0] - 1.0) < 0.1


def test_reproduce_known_good_case(capsys):
    rc, out = run(capsys, "reproduce", "--case", "example1")
    assert rc == 0
    assert "FAIL" not in out.replace("FAIL: 0", "")


def test_reproduce_known_defect_case(capsys):
    # the published 1.37 per-symbol entropy value is not attainable; the
    # reproduce table reports it honestly as a failing row
    rc, out = run(capsys, "reproduce", "--case", "example2")
    assert rc == 1
    assert "[FAIL]" in out


def test_usage_error_exit_code(capsys):
    rc = main(["color", "--kind", "complete", "--size", "4", "--scheme", "odd-cycle"])
    assert rc == 2


def test_guard_exit_code(capsys):
    rc = main(["power", "--kind", "cycle", "--size", "5", "--power", "9"])
    assert rc == 3
    err = capsys.readouterr().err
    assert json.loads(err)["error"] == "guard"


def test_missing_file_exit_code(tmp_path):
    rc = main(["chargraph", "--spec", str(tmp_path / "nope.json"), "--pmf", "uniform"])
    assert rc == 2
