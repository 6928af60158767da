import json

import pytest

from wreathlab.algebra import cyclic_group_algebra
from wreathlab.cells import identity_wdl_cell
from wreathlab.cli import EXAMPLES, cli_main
from wreathlab.io import load_bundle, save_bundle, to_bundle
from wreathlab.linalg import Mat, identity
from wreathlab.ore import triangular_pqqd
from wreathlab.wdl import Wdl, flip_law

Z2 = cyclic_group_algebra(2)


def run(capsys, *argv):
    code = cli_main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def swap_file(tmp_path):
    path = tmp_path / "swap.json"
    save_bundle(flip_law(Z2, Z2), path)
    return path


@pytest.fixture
def broken_file(triangle, tmp_path):
    _, w = triangle
    psi = w.psi.array().copy()
    psi[0, 3] += 1
    path = tmp_path / "broken.json"
    save_bundle(Wdl(w.A, w.B, Mat(psi)), path)
    return path


def test_example_triangle_json(capsys):
    code, out, _ = run(capsys, "example", "triangle", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["passed"]
    assert doc["psi"]["g⊗g"] == ["-5/4", "3/4", "3/4", "-1/4"]
    assert doc["wreath_dim"] == 3


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_every_example_passes(capsys, name):
    code, out, _ = run(capsys, "example", name, "--quiet")
    assert (code, out.strip()) == (0, "PASS")


def test_example_bundle_written(capsys, tmp_path):
    out = tmp_path / "tri.json"
    code, _, _ = run(capsys, "example", "triangle", "--quiet", "--out", out)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "example" and doc["objects"]["wdl"]["kind"] == "wdl"


def test_check_wdl_swap(capsys, swap_file):
    code, out, _ = run(capsys, "check-wdl", swap_file)
    assert code == 0
    assert "PASS" in out


def test_check_wdl_broken_names_the_diagram(capsys, broken_file):
    code, out, _ = run(capsys, "check-wdl", broken_file, "--json")
    assert code == 1
    failed = [c for c in json.loads(out)["report"]["checks"] if not c["passed"]]
    assert failed and all(c["witness"] for c in failed)
    assert any(c["name"].startswith("multiplicative") for c in failed)


def test_schema_error_exits_two(capsys, tmp_path):
    path = tmp_path / "bad.json"
    data = to_bundle(flip_law(Z2, Z2))
    data["psi"]["entries"][0][0] = "x"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "check-wdl", path)
    assert code == 2
    assert "/psi/entries/0/0" in err


def test_unknown_command_exits_two(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_wreath_writes_bundle(capsys, swap_file, tmp_path):
    out = tmp_path / "wreath.json"
    code, _, _ = run(capsys, "wreath", swap_file, "--out", out, "--quiet")
    assert code == 0
    wp = load_bundle(out)
    assert wp.product.dim == 4


def test_factor_and_roundtrip(capsys, triangle, tmp_path):
    fact, w = triangle
    save_bundle(fact, tmp_path / "fact.json")
    save_bundle(w, tmp_path / "law.json")
    code, out, _ = run(capsys, "factor", tmp_path / "fact.json", "--json")
    assert code == 0
    assert json.loads(out)["psi"] == w.psi.to_json()
    assert run(capsys, "roundtrip", tmp_path / "fact.json", "--quiet")[0] == 0
    assert run(capsys, "roundtrip", tmp_path / "law.json", "--quiet")[0] == 0
    assert run(capsys, "validate", tmp_path / "fact.json", "--quiet")[0] == 0


def test_cells(capsys, triangle, tmp_path):
    _, w = triangle
    save_bundle(w, tmp_path / "law.json")
    save_bundle(identity_wdl_cell(w), tmp_path / "cell.json", ("law.json", "law.json"))
    assert run(capsys, "check-cell", tmp_path / "cell.json", "--quiet")[0] == 0
    out = tmp_path / "lifted" / "rho.json"
    out.parent.mkdir()
    code, stdout, _ = run(capsys, "lift-cell", tmp_path / "cell.json", "--out", out, "--json")
    assert code == 0
    assert Mat.from_json(json.loads(stdout)["rho"]) == identity(3)
    assert run(capsys, "check-cell", out, "--quiet")[0] == 0


@pytest.fixture
def pqqd_file(tmp_path):
    path = tmp_path / "pqqd.json"
    save_bundle(triangular_pqqd(), path)
    return path


def test_ore_check(capsys, pqqd_file):
    code, out, _ = run(capsys, "ore", "--pqqd", pqqd_file, "--check", 3, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["N"] == 3 and doc["classical"] is False


def test_ore_default_degree_from_environment(capsys, pqqd_file, monkeypatch):
    monkeypatch.setenv("WREATHLAB_DEFAULT_N", "2")
    code, out, _ = run(capsys, "ore", "--pqqd", pqqd_file, "--json")
    assert code == 0 and json.loads(out)["N"] == 2


def test_ore_mult(capsys, pqqd_file, tmp_path):
    # X * E11 = psi(X (x) E11) = E11 X + E12 X^2
    code, out, _ = run(capsys, "ore", "--pqqd", pqqd_file, "--check", 2, "--json",
                       "--mult", '[[0,0,0],[1,0,1]]', '[[1,0,0]]')
    assert code == 0
    assert json.loads(out)["product"] == [["0", "0", "0"], ["1", "0", "0"], ["0", "1", "0"]]


def test_ore_mult_bad_poly(capsys, pqqd_file):
    code, _, err = run(capsys, "ore", "--pqqd", pqqd_file, "--check", 1, "--mult", "[[1,0]]", "[[1,0,0]]")
    assert code == 2 and "error" in err
