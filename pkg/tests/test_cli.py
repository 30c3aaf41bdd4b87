import json
import subprocess
import sys

import pytest

from conftest import HOPF, TREFOIL, VIRTUAL_TREFOIL


@pytest.fixture
def empty_weights(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("[]")
    return str(p)


def test_genus(cli):
    assert cli("genus", VIRTUAL_TREFOIL) == (0, "1\n", "")


def test_project_example(cli, empty_weights):
    code, out, _ = cli("project", HOPF, "--weights", empty_weights, "--base", "01")
    assert (code, out) == (0, ";\n")


def test_parse_roundtrip(cli):
    code, out, _ = cli("parse", " O3+ U1+ U3+ O1+ ")
    assert (code, out) == (0, "O3+U1+U3+O1+\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["parse", "O1+U1"],
        ["genus", "O1+O1+"],
        ["bridge", "X"],
        ["project", HOPF, "--base", "0"],
    ],
)
def test_invalid_input_exits_1(cli, argv):
    code, out, err = cli(*argv)
    assert code == 1 and err


def test_inadmissible_exits_2(cli, tmp_path):
    p = tmp_path / "w.json"
    p.write_text(json.dumps([{"component": 0, "position": 0}, {"component": 0, "position": 1}]))
    code, _, err = cli("parity", VIRTUAL_TREFOIL, "--weights", str(p))
    assert code == 2 and "admissible" in err


def test_cap_exits_3(cli):
    assert cli("minsub", TREFOIL, "--cap", "2")[0] == 3
    assert cli("ascending", TREFOIL, "--oracle", "--cap", "2")[0] == 3


def test_oracle_mismatch_exits_4(cli):
    assert cli("oracle", HOPF, "--expect", "O1+U1+")[0] == 4
    assert cli("oracle", HOPF, "--expect", HOPF)[0] == 0


def test_oracle_over_all_colourings(cli):
    code, out, _ = cli("oracle", VIRTUAL_TREFOIL)
    assert code == 0 and out.startswith("8/8")


@pytest.mark.parametrize(
    "argv",
    [
        ["parse", TREFOIL],
        ["genus", TREFOIL],
        ["faces", VIRTUAL_TREFOIL],
        ["weightings", VIRTUAL_TREFOIL, "--all"],
        ["parity", TREFOIL],
        ["project", TREFOIL],
        ["cover", VIRTUAL_TREFOIL],
        ["oracle", VIRTUAL_TREFOIL],
        ["moves", "O1+U1+"],
        ["fuzz", "--steps", "50", "--max-crossings", "5"],
        ["sweep", "--max-crossings", "1"],
        ["bridge", TREFOIL],
        ["ascending", TREFOIL, "--oracle"],
        ["minsub", VIRTUAL_TREFOIL, "--all-witnesses"],
        ["random", "--seed", "4", "--count", "3"],
    ],
)
def test_json_mode_and_determinism(cli, argv):
    code, out, _ = cli(*argv, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == f"vlink.{argv[0]}/1"
    assert cli(*argv, "--json")[1] == out
    code, text, _ = cli(*argv)
    assert code == 0 and text.strip()


def test_desk_values_via_cli(cli):
    assert cli("bridge", TREFOIL)[1] == "3\n"
    assert cli("ascending", VIRTUAL_TREFOIL)[1] == "0\n"
    doc = json.loads(cli("minsub", VIRTUAL_TREFOIL, "--json", "--all-witnesses")[1])
    assert doc["minimum"] == 0 and doc["witnesses"] == [[1], [2]]


def test_moves_without_additions(cli):
    out = cli("moves", "O1+U1+", "--no-additions")[1]
    assert out.strip() == "R1_remove c=1"


def test_fuzz_timing_is_opt_in(cli):
    doc = json.loads(cli("fuzz", "--steps", "20", "--json")[1])
    assert "seconds" not in doc
    doc = json.loads(cli("fuzz", "--steps", "20", "--json", "--timing")[1])
    assert doc["seconds"] >= 0


def test_console_script_runs():
    r = subprocess.run([sys.executable, "-m", "vlink.cli", "genus", TREFOIL], capture_output=True, text=True)
    assert (r.returncode, r.stdout) == (0, "0\n")
