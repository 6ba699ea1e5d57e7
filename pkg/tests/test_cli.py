import json
import subprocess
import sys

import pytest


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "uqcat.cli", *args],
        capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run_cli(*args)
    assert code == 0, err
    return json.loads(out)


def test_fusion_command():
    data = run_json("fusion", "--p", "2", "M:0,1", "M:0,1")
    assert data["schema_version"] == 1
    assert data["level"] == "module"
    assert data["decomposition"] == [{"label": "M:-1,1", "multiplicity": 1}]


def test_nichols_command():
    data = run_json("nichols", "--preset", "rank1", "--p", "3", "--max-degree", "5")
    assert data["hilbert"] == [1, 1, 1, 0, 0, 0]
    assert data["total_dim"] == 3
    assert data["sufficiently_unrolled"]["ok"] is True


def test_nichols_relations_flag():
    data = run_json("nichols", "--preset", "rank1", "--p", "2",
                    "--max-degree", "3", "--relations")
    assert "relations" in data
    assert "2" in data["relations"]


def test_lattice_discriminant_command():
    data = run_json("lattice", "--preset", "triplet", "--p", "2", "discriminant")
    assert data["group"] == "Z4"
    assert data["Q"] == ["1", "zeta(8)", "-1", "zeta(8)"]


def test_tensor_command():
    data = run_json("tensor", "--p", "2", "--left", "M:0,2", "--right", "M:1,2")
    assert data["decomposition"] == [{"label": "P:0,1", "multiplicity": 1}]


def test_uproll_command():
    data = run_json("uproll", "--preset", "triplet", "--p", "3")
    assert data["group"] == {"free_rank": 0, "torsion": [6]}
    assert data["degrees"] == [["4"]]


def test_hopf_command_reports():
    data = run_json("hopf", "--preset", "usp", "--p", "3", "--check", "all")
    assert all(item["status"] == "ok" for item in data["report"])


def test_hopf_sl2_substitution_flag():
    data = run_json("hopf", "--preset", "uq-h-sl2", "--p", "2", "--check", "antipode")
    assert data["sl2_substitution"] == "ok"


def test_usage_error_exit_code():
    code, out, err = run_cli("fusion", "--p", "2", "M:0,1")
    assert code == 2
    code, out, err = run_cli("fusion", "--p", "2", "Q:0,1", "M:0,1")
    assert code == 2


def test_determinism_byte_identical():
    cmds = [
        ("fusion", "--p", "3", "M:0,2", "Fbar:1,1"),
        ("nichols", "--preset", "a2", "--p", "2", "--max-degree", "7"),
        ("lattice", "--preset", "triplet", "--p", "3", "discriminant"),
        ("uproll", "--preset", "gl11"),
    ]
    for cmd in cmds:
        _, out1, _ = run_cli(*cmd)
        _, out2, _ = run_cli(*cmd)
        assert out1 == out2


def test_yd_check_command(tmp_path):
    # the 2-dimensional induced module at p = 2 in file form
    from fractions import Fraction
    from uqcat.grading import Bicharacter, GradingGroup
    from uqcat.yd import yd_verma
    g = GradingGroup(1)
    b = Bicharacter(g, [[Fraction(1)]])
    gamma = g.degree([Fraction(1)], [])
    mod = yd_verma(2, b, gamma, g.degree([Fraction(0)], []))
    payload = {
        "p": 2,
        "group": {"free_rank": 1, "torsion": []},
        "exponents": [["1"]],
        "gamma": ["1"],
        "degrees": [[str(d.free[0])] for d in mod.degrees],
        "action": [[x.to_json() for x in row] for row in mod.X],
        "coaction_components": [
            [[x.to_json() for x in row] for row in D] for D in mod.D
        ],
    }
    path = tmp_path / "ydmod.json"
    path.write_text(json.dumps(payload))
    code, out, err = run_cli("yd-check", str(path))
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_config_file(tmp_path):
    cfg = tmp_path / "conf.json"
    cfg.write_text(json.dumps({"p": 3, "max_degree": 4}))
    data = run_json("--config", str(cfg), "nichols", "--preset", "rank1")
    assert data["hilbert"] == [1, 1, 1, 0, 0]


def test_all_documented_presets_run():
    quick = [
        ("nichols", "--preset", "rank1", "--p", "2", "--max-degree", "4"),
        ("nichols", "--preset", "a2", "--p", "2", "--max-degree", "8"),
        ("nichols", "--preset", "parabolic2", "--p", "3", "--max-degree", "7"),
        ("nichols", "--preset", "fermions2", "--max-degree", "5"),
        ("hopf", "--preset", "uq-sl2", "--p", "3", "--check", "antipode"),
        ("hopf", "--preset", "uq-h-sl2", "--p", "2", "--check", "relations"),
        ("hopf", "--preset", "usp", "--p", "3", "--check", "relations"),
        ("hopf", "--preset", "ugl11", "--check", "relations"),
        ("lattice", "--preset", "triplet", "--p", "4", "discriminant"),
        ("uproll", "--preset", "triplet", "--p", "2"),
        ("uproll", "--preset", "sp", "--p", "3"),
        ("uproll", "--preset", "gl11"),
        ("fusion", "--p", "4", "P:0,2", "M:1,3"),
        ("tensor", "--p", "2", "--left", "M:1,1", "--right", "F:1/3"),
    ]
    for cmd in quick:
        code, out, err = run_cli(*cmd)
        assert code == 0, (cmd, err)
        json.loads(out)


def test_flat_braiding_schema_input(tmp_path):
    path = tmp_path / "braiding.json"
    path.write_text(json.dumps({
        "group": {"free_rank": 1, "torsion": []},
        "exponents": [["2/3"]],
        "degrees": [["1"]],
    }))
    data = run_json("nichols", "--input", str(path), "--max-degree", "6")
    assert data["total_dim"] == 3


def test_yd_check_sample_file():
    code, out, err = run_cli("yd-check", "sample_inputs/ydmod_p2.json")
    assert code == 0
    assert json.loads(out)["ok"] is True
