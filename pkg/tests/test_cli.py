import json
import subprocess
import sys

import pytest

from cdgraph.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_json(capsys):
    code, out, _ = run_cli(capsys, "group", "--spec", '{"construct": "SL2", "q": 4}',
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"label": "SL2(4)", "order": 60, "num_classes": 5,
                   "class_sizes": [1, 12, 12, 15, 20], "exponent": 30}


def test_group_text(capsys):
    code, out, _ = run_cli(capsys, "group", "--spec", '{"construct": "cyclic", "n": 6}')
    assert code == 0
    assert "label: C6" in out and "order: 6" in out


def test_degrees_json(capsys):
    code, out, _ = run_cli(capsys, "degrees", "--spec", '{"construct": "SL2", "q": 8}',
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"group": "SL2(8)", "degrees": [[1, 1], [7, 4], [8, 1], [9, 3]]}


def test_graph_json_and_dot(capsys):
    code, out, _ = run_cli(capsys, "graph", "--spec", '{"construct": "SL2", "q": 16}',
                           "--format", "json")
    assert code == 0
    assert json.loads(out) == {"vertices": [2, 3, 5, 17], "edges": [[3, 5]]}

    code, out, _ = run_cli(capsys, "graph", "--spec", '{"construct": "SL2", "q": 4}',
                           "--format", "dot")
    assert code == 0
    assert out == 'graph delta {\n  "2";\n  "3";\n  "5";\n}\n'


def test_analyze_json(capsys):
    spec = '{"construct": "semidirect", "module": "V1"}'
    code, out, _ = run_cli(capsys, "analyze", "--spec", spec, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["vertices"] == [2, 3, 5]
    assert doc["edges"] == [[2, 5], [3, 5]]
    assert doc["components"] == [[2, 3, 5]]
    assert doc["cut_vertices"] == [5]
    assert doc["complete_vertices"] == [5]
    assert doc["order"] == 960


def test_orbits_json(capsys):
    code, out, _ = run_cli(capsys, "orbits", "--module", "V1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["group"] == "SL2(4)" and doc["kernel_order"] == 1
    table = sorted((o["size"], o["stabilizer_order"], o["stabilizer_tag"])
                   for o in doc["orbits"])
    assert table == [(5, 12, "A4"), (10, 6, "S3")]
    assert doc["delta_orb"] == {"vertices": [2, 5], "edges": [[2, 5]]}


def test_orbits_natural_requires_q(capsys):
    code, _, err = run_cli(capsys, "orbits", "--module", "natural")
    assert code == 2 and "natural" in err
    code, out, _ = run_cli(capsys, "orbits", "--module", "natural", "--q", "8",
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["orbits"][0]["size"] == 63


def test_nq_json(capsys):
    code, out, _ = run_cli(capsys, "nq", "--module", "V1", "--prime", "2",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["satisfied"] is False and len(doc["failing_vectors"]) == 10
    code, out, _ = run_cli(capsys, "nq", "--module", "U", "--prime", "5",
                           "--format", "json")
    assert json.loads(out)["satisfied"] is True
    code, _, err = run_cli(capsys, "nq", "--module", "U", "--prime", "4")
    assert code == 2


def test_vsets_json(capsys):
    code, out, _ = run_cli(capsys, "vsets", "--module", "V1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dichotomy"] is True
    assert len(doc["V_II"]) == 5 and len(doc["V_I_minus"]) == 10
    code, _, err = run_cli(capsys, "vsets", "--module", "V1", "--r", "7")
    assert code == 2 and "odd prime" in err


def test_predict_json(capsys):
    case = '{"theorem": "T1a", "p": 2, "a": 3, "v_gk": [2]}'
    code, out, _ = run_cli(capsys, "predict", "--case", case, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["graph"] == {"vertices": [2, 3, 7], "edges": [[2, 3], [2, 7]]}
    assert doc["cut_vertices"] == [2]

    code, _, err = run_cli(capsys, "predict", "--case", '{"theorem": "T9", "p": 3}')
    assert code == 2 and "T9" in err


def test_verify_pass_fail_and_exit_codes(capsys, tmp_path):
    witness = {
        "id": "ok",
        "group": {"construct": "semidirect", "module": "V1"},
        "case": {"theorem": "T2b_ii", "p": 5, "v_gk": [5]},
    }
    code, out, _ = run_cli(capsys, "verify", "--witness", json.dumps(witness),
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["ok"] is True

    witness["group"] = {"construct": "semidirect", "module": "V0"}
    path = tmp_path / "w.json"
    path.write_text(json.dumps(witness))
    code, out, _ = run_cli(capsys, "verify", "--witness", f"@{path}",
                           "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False and "missing edge 2-5" in doc["diffs"]


def test_malformed_inputs_exit_2(capsys):
    code, _, err = run_cli(capsys, "group", "--spec", "{not json")
    assert code == 2
    code, _, err = run_cli(capsys, "group", "--spec", '{"construct": "wreath"}')
    assert code == 2 and "wreath" in err
    code, _, err = run_cli(capsys, "verify", "--witness", '{"group": {}}')
    assert code == 2


def test_ceiling_exit_1(capsys):
    code, _, err = run_cli(capsys, "group", "--spec",
                           '{"construct": "semidirect", "module": "natural", "q": 32}')
    assert code == 1 and "ceiling" in err


def test_fig_written(capsys, tmp_path):
    fig = tmp_path / "g.png"
    code, _, _ = run_cli(capsys, "graph", "--spec", '{"construct": "SL2", "q": 4}',
                         "--format", "json", "--fig", str(fig))
    assert code == 0
    assert fig.stat().st_size > 0
    data = fig.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"


def test_suite_short_passes_and_is_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "suite")
    code2, out2, _ = run_cli(capsys, "suite")
    assert code1 == code2 == 0
    assert out1 == out2
    lines = [l for l in out1.strip().splitlines()]
    assert len(lines) == 11
    assert all(l.startswith("PASS ") for l in lines)


def test_suite_out_directory(capsys, tmp_path):
    out_dir = tmp_path / "suite"
    code, out, _ = run_cli(capsys, "suite", "--out", str(out_dir))
    assert code == 0
    csv_path = out_dir / "suite.csv"
    assert csv_path.exists()
    header = csv_path.read_text().splitlines()[0]
    assert header == "criterion,status,detail"
    pngs = sorted(p.name for p in out_dir.glob("*.png"))
    assert len(pngs) >= 10


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cdgraph.cli", "group", "--spec",
         '{"construct": "SL2", "q": 4}', "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["order"] == 60
