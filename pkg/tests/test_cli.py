import json

import pytest

from lieq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_text_and_json_agree(capsys):
    code, out, _ = run_cli(capsys, "roots", "--type", "A", "--rank", "2")
    assert code == 0
    assert "positive roots (3)" in out
    code, out, _ = run_cli(capsys, "roots", "--type", "A", "--rank", "2", "--json")
    data = json.loads(out)
    assert data["weyl_order"] == 6
    assert len(data["positive_roots"]) == 3
    assert data["rho"] == [1, 1]


def test_qanalog_example(capsys):
    code, out, _ = run_cli(
        capsys,
        "qanalog", "--type", "G2", "--rank", "2",
        "--mu", "0,1", "--lambda", "0,0", "--parabolic", "2",
    )
    assert code == 0
    assert out.strip() == "q"


def test_qanalog_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "qanalog", "--type", "A", "--rank", "3",
        "--mu", "0,1,2", "--lambda", "0,0,0", "--parabolic", "2", "--json",
    )
    data = json.loads(out)
    assert data["m"] == {"3": 1}


def test_root_coordinate_input(capsys):
    code, out, _ = run_cli(
        capsys,
        "qanalog", "--type", "A", "--rank", "3", "--root-coords",
        "--mu", "1,2,2", "--lambda", "0,0,0", "--parabolic", "2",
    )
    assert code == 0
    assert out.strip() == "q^3"


def test_cht_command(capsys):
    code, out, _ = run_cli(capsys, "cht", "--type", "A", "--rank", "1", "--weight", "2")
    assert code == 0
    assert "cht        = 0" in out
    code, out, _ = run_cli(
        capsys, "cht", "--type", "A", "--rank", "2", "--weight=-1,-1", "--json"
    )
    data = json.loads(out)
    assert data["cht"] == 1
    assert data["star"] == [0, 0]
    assert data["cht_zero_fast"] is False


def test_orbit_command(capsys):
    code, out, _ = run_cli(
        capsys, "orbit", "--type", "A", "--rank", "3", "--partition", "2,1,1"
    )
    assert code == 0
    assert "even       = False" in out
    code, out, _ = run_cli(
        capsys, "orbit", "--type", "A", "--rank", "3", "--partition", "3,1", "--json"
    )
    data = json.loads(out)
    assert data["labels"] == [2, 0, 2]
    assert data["parabolic"] == [2]
    assert data["even"] is True
    assert data["centralizer_dimension"] == data["levi_dimension"] == 5


def test_orbit_builtin(capsys):
    code, out, _ = run_cli(
        capsys, "orbit", "--type", "G2", "--rank", "2", "--orbit", "subregular", "--json"
    )
    data = json.loads(out)
    assert data["even"] is True
    assert data["centralizer_dimension"] == 4


def test_bk_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "bk", "--type", "A", "--rank", "3",
        "--mu", "0,1,2", "--lambda", "0,0,0", "--partition", "3,1", "--json",
    )
    data = json.loads(out)
    assert data["r"] == {"3": 1}
    assert data["dims"] == [0, 0, 0, 1]
    assert data["module_dimension"] == 45
    code, out, _ = run_cli(
        capsys,
        "bk", "--type", "A", "--rank", "1",
        "--mu", "2", "--lambda", "0", "--principal",
    )
    assert "r = q" in out


def test_verify_command(tmp_path, capsys):
    config = tmp_path / "instances.json"
    config.write_text(
        json.dumps(
            [
                {
                    "type": "A", "rank": 3, "partition": [3, 1],
                    "mu": [0, 1, 2], "lambda": [0, 0, 0],
                },
                {
                    "type": "G2", "rank": 2, "orbit": "subregular",
                    "mu": [0, 1], "lambda": [0, 0],
                },
                {
                    "type": "A", "rank": 2, "partition": [3],
                    "mu": [1, 1], "lambda": [0, 0],
                },
            ]
        )
    )
    code, out, _ = run_cli(capsys, "verify", "--config", str(config))
    assert code == 0
    assert out.count("OK") == 3
    code, out, _ = run_cli(capsys, "verify", "--config", str(config), "--json")
    data = json.loads(out)
    assert [r["equal"] for r in data] == [True, True, True]
    assert data[0]["r"] == data[0]["m"] == {"3": 1}
    assert data[1]["r"] == {"1": 1}


def test_text_and_json_encode_identical_reports(tmp_path, capsys):
    config = tmp_path / "one.json"
    config.write_text(
        json.dumps(
            [{"type": "A", "rank": 2, "partition": [3], "mu": [1, 1], "lambda": [0, 0]}]
        )
    )
    _, text_out, _ = run_cli(capsys, "verify", "--config", str(config))
    _, json_out, _ = run_cli(capsys, "verify", "--config", str(config), "--json")
    record = json.loads(json_out)[0]
    assert f"cert={record['certificate']}" in text_out
    poly_text = text_out.split("r=")[1].split(" m=")[0].strip()
    from lieq.qpoly import QPolynomial

    assert QPolynomial({int(k): v for k, v in record["r"].items()}).__str__() == poly_text


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "bk", "--type", "A", "--rank", "2", "--mu", "1,1", "--lambda", "0,0")
    assert code == 2
    assert "need" in err
    code, _, err = run_cli(capsys, "roots", "--type", "G2", "--rank", "3")
    assert code == 1
    assert "error" in err


def test_unknown_orbit_name(capsys):
    code, _, err = run_cli(
        capsys, "orbit", "--type", "G2", "--rank", "2", "--orbit", "nope"
    )
    assert code == 1
    assert "unknown orbit" in err
