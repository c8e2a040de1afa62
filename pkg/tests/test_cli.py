import json
import xml.etree.ElementTree as ET

import pytest

from benzels.cli import main
from benzels.hexgrid import benzel
from benzels.tiler import MOUNTAINLESS, count_tilings
from benzels.transfer import transfer_region


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_abacus_quotient(capsys):
    code, out, _ = run(capsys, "abacus", "quotient", "5,5,3,3,2")
    assert code == 0
    assert out.splitlines() == ["quotient ((1), (3), ∅)", "charges (1,1,-2)", "core 4,2"]


def test_abacus_word_and_decode(capsys):
    assert run(capsys, "abacus", "word", "5,5,3,3,2")[1].strip() == "xxxooxxo.oxoxxooo"
    assert run(capsys, "abacus", "decode", "xxxooxxo.oxoxxooo")[1].strip() == "5,5,3,3,2"
    code, out, _ = run(capsys, "abacus", "charges", "5,5,3,3,2", "--json")
    assert json.loads(out)["core"] == [4, 2]


def test_abacus_bad_input(capsys):
    assert run(capsys, "abacus", "word", "1,2")[0] == 2
    assert run(capsys, "abacus", "quotient", "3,2", "--k", "1")[0] == 2
    assert run(capsys, "abacus", "decode", "xyz")[0] == 2


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--benzel", "7,8", "--square", "--tiles", "LS,RB,FB")
    assert (code, out.strip()) == (0, "8")
    code, out, _ = run(capsys, "count", "--partition", "6,5,5,4,3,1", "--tiles", "LS,RB,FB", "--method", "backtrack")
    assert out.strip() == "8"
    # zero tilings is an answer, not an error
    assert run(capsys, "count", "--benzel", "4,4", "--tiles", "LS,RB,FB") == (0, "0\n", "")


def test_usage_errors(capsys):
    code, _, err = run(capsys, "count", "--benzel", "2,5")
    assert code == 2 and "b <= 2a" in err
    assert run(capsys, "count", "--benzel", "3,3", "--tiles", "ZZ")[0] == 2
    assert run(capsys, "count")[0] == 2
    assert run(capsys, "count", "--region", "/nonexistent.json")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "compress", "demo", "--k", "2")[0] == 2
    assert run(capsys, "compress", "demo", "--n", "1", "--j", "0")[0] == 2
    assert run(capsys, "sw", "demo", "--k", "1")[0] == 2


def test_enumerate_emits_one_file_per_tiling(capsys, tmp_path):
    code, _, err = run(capsys, "enumerate", "--benzel", "7,8", "--square", "--tiles", "LS,RB,FB", "--emit", str(tmp_path))
    expected = count_tilings(transfer_region(benzel(7, 8)), MOUNTAINLESS)
    files = sorted(tmp_path.glob("tiling_*.json"))
    assert code == 0 and len(files) == expected == 8
    assert f"{expected} tilings" in err
    record = json.loads(files[0].read_text())
    assert record["stats"]["left_stones"] == 2
    assert sum(len(t["cells"]) for t in record["tiles"]) == 48


def test_enumerate_stdout_with_limit(capsys):
    code, out, _ = run(capsys, "enumerate", "--benzel", "6,6", "--limit", "4")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert all("tiles" in json.loads(line) for line in lines)


def test_benzel_gen_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "benzel", "gen", "4", "5")
    assert code == 0 and len(json.loads(out)["cells"]) == 15
    svg = tmp_path / "b.svg"
    assert run(capsys, "benzel", "gen", "7", "8", "--square", "--format", "svg", "--output", str(svg))[0] == 0
    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")
    assert run(capsys, "benzel", "gen", "3", "3", "--format", "ascii")[1].strip()


def test_transfer_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "benzel", "gen", "5", "6")
    hex_file = tmp_path / "hex.json"
    hex_file.write_text(out)
    _, square, _ = run(capsys, "transfer", str(hex_file))
    square_file = tmp_path / "sq.json"
    square_file.write_text(square)
    _, back, _ = run(capsys, "transfer", str(square_file))
    assert json.loads(back) == json.loads(out)
    bad = tmp_path / "bad.json"
    bad.write_text("{\"x\": 1}")
    assert run(capsys, "transfer", str(bad))[0] == 2


def test_sw_and_compress_demos(capsys):
    code, out, _ = run(capsys, "sw", "demo", "--n", "2", "--index", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["round_trip"] and data["k"] == 3
    code, out, _ = run(capsys, "compress", "demo", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["round_trip"]
    assert sum(len(t) for t in data["compressed"]) == 16
    code, out, _ = run(capsys, "sw", "demo", "--partition", "5,5,3,3,2")
    assert code == 0 and "slot 1" in out
    assert run(capsys, "sw", "demo", "--n", "1", "--index", "9")[0] == 1


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "thm1", "--max-sum", "10", "--json")
    report = json.loads(out.splitlines()[0])
    assert code == 0 and report["verdict"] == "pass"
    code, out, _ = run(capsys, "verify", "structure", "--max-sum", "12")
    assert code == 0 and out.startswith("PASS")


def test_verify_bad_budget(capsys, monkeypatch):
    monkeypatch.setenv("BENZEL_BUDGET", "speed=1")
    assert run(capsys, "verify", "thm1")[0] == 2


@pytest.mark.parametrize("fmt", ["svg", "ascii", "json"])
def test_render(capsys, fmt):
    code, out, _ = run(capsys, "render", "--partition", "6,5,5,4,3,1", "--tiling", "3",
                       "--tiles", "RS,LS,RB,FB", "--format", fmt, "--green", "3,1", "--red", "2")
    assert code == 0 and out
    if fmt == "svg":
        ET.fromstring(out)
    if fmt == "json":
        json.loads(out)


def test_documented_examples(capsys):
    assert run(capsys, "count", "--benzel", "6,6", "--tiles", "LS,RB,FB") == (0, "8\n", "")
    code, out, _ = run(capsys, "abacus", "quotient", "5,5,3,3,2", "--k", "3")
    assert code == 0 and "quotient ((1), (3), ∅)" in out
    assert run(capsys, "verify", "thm1", "--max-sum", "10")[0] == 0
