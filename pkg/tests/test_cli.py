import json
import random
from fractions import Fraction

import pytest

from nestquiv import NestedIdealPair, monomial_ideal, nested_to_rep
from nestquiv.cli import main
from nestquiv.corpus import CHART_SECOND, random_nested_pair

from conftest import nu


@pytest.fixture()
def hand_files(tmp_path):
    pair = NestedIdealPair(nu=nu(1, 0), big=monomial_ideal((2,)), small=monomial_ideal((1,)))
    rep = nested_to_rep(pair, 1)
    paths = {}
    for name, obj in (
        ("pair", pair.to_json()),
        ("rep", rep.to_json()),
        ("plain", rep.left.to_json()),
    ):
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(obj))
        paths[name] = str(p)
    bad = rep.to_json()
    bad["F1"] = {"rows": 1, "cols": 2, "entries": ["0", "0"]}
    p = tmp_path / "badF1.json"
    p.write_text(json.dumps(bad))
    paths["badF1"] = str(p)
    p = tmp_path / "broken.json"
    p.write_text("{oops")
    paths["broken"] = str(p)
    return paths, tmp_path


def test_check_exit_codes(hand_files, capsys):
    paths, _ = hand_files
    assert main(["check", paths["rep"]]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["relations"] == "zero"
    assert report["stability"]["verdict"] == "stable"
    assert main(["check", paths["badF1"]]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["stability"]["witness"] == "(C1) F1"
    assert main(["check", paths["broken"]]) == 2
    assert main(["check", paths["plain"]]) == 0


def test_check_bad_theta_is_precondition(hand_files, capsys):
    paths, _ = hand_files
    assert main(["check", paths["rep"], "--theta", "1,1,1,1"]) == 3
    assert main(["check", paths["rep"], "--theta", "1,2"]) == 2


def test_convert_round_trip(hand_files, tmp_path, capsys):
    paths, _ = hand_files
    out1 = str(tmp_path / "cycle.json")
    assert main(["convert", "rep-to-cycle", paths["rep"], "--out", out1]) == 0
    cycle = json.loads(open(out1).read())
    assert cycle["nu"] == ["1", "0"]
    out2 = str(tmp_path / "rep2.json")
    assert main(["convert", "cycle-to-rep", out1, "--n", "1", "--out", out2]) == 0
    assert json.loads(open(out2).read()) == json.loads(open(paths["rep"]).read())
    assert main(["convert", "rep-to-cycle", paths["badF1"]]) == 1


def test_convert_forced_singular_chart(hand_files):
    paths, tmp = hand_files
    pair = NestedIdealPair(nu=CHART_SECOND, big=monomial_ideal((2,)), small=monomial_ideal((1,)))
    rep = nested_to_rep(pair, 1)
    p = tmp / "rep01.json"
    p.write_text(json.dumps(rep.to_json()))
    assert main(["convert", "rep-to-cycle", str(p), "--nu", "1,0"]) == 3


def test_convert_rejects_empty_small_cycle(tmp_path):
    pair_obj = {
        "nu": ["1", "0"],
        "big": monomial_ideal((1,)).to_json(),
        "small": monomial_ideal(()).to_json(),
    }
    p = tmp_path / "cp0.json"
    p.write_text(json.dumps(pair_obj))
    assert main(["convert", "cycle-to-rep", str(p)]) == 3


def test_roundtrip_generated_deterministic(tmp_path):
    out1 = str(tmp_path / "a.json")
    out2 = str(tmp_path / "b.json")
    assert main(["roundtrip", "--cmax", "2", "--seed", "5", "--out", out1]) == 0
    assert main(["roundtrip", "--cmax", "2", "--seed", "5", "--out", out2]) == 0
    assert open(out1, "rb").read() == open(out2, "rb").read()
    report = json.loads(open(out1).read())
    assert report["failed"] == 0
    assert report["total"] == report["passed"]


def test_roundtrip_corpus_dir(tmp_path, capsys):
    rng = random.Random(6)
    d = tmp_path / "corpus"
    d.mkdir()
    for i in range(3):
        pair = random_nested_pair(rng, 3, 1)
        (d / f"{i}.json").write_text(json.dumps(pair.to_json()))
    assert main(["roundtrip", str(d)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["total"] == 3 and report["failed"] == 0


def test_count_fixed_frozen(capsys):
    assert main(["count-fixed", "--cp", "1", "--c", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 2
    assert main(["count-fixed", "--cp", "1", "--c", "2", "--charts", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 6
    assert main(["count-fixed", "--cp", "0", "--c", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 7
    assert main(["count-fixed", "--cp", "2", "--c", "2"]) == 3


def test_monad_check(hand_files, capsys):
    paths, _ = hand_files
    assert main(["monad-check", paths["plain"]]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["complex_zero"] is True
    assert report["full_rank"] is True
    assert len(report["points"]) == 20
    assert main(["monad-check", paths["plain"], "--nu", "0,1"]) == 3
    assert main(["monad-check", paths["rep"]]) == 0


def test_monad_check_detects_broken_relations(hand_files, tmp_path, capsys):
    paths, _ = hand_files
    obj = json.loads(open(paths["plain"]).read())
    obj["C1"] = {"rows": 2, "cols": 2, "entries": ["0", "0", "1", "0"]}
    p = tmp_path / "brokenrel.json"
    p.write_text(json.dumps(obj))
    assert main(["monad-check", str(p)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["complex_zero"] is False
