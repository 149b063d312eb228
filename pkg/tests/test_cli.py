"""Command-line front end: parsing, formats, exit codes, cache persistence."""

import json
from fractions import Fraction as F

import pytest

import symcap.capacities as cap
import symcap.domains as dom
from symcap.cli import main, parse_domain_spec

BALL1 = '{"type":"ball","a":"1"}'
E12 = '{"type":"ellipsoid","a":"1","b":"2"}'
SQUARE = '{"type":"polydisk","a":"1","b":"1"}'
TWO_BALLS = '{"type":"disjoint_union","parts":[{"type":"ball","a":"1"},{"type":"ball","a":"1"}]}'
PENT = '{"type":"convex_toric","vertices":[["0","0"],["2","0"],["2","1"],["1","2"],["0","2"]]}'
STAIR = '{"type":"concave_toric","vertices":[["0","0"],["3","0"],["1","1"],["0","3"]]}'


def _run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_parse_domain_spec_examples():
    assert parse_domain_spec(BALL1) == dom.ball(1)
    assert parse_domain_spec('{"type":"ellipsoid","a":"1","b":"3/2"}') == \
        dom.ellipsoid(1, F(3, 2))
    assert parse_domain_spec(TWO_BALLS) == dom.disjoint_union(dom.ball(1), dom.ball(1))


def test_parse_domain_spec_diagnostics():
    with pytest.raises(ValueError, match="line 1"):
        parse_domain_spec('{"type":"ball","a":}')
    with pytest.raises(ValueError, match="unknown domain type"):
        parse_domain_spec('{"type":"torus","a":"1"}')
    with pytest.raises(ValueError):
        parse_domain_spec('{"type":"ball","a":"0"}')


def test_capacity_text(capsys):
    rc, out, _ = _run(capsys, "capacity", "-d", BALL1, "-k", "3")
    assert rc == 0 and out == "c_3 = 2\n"


def test_capacity_json(capsys):
    rc, out, _ = _run(capsys, "capacity", "-d", BALL1, "-k", "3", "--format", "json")
    assert rc == 0
    assert json.loads(out) == {"k": 3, "c": "2", "decimal": 2.0,
                               "method": "ball_formula", "witness": 2}


def test_capacity_reads_domain_from_file(tmp_path, capsys):
    f = tmp_path / "ball.json"
    f.write_text(BALL1)
    rc, out, _ = _run(capsys, "capacity", "-d", str(f), "-k", "3")
    assert rc == 0 and out == "c_3 = 2\n"


def test_sequence_csv(capsys):
    rc, out, _ = _run(capsys, "sequence", "-d", E12, "--kmax", "4", "--format", "csv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,c,decimal,method"
    assert [l.split(",")[1] for l in lines[1:]] == ["0", "1", "2", "2", "3"]


def test_sequence_csv_and_json_agree(capsys):
    _, csv_out, _ = _run(capsys, "sequence", "-d", PENT, "--kmax", "6", "--format", "csv")
    _, json_out, _ = _run(capsys, "sequence", "-d", PENT, "--kmax", "6", "--format", "json")
    csv_pairs = [(int(r.split(",")[0]), r.split(",")[1])
                 for r in csv_out.strip().splitlines()[1:]]
    json_pairs = [(row["k"], row["c"]) for row in json.loads(json_out)]
    assert csv_pairs == json_pairs


def test_output_bytes_deterministic(capsys):
    runs = [_run(capsys, "sequence", "-d", E12, "--kmax", "8", "--format", "json")
            for _ in range(2)]
    assert runs[0] == runs[1]


def test_weights_outputs(capsys):
    rc, out, _ = _run(capsys, "weights", "-d", E12)
    assert rc == 0
    assert json.loads(out) == {"head": None, "weights": ["1", "1"], "volume_check": True}
    rc, out, _ = _run(capsys, "weights", "-d", SQUARE)
    assert json.loads(out) == {"head": "2", "weights": ["1", "1"], "volume_check": True}
    rc, out, _ = _run(capsys, "weights", "-d", STAIR)
    assert json.loads(out) == {"head": None, "weights": ["2", "1", "1"],
                               "volume_check": True}


def test_weights_rejects_closed_domain(capsys):
    rc, _, err = _run(capsys, "weights", "-d", '{"type":"cp2","a":"1"}')
    assert rc == 1 and "error:" in err


def test_obstruct_table(capsys):
    rc, out, _ = _run(capsys, "obstruct", "--source", TWO_BALLS,
                      "--target", '{"type":"ball","a":"3/2"}', "--kmax", "10")
    assert rc == 0
    assert "<-- violation" in out
    assert "obstructed at k=2: 2 > 3/2" in out
    assert "volume check (source <= target): ok" in out


def test_obstruct_json(capsys):
    rc, out, _ = _run(capsys, "obstruct", "--source", BALL1, "--target", BALL1,
                      "--kmax", "3", "--format", "json")
    assert rc == 0
    rep = json.loads(out)
    assert rep["verdict"] == "no_obstruction_up_to"
    assert rep["first_k"] is None and rep["k_max"] == 3
    assert rep["table"] == [[0, "0", "0"], [1, "1", "1"], [2, "1", "1"], [3, "2", "2"]]


def test_obstruct_csv_stops_at_violation(capsys):
    rc, out, _ = _run(capsys, "obstruct", "--source", '{"type":"ball","a":"2"}',
                      "--target", BALL1, "--kmax", "5", "--format", "csv")
    assert rc == 0
    assert out.strip().splitlines() == ["k,c_source,c_target", "0,0,0", "1,2,1"]


def test_asymptotics_json(capsys):
    rc, out, _ = _run(capsys, "asymptotics", "-d", BALL1, "-k", "5150")
    assert rc == 0
    rep = json.loads(out)
    assert rep["c"] == "100"
    assert rep["model_decimal"] == pytest.approx(101.489, abs=1e-3)
    assert rep["residual_decimal"] < 2


def test_paths_convex_witness(capsys):
    rc, out, _ = _run(capsys, "paths", "-d", PENT, "-k", "2")
    assert rc == 0
    rep = json.loads(out)
    assert rep["kind"] == "convex" and rep["value"] == "3" and rep["count"] == 3
    assert rep["witness"] == {"start": [0, 1], "edges": [[1, -1]]}


def test_paths_concave_default_for_concave_domain(capsys):
    rc, out, _ = _run(capsys, "paths", "-d", STAIR, "-k", "2")
    assert rc == 0
    rep = json.loads(out)
    assert rep["kind"] == "concave" and rep["count"] == 2


def test_exit_code_1_on_bad_input(capsys):
    rc, _, err = _run(capsys, "capacity", "-d", '{"type":"ball","a":}', "-k", "1")
    assert rc == 1 and "line 1" in err
    rc, _, err = _run(capsys, "capacity", "-d", '{"type":"ball","a":1.5}', "-k", "1")
    assert rc == 1 and "error:" in err
    rc, _, err = _run(capsys, "capacity", "-d", "/nonexistent/d.json", "-k", "1")
    assert rc == 1


def test_truncation_warning_and_strict_escalation(capsys):
    rc, out, err = _run(capsys, "capacity", "-d", SQUARE, "-k", "1", "--l-max", "0")
    assert rc == 0 and out == "c_1 = 2\n" and "truncation bound" in err
    rc, out, err = _run(capsys, "capacity", "-d", SQUARE, "-k", "1",
                        "--l-max", "0", "--strict")
    assert rc == 2 and "truncation bound" in err
    # a generous bound finds the true value and does not warn
    rc, out, err = _run(capsys, "capacity", "-d", SQUARE, "-k", "1", "--l-max", "10")
    assert rc == 0 and out == "c_1 = 1\n" and err == ""


def test_exit_code_2_on_depth_cap(capsys):
    rc, _, err = _run(capsys, "weights", "-d", '{"type":"ellipsoid","a":"1","b":"8"}',
                      "--depth-cap", "2")
    assert rc == 2 and "depth_cap" in err


def test_round_trip_all_domain_kinds():
    specs = [BALL1, E12, SQUARE, TWO_BALLS, PENT, STAIR,
             '{"type":"cp2","a":"1"}', '{"type":"s2xs2","a":"1","b":"2"}']
    for text in specs:
        d = parse_domain_spec(text)
        assert parse_domain_spec(json.dumps(dom.domain_to_json(d))) == d


def test_cache_dir_round_trip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CAPACITY_CACHE_DIR", str(tmp_path))
    cap.clear_memo()
    first = _run(capsys, "sequence", "-d", E12, "--kmax", "6", "--format", "json")
    cache = tmp_path / "capacities.json"
    assert cache.exists()
    blob = cache.read_bytes()
    cap.clear_memo()
    second = _run(capsys, "sequence", "-d", E12, "--kmax", "6", "--format", "json")
    assert first == second
    assert cache.read_bytes() == blob
    payload = json.loads(blob)
    assert payload["version"] == 1 and len(payload["entries"]) >= 7


def test_cache_disabled_without_env(tmp_path, monkeypatch, capsys):
    monkeypatch.delenv("CAPACITY_CACHE_DIR", raising=False)
    monkeypatch.chdir(tmp_path)
    _run(capsys, "capacity", "-d", BALL1, "-k", "2")
    assert list(tmp_path.iterdir()) == []
