"""Command-line interface: parsing, dispatch, exit codes, determinism."""

import json

import pytest

from diskcovers.cli import COMMANDS, build_parser, covering_document, emit, main, parse_covering
from diskcovers.core import MonodromySequence, disk_covering


@pytest.fixture()
def p3_path(tmp_path):
    path = tmp_path / "p3.json"
    path.write_text(json.dumps(covering_document(disk_covering(3))) + "\n", encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def payload(out):
    report = json.loads(out)
    assert report["status"] == "ok"
    return report["result"]


def test_parse_covering_examples():
    seq = parse_covering('{"degree":4,"monodromy":[[1,2],[2,3],[3,4]]}')
    assert seq == disk_covering(3)
    seq = parse_covering('{"degree":2,"monodromy":[]}')
    assert seq == MonodromySequence(2, ())
    with pytest.raises(ValueError):
        parse_covering('{"degree":3,"monodromy":[[3,3]]}')
    with pytest.raises(ValueError):
        parse_covering('{"degree":3,"monodromy":[[1,4]]}')
    with pytest.raises(ValueError):
        parse_covering("not json")


def test_parse_covering_normalizes_pair_order():
    seq = parse_covering('{"degree":3,"monodromy":[[2,1],[3,2]]}')
    assert seq.pairs() == ((1, 2), (2, 3))


def test_round_trip():
    for seq in (disk_covering(3), MonodromySequence(2, ()), MonodromySequence.from_pairs(5, [(2, 5), (1, 3)])):
        assert parse_covering(json.dumps(covering_document(seq))) == seq


def test_invariants_command(capsys, p3_path):
    code, out = run(capsys, "invariants", "--covering", p3_path)
    assert code == 0
    assert payload(out) == {
        "chi": 1,
        "boundary": 1,
        "omega": [4],
        "components": 1,
        "disk": True,
    }


def test_lift_command(capsys, p3_path):
    code, out = run(capsys, "lift", "--covering", p3_path, "--braid", "2 1 1 -2")
    assert code == 0
    assert payload(out) == {"liftable": True}


def test_act_command_inline_covering(capsys):
    code, out = run(
        capsys,
        "act",
        "--covering",
        '{"degree":4,"monodromy":[[1,2],[2,3],[3,4]]}',
        "--braid",
        "1",
    )
    assert code == 0
    assert payload(out)["covering"]["monodromy"] == [[2, 3], [1, 3], [3, 4]]


def test_equivalent_command(capsys, p3_path):
    code, out = run(
        capsys,
        "equivalent",
        "--covering",
        p3_path,
        "--other",
        '{"degree":4,"monodromy":[[2,3],[1,3],[3,4]]}',
    )
    assert code == 0
    assert payload(out) == {"equivalent": True}


def test_target_command(capsys):
    code, out = run(capsys, "target", "--degree", "4", "--n", "3", "--omega", "4")
    assert code == 0
    assert payload(out)["covering"] == {"degree": 4, "monodromy": [[1, 2], [2, 3], [3, 4]]}


def test_target_not_realizable_is_invalid_input(capsys):
    code, out = run(capsys, "target", "--degree", "3", "--n", "2", "--omega", "2")
    assert code == 1
    report = json.loads(out)
    assert report["status"] == "invalid-input"
    assert "result" not in report


def test_canon_command(capsys):
    code, out = run(capsys, "canon", "--covering", '{"degree":4,"monodromy":[[2,3],[1,3],[3,4]]}')
    assert code == 0
    result = payload(out)
    assert result["canonical"]["monodromy"] == [[1, 2], [2, 3], [3, 4]]
    assert result["moves"] == [[1, "forward"]]
    assert result["relabel"] == [1, 2, 3, 4]


def test_interval_type_and_curve_commands(capsys, p3_path):
    code, out = run(capsys, "interval-type", "--covering", p3_path, "--interval", '{"base":1,"word":[2]}')
    assert code == 0 and payload(out) == {"type": 2}
    code, out = run(capsys, "curve", "--covering", p3_path, "--curve", '{"base":1,"word":[-2,-1,2]}')
    assert code == 0 and payload(out) == {"monodromy": [1, 4]}


def test_regular_command(capsys, p3_path):
    code, out = run(capsys, "regular", "--covering", p3_path, "--curve", '{"base":3,"word":[]}')
    assert code == 0 and payload(out) == {"regular": True}


def test_systems_command(capsys, p3_path):
    code, out = run(
        capsys,
        "systems",
        "--covering",
        p3_path,
        "--curves-a",
        '[{"base":1,"word":[-2,-1,2]}]',
        "--curves-b",
        '[{"base":3,"word":[-2,1,2]}]',
    )
    assert code == 0 and payload(out) == {"equivalent": True}


def test_restrict_command(capsys, p3_path):
    code, out = run(capsys, "restrict", "--covering", p3_path, "--indices", "3", "--base", "start")
    assert code == 0
    result = payload(out)
    assert result["covering"] == {"degree": 4, "monodromy": [[1, 2], [2, 3]]}
    assert result["components"] == [
        {"sheets": [1, 2, 3], "branch_points": 2},
        {"sheets": [4], "branch_points": 0},
    ]


def test_orbit_and_schreier_commands(capsys, p3_path):
    code, out = run(capsys, "orbit", "--covering", p3_path)
    assert code == 0 and payload(out) == {"size": 16, "bound": 216}
    code, out = run(capsys, "schreier", "--covering", '{"degree":3,"monodromy":[[1,2],[2,3]]}')
    assert code == 0 and payload(out)["generators"] == [[1, 1, 1]]


def test_classify_command(capsys):
    code, out = run(capsys, "classify", "--degree", "2", "--n", "2")
    assert code == 0
    result = payload(out)
    assert result["total"] == 1
    assert result["classes"][0]["omega"] == []


def test_todd_coxeter_command(capsys):
    code, out = run(capsys, "todd-coxeter", "--n", "2", "--words", "1 1 1")
    assert code == 0 and payload(out) == {"index": 3}
    code, out = run(capsys, "todd-coxeter", "--n", "3", "--words", "1 1 1;2 2 2;2 1 1 -2")
    assert code == 0 and payload(out) == {"index": 16}


def test_todd_coxeter_inconclusive_exit_code(capsys):
    code, out = run(capsys, "todd-coxeter", "--n", "2", "--words", "", "--cap", "100")
    assert code == 2
    report = json.loads(out)
    assert report["status"] == "inconclusive"
    assert report["cap"] == 100


def test_verify_theorem_c_command(capsys):
    code, out = run(capsys, "verify-theorem-c", "--n", "3")
    assert code == 0
    assert payload(out) == {"orbit_index": 16, "tc_index": 16, "liftable": True, "pass": True}


def test_orbit_cap_exit_code(capsys, p3_path):
    code, out = run(capsys, "orbit", "--covering", p3_path, "--cap", "5")
    assert code == 2
    assert json.loads(out)["status"] == "inconclusive"


def test_invalid_covering_exit_code(capsys):
    code, out = run(capsys, "invariants", "--covering", '{"degree":3,"monodromy":[[3,3]]}')
    assert code == 1
    assert json.loads(out)["status"] == "invalid-input"


def test_unknown_command_exit_code(capsys):
    code = main(["frobnicate"])
    err = capsys.readouterr().err
    assert code == 1
    assert "usage" in err.lower()


def test_no_command_prints_usage(capsys):
    code = main([])
    err = capsys.readouterr().err
    assert code == 1
    assert "usage" in err.lower()


def test_byte_identical_output(capsys, p3_path):
    _, first = run(capsys, "invariants", "--covering", p3_path)
    _, second = run(capsys, "invariants", "--covering", p3_path)
    assert first == second
    assert first.endswith("\n")
    assert "\n" not in first[:-1]


def test_text_format(capsys, p3_path):
    code, out = run(capsys, "invariants", "--covering", p3_path, "--format", "text")
    assert code == 0
    lines = out.strip().split("\n")
    assert "command: \"invariants\"" in lines
    assert "result.chi: 1" in lines
    assert "result.omega: [4]" in lines
    assert "status: \"ok\"" in lines


def test_emit_json_round_trips():
    report = {"command": "orbit", "status": "ok", "result": {"size": 16}}
    rendered = emit(report, "json")
    assert json.loads(rendered) == report


def test_parser_offers_every_contracted_command():
    parser = build_parser()
    subparsers = next(
        a for a in parser._actions if isinstance(a, type(parser._actions[-1])) and hasattr(a, "choices")
    )
    assert set(COMMANDS) <= set(subparsers.choices)
