import json

import pytest

from mixedradix.cli import run


def out_of(capsys):
    return capsys.readouterr().out.strip()


def test_convert_text(capsys):
    assert run(["convert", "--from", "3", "--to", "5", "--digits", "2,1,0,2,2"]) == 0
    assert out_of(capsys) == "1341 (base 5)"


def test_convert_value_and_stats(capsys):
    assert run(["convert", "--from", "3", "--to", "5", "--value", "221", "--stats"]) == 0
    out = out_of(capsys)
    assert "1341 (base 5)" in out
    assert "inner-loop divisions: 0" in out


def test_convert_json(capsys):
    assert run(
        ["convert", "--from", "3", "--to", "5", "--digits", "2,1,0,2,2",
         "--format", "json", "--stats"]
    ) == 0
    obj = json.loads(out_of(capsys))
    assert obj["schema"] == "mixedradix/convert/1"
    assert obj["digits"] == [1, 4, 3, 1]
    assert obj["stats"]["divisions_in_inner_loop"] == 0


def test_convert_requires_one_input(capsys):
    assert run(["convert", "--from", "3", "--to", "5"]) == 1
    assert run(
        ["convert", "--from", "3", "--to", "5", "--digits", "1", "--value", "1"]
    ) == 1


def test_decompose(capsys):
    assert run(["decompose", "--n", "0", "--basis", "3,3,5"]) == 0
    assert out_of(capsys) == "000"
    assert run(["decompose", "--n", "58", "--basis", "7,4,3"]) == 0
    assert out_of(capsys) == "202"


def test_decompose_large_radix_uses_separators(capsys):
    assert run(["decompose", "--n", "100", "--basis", "16,16"]) == 0
    assert out_of(capsys) == "6:4"


def test_decompose_json_roundtrip(capsys):
    from mixedradix.core import DigitString

    assert run(["decompose", "--n", "58", "--basis", "3,4,7", "--format", "json"]) == 0
    obj = json.loads(out_of(capsys))
    assert obj.pop("schema") == "mixedradix/digits/1"
    d = DigitString.from_json(json.dumps(obj))
    assert d.digits == (1, 3, 4)


def test_decompose_overflow_exit_code(capsys):
    assert run(["decompose", "--n", "99", "--basis", "3,3"]) == 1
    assert "error" in capsys.readouterr().err


def test_grid_render_and_word(capsys):
    assert run(["grid", "--n", "221", "--p", "3", "--q", "5", "--l1", "5", "--l2", "4"]) == 0
    assert "2 2 1 1 0" in out_of(capsys)
    assert run(
        ["grid", "--n", "221", "--p", "3", "--q", "5", "--l1", "5", "--l2", "4",
         "--word", "PPQPQPQQP"]
    ) == 0
    assert out_of(capsys).endswith("(basis 3,3,5,3,5,3,5,5,3)")


def test_grid_json_schema(capsys):
    assert run(
        ["grid", "--n", "221", "--p", "3", "--q", "5", "--l1", "5", "--l2", "4",
         "--format", "json"]
    ) == 0
    obj = json.loads(out_of(capsys))
    assert obj["schema"] == "mixedradix/decoration/1"
    assert obj["l1"] == 5 and obj["l2"] == 4


def test_yb_subcommands(capsys):
    assert run(["yb", "psi", "--radices", "3,4,7"]) == 0
    assert "holds" in out_of(capsys)
    assert run(["yb", "phi", "--nodes", "0,1,2"]) == 0
    assert run(["yb", "cube", "--n", "58", "--radices", "3,4,7"]) == 0


def test_yb_seed_is_reproducible(capsys):
    run(["yb", "phi", "--nodes", "0,1/2,2", "--seed", "9", "--format", "json"])
    first = out_of(capsys)
    run(["yb", "phi", "--nodes", "0,1/2,2", "--seed", "9", "--format", "json"])
    assert out_of(capsys) == first


def test_poly_subcommands(capsys):
    assert run(["poly", "eval", "--coeffs", "1,2,3,4", "--y", "1"]) == 0
    assert out_of(capsys) == "10"
    assert run(["poly", "derivs", "--coeffs", "1,2,3,4", "--y", "1", "--k", "4"]) == 0
    assert out_of(capsys) == "10 20 30 24"
    assert run(["poly", "newton", "--coeffs", "1,2,3,4", "--nodes", "1,1,1,1"]) == 0
    assert out_of(capsys) == "10 20 15 4"
    assert run(["poly", "eval", "--coeffs", "1,1/2", "--y", "1/2"]) == 0
    assert out_of(capsys) == "5/4"


def test_furstenberg_orbit(capsys):
    assert run(["furstenberg", "orbit", "--k", "7", "--r", "13", "--p", "3"]) == 0
    assert out_of(capsys) == "7 8 11"
    assert run(
        ["furstenberg", "orbit", "--k", "7", "--r", "13", "--p", "3", "--q", "5"]
    ) == 0
    assert out_of(capsys).splitlines() == ["7 8 11", "7 9 6 4"]


def test_furstenberg_quadrant(capsys):
    assert run(
        ["furstenberg", "quadrant", "--x", "7/13", "--p", "3", "--q", "5",
         "--depth", "4x4", "--rudolph"]
    ) == 0
    out = out_of(capsys)
    assert "base-p row: 1 1 2 1" in out
    assert "rudolph diagonal: 8 1 2 4" in out


def test_furstenberg_quadrant_json(capsys):
    assert run(
        ["furstenberg", "quadrant", "--x", "7/13", "--p", "3", "--q", "5",
         "--depth", "2x2", "--format", "json"]
    ) == 0
    obj = json.loads(out_of(capsys))
    assert obj["schema"] == "mixedradix/quadrant/1"
    assert obj["beta_v"][0] == [2, 3]


def test_furstenberg_layers(capsys):
    assert run(
        ["furstenberg", "layers", "--k", "7", "--r", "13", "--p", "3", "--q", "5",
         "--depth", "3x3", "--format", "json"]
    ) == 0
    obj = json.loads(out_of(capsys))
    assert obj["schema"] == "mixedradix/layers/1"
    assert obj["transversal"][0] == [7, 9, 6, 4]


def test_bad_rational(capsys):
    assert run(
        ["furstenberg", "quadrant", "--x", "x/0", "--p", "3", "--q", "5",
         "--depth", "2x2"]
    ) == 1
    assert run(
        ["furstenberg", "quadrant", "--x", "7/13", "--p", "3", "--q", "5",
         "--depth", "2by2"]
    ) == 1


def test_unknown_flag_exits_1():
    assert run(["decompose", "--n", "1", "--basis", "3", "--bogus"]) == 1


def test_help_exits_0():
    assert run(["--help"]) == 0
