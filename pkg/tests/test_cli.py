import io
import json

import pytest

from toruslink import GroupPresentation, fill_unknot, link_with_unknots_group, torus_link_group
from toruslink import cli
from toruslink.cli import format_spec, parse_spec, read_presentation, run
from toruslink.errors import InvalidParams, ParseError


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "text,levels,ext_a,ext_b",
    [
        ("1:2,3", [(1, 2, 3)], False, False),
        ("1:1,6+extA+extB", [(1, 1, 6)], True, True),
        ("1:2,3/2:1,1+extB", [(1, 2, 3), (2, 1, 1)], False, True),
        (" 3 : -2 , 5 ", [(3, -2, 5)], False, False),
        ("1:1,0+extB+extA", [(1, 1, 0)], True, True),
    ],
)
def test_parse_spec(text, levels, ext_a, ext_b):
    spec = parse_spec(text)
    assert [(lv.n, lv.p, lv.q) for lv in spec.levels] == levels
    assert (spec.interior_unknot, spec.exterior_unknot) == (ext_a, ext_b)
    assert parse_spec(format_spec(spec)) == spec


@pytest.mark.parametrize("text,position", [("1:2", 0), ("1:2,3/x", 6), ("1:2,3+extC", 5), ("", 0)])
def test_parse_spec_errors(text, position):
    with pytest.raises(ParseError) as err:
        parse_spec(text)
    assert err.value.position == position


def test_parse_spec_validates_params():
    with pytest.raises(InvalidParams):
        parse_spec("2:2,4")
    with pytest.raises(InvalidParams):
        parse_spec("1:2,3/1:1,1+extA")


def test_text_output_trefoil():
    code, out, err = invoke("--spec", "1:2,3", "--fingerprint", "3")
    assert code == 0 and err == ""
    assert out.splitlines() == [
        "spec: 1:2,3",
        "method: closed",
        "presentation: < a, b | a^2*b^-3 >",
        "abelianization: Z^1",
        "fingerprint: 1:1 2:2 3:12",
    ]
    assert read_presentation(out) == torus_link_group((1, 2, 3))


def test_json_output():
    code, out, _ = invoke("--spec", "2:1,1", "--format", "json", "--fingerprint", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["generators"] == ["a", "b", "f1"]
    assert doc["relations"] == ["a*b^-1", "a*f1*b^-1*f1^-1"]
    assert doc["abelian"] == {"rank": 2, "torsion": []}
    assert doc["fingerprint"] == {"1": 1, "2": 4, "3": 18}
    assert list(doc) == sorted(doc)


def test_json_is_byte_stable():
    args = ("--spec", "1:2,3/2:1,1+extB", "--method", "both", "--format", "json", "--fingerprint", "2")
    first = invoke(*args)
    second = invoke(*args)
    assert first == second
    assert first[0] == 0


def test_algebra_output_round_trips():
    code, out, _ = invoke("--spec", "1:1,6+extA", "--format", "algebra")
    assert code == 0
    assert out.startswith("# spec: 1:1,6+extA\n")
    expected = fill_unknot(link_with_unknots_group((1, 1, 6)), "dB")
    assert read_presentation(out) == expected


def test_both_methods_agree():
    code, out, _ = invoke("--spec", "3:2,3+extA+extB", "--method", "both")
    assert code == 0
    assert out.splitlines()[-1] == "match: True (k <= 3)"


def test_simplify():
    code, out, _ = invoke("--spec", "2:1,1", "--simplify")
    assert code == 0
    assert "presentation: < a, f1 | a*f1*a^-1*f1^-1 >" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("--spec", "1:2"),
        ("--spec", "2:2,4"),
        ("--spec", "1:2,3", "--fingerprint", "0"),
        ("--spec", "1:2,3", "--fingerprint", "9"),
        ("--spec", "1:2,3", "--method", "magic"),
        (),
    ],
)
def test_errors_exit_one(argv):
    code, out, err = invoke(*argv)
    assert code == 1
    assert out == ""


def test_mismatch_exits_two(monkeypatch):
    real = cli.link_group

    def broken(spec, method):
        if method == "engine":
            return GroupPresentation.from_strings(["a", "b"], ["a^2*b^-5"])
        return real(spec, method)

    monkeypatch.setattr(cli, "link_group", broken)
    code, out, err = invoke("--spec", "1:2,3", "--method", "both", "--format", "json")
    assert code == 2
    doc = json.loads(out)
    assert doc["comparison"]["match"] is False
    assert doc["comparison"]["abelian_match"] is True
    assert doc["comparison"]["fingerprint_match"] is False
    assert "disagree" in err
