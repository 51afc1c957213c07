import pytest

from dessinlab.errors import ParseError
from dessinlab.parse import parse_element, parse_group_spec

SPECS = ["cyclic:12", "sl2:13", "sl2:3^2", "psl2:7", "quaternion:8", "agl1:2^2:3",
         "wreath:a5:5", "sigmal2:5"]


@pytest.mark.parametrize("text", SPECS)
def test_spec_round_trip(text):
    spec = parse_group_spec(text)
    assert spec.canonical == text
    assert parse_group_spec(spec.canonical).canonical == text


def test_perm_spec():
    spec = parse_group_spec("perm:5:(0,1,2,3,4);(0,1)(2,3)")
    assert spec.kind == "perm"
    assert len(spec.group.elements()) == 60


@pytest.mark.parametrize("text,offset", [
    ("quaterion:8", 0),
    ("cyclic:x", 7),
    ("quaternion:10", 11),
    ("sl2:12", 4),
    ("agl1:5:3", 7),
    ("cyclic12", 8),
    ("wreath:a6:3", 7),
    ("perm:3:(0,5)", 7),
])
def test_spec_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_group_spec(text)
    assert info.value.offset == offset


@pytest.mark.parametrize("spec,word", [
    ("quaternion:8", "xy"), ("quaternion:8", "y^-1"), ("quaternion:24", "x^5y"),
    ("cyclic:12", "h^7"), ("agl1:2^2:3", "hx"), ("sl2:13", "[[1,0],[1,1]]"),
    ("psl2:7", "LU^2"), ("sigmal2:3", "phi[[1,1],[0,1]]"), ("wreath:a5:3", "ge1"),
    ("perm:5:(0,1,2,3,4);(0,1)(2,3)", "(0,1)(2,3)"),
])
def test_element_format_round_trip(spec, word):
    G = parse_group_spec(spec).group
    g = parse_element(G, word)
    assert parse_element(G, G.format_element(g)) == g


def test_element_values():
    Q = parse_group_spec("quaternion:8").group
    assert parse_element(Q, "y^-1") == (2, 1)
    assert Q.format_element(parse_element(Q, "y^-1")) == "x^2y"
    assert parse_element(Q, "1") == Q.identity()
    assert parse_element(Q, "x^4") == Q.identity()


@pytest.mark.parametrize("spec,word,offset", [
    ("quaternion:8", "xz", 1),
    ("quaternion:8", "x^", 2),
    ("sl2:5", "[[1,2],[3,4]]", 0),
    ("cyclic:5", "(0,1)", 0),
    ("sl2:5", "[[1,0]", 0),
    ("quaternion:8", "", 0),
])
def test_element_errors(spec, word, offset):
    G = parse_group_spec(spec).group
    with pytest.raises(ParseError) as info:
        parse_element(G, word)
    assert info.value.offset == offset
