from hypothesis import given
import pytest

from genrep import MalformedValue, index_set, label, left, print_value, right
from genrep.corpus import (
    INDEXED_CODES,
    INSTANT_CODES,
    MULTIREC_CODES,
    POLYP_CODES,
    REGULAR_CODES,
    LIST_TOP_ENV,
    NAT_I,
    VALUES,
)
from genrep.dsl import (
    ParseError,
    parse_code,
    parse_env,
    parse_label,
    parse_value,
    print_code,
    print_env,
)
from genrep import indexed, polyp, regular
from genrep.oracle import EnumBudget, enum_mu_regular

from helpers import gvalues

CANONICAL = {
    ("regular", "NatC"): "U + I",
    ("regular", "BinC"): "U + I * I",
    ("polyp", "ListC"): "U + P * I",
    ("polyp", "RoseC"): "P * (U + P * I) @ I",
    ("polyp", "TreeC"): "P + I * I",
    ("polyp", "TreeListNaive"): "(P + I * I) @ (U + P * I)",
    ("polyp", "TreeListProper"): "(U + P * I) @ P + I * I",
    ("multirec", "ZigZagC"): "indices: L.⋆, R.⋆\n!L.⋆ * (I@R.⋆ + U) + !R.⋆ * I@L.⋆",
    ("indexed", "NatI"): "in: ⋆\nout: ⋆\nfix (U + I@R.⋆)",
    ("indexed", "BinI"): "in: ⋆\nout: ⋆\nfix (U + I@R.⋆ * I@R.⋆)",
    ("indexed", "ListI"): "in: ⋆\nout: ⋆\nfix (U + I@L.⋆ * I@R.⋆)",
    (
        "indexed",
        "RoseI",
    ): "in: ⋆\nout: ⋆\nfix (I@L.⋆ * fix (U + I@L.⋆ * I@R.⋆) @ I@R.⋆)",
    (
        "indexed",
        "ZigZagI",
    ): "in:\nout: L.⋆, R.⋆\nfix (!L.⋆ * (I@R.R.⋆ + U) + !R.⋆ * I@R.L.⋆)",
    ("instant", "List⊤"): "U + K ⊤ * R List⊤",
}

_TABLES = {
    "regular": REGULAR_CODES,
    "polyp": POLYP_CODES,
    "multirec": MULTIREC_CODES,
    "indexed": INDEXED_CODES,
    "instant": INSTANT_CODES,
}


@pytest.mark.parametrize("universe,name", sorted(CANONICAL))
def test_corpus_codes_print_canonically(universe, name):
    assert print_code(universe, _TABLES[universe][name]) == CANONICAL[universe, name]


@pytest.mark.parametrize("universe,name", sorted(CANONICAL))
def test_corpus_codes_round_trip(universe, name):
    code = _TABLES[universe][name]
    text = print_code(universe, code)
    assert parse_code(universe, text) == code
    assert print_code(universe, parse_code(universe, text)) == text


VALUE_PRINTS = {
    "aNat": "<in2 <in2 <in1 tt>>>",
    "sRose": "<(tt , <in1 tt>)>",
    "zigZagEnd": "<in1 (refl , in1 <in2 (refl , <in1 (refl , in2 tt)>)>)>",
    "aList": "in2 (k tt , rec in2 (k tt , rec in1 tt))",
    "treeOfLists": "<in1 <in2 (tt , <in1 tt>)>>",
}


@pytest.mark.parametrize("name", sorted(VALUES))
def test_corpus_values_round_trip(name):
    v = VALUES[name]
    assert parse_value(print_value(v)) == v
    if name in VALUE_PRINTS:
        assert print_value(v) == VALUE_PRINTS[name]


@given(gvalues())
def test_any_value_round_trips(v):
    assert parse_value(print_value(v)) == v


def test_enumerated_values_round_trip():
    for code in REGULAR_CODES.values():
        for v in enum_mu_regular(code, EnumBudget(max_size=10)):
            assert parse_value(print_value(v)) == v


def test_operator_precedence():
    assert parse_code("regular", "U + I * I") == regular.Sum(
        regular.Unit(), regular.Prod(regular.Id(), regular.Id())
    )
    assert parse_code("regular", "(U + I) * I") == regular.Prod(
        regular.Sum(regular.Unit(), regular.Id()), regular.Id()
    )
    # composition binds tighter than product and associates right
    assert parse_code("polyp", "P * U @ I @ I") == polyp.Prod(
        polyp.Par(), polyp.Comp(polyp.Unit(), polyp.Comp(polyp.Id(), polyp.Id()))
    )


def test_fix_argument_is_an_atom():
    code = parse_code("indexed", "in: ⋆\nout: ⋆\nfix U + I@⋆")
    assert isinstance(code.body, indexed.Sum)
    assert parse_code("indexed", "in: ⋆\nout: ⋆\nfix (U + I@R.⋆)") == NAT_I


def test_labels_parse_and_print():
    star = label("⋆")
    assert parse_label("⋆") == star
    assert parse_label("L.⋆") == left(star)
    assert parse_label("R.L.zig") == right(left(label("zig")))
    with pytest.raises(ParseError):
        parse_label("Q.⋆")


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_code("regular", "U +")
    assert err.value.line == 1
    assert err.value.col == 4
    assert "U" in err.value.expected

    with pytest.raises(ParseError) as err:
        parse_value("in1 (tt , tt")
    assert str(err.value).startswith("1:13:")

    with pytest.raises(ParseError) as err:
        parse_code("regular", 'U ; I')
    assert "unexpected character" in err.value.message


def test_headers_are_required_and_unique():
    with pytest.raises(ParseError):
        parse_code("multirec", "!L.⋆ * U")
    with pytest.raises(ParseError):
        parse_code("indexed", "out: ⋆\nfix (U + I@R.⋆)")
    with pytest.raises(ParseError):
        parse_code("indexed", "in: ⋆\nin: ⋆\nout: ⋆\nU")


def test_mid_header_threads_the_composition():
    text = "in: i\nout: o\nmid: a, b\n(I@a * I@b) @ (!a + !b)"
    code = parse_code("indexed", text)
    body = code.body
    assert isinstance(body, indexed.Comp)
    assert set(body.left.ins) == {label("a"), label("b")}
    assert print_code("indexed", code) == text


def _comp_via(mid_name, ins, outs):
    mid = index_set(label(mid_name))
    f = indexed.IndexedCode(mid, outs, indexed.Id(label(mid_name)))
    g = indexed.IndexedCode(ins, mid, indexed.Tag(label(mid_name)))
    return indexed.Comp(f, g)


def test_print_rejects_codes_with_mixed_middles():
    ins = index_set(label("i"))
    outs = index_set(label("o"))
    body = indexed.Prod(_comp_via("a", ins, outs), _comp_via("b", ins, outs))
    code = indexed.IndexedCode(ins, outs, body)
    with pytest.raises(MalformedValue):
        print_code("indexed", code)


def test_env_files_round_trip():
    text = print_env(LIST_TOP_ENV)
    assert text == "List⊤ = U + K ⊤ * R List⊤\n"
    assert parse_env(text) == LIST_TOP_ENV


def test_env_rejects_duplicates_and_dangling_references():
    with pytest.raises(ParseError) as err:
        parse_env("a = U\nb = R missing\n")
    assert "missing" in err.value.message
    with pytest.raises(ParseError):
        parse_env("a = U\na = U\n")
