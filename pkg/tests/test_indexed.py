import pytest

from genrep import In1, In2, Pair, Roll, TT, label, left, payload, right
from genrep.corpus import (
    BIN_I,
    LIST_I,
    NAT_I,
    ROSE_I,
    ZIG_ZAG_I,
    ZIG_ZAG_END,
)
from genrep.gvalue import IndexNotInSet, PayloadSlot
from genrep.indexed import (
    conform_i,
    map_i,
    split_assign,
    split_transform,
    wellformed_i,
)

STAR = label("⋆")
TOP_ASSIGN = {STAR: PayloadSlot("⊤")}
NAT_ASSIGN = {STAR: PayloadSlot("nat")}


def _ilist(items):
    out = Roll(In1(TT()))
    for item in reversed(items):
        out = Roll(In2(Pair(item, out)))
    return out


@pytest.mark.parametrize("code", [NAT_I, BIN_I, LIST_I, ROSE_I, ZIG_ZAG_I])
def test_corpus_codes_are_wellformed(code):
    assert wellformed_i(code)


def test_nat_values_conform():
    assert conform_i(NAT_I, TOP_ASSIGN, STAR, Roll(In1(TT())))
    assert conform_i(NAT_I, TOP_ASSIGN, STAR, Roll(In2(Roll(In1(TT())))))
    assert not conform_i(NAT_I, TOP_ASSIGN, STAR, Roll(In2(TT())))


def test_list_parameter_slot_is_respected():
    nats = _ilist([payload("nat", 0), payload("nat", 1)])
    assert conform_i(LIST_I, NAT_ASSIGN, STAR, nats)
    assert not conform_i(LIST_I, TOP_ASSIGN, STAR, nats)
    assert conform_i(LIST_I, TOP_ASSIGN, STAR, _ilist([TT()]))


def test_zig_zag_conforms_per_output_index():
    assert conform_i(ZIG_ZAG_I, {}, left(STAR), ZIG_ZAG_END)
    assert not conform_i(ZIG_ZAG_I, {}, right(STAR), ZIG_ZAG_END)


def test_conform_rejects_index_outside_outputs():
    with pytest.raises(IndexNotInSet):
        conform_i(ZIG_ZAG_I, {}, STAR, ZIG_ZAG_END)


def test_map_reaches_parameters_under_the_fixed_point():
    bump = lambda v: payload("nat", v.token.ident + 1)
    nats = _ilist([payload("nat", 0), payload("nat", 4)])
    assert map_i(LIST_I, {STAR: bump}, STAR, nats) == _ilist(
        [payload("nat", 1), payload("nat", 5)]
    )


def test_map_identity_preserves_rose_values():
    rose = Roll(Pair(TT(), Roll(In1(TT()))))
    assert map_i(ROSE_I, {STAR: lambda v: v}, STAR, rose) == rose


def test_split_tables_tag_left_and_right():
    joined = split_assign({STAR: PayloadSlot("a")}, {STAR: PayloadSlot("b")})
    assert set(joined) == {left(STAR), right(STAR)}
    assert joined[left(STAR)] == PayloadSlot("a")

    fns = split_transform({STAR: lambda v: In1(v)}, {STAR: lambda v: In2(v)})
    assert fns[left(STAR)](TT()) == In1(TT())
    assert fns[right(STAR)](TT()) == In2(TT())
