import pytest

from genrep import (
    FuelExhausted,
    In1,
    In2,
    Konst,
    MalformedValue,
    Pair,
    RecV,
    Refl,
    TT,
    label,
    payload,
)
from genrep.corpus import A_LIST, LIST_TOP_ENV, LIST_TOP_NAME
from genrep.instant import (
    EqWitness,
    K,
    Prim,
    Prod,
    R,
    SIZE_SPEC,
    Sum,
    Unit,
    conform_ig,
    crush,
    env_check,
    nat_add,
    size_ig,
)

LIST_CODE = R(LIST_TOP_NAME)


def test_env_is_closed():
    assert env_check(LIST_TOP_ENV)
    assert not env_check({"a": R("missing")})


def test_a_list_conforms():
    assert conform_ig(LIST_TOP_ENV, LIST_TOP_ENV[LIST_TOP_NAME], A_LIST)
    assert conform_ig(LIST_TOP_ENV, LIST_CODE, RecV(A_LIST))
    assert not conform_ig(LIST_TOP_ENV, LIST_CODE, A_LIST)


def test_conformance_needs_fuel_per_unfold():
    with pytest.raises(FuelExhausted):
        conform_ig(LIST_TOP_ENV, LIST_TOP_ENV[LIST_TOP_NAME], A_LIST, fuel=1)
    assert conform_ig(LIST_TOP_ENV, LIST_TOP_ENV[LIST_TOP_NAME], A_LIST, fuel=2)


def test_constant_sets():
    env = {}
    assert conform_ig(env, K(Prim("⊤")), Konst(TT()))
    assert not conform_ig(env, K(Prim("⊤")), Konst(payload("⊤", 0)))
    assert conform_ig(env, K(Prim("nat")), Konst(payload("nat", 7)))

    same = EqWitness(label("a"), label("a"))
    diff = EqWitness(label("a"), label("b"))
    assert conform_ig(env, K(same), Konst(Refl()))
    assert not conform_ig(env, K(diff), Konst(Refl()))


def test_size_of_a_list_is_two():
    assert size_ig(LIST_TOP_ENV, LIST_TOP_ENV[LIST_TOP_NAME], A_LIST) == 2
    assert size_ig(LIST_TOP_ENV, LIST_TOP_ENV[LIST_TOP_NAME], In1(TT())) == 0
    assert size_ig(LIST_TOP_ENV, LIST_CODE, RecV(A_LIST)) == 3


def test_crush_combines_across_products():
    code = Sum(Unit(), Prod(LIST_CODE, LIST_CODE))
    two = RecV(In1(TT()))
    v = In2(Pair(two, two))
    assert crush(LIST_TOP_ENV, code, SIZE_SPEC, v) == payload("nat", 2)


def test_nat_add_rejects_non_naturals():
    assert nat_add(payload("nat", 2), payload("nat", 3)) == payload("nat", 5)
    with pytest.raises(MalformedValue):
        nat_add(TT(), payload("nat", 0))


def test_crush_rejects_mismatched_shape():
    with pytest.raises(MalformedValue):
        crush(LIST_TOP_ENV, LIST_CODE, SIZE_SPEC, TT())
