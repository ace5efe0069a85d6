"""Codes built from unit, identity, sum and product, with one interpretation
slot and a fixed point.

The identity code has no intrinsic meaning: a slot says what trees may sit at
identity positions (payload tokens, fixed-point layers, or nothing at all).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .gvalue import (
    EmptySlot,
    FuelExhausted,
    GenericValue,
    In1,
    In2,
    MalformedValue,
    NAT_SORT,
    Pair,
    Payload,
    PayloadSlot,
    PayloadToken,
    Roll,
    TT,
    Transformer,
    payload_slot_accepts,
    print_value,
    value_size,
)


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Id:
    pass


@dataclass(frozen=True)
class Sum:
    left: "RegularCode"
    right: "RegularCode"


@dataclass(frozen=True)
class Prod:
    left: "RegularCode"
    right: "RegularCode"


RegularCode = Union[Unit, Id, Sum, Prod]


@dataclass(frozen=True)
class MuSlot:
    """Identity positions hold layers of the fixed point of ``code``."""

    code: RegularCode


RegularSlot = Union[PayloadSlot, MuSlot, EmptySlot]


def slot_accepts_r(slot: RegularSlot, v: GenericValue) -> bool:
    match slot:
        case PayloadSlot():
            return payload_slot_accepts(slot, v)
        case MuSlot(code):
            return conform_mu_r(code, v)
        case EmptySlot():
            return False
    raise TypeError(f"not a regular slot: {slot!r}")


def conform_r(code: RegularCode, slot: RegularSlot, v: GenericValue) -> bool:
    """Does ``v`` inhabit the interpretation of ``code`` at ``slot``?"""
    match code:
        case Unit():
            return v == TT()
        case Id():
            return slot_accepts_r(slot, v)
        case Sum(f, g):
            match v:
                case In1(w):
                    return conform_r(f, slot, w)
                case In2(w):
                    return conform_r(g, slot, w)
            return False
        case Prod(f, g):
            match v:
                case Pair(a, b):
                    return conform_r(f, slot, a) and conform_r(g, slot, b)
            return False
    raise TypeError(f"not a regular code: {code!r}")


def conform_mu_r(code: RegularCode, v: GenericValue) -> bool:
    """Fixed-point conformance: one roll, then a layer at the mu slot."""
    match v:
        case Roll(w):
            return conform_r(code, MuSlot(code), w)
    return False


def map_r(code: RegularCode, f: Transformer, v: GenericValue) -> GenericValue:
    """Apply ``f`` at every identity position of one layer."""
    match code:
        case Unit():
            if v != TT():
                raise MalformedValue(f"unit layer is not tt: {print_value(v)}")
            return TT()
        case Id():
            return f(v)
        case Sum(g, h):
            match v:
                case In1(w):
                    return In1(map_r(g, f, w))
                case In2(w):
                    return In2(map_r(h, f, w))
            raise MalformedValue(f"sum layer is not an injection: {print_value(v)}")
        case Prod(g, h):
            match v:
                case Pair(a, b):
                    return Pair(map_r(g, f, a), map_r(h, f, b))
            raise MalformedValue(f"product layer is not a pair: {print_value(v)}")
    raise TypeError(f"not a regular code: {code!r}")


RegularAlgebra = Callable[[GenericValue], GenericValue]


def cata_r(
    code: RegularCode,
    alg: RegularAlgebra,
    v: GenericValue,
    fuel: int | None = None,
) -> GenericValue:
    """Fold the fixed point of ``code`` with ``alg``, one layer per fuel unit.

    The input must conform at the fixed point; the default fuel is the value
    size, which always suffices.
    """
    if not conform_mu_r(code, v):
        raise MalformedValue(f"not a fixed-point value of the code: {print_value(v)}")
    if fuel is None:
        fuel = value_size(v)
    return _cata_go(code, alg, v, fuel)


def _cata_go(code: RegularCode, alg: RegularAlgebra, v: GenericValue, fuel: int) -> GenericValue:
    match v:
        case Roll(w):
            if fuel <= 0:
                raise FuelExhausted("cata_r ran out of fuel")
            return alg(map_r(code, lambda u: _cata_go(code, alg, u, fuel - 1), w))
    raise MalformedValue(f"cata_r expects a rolled value: {print_value(v)}")


def to_nat_alg(v: GenericValue) -> GenericValue:
    """Algebra for ``Sum(Unit, Id)``: count successors into a nat token."""
    match v:
        case In1(TT()):
            return Payload(PayloadToken(NAT_SORT, 0))
        case In2(Payload(token)) if token.sort == NAT_SORT:
            return Payload(PayloadToken(NAT_SORT, token.ident + 1))
    raise MalformedValue(f"to_nat_alg cannot consume {print_value(v)}")


def re_roll_alg(v: GenericValue) -> GenericValue:
    """Algebra that rebuilds the value it folds; cata with it is the identity."""
    return Roll(v)
