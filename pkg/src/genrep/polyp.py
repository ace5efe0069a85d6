"""Two-slot codes: a parameter position, a recursive position, and a
composition constructor whose interpretation takes a fixed point.

Composition is deliberately asymmetric: the interpretation of ``Comp(F, G)``
at (A, R) is the fixed point of F whose parameters are interpretations of G
at (A, R). Trees-of-lists and friends live here; the naive composition of two
container codes is usually not the container-of-containers code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .gvalue import (
    EmptySlot,
    FuelExhausted,
    GenericValue,
    In1,
    In2,
    MalformedValue,
    Pair,
    PayloadSlot,
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
class Par:
    pass


@dataclass(frozen=True)
class Id:
    pass


@dataclass(frozen=True)
class Sum:
    left: "PolyPCode"
    right: "PolyPCode"


@dataclass(frozen=True)
class Prod:
    left: "PolyPCode"
    right: "PolyPCode"


@dataclass(frozen=True)
class Comp:
    left: "PolyPCode"
    right: "PolyPCode"


PolyPCode = Union[Unit, Par, Id, Sum, Prod, Comp]


@dataclass(frozen=True)
class MuSlot:
    """Layers of the fixed point of ``code`` with parameter slot ``param``."""

    code: PolyPCode
    param: "PolyPSlot"


@dataclass(frozen=True)
class InterpSlot:
    """Inhabitants of the interpretation of ``code`` at ``slots``."""

    code: PolyPCode
    slots: "SlotPair"


PolyPSlot = Union[PayloadSlot, EmptySlot, MuSlot, InterpSlot]


@dataclass(frozen=True)
class SlotPair:
    param: PolyPSlot
    rec: PolyPSlot


def slot_accepts_p(slot: PolyPSlot, v: GenericValue) -> bool:
    match slot:
        case PayloadSlot():
            return payload_slot_accepts(slot, v)
        case EmptySlot():
            return False
        case MuSlot(code, param):
            return conform_mu_p(code, param, v)
        case InterpSlot(code, slots):
            return conform_p(code, slots, v)
    raise TypeError(f"not a polyp slot: {slot!r}")


def conform_p(code: PolyPCode, slots: SlotPair, v: GenericValue) -> bool:
    match code:
        case Unit():
            return v == TT()
        case Par():
            return slot_accepts_p(slots.param, v)
        case Id():
            return slot_accepts_p(slots.rec, v)
        case Sum(f, g):
            match v:
                case In1(w):
                    return conform_p(f, slots, w)
                case In2(w):
                    return conform_p(g, slots, w)
            return False
        case Prod(f, g):
            match v:
                case Pair(a, b):
                    return conform_p(f, slots, a) and conform_p(g, slots, b)
            return False
        case Comp(f, g):
            # The interpretation equation: values of Comp(F, G) at (A, R) are
            # fixed-point values of F whose parameters interpret G at (A, R).
            return conform_mu_p(f, InterpSlot(g, slots), v)
    raise TypeError(f"not a polyp code: {code!r}")


def conform_mu_p(code: PolyPCode, param: PolyPSlot, v: GenericValue) -> bool:
    match v:
        case Roll(w):
            return conform_p(code, SlotPair(param, MuSlot(code, param)), w)
    return False


def map_p(
    code: PolyPCode,
    f: Transformer,
    g: Transformer,
    v: GenericValue,
    fuel: int | None = None,
) -> GenericValue:
    """Apply ``f`` at parameter positions and ``g`` at recursive positions.

    Composition layers hide a fixed point, so mapping through them unrolls
    and consumes fuel; the default fuel is the value size.
    """
    if fuel is None:
        fuel = value_size(v)
    match code:
        case Unit():
            if v != TT():
                raise MalformedValue(f"unit layer is not tt: {print_value(v)}")
            return TT()
        case Par():
            return f(v)
        case Id():
            return g(v)
        case Sum(c, d):
            match v:
                case In1(w):
                    return In1(map_p(c, f, g, w, fuel))
                case In2(w):
                    return In2(map_p(d, f, g, w, fuel))
            raise MalformedValue(f"sum layer is not an injection: {print_value(v)}")
        case Prod(c, d):
            match v:
                case Pair(a, b):
                    return Pair(map_p(c, f, g, a, fuel), map_p(d, f, g, b, fuel))
            raise MalformedValue(f"product layer is not a pair: {print_value(v)}")
        case Comp(c, d):
            match v:
                case Roll(w):
                    if fuel <= 0:
                        raise FuelExhausted("map_p ran out of fuel on a composition")
                    return Roll(
                        map_p(
                            c,
                            lambda u: map_p(d, f, g, u, fuel - 1),
                            lambda u: map_p(code, f, g, u, fuel - 1),
                            w,
                            fuel - 1,
                        )
                    )
            raise MalformedValue(f"composition layer is not rolled: {print_value(v)}")
    raise TypeError(f"not a polyp code: {code!r}")


def pmap(
    code: PolyPCode,
    f: Transformer,
    v: GenericValue,
    fuel: int | None = None,
) -> GenericValue:
    """Map ``f`` over the parameters of a whole fixed-point value."""
    if fuel is None:
        fuel = value_size(v)
    match v:
        case Roll(w):
            if fuel <= 0:
                raise FuelExhausted("pmap ran out of fuel")
            return Roll(map_p(code, f, lambda u: pmap(code, f, u, fuel - 1), w, fuel - 1))
    raise MalformedValue(f"pmap expects a rolled value: {print_value(v)}")
