"""Codes indexed by an input set and an output set, with composition and an
internal fixed point.

Composition needs no fixed point here (its interpretation just nests), and
the fixed point is itself a code whose inner body draws inputs from the
disjoint union of the outer inputs (Left) and the recursive outputs (Right).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .gvalue import (
    EmptySlot,
    FuelExhausted,
    GenericValue,
    In1,
    In2,
    IndexLabel,
    IndexNotInSet,
    IndexSet,
    MalformedValue,
    Pair,
    PayloadSlot,
    Refl,
    Roll,
    TT,
    Transformer,
    disjoint_union,
    left,
    payload_slot_accepts,
    print_label,
    print_value,
    right,
    value_size,
)


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Id:
    label: IndexLabel


@dataclass(frozen=True)
class Tag:
    label: IndexLabel


@dataclass(frozen=True)
class Sum:
    left: "IndexedBody"
    right: "IndexedBody"


@dataclass(frozen=True)
class Prod:
    left: "IndexedBody"
    right: "IndexedBody"


@dataclass(frozen=True)
class Comp:
    """Left code consumes what the right code produces."""

    left: "IndexedCode"
    right: "IndexedCode"


@dataclass(frozen=True)
class Fix:
    """Inner inputs are Left(outer inputs) plus Right(recursive outputs)."""

    inner: "IndexedCode"


IndexedBody = Union[Unit, Id, Tag, Sum, Prod, Comp, Fix]


@dataclass(frozen=True)
class IndexedCode:
    ins: IndexSet
    outs: IndexSet
    body: IndexedBody


def wellformed_i(code: IndexedCode) -> bool:
    """Check label membership and the index-set side conditions everywhere."""
    return _wf_body(code, code.body)


def _wf_body(code: IndexedCode, body: IndexedBody) -> bool:
    match body:
        case Unit():
            return True
        case Id(lbl):
            return lbl in code.ins
        case Tag(lbl):
            return lbl in code.outs
        case Sum(f, g) | Prod(f, g):
            return _wf_body(code, f) and _wf_body(code, g)
        case Comp(f, g):
            return (
                f.outs == code.outs
                and g.ins == code.ins
                and f.ins == g.outs
                and wellformed_i(f)
                and wellformed_i(g)
            )
        case Fix(f):
            return (
                f.outs == code.outs
                and f.ins == disjoint_union(code.ins, code.outs)
                and wellformed_i(f)
            )
    raise TypeError(f"not an indexed body: {body!r}")


@dataclass(frozen=True)
class InterpSlot:
    """Inhabitants of the interpretation of ``code`` under ``assign`` at ``at``."""

    code: IndexedCode
    assign: "SlotTable"
    at: IndexLabel


@dataclass(frozen=True)
class MuSlot:
    """Fixed-point values of the inner code ``inner`` under ``assign`` at ``at``."""

    inner: IndexedCode
    assign: "SlotTable"
    at: IndexLabel


IndexedSlot = Union[PayloadSlot, EmptySlot, InterpSlot, MuSlot]

SlotTable = Mapping[IndexLabel, IndexedSlot]


def split_assign(first: SlotTable, second: SlotTable) -> dict[IndexLabel, IndexedSlot]:
    """Join two slot tables over a disjoint union: Left looks up the first."""
    joined: dict[IndexLabel, IndexedSlot] = {}
    for lbl, slot in first.items():
        joined[left(lbl)] = slot
    for lbl, slot in second.items():
        joined[right(lbl)] = slot
    return joined


def split_transform(
    first: Mapping[IndexLabel, Transformer],
    second: Mapping[IndexLabel, Transformer],
) -> dict[IndexLabel, Transformer]:
    """Join two transformer families over a disjoint union of index sets."""
    joined: dict[IndexLabel, Transformer] = {}
    for lbl, fn in first.items():
        joined[left(lbl)] = fn
    for lbl, fn in second.items():
        joined[right(lbl)] = fn
    return joined


def _mu_table(inner: IndexedCode, assign: SlotTable) -> dict[IndexLabel, IndexedSlot]:
    return {lbl: MuSlot(inner, assign, lbl) for lbl in inner.outs}


def slot_accepts_i(slot: IndexedSlot, v: GenericValue) -> bool:
    match slot:
        case PayloadSlot():
            return payload_slot_accepts(slot, v)
        case EmptySlot():
            return False
        case InterpSlot(code, assign, at):
            return conform_i(code, assign, at, v)
        case MuSlot(inner, assign, at):
            match v:
                case Roll(w):
                    return conform_i(inner, split_assign(assign, _mu_table(inner, assign)), at, w)
            return False
    raise TypeError(f"not an indexed slot: {slot!r}")


def conform_i(code: IndexedCode, assign: SlotTable, at: IndexLabel, v: GenericValue) -> bool:
    """Does ``v`` inhabit the interpretation of ``code`` under ``assign`` at ``at``?

    Assumes ``wellformed_i(code)``.
    """
    if at not in code.outs:
        raise IndexNotInSet(f"index {print_label(at)} is not an output of the code")
    return _conform_body(code, code.body, assign, at, v)


def _conform_body(
    code: IndexedCode,
    body: IndexedBody,
    assign: SlotTable,
    at: IndexLabel,
    v: GenericValue,
) -> bool:
    match body:
        case Unit():
            return v == TT()
        case Id(lbl):
            if lbl not in assign:
                raise IndexNotInSet(f"no slot for index {print_label(lbl)}")
            return slot_accepts_i(assign[lbl], v)
        case Tag(lbl):
            return v == Refl() and at == lbl
        case Sum(f, g):
            match v:
                case In1(w):
                    return _conform_body(code, f, assign, at, w)
                case In2(w):
                    return _conform_body(code, g, assign, at, w)
            return False
        case Prod(f, g):
            match v:
                case Pair(a, b):
                    return _conform_body(code, f, assign, at, a) and _conform_body(
                        code, g, assign, at, b
                    )
            return False
        case Comp(f, g):
            middle = {lbl: InterpSlot(g, assign, lbl) for lbl in f.ins}
            return conform_i(f, middle, at, v)
        case Fix(f):
            match v:
                case Roll(w):
                    inner_assign = split_assign(assign, _mu_table(f, assign))
                    return conform_i(f, inner_assign, at, w)
            return False
    raise TypeError(f"not an indexed body: {body!r}")


IxTransform = Mapping[IndexLabel, Transformer]


def map_i(
    code: IndexedCode,
    fam: IxTransform,
    at: IndexLabel,
    v: GenericValue,
    fuel: int | None = None,
) -> GenericValue:
    """Apply a per-index transformer family at every identity position.

    Mapping through a fixed point unrolls and consumes fuel; the default fuel
    is the value size.
    """
    if fuel is None:
        fuel = value_size(v)
    if at not in code.outs:
        raise IndexNotInSet(f"index {print_label(at)} is not an output of the code")
    return _map_body(code, code.body, fam, at, v, fuel)


def _map_body(
    code: IndexedCode,
    body: IndexedBody,
    fam: IxTransform,
    at: IndexLabel,
    v: GenericValue,
    fuel: int,
) -> GenericValue:
    match body:
        case Unit():
            if v != TT():
                raise MalformedValue(f"unit layer is not tt: {print_value(v)}")
            return TT()
        case Id(lbl):
            if lbl not in fam:
                raise IndexNotInSet(f"no transformer for index {print_label(lbl)}")
            return fam[lbl](v)
        case Tag(_):
            if v != Refl():
                raise MalformedValue(f"tag position is not refl: {print_value(v)}")
            return v
        case Sum(f, g):
            match v:
                case In1(w):
                    return In1(_map_body(code, f, fam, at, w, fuel))
                case In2(w):
                    return In2(_map_body(code, g, fam, at, w, fuel))
            raise MalformedValue(f"sum layer is not an injection: {print_value(v)}")
        case Prod(f, g):
            match v:
                case Pair(a, b):
                    return Pair(
                        _map_body(code, f, fam, at, a, fuel),
                        _map_body(code, g, fam, at, b, fuel),
                    )
            raise MalformedValue(f"product layer is not a pair: {print_value(v)}")
        case Comp(f, g):
            middle = {
                lbl: (lambda w, lbl=lbl: map_i(g, fam, lbl, w, fuel)) for lbl in f.ins
            }
            return map_i(f, middle, at, v, fuel)
        case Fix(f):
            match v:
                case Roll(w):
                    if fuel <= 0:
                        raise FuelExhausted("map_i ran out of fuel on a fixed point")
                    recur = {
                        lbl: (
                            lambda u, lbl=lbl: _map_body(
                                code, body, fam, lbl, u, fuel - 1
                            )
                        )
                        for lbl in f.outs
                    }
                    inner_fam = split_transform(fam, recur)
                    return Roll(map_i(f, inner_fam, at, w, fuel - 1))
            raise MalformedValue(f"fixed-point layer is not rolled: {print_value(v)}")
    raise TypeError(f"not an indexed body: {body!r}")
