"""Flat codes with constants and named recursive references.

Recursion is not structural here: an R node carries a name that is resolved
against a code environment, so codes stay finite, printable and hashable.
Unfolding a reference consumes fuel, which keeps every traversal total.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Union

from .gvalue import (
    FuelExhausted,
    GenericValue,
    In1,
    In2,
    IndexLabel,
    Konst,
    MalformedValue,
    NAT_SORT,
    Pair,
    Payload,
    PayloadSlot,
    PayloadToken,
    RecV,
    Refl,
    TT,
    payload,
    payload_slot_accepts,
    print_value,
    token_successor,
    value_size,
)


@dataclass(frozen=True)
class Prim:
    sort: str


@dataclass(frozen=True)
class EqWitness:
    """Inhabited by refl exactly when the two labels coincide."""

    a: IndexLabel
    b: IndexLabel


@dataclass(frozen=True)
class OfCode:
    ref: str


KSet = Union[Prim, EqWitness, OfCode]


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class K:
    payload: KSet


@dataclass(frozen=True)
class R:
    ref: str


@dataclass(frozen=True)
class Sum:
    left: "InstantCode"
    right: "InstantCode"


@dataclass(frozen=True)
class Prod:
    left: "InstantCode"
    right: "InstantCode"


InstantCode = Union[Unit, K, R, Sum, Prod]

CodeEnv = Mapping[str, InstantCode]


def _refs(code: InstantCode) -> Iterator[str]:
    match code:
        case Unit():
            return
        case K(OfCode(ref)):
            yield ref
        case K(_):
            return
        case R(ref):
            yield ref
        case Sum(f, g) | Prod(f, g):
            yield from _refs(f)
            yield from _refs(g)
        case _:
            raise TypeError(f"not an instant code: {code!r}")


def env_check(env: CodeEnv) -> bool:
    """True iff every R and OfCode reference resolves inside the environment."""
    return all(ref in env for code in env.values() for ref in _refs(code))


def conform_ig(
    env: CodeEnv,
    code: InstantCode,
    v: GenericValue,
    fuel: int | None = None,
) -> bool:
    """Does ``v`` inhabit the interpretation of ``code`` in ``env``?

    Every step through an R reference or an OfCode constant costs one fuel;
    the default budget is the value size, which is always enough for values
    that do conform.
    """
    if fuel is None:
        fuel = value_size(v)
    match code:
        case Unit():
            return v == TT()
        case K(kset):
            match v:
                case Konst(w):
                    return _kset_accepts(env, kset, w, fuel)
            return False
        case R(ref):
            match v:
                case RecV(w):
                    if fuel <= 0:
                        raise FuelExhausted(f"conform_ig: no fuel to unfold {ref}")
                    return conform_ig(env, env[ref], w, fuel - 1)
            return False
        case Sum(f, g):
            match v:
                case In1(w):
                    return conform_ig(env, f, w, fuel)
                case In2(w):
                    return conform_ig(env, g, w, fuel)
            return False
        case Prod(f, g):
            match v:
                case Pair(a, b):
                    return conform_ig(env, f, a, fuel) and conform_ig(env, g, b, fuel)
            return False
    raise TypeError(f"not an instant code: {code!r}")


def _kset_accepts(env: CodeEnv, kset: KSet, v: GenericValue, fuel: int) -> bool:
    match kset:
        case Prim(sort):
            return payload_slot_accepts(PayloadSlot(sort), v)
        case EqWitness(a, b):
            return v == Refl() and a == b
        case OfCode(ref):
            if fuel <= 0:
                raise FuelExhausted(f"conform_ig: no fuel to enter constant {ref}")
            return conform_ig(env, env[ref], v, fuel - 1)
    raise TypeError(f"not a constant set: {kset!r}")


@dataclass(frozen=True)
class CrushSpec:
    combine: Callable[[GenericValue, GenericValue], GenericValue]
    step: Callable[[GenericValue], GenericValue]
    unit: GenericValue


def crush(
    env: CodeEnv,
    code: InstantCode,
    spec: CrushSpec,
    v: GenericValue,
    fuel: int | None = None,
) -> GenericValue:
    """Fold a conforming value to a single result.

    Unit and constant positions yield the unit, products combine their two
    sides, sums descend, and each unfolded reference applies the step to the
    result from underneath.
    """
    if fuel is None:
        fuel = value_size(v)
    match code, v:
        case Unit(), TT():
            return spec.unit
        case K(_), Konst(_):
            return spec.unit
        case R(ref), RecV(w):
            if fuel <= 0:
                raise FuelExhausted(f"crush: no fuel to unfold {ref}")
            return spec.step(crush(env, env[ref], spec, w, fuel - 1))
        case Sum(f, _), In1(w):
            return crush(env, f, spec, w, fuel)
        case Sum(_, g), In2(w):
            return crush(env, g, spec, w, fuel)
        case Prod(f, g), Pair(a, b):
            return spec.combine(
                crush(env, f, spec, a, fuel), crush(env, g, spec, b, fuel)
            )
    raise MalformedValue(f"crush: value {print_value(v)} does not fit the code")


def nat_add(a: GenericValue, b: GenericValue) -> GenericValue:
    match a, b:
        case Payload(PayloadToken(s, m)), Payload(PayloadToken(t, n)) if (
            s == NAT_SORT and t == NAT_SORT
        ):
            return payload(NAT_SORT, m + n)
    raise MalformedValue("nat_add expects two naturals")


SIZE_SPEC = CrushSpec(combine=nat_add, step=token_successor, unit=payload(NAT_SORT, 0))


def size_ig(
    env: CodeEnv,
    code: InstantCode,
    v: GenericValue,
    fuel: int | None = None,
) -> int:
    """Count the recursive layers of ``v``: crush with (+, successor, 0)."""
    result = crush(env, code, SIZE_SPEC, v, fuel)
    match result:
        case Payload(PayloadToken(sort, n)) if sort == NAT_SORT:
            return n
    raise MalformedValue(f"size result is not a natural: {print_value(result)}")
