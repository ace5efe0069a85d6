"""Code lifting and value conversion between the five universes.

Four of the five arrows (regular to polyp, regular to multirec, polyp to
indexed, multirec to indexed) preserve the value tree exactly; converting is
a validating walk and the interesting content lives in the lifted codes.
The fifth arrow (indexed to instant) really rewrites trees: rolls become
rec nodes, parameter and tag contents get wrapped in constants, and every
composition or fixed point becomes a named environment entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Mapping, Sequence, Union

from . import indexed, instant, multirec, polyp, regular
from .gvalue import (
    EMPTY_INDEX_SET,
    FuelExhausted,
    GenericValue,
    In1,
    In2,
    IndexLabel,
    IndexSet,
    Konst,
    MalformedValue,
    Pair,
    RecV,
    Refl,
    Roll,
    TOP_SORT,
    TT,
    disjoint_union,
    index_set,
    label,
    left,
    print_label,
    print_value,
    right,
    value_size,
)

STAR = label("⋆")
LSTAR = left(STAR)
RSTAR = right(STAR)

Direction = Literal["forward", "backward"]


def _check_direction(direction: str) -> None:
    if direction not in ("forward", "backward"):
        raise ValueError(f"direction must be forward or backward: {direction!r}")


@dataclass
class ConversionReport:
    """Evidence from a round-trip or law run over enumerated values."""

    checked_count: int = 0
    failures: list[tuple[GenericValue, str, str]] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.failures


# ---------------------------------------------------------------------------
# regular to polyp


def lift_r_to_p(code: regular.RegularCode) -> polyp.PolyPCode:
    """Structural lift; the result never mentions Par or Comp."""
    match code:
        case regular.Unit():
            return polyp.Unit()
        case regular.Id():
            return polyp.Id()
        case regular.Sum(f, g):
            return polyp.Sum(lift_r_to_p(f), lift_r_to_p(g))
        case regular.Prod(f, g):
            return polyp.Prod(lift_r_to_p(f), lift_r_to_p(g))
    raise TypeError(f"not a regular code: {code!r}")


def _walk_mu_r(code: regular.RegularCode, v: GenericValue, fuel: int) -> GenericValue:
    match v:
        case Roll(x):
            if fuel <= 0:
                raise FuelExhausted("conversion ran out of fuel")
            return Roll(regular.map_r(code, lambda w: _walk_mu_r(code, w, fuel - 1), x))
    raise MalformedValue(f"fixed-point layer is not rolled: {print_value(v)}")


def convert_r_p(
    code: regular.RegularCode,
    v: GenericValue,
    direction: Direction,
    fuel: int | None = None,
) -> GenericValue:
    """Both directions are checked identity walks: the lift is structural,
    so the polyp tree and the regular tree coincide node for node."""
    _check_direction(direction)
    if fuel is None:
        fuel = value_size(v)
    return _walk_mu_r(code, v, fuel)


# ---------------------------------------------------------------------------
# regular to multirec


def lift_r_to_m(code: regular.RegularCode) -> multirec.MultirecCode:
    """One-index family over ⋆; every Id points at ⋆ and no Tag is emitted."""
    return multirec.MultirecCode(index_set(STAR), _lift_body_r_m(code))


def _lift_body_r_m(code: regular.RegularCode) -> multirec.MultirecBody:
    match code:
        case regular.Unit():
            return multirec.Unit()
        case regular.Id():
            return multirec.Id(STAR)
        case regular.Sum(f, g):
            return multirec.Sum(_lift_body_r_m(f), _lift_body_r_m(g))
        case regular.Prod(f, g):
            return multirec.Prod(_lift_body_r_m(f), _lift_body_r_m(g))
    raise TypeError(f"not a regular code: {code!r}")


def convert_r_m(
    code: regular.RegularCode,
    v: GenericValue,
    direction: Direction,
    fuel: int | None = None,
) -> GenericValue:
    _check_direction(direction)
    if fuel is None:
        fuel = value_size(v)
    return _walk_mu_r(code, v, fuel)


# ---------------------------------------------------------------------------
# polyp to indexed


def lift_p_to_i(code: polyp.PolyPCode) -> indexed.IndexedCode:
    """Open lift: parameters become Left ⋆, recursion becomes Right ⋆.

    Composition cannot reuse indexed composition directly; the left operand
    is closed with an indexed fixed point first.
    """
    return indexed.IndexedCode(
        disjoint_union(index_set(STAR), index_set(STAR)),
        index_set(STAR),
        _lift_body_p_i(code),
    )


def _lift_body_p_i(code: polyp.PolyPCode) -> indexed.IndexedBody:
    match code:
        case polyp.Unit():
            return indexed.Unit()
        case polyp.Par():
            return indexed.Id(LSTAR)
        case polyp.Id():
            return indexed.Id(RSTAR)
        case polyp.Sum(f, g):
            return indexed.Sum(_lift_body_p_i(f), _lift_body_p_i(g))
        case polyp.Prod(f, g):
            return indexed.Prod(_lift_body_p_i(f), _lift_body_p_i(g))
        case polyp.Comp(f, g):
            return indexed.Comp(fix_p_code(f), lift_p_to_i(g))
    raise TypeError(f"not a polyp code: {code!r}")


def fix_p_code(code: polyp.PolyPCode) -> indexed.IndexedCode:
    """Close the lift of a polyp code under the indexed fixed point."""
    return indexed.IndexedCode(
        index_set(STAR), index_set(STAR), indexed.Fix(lift_p_to_i(code))
    )


def _identity(v: GenericValue) -> GenericValue:
    return v


def _from_p(code: polyp.PolyPCode, v: GenericValue, fuel: int) -> GenericValue:
    """One-layer converter; only composition does anything beyond walking."""
    match code:
        case polyp.Unit():
            if v != TT():
                raise MalformedValue(f"unit layer is not tt: {print_value(v)}")
            return v
        case polyp.Par() | polyp.Id():
            return v
        case polyp.Sum(f, g):
            match v:
                case In1(w):
                    return In1(_from_p(f, w, fuel))
                case In2(w):
                    return In2(_from_p(g, w, fuel))
            raise MalformedValue(f"sum layer is not an injection: {print_value(v)}")
        case polyp.Prod(f, g):
            match v:
                case Pair(a, b):
                    return Pair(_from_p(f, a, fuel), _from_p(g, b, fuel))
            raise MalformedValue(f"product layer is not a pair: {print_value(v)}")
        case polyp.Comp(f, g):
            match v:
                case Roll(x):
                    if fuel <= 0:
                        raise FuelExhausted("conversion ran out of fuel")
                    fam = indexed.split_transform(
                        {STAR: lambda u: _from_p(g, u, fuel - 1)},
                        {STAR: lambda u: _from_p(code, u, fuel - 1)},
                    )
                    layer = _from_p(f, x, fuel - 1)
                    return Roll(
                        indexed.map_i(lift_p_to_i(f), fam, STAR, layer, fuel - 1)
                    )
            raise MalformedValue(f"composition layer is not rolled: {print_value(v)}")
    raise TypeError(f"not a polyp code: {code!r}")


def _to_p(code: polyp.PolyPCode, v: GenericValue, fuel: int) -> GenericValue:
    match code:
        case polyp.Unit():
            if v != TT():
                raise MalformedValue(f"unit layer is not tt: {print_value(v)}")
            return v
        case polyp.Par() | polyp.Id():
            return v
        case polyp.Sum(f, g):
            match v:
                case In1(w):
                    return In1(_to_p(f, w, fuel))
                case In2(w):
                    return In2(_to_p(g, w, fuel))
            raise MalformedValue(f"sum layer is not an injection: {print_value(v)}")
        case polyp.Prod(f, g):
            match v:
                case Pair(a, b):
                    return Pair(_to_p(f, a, fuel), _to_p(g, b, fuel))
            raise MalformedValue(f"product layer is not a pair: {print_value(v)}")
        case polyp.Comp(f, g):
            match v:
                case Roll(x):
                    if fuel <= 0:
                        raise FuelExhausted("conversion ran out of fuel")
                    fam = indexed.split_transform(
                        {STAR: lambda u: _to_p(g, u, fuel - 1)},
                        {STAR: lambda u: _to_p(code, u, fuel - 1)},
                    )
                    mapped = indexed.map_i(lift_p_to_i(f), fam, STAR, x, fuel - 1)
                    return Roll(_to_p(f, mapped, fuel - 1))
            raise MalformedValue(f"composition layer is not rolled: {print_value(v)}")
    raise TypeError(f"not a polyp code: {code!r}")


def _from_mu_p(code: polyp.PolyPCode, v: GenericValue, fuel: int) -> GenericValue:
    match v:
        case Roll(x):
            if fuel <= 0:
                raise FuelExhausted("conversion ran out of fuel")
            fam = indexed.split_transform(
                {STAR: _identity},
                {STAR: lambda u: _from_mu_p(code, u, fuel - 1)},
            )
            layer = _from_p(code, x, fuel - 1)
            return Roll(indexed.map_i(lift_p_to_i(code), fam, STAR, layer, fuel - 1))
    raise MalformedValue(f"fixed-point layer is not rolled: {print_value(v)}")


def _to_mu_p(code: polyp.PolyPCode, v: GenericValue, fuel: int) -> GenericValue:
    match v:
        case Roll(x):
            if fuel <= 0:
                raise FuelExhausted("conversion ran out of fuel")
            fam = indexed.split_transform(
                {STAR: _identity},
                {STAR: lambda u: _to_mu_p(code, u, fuel - 1)},
            )
            mapped = indexed.map_i(lift_p_to_i(code), fam, STAR, x, fuel - 1)
            return Roll(_to_p(code, mapped, fuel - 1))
    raise MalformedValue(f"fixed-point layer is not rolled: {print_value(v)}")


def convert_p_i(
    code: polyp.PolyPCode,
    v: GenericValue,
    direction: Direction,
    fuel: int | None = None,
) -> GenericValue:
    _check_direction(direction)
    if fuel is None:
        fuel = value_size(v)
    if direction == "forward":
        return _from_mu_p(code, v, fuel)
    return _to_mu_p(code, v, fuel)


# ---------------------------------------------------------------------------
# multirec to indexed


def lift_m_to_i(code: multirec.MultirecCode) -> indexed.IndexedCode:
    """Lift to an open indexed code meant to sit under Fix: the input set is
    the disjoint union of nothing and the family's own indices, so every Id
    points Right."""
    return indexed.IndexedCode(
        disjoint_union(EMPTY_INDEX_SET, code.indices),
        code.indices,
        _lift_body_m_i(code.body),
    )


def _lift_body_m_i(body: multirec.MultirecBody) -> indexed.IndexedBody:
    match body:
        case multirec.Unit():
            return indexed.Unit()
        case multirec.Id(lbl):
            return indexed.Id(right(lbl))
        case multirec.Tag(lbl):
            return indexed.Tag(lbl)
        case multirec.Sum(f, g):
            return indexed.Sum(_lift_body_m_i(f), _lift_body_m_i(g))
        case multirec.Prod(f, g):
            return indexed.Prod(_lift_body_m_i(f), _lift_body_m_i(g))
    raise TypeError(f"not a multirec body: {body!r}")


def fix_m_code(code: multirec.MultirecCode) -> indexed.IndexedCode:
    """The lifted family closed under the indexed fixed point."""
    return indexed.IndexedCode(
        EMPTY_INDEX_SET, code.indices, indexed.Fix(lift_m_to_i(code))
    )


def convert_m_i(
    code: multirec.MultirecCode,
    at: IndexLabel,
    v: GenericValue,
    direction: Direction,
    fuel: int | None = None,
) -> GenericValue:
    """Checked identity walk; Refl witnesses pass through untouched."""
    _check_direction(direction)
    if fuel is None:
        fuel = value_size(v)
    return _walk_mu_m(code, at, v, fuel)


def _walk_mu_m(
    code: multirec.MultirecCode, at: IndexLabel, v: GenericValue, fuel: int
) -> GenericValue:
    match v:
        case Roll(x):
            if fuel <= 0:
                raise FuelExhausted("conversion ran out of fuel")
            fam = {
                lbl: (lambda w, lbl=lbl: _walk_mu_m(code, lbl, w, fuel - 1))
                for lbl in code.indices
            }
            return Roll(multirec.map_m(code, fam, at, x))
    raise MalformedValue(f"fixed-point layer is not rolled: {print_value(v)}")


# ---------------------------------------------------------------------------
# indexed to instant


@dataclass(frozen=True)
class _RRef:
    """Lift-time slot entry: this input index is a direct recursive reference."""

    ref: str


_LiftEntry = Union[instant.Prim, instant.EqWitness, instant.OfCode, _RRef]

_Rho = tuple[tuple[IndexLabel, _LiftEntry], ...]

KSetTable = Mapping[IndexLabel, instant.KSet]


class _EnvBuilder:
    """Accumulates named entries; registration happens before the body is
    computed so self-referential and mutually recursive codes terminate."""

    def __init__(self, seed: instant.CodeEnv):
        self.entries: dict[str, instant.InstantCode | None] = dict(seed)
        self.memo: dict[object, str] = {}
        self.counter = 0

    def fresh(self) -> str:
        while True:
            name = f"ig{self.counter}"
            self.counter += 1
            if name not in self.entries:
                return name

    def ensure(self, key: object, build) -> str:
        if key in self.memo:
            return self.memo[key]
        name = self.fresh()
        self.memo[key] = name
        self.entries[name] = None
        self.entries[name] = build()
        return name

    def finished(self) -> dict[str, instant.InstantCode]:
        assert all(code is not None for code in self.entries.values())
        return dict(self.entries)


def _rho_from_table(code: indexed.IndexedCode, table: KSetTable) -> _Rho:
    pairs = []
    for lbl in code.ins:
        if lbl not in table:
            raise MalformedValue(f"no constant set for input index {print_label(lbl)}")
        pairs.append((lbl, table[lbl]))
    return tuple(pairs)


def _rho_get(rho: _Rho, lbl: IndexLabel) -> _LiftEntry:
    for key, entry in rho:
        if key == lbl:
            return entry
    raise MalformedValue(f"no constant set for input index {print_label(lbl)}")


def lift_i_to_ig(
    code: indexed.IndexedCode,
    table: KSetTable,
    env: instant.CodeEnv | None = None,
) -> tuple[dict[IndexLabel, instant.InstantCode], dict[str, instant.InstantCode]]:
    """Produce one instant code per output index plus the environment that
    holds every composition and fixed point as a named entry.

    Entry names are an ig-prefixed counter in traversal order, so repeated
    runs yield byte-identical environments.
    """
    builder = _EnvBuilder(env if env is not None else {})
    rho = _rho_from_table(code, table)
    out = {o: _lift_code_ig(code, rho, o, builder) for o in code.outs}
    return out, builder.finished()


def _lift_code_ig(
    code: indexed.IndexedCode, rho: _Rho, o: IndexLabel, builder: _EnvBuilder
) -> instant.InstantCode:
    return _lift_body_ig(code.body, rho, o, builder)


def _lift_body_ig(
    body: indexed.IndexedBody, rho: _Rho, o: IndexLabel, builder: _EnvBuilder
) -> instant.InstantCode:
    match body:
        case indexed.Unit():
            return instant.Unit()
        case indexed.Id(lbl):
            entry = _rho_get(rho, lbl)
            match entry:
                case _RRef(name):
                    return instant.R(name)
            return instant.K(entry)
        case indexed.Tag(lbl):
            return instant.K(instant.EqWitness(o, lbl))
        case indexed.Sum(f, g):
            return instant.Sum(
                _lift_body_ig(f, rho, o, builder), _lift_body_ig(g, rho, o, builder)
            )
        case indexed.Prod(f, g):
            return instant.Prod(
                _lift_body_ig(f, rho, o, builder), _lift_body_ig(g, rho, o, builder)
            )
        case indexed.Comp(f, g):
            name = builder.ensure(
                ("comp", f, g, rho, o),
                lambda: _lift_body_ig(f.body, _comp_rho(f, g, rho, builder), o, builder),
            )
            return instant.R(name)
        case indexed.Fix(f):
            name = _ensure_fix(body, f, rho, o, builder)
            return instant.R(name)
    raise TypeError(f"not an indexed body: {body!r}")


def _comp_rho(
    f: indexed.IndexedCode, g: indexed.IndexedCode, rho: _Rho, builder: _EnvBuilder
) -> _Rho:
    pairs = []
    for lbl in f.ins:
        name = builder.ensure(
            ("interp", g, rho, lbl), lambda lbl=lbl: _lift_code_ig(g, rho, lbl, builder)
        )
        pairs.append((lbl, instant.OfCode(name)))
    return tuple(pairs)


def _ensure_fix(
    fix_body: indexed.IndexedBody,
    inner: indexed.IndexedCode,
    rho: _Rho,
    o: IndexLabel,
    builder: _EnvBuilder,
) -> str:
    def build() -> instant.InstantCode:
        pairs = [(left(lbl), entry) for lbl, entry in rho]
        for out in inner.outs:
            ref = _ensure_fix(fix_body, inner, rho, out, builder)
            pairs.append((right(out), _RRef(ref)))
        return _lift_body_ig(inner.body, tuple(pairs), o, builder)

    return builder.ensure(("fix", fix_body, rho, o), build)


@dataclass(frozen=True)
class _ParamEntry:
    kset: instant.KSet


@dataclass(frozen=True)
class _CompEntry:
    code: indexed.IndexedCode
    rho: "tuple"
    at: IndexLabel


@dataclass(frozen=True)
class _FixEntry:
    code: indexed.IndexedCode
    rho: "tuple"
    at: IndexLabel


_ConvEntry = Union[_ParamEntry, _CompEntry, _FixEntry]

_ConvRho = tuple[tuple[IndexLabel, _ConvEntry], ...]


def _conv_rho_from_table(code: indexed.IndexedCode, table: KSetTable) -> _ConvRho:
    pairs = []
    for lbl in code.ins:
        if lbl not in table:
            raise MalformedValue(f"no constant set for input index {print_label(lbl)}")
        pairs.append((lbl, _ParamEntry(table[lbl])))
    return tuple(pairs)


def convert_i_ig(
    code: indexed.IndexedCode,
    table: KSetTable,
    o: IndexLabel,
    v: GenericValue,
    direction: Direction,
    fuel: int | None = None,
) -> GenericValue:
    """Forward: rolls become rec nodes, parameter and tag contents become
    constants. Backward restores the original tree exactly."""
    _check_direction(direction)
    if fuel is None:
        fuel = value_size(v)
    rho = _conv_rho_from_table(code, table)
    if direction == "forward":
        return _from_ig(code, rho, o, v, fuel)
    return _to_ig(code, rho, o, v, fuel)


def _conv_rho_get(rho: _ConvRho, lbl: IndexLabel) -> _ConvEntry:
    for key, entry in rho:
        if key == lbl:
            return entry
    raise MalformedValue(f"no conversion entry for index {print_label(lbl)}")


def _from_ig(
    code: indexed.IndexedCode, rho: _ConvRho, o: IndexLabel, v: GenericValue, fuel: int
) -> GenericValue:
    return _from_ig_body(code.body, rho, o, v, fuel)


def _from_ig_body(
    body: indexed.IndexedBody,
    rho: _ConvRho,
    o: IndexLabel,
    v: GenericValue,
    fuel: int,
) -> GenericValue:
    match body:
        case indexed.Unit():
            if v != TT():
                raise MalformedValue(f"unit layer is not tt: {print_value(v)}")
            return v
        case indexed.Id(lbl):
            entry = _conv_rho_get(rho, lbl)
            match entry:
                case _ParamEntry(_):
                    return Konst(v)
                case _CompEntry(inner, inner_rho, at):
                    if fuel <= 0:
                        raise FuelExhausted("conversion ran out of fuel")
                    return Konst(_from_ig(inner, inner_rho, at, v, fuel - 1))
                case _FixEntry(inner, inner_rho, at):
                    return _from_ig(inner, inner_rho, at, v, fuel)
        case indexed.Tag(_):
            if v != Refl():
                raise MalformedValue(f"tag position is not refl: {print_value(v)}")
            return Konst(v)
        case indexed.Sum(f, g):
            match v:
                case In1(w):
                    return In1(_from_ig_body(f, rho, o, w, fuel))
                case In2(w):
                    return In2(_from_ig_body(g, rho, o, w, fuel))
            raise MalformedValue(f"sum layer is not an injection: {print_value(v)}")
        case indexed.Prod(f, g):
            match v:
                case Pair(a, b):
                    return Pair(
                        _from_ig_body(f, rho, o, a, fuel),
                        _from_ig_body(g, rho, o, b, fuel),
                    )
            raise MalformedValue(f"product layer is not a pair: {print_value(v)}")
        case indexed.Comp(f, g):
            if fuel <= 0:
                raise FuelExhausted("conversion ran out of fuel")
            mid = tuple((lbl, _CompEntry(g, rho, lbl)) for lbl in f.ins)
            return RecV(_from_ig(f, mid, o, v, fuel - 1))
        case indexed.Fix(f):
            match v:
                case Roll(x):
                    if fuel <= 0:
                        raise FuelExhausted("conversion ran out of fuel")
                    fix_code = indexed.IndexedCode(
                        _strip_left(f.ins), f.outs, indexed.Fix(f)
                    )
                    inner_rho = _fix_conv_rho(fix_code, f, rho)
                    return RecV(_from_ig(f, inner_rho, o, x, fuel - 1))
            raise MalformedValue(f"fixed-point layer is not rolled: {print_value(v)}")
    raise TypeError(f"not an indexed body: {body!r}")


def _strip_left(labels: IndexSet) -> IndexSet:
    kept = []
    for lbl in labels:
        if lbl.tags and lbl.tags[0] == "L":
            kept.append(IndexLabel(lbl.name, lbl.tags[1:]))
    return IndexSet(tuple(kept))


def _fix_conv_rho(
    fix_code: indexed.IndexedCode, inner: indexed.IndexedCode, rho: _ConvRho
) -> _ConvRho:
    pairs = [(left(lbl), entry) for lbl, entry in rho]
    for out in inner.outs:
        pairs.append((right(out), _FixEntry(fix_code, rho, out)))
    return tuple(pairs)


def _to_ig(
    code: indexed.IndexedCode, rho: _ConvRho, o: IndexLabel, v: GenericValue, fuel: int
) -> GenericValue:
    return _to_ig_body(code.body, rho, o, v, fuel)


def _to_ig_body(
    body: indexed.IndexedBody,
    rho: _ConvRho,
    o: IndexLabel,
    v: GenericValue,
    fuel: int,
) -> GenericValue:
    match body:
        case indexed.Unit():
            if v != TT():
                raise MalformedValue(f"unit layer is not tt: {print_value(v)}")
            return v
        case indexed.Id(lbl):
            entry = _conv_rho_get(rho, lbl)
            match entry:
                case _ParamEntry(_):
                    match v:
                        case Konst(w):
                            return w
                    raise MalformedValue(
                        f"parameter position is not a constant: {print_value(v)}"
                    )
                case _CompEntry(inner, inner_rho, at):
                    match v:
                        case Konst(w):
                            if fuel <= 0:
                                raise FuelExhausted("conversion ran out of fuel")
                            return _to_ig(inner, inner_rho, at, w, fuel - 1)
                    raise MalformedValue(
                        f"composition argument is not a constant: {print_value(v)}"
                    )
                case _FixEntry(inner, inner_rho, at):
                    return _to_ig(inner, inner_rho, at, v, fuel)
        case indexed.Tag(_):
            match v:
                case Konst(Refl()):
                    return Refl()
            raise MalformedValue(f"tag position is not k refl: {print_value(v)}")
        case indexed.Sum(f, g):
            match v:
                case In1(w):
                    return In1(_to_ig_body(f, rho, o, w, fuel))
                case In2(w):
                    return In2(_to_ig_body(g, rho, o, w, fuel))
            raise MalformedValue(f"sum layer is not an injection: {print_value(v)}")
        case indexed.Prod(f, g):
            match v:
                case Pair(a, b):
                    return Pair(
                        _to_ig_body(f, rho, o, a, fuel),
                        _to_ig_body(g, rho, o, b, fuel),
                    )
            raise MalformedValue(f"product layer is not a pair: {print_value(v)}")
        case indexed.Comp(f, g):
            match v:
                case RecV(w):
                    if fuel <= 0:
                        raise FuelExhausted("conversion ran out of fuel")
                    mid = tuple((lbl, _CompEntry(g, rho, lbl)) for lbl in f.ins)
                    return _to_ig(f, mid, o, w, fuel - 1)
            raise MalformedValue(
                f"composition layer is not a rec node: {print_value(v)}"
            )
        case indexed.Fix(f):
            match v:
                case RecV(x):
                    if fuel <= 0:
                        raise FuelExhausted("conversion ran out of fuel")
                    fix_code = indexed.IndexedCode(
                        _strip_left(f.ins), f.outs, indexed.Fix(f)
                    )
                    inner_rho = _fix_conv_rho(fix_code, f, rho)
                    return Roll(_to_ig(f, inner_rho, o, x, fuel - 1))
            raise MalformedValue(
                f"fixed-point layer is not a rec node: {print_value(v)}"
            )
    raise TypeError(f"not an indexed body: {body!r}")


# ---------------------------------------------------------------------------
# path composition

PATH_STEPS = ("r-p", "r-m", "p-i", "m-i", "i-ig")


@dataclass(frozen=True)
class PathContext:
    """What a conversion step needs to know about its source side."""

    universe: str
    code: object
    at: IndexLabel | None = None
    table: Mapping[IndexLabel, instant.KSet] | None = None


def regular_context(code: regular.RegularCode) -> PathContext:
    return PathContext("regular", code)


def polyp_context(code: polyp.PolyPCode) -> PathContext:
    return PathContext("polyp", code)


def multirec_context(code: multirec.MultirecCode, at: IndexLabel) -> PathContext:
    return PathContext("multirec", code, at=at)


def indexed_context(
    code: indexed.IndexedCode, table: KSetTable, at: IndexLabel
) -> PathContext:
    return PathContext("indexed", code, at=at, table=table)


def _step_target(step: str, ctx: PathContext) -> PathContext:
    match step:
        case "r-p":
            return polyp_context(lift_r_to_p(ctx.code))
        case "r-m":
            return multirec_context(lift_r_to_m(ctx.code), STAR)
        case "p-i":
            return indexed_context(
                fix_p_code(ctx.code), {STAR: instant.Prim(TOP_SORT)}, STAR
            )
        case "m-i":
            return indexed_context(fix_m_code(ctx.code), {}, ctx.at)
        case "i-ig":
            return PathContext("instant", None)
    raise ValueError(f"unknown conversion step: {step!r}")


_STEP_SOURCE = {
    "r-p": "regular",
    "r-m": "regular",
    "p-i": "polyp",
    "m-i": "multirec",
    "i-ig": "indexed",
}


def _apply_step(
    step: str, ctx: PathContext, v: GenericValue, direction: Direction, fuel: int | None
) -> GenericValue:
    if _STEP_SOURCE[step] != ctx.universe:
        raise ValueError(f"step {step} does not start from {ctx.universe}")
    match step:
        case "r-p":
            return convert_r_p(ctx.code, v, direction, fuel)
        case "r-m":
            return convert_r_m(ctx.code, v, direction, fuel)
        case "p-i":
            return convert_p_i(ctx.code, v, direction, fuel)
        case "m-i":
            return convert_m_i(ctx.code, ctx.at, v, direction, fuel)
        case "i-ig":
            return convert_i_ig(ctx.code, dict(ctx.table), ctx.at, v, direction, fuel)
    raise ValueError(f"unknown conversion step: {step!r}")


def compose_path(
    steps: Sequence[str],
    start: PathContext,
    v: GenericValue,
    direction: Direction = "forward",
    fuel: int | None = None,
) -> GenericValue:
    """Run the steps in order (forward) or in reverse (backward); the empty
    path is the identity either way."""
    _check_direction(direction)
    contexts = [start]
    for step in steps:
        contexts.append(_step_target(step, contexts[-1]))
    current = v
    if direction == "forward":
        for step, ctx in zip(steps, contexts[:-1]):
            current = _apply_step(step, ctx, current, "forward", fuel)
        return current
    for step, ctx in zip(reversed(steps), reversed(contexts[:-1])):
        current = _apply_step(step, ctx, current, "backward", fuel)
    return current


def path_contexts(steps: Sequence[str], start: PathContext) -> list[PathContext]:
    """The source context of every step plus the final landing context."""
    contexts = [start]
    for step in steps:
        contexts.append(_step_target(step, contexts[-1]))
    return contexts
