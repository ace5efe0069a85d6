"""Exhaustive enumeration of conforming values and the property suites.

Enumeration is the independent oracle: generators build exactly the values
that conform, every emitted value is re-checked inline, and the ordering
(size, then printed form) is deterministic so failure witnesses are stable.

Payload sorts admit infinitely many tokens, so enumeration restricts token
identifiers to 0 and 1 per sort; size bounds then give finite universes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from . import corpus, embed, indexed, instant, multirec, polyp, regular
from .embed import STAR, ConversionReport
from .gvalue import (
    EmptySlot,
    GenericValue,
    In1,
    In2,
    IndexLabel,
    IndexNotInSet,
    Konst,
    Pair,
    PayloadSlot,
    RecV,
    Refl,
    Roll,
    TOP_SORT,
    TT,
    payload,
    print_label,
    print_value,
    value_size,
)


class UnknownProperty(Exception):
    """The requested property id is not in the registry."""


@dataclass(frozen=True)
class EnumBudget:
    max_size: int
    max_unfold: int | None = None

    def __post_init__(self) -> None:
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")
        if self.max_unfold is not None and self.max_unfold < 1:
            raise ValueError("max_unfold must be at least 1")

    def unfold(self) -> int:
        return self.max_size if self.max_unfold is None else self.max_unfold


def _finish(values: Iterable[GenericValue]) -> list[GenericValue]:
    unique = set(values)
    return sorted(unique, key=lambda v: (value_size(v), print_value(v)))


# ---------------------------------------------------------------------------
# regular


def _gen_slot_r(slot: regular.RegularSlot, n: int) -> list[GenericValue]:
    match slot:
        case PayloadSlot(sort):
            if n < 1:
                return []
            if sort == TOP_SORT:
                return [TT()]
            return [payload(sort, 0), payload(sort, 1)]
        case EmptySlot():
            return []
        case regular.MuSlot(code):
            return _gen_mu_r(code, n)
    raise TypeError(f"not a regular slot: {slot!r}")


def _gen_r(code: regular.RegularCode, slot: regular.RegularSlot, n: int):
    if n < 1:
        return []
    match code:
        case regular.Unit():
            return [TT()]
        case regular.Id():
            return _gen_slot_r(slot, n)
        case regular.Sum(f, g):
            return [In1(w) for w in _gen_r(f, slot, n - 1)] + [
                In2(w) for w in _gen_r(g, slot, n - 1)
            ]
        case regular.Prod(f, g):
            out = []
            for a in _gen_r(f, slot, n - 2):
                for b in _gen_r(g, slot, n - 1 - value_size(a)):
                    out.append(Pair(a, b))
            return out
    raise TypeError(f"not a regular code: {code!r}")


def _gen_mu_r(code: regular.RegularCode, n: int) -> list[GenericValue]:
    return [Roll(w) for w in _gen_r(code, regular.MuSlot(code), n - 1)]


def enum_regular(
    code: regular.RegularCode, slot: regular.RegularSlot, budget: EnumBudget
) -> list[GenericValue]:
    return _finish(_gen_r(code, slot, budget.max_size))


def enum_mu_regular(code: regular.RegularCode, budget: EnumBudget) -> list[GenericValue]:
    values = _finish(_gen_mu_r(code, budget.max_size))
    assert all(regular.conform_mu_r(code, v) for v in values)
    return values


# ---------------------------------------------------------------------------
# polyp


def _gen_slot_p(slot: polyp.PolyPSlot, n: int) -> list[GenericValue]:
    match slot:
        case PayloadSlot(sort):
            if n < 1:
                return []
            if sort == TOP_SORT:
                return [TT()]
            return [payload(sort, 0), payload(sort, 1)]
        case EmptySlot():
            return []
        case polyp.MuSlot(code, param):
            return _gen_mu_p(code, param, n)
        case polyp.InterpSlot(code, slots):
            return _gen_p(code, slots, n)
    raise TypeError(f"not a polyp slot: {slot!r}")


def _gen_p(code: polyp.PolyPCode, slots: polyp.SlotPair, n: int):
    if n < 1:
        return []
    match code:
        case polyp.Unit():
            return [TT()]
        case polyp.Par():
            return _gen_slot_p(slots.param, n)
        case polyp.Id():
            return _gen_slot_p(slots.rec, n)
        case polyp.Sum(f, g):
            return [In1(w) for w in _gen_p(f, slots, n - 1)] + [
                In2(w) for w in _gen_p(g, slots, n - 1)
            ]
        case polyp.Prod(f, g):
            out = []
            for a in _gen_p(f, slots, n - 2):
                for b in _gen_p(g, slots, n - 1 - value_size(a)):
                    out.append(Pair(a, b))
            return out
        case polyp.Comp(f, g):
            return _gen_mu_p(f, polyp.InterpSlot(g, slots), n)
    raise TypeError(f"not a polyp code: {code!r}")


def _gen_mu_p(
    code: polyp.PolyPCode, param: polyp.PolyPSlot, n: int
) -> list[GenericValue]:
    slots = polyp.SlotPair(param, polyp.MuSlot(code, param))
    return [Roll(w) for w in _gen_p(code, slots, n - 1)]


def enum_polyp(
    code: polyp.PolyPCode, slots: polyp.SlotPair, budget: EnumBudget
) -> list[GenericValue]:
    return _finish(_gen_p(code, slots, budget.max_size))


def enum_mu_polyp(
    code: polyp.PolyPCode, param: polyp.PolyPSlot, budget: EnumBudget
) -> list[GenericValue]:
    values = _finish(_gen_mu_p(code, param, budget.max_size))
    assert all(polyp.conform_mu_p(code, param, v) for v in values)
    return values


# ---------------------------------------------------------------------------
# multirec


def _gen_slot_m(
    slot: multirec.MultirecSlot, at: IndexLabel, n: int
) -> list[GenericValue]:
    match slot:
        case PayloadSlot(sort):
            if n < 1:
                return []
            if sort == TOP_SORT:
                return [TT()]
            return [payload(sort, 0), payload(sort, 1)]
        case EmptySlot():
            return []
        case multirec.MuSlot(code):
            return _gen_mu_m(code, at, n)
    raise TypeError(f"not a multirec slot: {slot!r}")


def _gen_body_m(
    code: multirec.MultirecCode,
    body: multirec.MultirecBody,
    assign: multirec.Assignment,
    at: IndexLabel,
    n: int,
):
    if n < 1:
        return []
    match body:
        case multirec.Unit():
            return [TT()]
        case multirec.Id(lbl):
            if lbl not in code.indices or lbl not in assign:
                raise IndexNotInSet(f"index {print_label(lbl)} is not in the code's index set")
            return _gen_slot_m(assign[lbl], lbl, n)
        case multirec.Tag(lbl):
            return [Refl()] if at == lbl else []
        case multirec.Sum(f, g):
            return [In1(w) for w in _gen_body_m(code, f, assign, at, n - 1)] + [
                In2(w) for w in _gen_body_m(code, g, assign, at, n - 1)
            ]
        case multirec.Prod(f, g):
            out = []
            for a in _gen_body_m(code, f, assign, at, n - 2):
                for b in _gen_body_m(code, g, assign, at, n - 1 - value_size(a)):
                    out.append(Pair(a, b))
            return out
    raise TypeError(f"not a multirec body: {body!r}")


def _gen_mu_m(code: multirec.MultirecCode, at: IndexLabel, n: int):
    assign = multirec.mu_assignment(code)
    return [Roll(w) for w in _gen_body_m(code, code.body, assign, at, n - 1)]


def enum_multirec(
    code: multirec.MultirecCode,
    assign: multirec.Assignment,
    at: IndexLabel,
    budget: EnumBudget,
) -> list[GenericValue]:
    return _finish(_gen_body_m(code, code.body, assign, at, budget.max_size))


def enum_mu_multirec(
    code: multirec.MultirecCode, at: IndexLabel, budget: EnumBudget
) -> list[GenericValue]:
    values = _finish(_gen_mu_m(code, at, budget.max_size))
    assert all(multirec.conform_mu_m(code, at, v) for v in values)
    return values


# ---------------------------------------------------------------------------
# indexed


def _gen_slot_i(slot: indexed.IndexedSlot, n: int) -> list[GenericValue]:
    match slot:
        case PayloadSlot(sort):
            if n < 1:
                return []
            if sort == TOP_SORT:
                return [TT()]
            return [payload(sort, 0), payload(sort, 1)]
        case EmptySlot():
            return []
        case indexed.InterpSlot(code, assign, at):
            return _gen_i(code, assign, at, n)
        case indexed.MuSlot(inner, assign, at):
            inner_assign = indexed.split_assign(
                assign, {lbl: indexed.MuSlot(inner, assign, lbl) for lbl in inner.outs}
            )
            return [Roll(w) for w in _gen_i(inner, inner_assign, at, n - 1)]
    raise TypeError(f"not an indexed slot: {slot!r}")


def _gen_i(
    code: indexed.IndexedCode, assign: indexed.SlotTable, at: IndexLabel, n: int
) -> list[GenericValue]:
    return _gen_body_i(code, code.body, assign, at, n)


def _gen_body_i(
    code: indexed.IndexedCode,
    body: indexed.IndexedBody,
    assign: indexed.SlotTable,
    at: IndexLabel,
    n: int,
):
    if n < 1:
        return []
    match body:
        case indexed.Unit():
            return [TT()]
        case indexed.Id(lbl):
            return _gen_slot_i(assign[lbl], n)
        case indexed.Tag(lbl):
            return [Refl()] if at == lbl else []
        case indexed.Sum(f, g):
            return [In1(w) for w in _gen_body_i(code, f, assign, at, n - 1)] + [
                In2(w) for w in _gen_body_i(code, g, assign, at, n - 1)
            ]
        case indexed.Prod(f, g):
            out = []
            for a in _gen_body_i(code, f, assign, at, n - 2):
                for b in _gen_body_i(code, g, assign, at, n - 1 - value_size(a)):
                    out.append(Pair(a, b))
            return out
        case indexed.Comp(f, g):
            middle = {lbl: indexed.InterpSlot(g, assign, lbl) for lbl in f.ins}
            return _gen_i(f, middle, at, n)
        case indexed.Fix(f):
            inner_assign = indexed.split_assign(
                assign, {lbl: indexed.MuSlot(f, assign, lbl) for lbl in f.outs}
            )
            return [Roll(w) for w in _gen_i(f, inner_assign, at, n - 1)]
    raise TypeError(f"not an indexed body: {body!r}")


def enum_indexed(
    code: indexed.IndexedCode,
    assign: indexed.SlotTable,
    at: IndexLabel,
    budget: EnumBudget,
) -> list[GenericValue]:
    values = _finish(_gen_i(code, assign, at, budget.max_size))
    assert all(indexed.conform_i(code, assign, at, v) for v in values)
    return values


# ---------------------------------------------------------------------------
# instant


def _gen_kset(env: instant.CodeEnv, kset: instant.KSet, n: int) -> list[GenericValue]:
    match kset:
        case instant.Prim(sort):
            if n < 1:
                return []
            if sort == TOP_SORT:
                return [TT()]
            return [payload(sort, 0), payload(sort, 1)]
        case instant.EqWitness(a, b):
            return [Refl()] if a == b and n >= 1 else []
        case instant.OfCode(ref):
            return _gen_ig(env, env[ref], n)
    raise TypeError(f"not a constant set: {kset!r}")


def _gen_ig(env: instant.CodeEnv, code: instant.InstantCode, n: int):
    if n < 1:
        return []
    match code:
        case instant.Unit():
            return [TT()]
        case instant.K(kset):
            return [Konst(w) for w in _gen_kset(env, kset, n - 1)]
        case instant.R(ref):
            return [RecV(w) for w in _gen_ig(env, env[ref], n - 1)]
        case instant.Sum(f, g):
            return [In1(w) for w in _gen_ig(env, f, n - 1)] + [
                In2(w) for w in _gen_ig(env, g, n - 1)
            ]
        case instant.Prod(f, g):
            out = []
            for a in _gen_ig(env, f, n - 2):
                for b in _gen_ig(env, g, n - 1 - value_size(a)):
                    out.append(Pair(a, b))
            return out
    raise TypeError(f"not an instant code: {code!r}")


def enum_instant(
    env: instant.CodeEnv, code: instant.InstantCode, budget: EnumBudget
) -> list[GenericValue]:
    values = _finish(_gen_ig(env, code, budget.max_size))
    assert all(instant.conform_ig(env, code, v, budget.unfold()) for v in values)
    return values


# ---------------------------------------------------------------------------
# a single dispatch point, used by the CLI


def enumerate_values(universe, code, context, budget: EnumBudget):
    """Enumerate all conforming values of size at most budget.max_size.

    The context depends on the universe: a slot for one-layer regular, a
    SlotPair for one-layer polyp, (assignment, index) pairs for multirec and
    indexed, an environment for instant, and None for the -mu variants
    (multirec-mu takes the index, polyp-mu the parameter slot).  The "-μ"
    spelling of the fixed-point tags is accepted too.
    """
    universe = universe.replace("-μ", "-mu")
    match universe:
        case "regular":
            return enum_regular(code, context, budget)
        case "regular-mu":
            return enum_mu_regular(code, budget)
        case "polyp":
            return enum_polyp(code, context, budget)
        case "polyp-mu":
            return enum_mu_polyp(code, context, budget)
        case "multirec":
            assign, at = context
            return enum_multirec(code, assign, at, budget)
        case "multirec-mu":
            return enum_mu_multirec(code, context, budget)
        case "indexed":
            assign, at = context
            return enum_indexed(code, assign, at, budget)
        case "instant":
            return enum_instant(context, code, budget)
    raise ValueError(f"unknown universe tag: {universe!r}")


# ---------------------------------------------------------------------------
# property suites

_TOP_SLOT = PayloadSlot(TOP_SORT)


def standard_table(code: indexed.IndexedCode) -> dict[IndexLabel, instant.KSet]:
    """Every input index is a ⊤ parameter; matches the shipped corpus."""
    return {lbl: instant.Prim(TOP_SORT) for lbl in code.ins}


def standard_assign(code: indexed.IndexedCode) -> dict[IndexLabel, indexed.IndexedSlot]:
    return {lbl: _TOP_SLOT for lbl in code.ins}


def _report(
    pairs: Iterable[tuple[GenericValue, str, str | None]],
) -> ConversionReport:
    report = ConversionReport()
    for v, direction, mismatch in pairs:
        report.checked_count += 1
        if mismatch is not None:
            report.failures.append((v, direction, mismatch))
    return report


def _round_trip(
    values: Iterable[GenericValue],
    there: Callable[[GenericValue], GenericValue],
    back: Callable[[GenericValue], GenericValue],
    direction: str,
):
    for v in values:
        try:
            w = back(there(v))
        except Exception as err:
            yield v, direction, f"{type(err).__name__}: {err}"
            continue
        if w != v:
            yield v, direction, f"round trip produced {print_value(w)}"
        else:
            yield v, direction, None


def _iso_runner(source_values, target_values, forward, backward) -> ConversionReport:
    first = _round_trip(source_values, forward, backward, "forward")
    second = _round_trip(target_values, backward, forward, "backward")
    return _report(list(first) + list(second))


def _prop_iso_r_p(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        lifted = embed.lift_r_to_p(code)
        source = enum_mu_regular(code, budget)
        target = enum_mu_polyp(lifted, EmptySlot(), budget)
        piece = _iso_runner(
            source,
            target,
            lambda v, code=code: embed.convert_r_p(code, v, "forward"),
            lambda v, code=code: embed.convert_r_p(code, v, "backward"),
        )
        report.checked_count += piece.checked_count
        report.failures.extend(piece.failures)
    return report


def _prop_iso_r_m(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        lifted = embed.lift_r_to_m(code)
        source = enum_mu_regular(code, budget)
        target = enum_mu_multirec(lifted, STAR, budget)
        piece = _iso_runner(
            source,
            target,
            lambda v, code=code: embed.convert_r_m(code, v, "forward"),
            lambda v, code=code: embed.convert_r_m(code, v, "backward"),
        )
        report.checked_count += piece.checked_count
        report.failures.extend(piece.failures)
    return report


def _prop_iso_p_i(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        fixed = embed.fix_p_code(code)
        source = enum_mu_polyp(code, _TOP_SLOT, budget)
        target = enum_indexed(fixed, {STAR: _TOP_SLOT}, STAR, budget)
        piece = _iso_runner(
            source,
            target,
            lambda v, code=code: embed.convert_p_i(code, v, "forward"),
            lambda v, code=code: embed.convert_p_i(code, v, "backward"),
        )
        report.checked_count += piece.checked_count
        report.failures.extend(piece.failures)
    return report


def _prop_iso_m_i(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        fixed = embed.fix_m_code(code)
        for at in code.indices:
            source = enum_mu_multirec(code, at, budget)
            target = enum_indexed(fixed, {}, at, budget)
            piece = _iso_runner(
                source,
                target,
                lambda v, code=code, at=at: embed.convert_m_i(code, at, v, "forward"),
                lambda v, code=code, at=at: embed.convert_m_i(code, at, v, "backward"),
            )
            report.checked_count += piece.checked_count
            report.failures.extend(piece.failures)
    return report


def _prop_iso_i_ig(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        table = standard_table(code)
        assign = standard_assign(code)
        lifted, env = embed.lift_i_to_ig(code, table)
        for at in code.outs:
            source = enum_indexed(code, assign, at, budget)
            target = enum_instant(env, lifted[at], budget)
            piece = _iso_runner(
                source,
                target,
                lambda v, code=code, table=table, at=at: embed.convert_i_ig(
                    code, table, at, v, "forward"
                ),
                lambda v, code=code, table=table, at=at: embed.convert_i_ig(
                    code, table, at, v, "backward"
                ),
            )
            report.checked_count += piece.checked_count
            report.failures.extend(piece.failures)
    return report


def _transport(values, forward, conforms) -> ConversionReport:
    pairs = []
    for v in values:
        try:
            w = forward(v)
            ok = conforms(w)
        except Exception as err:
            pairs.append((v, "forward", f"{type(err).__name__}: {err}"))
            continue
        pairs.append((v, "forward", None if ok else f"{print_value(w)} does not conform"))
    return _report(pairs)


def _prop_transport_r_p(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        lifted = embed.lift_r_to_p(code)
        piece = _transport(
            enum_mu_regular(code, budget),
            lambda v, code=code: embed.convert_r_p(code, v, "forward"),
            lambda w, lifted=lifted: polyp.conform_mu_p(lifted, EmptySlot(), w),
        )
        report.checked_count += piece.checked_count
        report.failures.extend(piece.failures)
    return report


def _prop_transport_r_m(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        lifted = embed.lift_r_to_m(code)
        piece = _transport(
            enum_mu_regular(code, budget),
            lambda v, code=code: embed.convert_r_m(code, v, "forward"),
            lambda w, lifted=lifted: multirec.conform_mu_m(lifted, STAR, w),
        )
        report.checked_count += piece.checked_count
        report.failures.extend(piece.failures)
    return report


def _prop_transport_p_i(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        fixed = embed.fix_p_code(code)
        piece = _transport(
            enum_mu_polyp(code, _TOP_SLOT, budget),
            lambda v, code=code: embed.convert_p_i(code, v, "forward"),
            lambda w, fixed=fixed: indexed.conform_i(fixed, {STAR: _TOP_SLOT}, STAR, w),
        )
        report.checked_count += piece.checked_count
        report.failures.extend(piece.failures)
    return report


def _prop_transport_m_i(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        fixed = embed.fix_m_code(code)
        for at in code.indices:
            piece = _transport(
                enum_mu_multirec(code, at, budget),
                lambda v, code=code, at=at: embed.convert_m_i(code, at, v, "forward"),
                lambda w, fixed=fixed, at=at: indexed.conform_i(fixed, {}, at, w),
            )
            report.checked_count += piece.checked_count
            report.failures.extend(piece.failures)
    return report


def _prop_transport_i_ig(codes, budget: EnumBudget) -> ConversionReport:
    report = ConversionReport()
    for code in codes.values():
        table = standard_table(code)
        assign = standard_assign(code)
        lifted, env = embed.lift_i_to_ig(code, table)
        for at in code.outs:
            piece = _transport(
                enum_indexed(code, assign, at, budget),
                lambda v, code=code, table=table, at=at: embed.convert_i_ig(
                    code, table, at, v, "forward"
                ),
                lambda w, env=env, lifted=lifted, at=at: instant.conform_ig(
                    env, lifted[at], w
                ),
            )
            report.checked_count += piece.checked_count
            report.failures.extend(piece.failures)
    return report


def _tree_succ(v: GenericValue) -> GenericValue:
    return Roll(In2(v))


def _wrap_in1(v: GenericValue) -> GenericValue:
    return In1(v)


def _prop_map_id_r(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        slot = regular.MuSlot(code)
        for v in enum_regular(code, slot, budget):
            w = regular.map_r(code, lambda u: u, v)
            pairs.append((v, "map-id", None if w == v else print_value(w)))
    return _report(pairs)


def _prop_map_comp_r(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        slot = regular.MuSlot(code)
        for v in enum_regular(code, slot, budget):
            lhs = regular.map_r(code, lambda u: _wrap_in1(_tree_succ(u)), v)
            rhs = regular.map_r(
                code, _wrap_in1, regular.map_r(code, _tree_succ, v)
            )
            pairs.append((v, "map-comp", None if lhs == rhs else print_value(lhs)))
    return _report(pairs)


def _prop_map_id_p(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        for v in enum_mu_polyp(code, _TOP_SLOT, budget):
            w = polyp.pmap(code, lambda u: u, v)
            pairs.append((v, "pmap-id", None if w == v else print_value(w)))
    return _report(pairs)


def _prop_map_comp_p(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        for v in enum_mu_polyp(code, _TOP_SLOT, budget):
            lhs = polyp.pmap(code, lambda u: _wrap_in1(_tree_succ(u)), v)
            rhs = polyp.pmap(code, _wrap_in1, polyp.pmap(code, _tree_succ, v))
            pairs.append((v, "pmap-comp", None if lhs == rhs else print_value(lhs)))
    return _report(pairs)


def _prop_map_id_m(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        assign = multirec.mu_assignment(code)
        fam = {lbl: (lambda u: u) for lbl in code.indices}
        for at in code.indices:
            for v in enum_multirec(code, assign, at, budget):
                w = multirec.map_m(code, fam, at, v)
                pairs.append((v, "map-id", None if w == v else print_value(w)))
    return _report(pairs)


def _prop_map_comp_m(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        assign = multirec.mu_assignment(code)
        succ_fam = {lbl: _tree_succ for lbl in code.indices}
        wrap_fam = {lbl: _wrap_in1 for lbl in code.indices}
        both_fam = {lbl: (lambda u: _wrap_in1(_tree_succ(u))) for lbl in code.indices}
        for at in code.indices:
            for v in enum_multirec(code, assign, at, budget):
                lhs = multirec.map_m(code, both_fam, at, v)
                rhs = multirec.map_m(code, wrap_fam, at, multirec.map_m(code, succ_fam, at, v))
                pairs.append((v, "map-comp", None if lhs == rhs else print_value(lhs)))
    return _report(pairs)


def _prop_map_id_i(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        assign = standard_assign(code)
        fam = {lbl: (lambda u: u) for lbl in code.ins}
        for at in code.outs:
            for v in enum_indexed(code, assign, at, budget):
                w = indexed.map_i(code, fam, at, v)
                pairs.append((v, "map-id", None if w == v else print_value(w)))
    return _report(pairs)


def _prop_map_comp_i(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        assign = standard_assign(code)
        succ_fam = {lbl: _tree_succ for lbl in code.ins}
        wrap_fam = {lbl: _wrap_in1 for lbl in code.ins}
        both_fam = {lbl: (lambda u: _wrap_in1(_tree_succ(u))) for lbl in code.ins}
        for at in code.outs:
            for v in enum_indexed(code, assign, at, budget):
                lhs = indexed.map_i(code, both_fam, at, v)
                rhs = indexed.map_i(code, wrap_fam, at, indexed.map_i(code, succ_fam, at, v))
                pairs.append((v, "map-comp", None if lhs == rhs else print_value(lhs)))
    return _report(pairs)


def _prop_map_commute_r_p(codes, budget: EnumBudget) -> ConversionReport:
    """Mapping under the lifted code agrees with mapping under the source
    code on every enumerated one-layer value."""
    pairs = []
    for code in codes.values():
        lifted = embed.lift_r_to_p(code)
        slot = regular.MuSlot(code)
        for v in enum_regular(code, slot, budget):
            via_p = polyp.map_p(lifted, lambda u: u, _tree_succ, v)
            via_r = regular.map_r(code, _tree_succ, v)
            pairs.append(
                (v, "map-commute", None if via_p == via_r else print_value(via_p))
            )
    return _report(pairs)


def _par_families():
    ident = lambda u: u
    return [
        (ident, ident),
        (_tree_succ, _wrap_in1),
        (_wrap_in1, _tree_succ),
    ]


def _prop_par_id(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        lifted = embed.lift_p_to_i(code)
        fam = indexed.split_transform({STAR: lambda u: u}, {STAR: lambda u: u})
        assign = indexed.split_assign({STAR: _TOP_SLOT}, {STAR: _TOP_SLOT})
        for v in enum_indexed(lifted, assign, STAR, budget):
            w = indexed.map_i(lifted, fam, STAR, v)
            pairs.append((v, "par-id", None if w == v else print_value(w)))
    return _report(pairs)


def _prop_par_comp(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        lifted = embed.lift_p_to_i(code)
        assign = indexed.split_assign({STAR: _TOP_SLOT}, {STAR: _TOP_SLOT})
        for f, g in _par_families():
            for f2, g2 in _par_families():
                split_then = indexed.split_transform(
                    {STAR: lambda u: f(f2(u))}, {STAR: lambda u: g(g2(u))}
                )
                first = indexed.split_transform({STAR: f2}, {STAR: g2})
                second = indexed.split_transform({STAR: f}, {STAR: g})
                for v in enum_indexed(lifted, assign, STAR, budget):
                    lhs = indexed.map_i(lifted, split_then, STAR, v)
                    rhs = indexed.map_i(
                        lifted, second, STAR, indexed.map_i(lifted, first, STAR, v)
                    )
                    pairs.append(
                        (v, "par-comp", None if lhs == rhs else print_value(lhs))
                    )
    return _report(pairs)


def _prop_par_cong(codes, budget: EnumBudget) -> ConversionReport:
    pairs = []
    for code in codes.values():
        lifted = embed.lift_p_to_i(code)
        assign = indexed.split_assign({STAR: _TOP_SLOT}, {STAR: _TOP_SLOT})
        one = indexed.split_transform({STAR: _tree_succ}, {STAR: _wrap_in1})
        two = indexed.split_transform(
            {STAR: lambda u: _tree_succ(u)}, {STAR: lambda u: _wrap_in1(u)}
        )
        for v in enum_indexed(lifted, assign, STAR, budget):
            lhs = indexed.map_i(lifted, one, STAR, v)
            rhs = indexed.map_i(lifted, two, STAR, v)
            pairs.append((v, "par-cong", None if lhs == rhs else print_value(lhs)))
    return _report(pairs)


def _prop_pitfall_comp(codes, budget: EnumBudget) -> ConversionReport:
    witness = corpus.TREE_OF_LISTS
    naive = polyp.conform_mu_p(corpus.TREE_LIST_NAIVE, _TOP_SLOT, witness)
    proper = polyp.conform_mu_p(corpus.TREE_LIST_PROPER, _TOP_SLOT, witness)
    pairs = [
        (witness, "naive", "naive composition accepted the witness" if naive else None),
        (witness, "proper", None if proper else "proper code rejected the witness"),
    ]
    return _report(pairs)


_PROPERTIES: dict[str, Callable[[Mapping, EnumBudget], ConversionReport]] = {
    "iso-r-p": _prop_iso_r_p,
    "isoMu-r-p": _prop_iso_r_p,
    "iso-r-m": _prop_iso_r_m,
    "iso-p-i": _prop_iso_p_i,
    "iso-m-i": _prop_iso_m_i,
    "iso-i-ig": _prop_iso_i_ig,
    "transport-r-p": _prop_transport_r_p,
    "transport-r-m": _prop_transport_r_m,
    "transport-p-i": _prop_transport_p_i,
    "transport-m-i": _prop_transport_m_i,
    "transport-i-ig": _prop_transport_i_ig,
    "map-id-r": _prop_map_id_r,
    "map-comp-r": _prop_map_comp_r,
    "map-id-p": _prop_map_id_p,
    "map-comp-p": _prop_map_comp_p,
    "map-id-m": _prop_map_id_m,
    "map-comp-m": _prop_map_comp_m,
    "map-id-i": _prop_map_id_i,
    "map-comp-i": _prop_map_comp_i,
    "map-commute-r-p": _prop_map_commute_r_p,
    "par-id": _prop_par_id,
    "par-comp": _prop_par_comp,
    "par-cong": _prop_par_cong,
    "pitfall-comp": _prop_pitfall_comp,
}


_DEFAULT_SUBSETS: dict[str, Mapping] = {
    "iso-r-p": corpus.REGULAR_CODES,
    "isoMu-r-p": corpus.REGULAR_CODES,
    "iso-r-m": corpus.REGULAR_CODES,
    "iso-p-i": corpus.POLYP_CODES,
    "iso-m-i": corpus.MULTIREC_CODES,
    "iso-i-ig": corpus.INDEXED_CODES,
    "transport-r-p": corpus.REGULAR_CODES,
    "transport-r-m": corpus.REGULAR_CODES,
    "transport-p-i": corpus.POLYP_CODES,
    "transport-m-i": corpus.MULTIREC_CODES,
    "transport-i-ig": corpus.INDEXED_CODES,
    "map-id-r": corpus.REGULAR_CODES,
    "map-comp-r": corpus.REGULAR_CODES,
    "map-id-p": corpus.POLYP_CODES,
    "map-comp-p": corpus.POLYP_CODES,
    "map-id-m": corpus.MULTIREC_CODES,
    "map-comp-m": corpus.MULTIREC_CODES,
    "map-id-i": corpus.INDEXED_CODES,
    "map-comp-i": corpus.INDEXED_CODES,
    "map-commute-r-p": corpus.REGULAR_CODES,
    "par-id": corpus.POLYP_CODES,
    "par-comp": corpus.POLYP_CODES,
    "par-cong": corpus.POLYP_CODES,
    "pitfall-comp": corpus.POLYP_CODES,
}


def property_names() -> list[str]:
    return sorted(_PROPERTIES)


def run_property(
    name: str, codes: Mapping | None = None, budget: EnumBudget | None = None
) -> ConversionReport:
    """Run one registered property suite and report every checked value."""
    if name not in _PROPERTIES:
        raise UnknownProperty(f"unknown property: {name}")
    if budget is None:
        budget = EnumBudget(max_size=10)
    subset = codes if codes is not None else _DEFAULT_SUBSETS[name]
    return _PROPERTIES[name](subset, budget)
