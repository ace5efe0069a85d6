"""Concrete syntax for codes, values, and code environments.

One token stream serves every universe; the parser builds a neutral surface
tree and a per-universe elaborator turns it into codes. Operator precedence
is "@" above "*" above "+", all right-associative, and "fix" binds tighter
than any operator, so its argument is an atom unless parenthesized.

Multirec and indexed codes carry header lines ("indices:", "in:", "out:",
and optionally "mid:") before the body expression. A composition body splits
at the "mid:" index set, which defaults to the output set; nested
compositions share it. Environment files hold one "name = code" line per
entry, UTF-8 with LF endings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import indexed, instant, multirec, polyp, regular
from .gvalue import (
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
    TT,
    disjoint_union,
    payload,
    print_label,
    print_value,
)

__all__ = [
    "ParseError",
    "parse_value",
    "parse_code",
    "parse_label",
    "parse_env",
    "print_code",
    "print_env",
    "print_value",
    "print_label",
]


class ParseError(Exception):
    def __init__(
        self, message: str, line: int, col: int, expected: frozenset[str] = frozenset()
    ) -> None:
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected


# ---------------------------------------------------------------------------
# tokens


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


_PUNCT = "()<>,#@!*+=."


def _lex(text: str, line: int = 1, col: int = 1) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch in ':;"':
            raise ParseError(f"unexpected character {ch!r}", line, col)
        start = i
        start_col = col
        while i < len(text):
            ch = text[i]
            if ch.isspace() or ch in _PUNCT or ch in ':;"':
                break
            i += 1
            col += 1
        word = text[start:i]
        kind = "nat" if word.isdigit() else "ident"
        tokens.append(_Token(kind, word, line, start_col))
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Stream:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str, expected: frozenset[str] | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            wanted = expected if expected is not None else frozenset({kind})
            raise ParseError(
                f"expected {_describe(wanted)}, got {_show(tok)}",
                tok.line,
                tok.col,
                wanted,
            )
        return self.advance()

    def fail(self, wanted: frozenset[str]) -> ParseError:
        tok = self.peek()
        return ParseError(
            f"expected {_describe(wanted)}, got {_show(tok)}",
            tok.line,
            tok.col,
            wanted,
        )

    def done(self) -> None:
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(
                f"expected end of input, got {_show(tok)}",
                tok.line,
                tok.col,
                frozenset({"eof"}),
            )


def _show(tok: _Token) -> str:
    if tok.kind == "eof":
        return "end of input"
    return repr(tok.text)


def _describe(wanted: frozenset[str]) -> str:
    names = sorted(wanted)
    if len(names) == 1:
        return names[0]
    return "one of " + ", ".join(names)


# ---------------------------------------------------------------------------
# values


def parse_value(text: str) -> GenericValue:
    stream = _Stream(_lex(text))
    v = _parse_value(stream)
    stream.done()
    return v


_VALUE_EXPECTED = frozenset({"tt", "refl", "in1", "in2", "k", "rec", "<", "(", "token"})


def _parse_value(stream: _Stream) -> GenericValue:
    tok = stream.peek()
    if tok.kind == "ident":
        stream.advance()
        match tok.text:
            case "tt":
                return TT()
            case "refl":
                return Refl()
            case "in1":
                return In1(_parse_value(stream))
            case "in2":
                return In2(_parse_value(stream))
            case "k":
                return Konst(_parse_value(stream))
            case "rec":
                return RecV(_parse_value(stream))
        stream.expect("#")
        nat = stream.expect("nat")
        return payload(tok.text, int(nat.text))
    if tok.kind == "<":
        stream.advance()
        inner = _parse_value(stream)
        stream.expect(">")
        return Roll(inner)
    if tok.kind == "(":
        stream.advance()
        first = _parse_value(stream)
        stream.expect(",")
        second = _parse_value(stream)
        stream.expect(")")
        return Pair(first, second)
    raise stream.fail(_VALUE_EXPECTED)


# ---------------------------------------------------------------------------
# labels


def parse_label(text: str) -> IndexLabel:
    stream = _Stream(_lex(text))
    lbl = _parse_label(stream)
    stream.done()
    return lbl


def _parse_label(stream: _Stream) -> IndexLabel:
    first = stream.expect("ident", frozenset({"label"}))
    parts = [first.text]
    while stream.peek().kind == ".":
        stream.advance()
        parts.append(stream.expect("ident", frozenset({"label"})).text)
    name = parts[-1]
    tags = parts[:-1]
    for tag in tags:
        if tag not in ("L", "R"):
            raise ParseError(
                f"label tag must be L or R, got {tag!r}", first.line, first.col
            )
    return IndexLabel(name, tuple(tags))


def _parse_label_list(text: str, line: int, col: int) -> IndexSet:
    stream = _Stream(_lex(text, line, col))
    labels: list[IndexLabel] = []
    if stream.peek().kind != "eof":
        labels.append(_parse_label(stream))
        while stream.peek().kind == ",":
            stream.advance()
            labels.append(_parse_label(stream))
    stream.done()
    try:
        return IndexSet(tuple(labels))
    except ValueError as err:
        raise ParseError(str(err), line, col) from err


# ---------------------------------------------------------------------------
# surface expressions, shared by every code grammar


@dataclass(frozen=True)
class _SNode:
    line: int
    col: int


@dataclass(frozen=True)
class _SUnit(_SNode):
    pass


@dataclass(frozen=True)
class _SPar(_SNode):
    pass


@dataclass(frozen=True)
class _SId(_SNode):
    lbl: IndexLabel | None


@dataclass(frozen=True)
class _STag(_SNode):
    lbl: IndexLabel


@dataclass(frozen=True)
class _SPrim(_SNode):
    sort: str


@dataclass(frozen=True)
class _SEq(_SNode):
    a: IndexLabel
    b: IndexLabel


@dataclass(frozen=True)
class _SOf(_SNode):
    ref: str


@dataclass(frozen=True)
class _SRec(_SNode):
    ref: str


@dataclass(frozen=True)
class _SSum(_SNode):
    left: "_SExpr"
    right: "_SExpr"


@dataclass(frozen=True)
class _SProd(_SNode):
    left: "_SExpr"
    right: "_SExpr"


@dataclass(frozen=True)
class _SComp(_SNode):
    left: "_SExpr"
    right: "_SExpr"


@dataclass(frozen=True)
class _SFix(_SNode):
    inner: "_SExpr"


_SExpr = object


@dataclass(frozen=True)
class _Grammar:
    atoms: frozenset[str]
    comp_op: bool = False
    fix_op: bool = False

    def expected_atoms(self) -> frozenset[str]:
        extras = frozenset({"fix"}) if self.fix_op else frozenset()
        return self.atoms | extras | frozenset({"("})


_GRAMMARS: dict[str, _Grammar] = {
    "regular": _Grammar(frozenset({"U", "I"})),
    "polyp": _Grammar(frozenset({"U", "P", "I"}), comp_op=True),
    "multirec": _Grammar(frozenset({"U", "I@label", "!label"})),
    "indexed": _Grammar(frozenset({"U", "I@label", "!label"}), comp_op=True, fix_op=True),
    "instant": _Grammar(frozenset({"U", "K", "R"})),
}


def _parse_sum(stream: _Stream, g: _Grammar) -> _SExpr:
    left = _parse_prod(stream, g)
    if stream.peek().kind == "+":
        tok = stream.advance()
        right = _parse_sum(stream, g)
        return _SSum(tok.line, tok.col, left, right)
    return left


def _parse_prod(stream: _Stream, g: _Grammar) -> _SExpr:
    left = _parse_comp(stream, g)
    if stream.peek().kind == "*":
        tok = stream.advance()
        right = _parse_prod(stream, g)
        return _SProd(tok.line, tok.col, left, right)
    return left


def _parse_comp(stream: _Stream, g: _Grammar) -> _SExpr:
    left = _parse_unary(stream, g)
    if g.comp_op and stream.peek().kind == "@":
        tok = stream.advance()
        right = _parse_comp(stream, g)
        return _SComp(tok.line, tok.col, left, right)
    return left


def _parse_unary(stream: _Stream, g: _Grammar) -> _SExpr:
    tok = stream.peek()
    if g.fix_op and tok.kind == "ident" and tok.text == "fix":
        stream.advance()
        return _SFix(tok.line, tok.col, _parse_unary(stream, g))
    return _parse_atom(stream, g)


def _parse_atom(stream: _Stream, g: _Grammar) -> _SExpr:
    tok = stream.peek()
    if tok.kind == "(":
        stream.advance()
        inner = _parse_sum(stream, g)
        stream.expect(")")
        return inner
    if tok.kind == "!" and "!label" in g.atoms:
        stream.advance()
        lbl = _parse_label(stream)
        return _STag(tok.line, tok.col, lbl)
    if tok.kind == "ident":
        if tok.text == "U" and "U" in g.atoms:
            stream.advance()
            return _SUnit(tok.line, tok.col)
        if tok.text == "P" and "P" in g.atoms:
            stream.advance()
            return _SPar(tok.line, tok.col)
        if tok.text == "I" and "I" in g.atoms:
            stream.advance()
            return _SId(tok.line, tok.col, None)
        if tok.text == "I" and "I@label" in g.atoms:
            stream.advance()
            stream.expect("@")
            lbl = _parse_label(stream)
            return _SId(tok.line, tok.col, lbl)
        if tok.text == "K" and "K" in g.atoms:
            stream.advance()
            return _parse_konst(stream, tok)
        if tok.text == "R" and "R" in g.atoms:
            stream.advance()
            name = stream.expect("ident", frozenset({"name"}))
            return _SRec(tok.line, tok.col, name.text)
    raise stream.fail(g.expected_atoms())


def _parse_konst(stream: _Stream, at: _Token) -> _SExpr:
    tok = stream.peek()
    if tok.kind == "!":
        stream.advance()
        stream.expect("(")
        a = _parse_label(stream)
        stream.expect(",")
        b = _parse_label(stream)
        stream.expect(")")
        return _SEq(at.line, at.col, a, b)
    if tok.kind == "@":
        stream.advance()
        name = stream.expect("ident", frozenset({"name"}))
        return _SOf(at.line, at.col, name.text)
    if tok.kind == "ident":
        stream.advance()
        return _SPrim(at.line, at.col, tok.text)
    raise stream.fail(frozenset({"sort", "!", "@"}))


# ---------------------------------------------------------------------------
# headers


def _split_headers(text: str, names: tuple[str, ...]) -> tuple[dict[str, tuple[str, int, int]], str]:
    """Pull header lines out of the text, blanking them so the body keeps
    its original line and column positions."""
    headers: dict[str, tuple[str, int, int]] = {}
    body_lines: list[str] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.lstrip()
        matched = None
        for name in names:
            if stripped.startswith(name + ":"):
                matched = name
                break
        if matched is None:
            body_lines.append(line)
            continue
        if matched in headers:
            raise ParseError(f"duplicate header {matched}:", lineno, 1)
        indent = len(line) - len(stripped)
        rest = stripped[len(matched) + 1 :]
        headers[matched] = (rest, lineno, indent + len(matched) + 2)
        body_lines.append("")
    return headers, "\n".join(body_lines)


def _header_labels(
    headers: dict[str, tuple[str, int, int]], name: str
) -> IndexSet | None:
    if name not in headers:
        return None
    rest, line, col = headers[name]
    return _parse_label_list(rest, line, col)


# ---------------------------------------------------------------------------
# elaboration into the universes


def _elab_regular(node: _SExpr) -> regular.RegularCode:
    match node:
        case _SUnit():
            return regular.Unit()
        case _SId(lbl=None):
            return regular.Id()
        case _SSum(left=l, right=r):
            return regular.Sum(_elab_regular(l), _elab_regular(r))
        case _SProd(left=l, right=r):
            return regular.Prod(_elab_regular(l), _elab_regular(r))
    raise ParseError("not a regular code", node.line, node.col)


def _elab_polyp(node: _SExpr) -> polyp.PolyPCode:
    match node:
        case _SUnit():
            return polyp.Unit()
        case _SPar():
            return polyp.Par()
        case _SId(lbl=None):
            return polyp.Id()
        case _SSum(left=l, right=r):
            return polyp.Sum(_elab_polyp(l), _elab_polyp(r))
        case _SProd(left=l, right=r):
            return polyp.Prod(_elab_polyp(l), _elab_polyp(r))
        case _SComp(left=l, right=r):
            return polyp.Comp(_elab_polyp(l), _elab_polyp(r))
    raise ParseError("not a polyp code", node.line, node.col)


def _elab_multirec(node: _SExpr, indices: IndexSet) -> multirec.MultirecBody:
    match node:
        case _SUnit():
            return multirec.Unit()
        case _SId(lbl=lbl) if lbl is not None:
            if lbl not in indices:
                raise ParseError(
                    f"label {print_label(lbl)} is not in the index set",
                    node.line,
                    node.col,
                )
            return multirec.Id(lbl)
        case _STag(lbl=lbl):
            if lbl not in indices:
                raise ParseError(
                    f"label {print_label(lbl)} is not in the index set",
                    node.line,
                    node.col,
                )
            return multirec.Tag(lbl)
        case _SSum(left=l, right=r):
            return multirec.Sum(_elab_multirec(l, indices), _elab_multirec(r, indices))
        case _SProd(left=l, right=r):
            return multirec.Prod(_elab_multirec(l, indices), _elab_multirec(r, indices))
    raise ParseError("not a multirec body", node.line, node.col)


def _elab_indexed(
    node: _SExpr, ins: IndexSet, outs: IndexSet, mid: IndexSet
) -> indexed.IndexedBody:
    match node:
        case _SUnit():
            return indexed.Unit()
        case _SId(lbl=lbl) if lbl is not None:
            if lbl not in ins:
                raise ParseError(
                    f"label {print_label(lbl)} is not in the input set",
                    node.line,
                    node.col,
                )
            return indexed.Id(lbl)
        case _STag(lbl=lbl):
            if lbl not in outs:
                raise ParseError(
                    f"label {print_label(lbl)} is not in the output set",
                    node.line,
                    node.col,
                )
            return indexed.Tag(lbl)
        case _SSum(left=l, right=r):
            return indexed.Sum(
                _elab_indexed(l, ins, outs, mid), _elab_indexed(r, ins, outs, mid)
            )
        case _SProd(left=l, right=r):
            return indexed.Prod(
                _elab_indexed(l, ins, outs, mid), _elab_indexed(r, ins, outs, mid)
            )
        case _SComp(left=l, right=r):
            f = indexed.IndexedCode(mid, outs, _elab_indexed(l, mid, outs, mid))
            g = indexed.IndexedCode(ins, mid, _elab_indexed(r, ins, mid, mid))
            return indexed.Comp(f, g)
        case _SFix(inner=inner):
            inner_ins = disjoint_union(ins, outs)
            body = _elab_indexed(inner, inner_ins, outs, mid)
            return indexed.Fix(indexed.IndexedCode(inner_ins, outs, body))
    raise ParseError("not an indexed body", node.line, node.col)


def _elab_instant(node: _SExpr) -> instant.InstantCode:
    match node:
        case _SUnit():
            return instant.Unit()
        case _SPrim(sort=sort):
            return instant.K(instant.Prim(sort))
        case _SEq(a=a, b=b):
            return instant.K(instant.EqWitness(a, b))
        case _SOf(ref=ref):
            return instant.K(instant.OfCode(ref))
        case _SRec(ref=ref):
            return instant.R(ref)
        case _SSum(left=l, right=r):
            return instant.Sum(_elab_instant(l), _elab_instant(r))
        case _SProd(left=l, right=r):
            return instant.Prod(_elab_instant(l), _elab_instant(r))
    raise ParseError("not an instant code", node.line, node.col)


def parse_code(universe: str, text: str):
    """Parse one code in the named universe's concrete syntax."""
    if universe not in _GRAMMARS:
        raise ValueError(f"unknown universe tag: {universe!r}")
    g = _GRAMMARS[universe]
    if universe == "multirec":
        headers, body_text = _split_headers(text, ("indices",))
        indices = _header_labels(headers, "indices")
        if indices is None:
            raise ParseError("missing header indices:", 1, 1)
        node = _parse_body(body_text, g)
        return multirec.MultirecCode(indices, _elab_multirec(node, indices))
    if universe == "indexed":
        headers, body_text = _split_headers(text, ("in", "out", "mid"))
        ins = _header_labels(headers, "in")
        outs = _header_labels(headers, "out")
        if ins is None:
            raise ParseError("missing header in:", 1, 1)
        if outs is None:
            raise ParseError("missing header out:", 1, 1)
        mid = _header_labels(headers, "mid")
        if mid is None:
            mid = outs
        node = _parse_body(body_text, g)
        return indexed.IndexedCode(ins, outs, _elab_indexed(node, ins, outs, mid))
    node = _parse_body(text, g)
    if universe == "regular":
        return _elab_regular(node)
    if universe == "polyp":
        return _elab_polyp(node)
    return _elab_instant(node)


def _parse_body(text: str, g: _Grammar) -> _SExpr:
    stream = _Stream(_lex(text))
    node = _parse_sum(stream, g)
    stream.done()
    return node


# ---------------------------------------------------------------------------
# environments


def parse_env(text: str) -> dict[str, instant.InstantCode]:
    """Parse "name = code" lines into an environment, in file order."""
    env: dict[str, instant.InstantCode] = {}
    entry_lines: dict[str, int] = {}
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        stream = _Stream(_lex(line, line=lineno))
        name_tok = stream.expect("ident", frozenset({"name"}))
        stream.expect("=")
        node = _parse_sum(stream, _GRAMMARS["instant"])
        stream.done()
        if name_tok.text in env:
            raise ParseError(
                f"duplicate environment entry {name_tok.text}",
                name_tok.line,
                name_tok.col,
            )
        env[name_tok.text] = _elab_instant(node)
        entry_lines[name_tok.text] = lineno
    for name, code in env.items():
        for ref in instant._refs(code):
            if ref not in env:
                raise ParseError(
                    f"entry {name} references {ref}, which is not defined",
                    entry_lines[name],
                    1,
                )
    return env


def print_env(env: Mapping[str, instant.InstantCode]) -> str:
    lines = [f"{name} = {print_code('instant', code)}" for name, code in env.items()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# printing

_SUM_LEVEL = 0
_PROD_LEVEL = 1
_COMP_LEVEL = 2
_ATOM_LEVEL = 3


def _wrap(text: str, own: int, level: int) -> str:
    return f"({text})" if own < level else text


def _pp_regular(code: regular.RegularCode, level: int) -> str:
    match code:
        case regular.Unit():
            return "U"
        case regular.Id():
            return "I"
        case regular.Sum(f, g):
            text = f"{_pp_regular(f, _PROD_LEVEL)} + {_pp_regular(g, _SUM_LEVEL)}"
            return _wrap(text, _SUM_LEVEL, level)
        case regular.Prod(f, g):
            text = f"{_pp_regular(f, _COMP_LEVEL)} * {_pp_regular(g, _PROD_LEVEL)}"
            return _wrap(text, _PROD_LEVEL, level)
    raise MalformedValue(f"not a regular code: {code!r}")


def _pp_polyp(code: polyp.PolyPCode, level: int) -> str:
    match code:
        case polyp.Unit():
            return "U"
        case polyp.Par():
            return "P"
        case polyp.Id():
            return "I"
        case polyp.Sum(f, g):
            text = f"{_pp_polyp(f, _PROD_LEVEL)} + {_pp_polyp(g, _SUM_LEVEL)}"
            return _wrap(text, _SUM_LEVEL, level)
        case polyp.Prod(f, g):
            text = f"{_pp_polyp(f, _COMP_LEVEL)} * {_pp_polyp(g, _PROD_LEVEL)}"
            return _wrap(text, _PROD_LEVEL, level)
        case polyp.Comp(f, g):
            text = f"{_pp_polyp(f, _ATOM_LEVEL)} @ {_pp_polyp(g, _COMP_LEVEL)}"
            return _wrap(text, _COMP_LEVEL, level)
    raise MalformedValue(f"not a polyp code: {code!r}")


def _pp_multirec(body: multirec.MultirecBody, level: int) -> str:
    match body:
        case multirec.Unit():
            return "U"
        case multirec.Id(lbl):
            return f"I@{print_label(lbl)}"
        case multirec.Tag(lbl):
            return f"!{print_label(lbl)}"
        case multirec.Sum(f, g):
            text = f"{_pp_multirec(f, _PROD_LEVEL)} + {_pp_multirec(g, _SUM_LEVEL)}"
            return _wrap(text, _SUM_LEVEL, level)
        case multirec.Prod(f, g):
            text = f"{_pp_multirec(f, _COMP_LEVEL)} * {_pp_multirec(g, _PROD_LEVEL)}"
            return _wrap(text, _PROD_LEVEL, level)
    raise MalformedValue(f"not a multirec body: {body!r}")


def _comp_middles(body: indexed.IndexedBody, found: list[IndexSet]) -> None:
    match body:
        case indexed.Sum(f, g) | indexed.Prod(f, g):
            _comp_middles(f, found)
            _comp_middles(g, found)
        case indexed.Comp(f, g):
            found.append(f.ins)
            _comp_middles(f.body, found)
            _comp_middles(g.body, found)
        case indexed.Fix(f):
            _comp_middles(f.body, found)


def _pp_indexed(
    body: indexed.IndexedBody,
    ins: IndexSet,
    outs: IndexSet,
    mid: IndexSet,
    level: int,
) -> str:
    match body:
        case indexed.Unit():
            return "U"
        case indexed.Id(lbl):
            return f"I@{print_label(lbl)}"
        case indexed.Tag(lbl):
            return f"!{print_label(lbl)}"
        case indexed.Sum(f, g):
            text = (
                f"{_pp_indexed(f, ins, outs, mid, _PROD_LEVEL)}"
                f" + {_pp_indexed(g, ins, outs, mid, _SUM_LEVEL)}"
            )
            return _wrap(text, _SUM_LEVEL, level)
        case indexed.Prod(f, g):
            text = (
                f"{_pp_indexed(f, ins, outs, mid, _COMP_LEVEL)}"
                f" * {_pp_indexed(g, ins, outs, mid, _PROD_LEVEL)}"
            )
            return _wrap(text, _PROD_LEVEL, level)
        case indexed.Comp(f, g):
            if f.ins != mid or f.outs != outs or g.ins != ins or g.outs != mid:
                raise MalformedValue(
                    "composition does not fit the mid/in/out header shape"
                )
            text = (
                f"{_pp_indexed(f.body, mid, outs, mid, _ATOM_LEVEL)}"
                f" @ {_pp_indexed(g.body, ins, mid, mid, _COMP_LEVEL)}"
            )
            return _wrap(text, _COMP_LEVEL, level)
        case indexed.Fix(f):
            expected_ins = disjoint_union(ins, outs)
            if f.ins != expected_ins or f.outs != outs:
                raise MalformedValue("fixed point does not fit the in/out header shape")
            text = f"fix {_pp_indexed(f.body, expected_ins, outs, mid, _ATOM_LEVEL)}"
            return text if level <= _ATOM_LEVEL else f"({text})"
    raise MalformedValue(f"not an indexed body: {body!r}")


def _pp_instant(code: instant.InstantCode, level: int) -> str:
    match code:
        case instant.Unit():
            return "U"
        case instant.K(instant.Prim(sort)):
            return f"K {sort}"
        case instant.K(instant.EqWitness(a, b)):
            return f"K!({print_label(a)} , {print_label(b)})"
        case instant.K(instant.OfCode(ref)):
            return f"K@{ref}"
        case instant.R(ref):
            return f"R {ref}"
        case instant.Sum(f, g):
            text = f"{_pp_instant(f, _PROD_LEVEL)} + {_pp_instant(g, _SUM_LEVEL)}"
            return _wrap(text, _SUM_LEVEL, level)
        case instant.Prod(f, g):
            text = f"{_pp_instant(f, _COMP_LEVEL)} * {_pp_instant(g, _PROD_LEVEL)}"
            return _wrap(text, _PROD_LEVEL, level)
    raise MalformedValue(f"not an instant code: {code!r}")


def _print_labels(labels: IndexSet) -> str:
    return ", ".join(print_label(lbl) for lbl in labels)


def print_code(universe: str, code) -> str:
    """Canonical concrete syntax: single spaces, minimal parentheses."""
    match universe:
        case "regular":
            return _pp_regular(code, _SUM_LEVEL)
        case "polyp":
            return _pp_polyp(code, _SUM_LEVEL)
        case "multirec":
            header = f"indices: {_print_labels(code.indices)}".rstrip()
            return f"{header}\n{_pp_multirec(code.body, _SUM_LEVEL)}"
        case "indexed":
            found: list[IndexSet] = []
            _comp_middles(code.body, found)
            mids = set(found)
            if len(mids) > 1:
                raise MalformedValue("composition middles disagree; cannot print")
            mid = found[0] if found else code.outs
            lines = [
                f"in: {_print_labels(code.ins)}".rstrip(),
                f"out: {_print_labels(code.outs)}".rstrip(),
            ]
            if mid != code.outs:
                lines.append(f"mid: {_print_labels(mid)}".rstrip())
            lines.append(_pp_indexed(code.body, code.ins, code.outs, mid, _SUM_LEVEL))
            return "\n".join(lines)
        case "instant":
            return _pp_instant(code, _SUM_LEVEL)
    raise ValueError(f"unknown universe tag: {universe!r}")
