"""Signatures, formulas and sequents, with parsers and printers.

A signature lists normal lattice-expansion connectives.  Each connective
belongs to family "F" (join-like) or "G" (meet-like), has an arity and an
order type: a tuple over {"1", "d"} giving, per coordinate, whether the
connective is monotone ("1") or antitone ("d") there.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import ParseError, SignatureError

MONO = "1"
ANTI = "d"

_ORDER_ALIASES = {
    "1": MONO,
    "one": MONO,
    "d": ANTI,
    "partial": ANTI,
    "∂": ANTI,
}


@dataclass(frozen=True)
class Connective:
    name: str
    family: str
    arity: int
    order_type: tuple

    def __post_init__(self):
        if self.family not in ("F", "G"):
            raise SignatureError(f"connective {self.name!r}: family must be 'F' or 'G'")
        if self.arity < 0:
            raise SignatureError(f"connective {self.name!r}: negative arity")
        if len(self.order_type) != self.arity:
            raise SignatureError(
                f"connective {self.name!r}: order type has length "
                f"{len(self.order_type)}, expected {self.arity}"
            )
        for e in self.order_type:
            if e not in (MONO, ANTI):
                raise SignatureError(f"connective {self.name!r}: bad order type entry {e!r}")


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RESERVED = {"top", "bot"}


@dataclass(frozen=True)
class Signature:
    connectives: tuple

    def __post_init__(self):
        seen = set()
        for c in self.connectives:
            if not _IDENT.match(c.name) or c.name in _RESERVED:
                raise SignatureError(f"bad connective name {c.name!r}")
            if c.name in seen:
                raise SignatureError(f"duplicate connective name {c.name!r}")
            seen.add(c.name)

    def get(self, name):
        for c in self.connectives:
            if c.name == name:
                return c
        return None

    def __contains__(self, name):
        return self.get(name) is not None

    def to_dict(self):
        return {
            "connectives": [
                {
                    "name": c.name,
                    "family": c.family,
                    "arity": c.arity,
                    "order_type": list(c.order_type),
                }
                for c in self.connectives
            ]
        }


EMPTY_SIGNATURE = Signature(())


def signature_from_dict(data):
    if not isinstance(data, dict) or "connectives" not in data:
        raise SignatureError("signature must be an object with a 'connectives' list")
    conns = []
    for entry in data["connectives"]:
        try:
            name = entry["name"]
            family = entry["family"]
            arity = entry["arity"]
            raw_ot = entry["order_type"]
        except (KeyError, TypeError) as exc:
            raise SignatureError(f"connective entry missing field: {exc}") from exc
        ot = []
        for e in raw_ot:
            if e not in _ORDER_ALIASES:
                raise SignatureError(f"connective {name!r}: unknown order type entry {e!r}")
            ot.append(_ORDER_ALIASES[e])
        conns.append(Connective(name, family, arity, tuple(ot)))
    return Signature(tuple(conns))


def parse_signature(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    return signature_from_dict(data)


# ---------------------------------------------------------------------------
# Formulas


@dataclass(frozen=True)
class Prop:
    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Conn:
    name: str
    args: tuple


@dataclass(frozen=True)
class Sequent:
    lhs: object
    rhs: object


TOP = Top()
BOT = Bot()


def props_of(phi):
    """The set of proposition names occurring in a formula or sequent."""
    if isinstance(phi, Sequent):
        return props_of(phi.lhs) | props_of(phi.rhs)
    if isinstance(phi, Prop):
        return {phi.name}
    if isinstance(phi, (And, Or)):
        return props_of(phi.left) | props_of(phi.right)
    if isinstance(phi, Conn):
        out = set()
        for a in phi.args:
            out |= props_of(a)
        return out
    return set()


def depth_of(phi):
    if isinstance(phi, Sequent):
        return max(depth_of(phi.lhs), depth_of(phi.rhs))
    if isinstance(phi, (And, Or)):
        return 1 + max(depth_of(phi.left), depth_of(phi.right))
    if isinstance(phi, Conn):
        return 1 + max((depth_of(a) for a in phi.args), default=0)
    return 0


def validate_formula(phi, signature):
    """Raise SignatureError if phi uses unknown connectives or wrong arities."""
    if isinstance(phi, Sequent):
        validate_formula(phi.lhs, signature)
        validate_formula(phi.rhs, signature)
        return
    if isinstance(phi, (And, Or)):
        validate_formula(phi.left, signature)
        validate_formula(phi.right, signature)
    elif isinstance(phi, Conn):
        c = signature.get(phi.name)
        if c is None:
            raise SignatureError(f"unknown connective {phi.name!r}")
        if len(phi.args) != c.arity:
            raise SignatureError(
                f"connective {phi.name!r} expects {c.arity} arguments, got {len(phi.args)}"
            )
        for a in phi.args:
            validate_formula(a, signature)


# Tokenizer

_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<and>/\\)
      | (?P<or>\\/)
      | (?P<seq>\|-)
      | (?P<lpar>\()
      | (?P<rpar>\))
      | (?P<comma>,)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind != "ws":
            tokens.append((kind, value, line, col))
        nl = value.count("\n")
        if nl:
            line += nl
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    tokens.append(("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text, signature):
        self.tokens = _tokenize(text)
        self.sig = signature
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2], tok[3])
        return tok

    def formula(self):
        return self.or_expr()

    def or_expr(self):
        node = self.and_expr()
        while self.peek()[0] == "or":
            self.next()
            node = Or(node, self.and_expr())
        return node

    def and_expr(self):
        node = self.unary_expr()
        while self.peek()[0] == "and":
            self.next()
            node = And(node, self.unary_expr())
        return node

    def unary_expr(self):
        kind, value, line, col = self.peek()
        if kind == "lpar":
            self.next()
            node = self.or_expr()
            self.expect("rpar")
            return node
        if kind != "ident":
            raise ParseError(f"expected a formula, found {value!r}", line, col)
        self.next()
        if value == "top":
            return TOP
        if value == "bot":
            return BOT
        conn = self.sig.get(value)
        if conn is None:
            return Prop(value)
        if conn.arity == 0:
            return Conn(value, ())
        if conn.arity == 1 and self.peek()[0] != "lpar":
            return Conn(value, (self.unary_expr(),))
        self.expect("lpar")
        args = [self.or_expr()]
        while self.peek()[0] == "comma":
            self.next()
            args.append(self.or_expr())
        self.expect("rpar")
        if len(args) != conn.arity:
            raise ParseError(
                f"connective {value!r} expects {conn.arity} arguments, got {len(args)}",
                line,
                col,
            )
        return Conn(value, tuple(args))


def parse_formula(text, signature=EMPTY_SIGNATURE):
    p = _Parser(text, signature)
    node = p.formula()
    kind, value, line, col = p.peek()
    if kind != "eof":
        raise ParseError(f"trailing input {value!r}", line, col)
    return node


def parse_sequent(text, signature=EMPTY_SIGNATURE):
    p = _Parser(text, signature)
    lhs = p.formula()
    tok = p.next()
    if tok[0] != "seq":
        raise ParseError(f"expected '|-', found {tok[1]!r}", tok[2], tok[3])
    rhs = p.formula()
    kind, value, line, col = p.peek()
    if kind != "eof":
        raise ParseError(f"trailing input {value!r}", line, col)
    return Sequent(lhs, rhs)


# Printer.  Levels: Or = 1, And = 2, unary application = 3, atoms = 5.


def _level(phi):
    if isinstance(phi, Or):
        return 1
    if isinstance(phi, And):
        return 2
    if isinstance(phi, Conn) and len(phi.args) == 1:
        return 3
    return 5


def _render(phi, min_level):
    if isinstance(phi, Prop):
        text = phi.name
    elif isinstance(phi, Top):
        text = "top"
    elif isinstance(phi, Bot):
        text = "bot"
    elif isinstance(phi, Or):
        text = f"{_render(phi.left, 1)} \\/ {_render(phi.right, 2)}"
    elif isinstance(phi, And):
        text = f"{_render(phi.left, 2)} /\\ {_render(phi.right, 3)}"
    elif isinstance(phi, Conn):
        if len(phi.args) == 1:
            text = f"{phi.name} {_render(phi.args[0], 3)}"
        elif phi.args:
            text = f"{phi.name}({', '.join(_render(a, 0) for a in phi.args)})"
        else:
            text = phi.name
    else:
        raise TypeError(f"not a formula: {phi!r}")
    if _level(phi) < min_level:
        return f"({text})"
    return text


def format_formula(phi):
    return _render(phi, 0)


def format_sequent(s):
    return f"{format_formula(s.lhs)} |- {format_formula(s.rhs)}"
