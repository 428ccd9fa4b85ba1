"""Expression language and configuration for the CLI.

Grammar (whitespace between tokens is free):

    element := term ("+" term)* | "0"
    term    := signed-int ring-symbol "*" basis
    basis   := "g(" int "," int ")" | "g" int        (legacy single index)

The ring symbol is fixed by the active context: "" for the plain integer
ring (q = 1), "j" for q = 2, "j<q>" otherwise.  The legacy index form
g<i> maps through i = k*n + m + 1 for the antidiagonal family, so the
published worked elements can be typed verbatim.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass

from .errors import ConfigError, DomainError, KeyRangeError, ParseError
from .groupring import GroupRing, GroupRingElement, make_group_ring
from .groups import AdiagGroup, DerivedCyclicGroup
from .rings import JRootRing

ENV_CONFIG = "PGR_CONFIG"

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9]*)|(?P<punct>[()*,+-])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "ident" | "punct" | "eof"
    text: str
    offset: int


def _tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


@dataclass(frozen=True)
class ElementTerm:
    sign: int
    magnitude: int
    symbol: str
    key: object  # resolved group key


@dataclass(frozen=True)
class ElementExpr:
    terms: tuple[ElementTerm, ...]
    is_zero_literal: bool = False


class _Parser:
    def __init__(self, ctx: GroupRing, text: str):
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_punct(self, char: str) -> Token:
        tok = self.take()
        if tok.kind != "punct" or tok.text != char:
            raise ParseError(
                f"unexpected {tok.text or 'end of input'!r}", tok.offset, (char,)
            )
        return tok

    def parse_int(self, what: str) -> int:
        sign = 1
        tok = self.peek()
        if tok.kind == "punct" and tok.text in "+-":
            self.take()
            sign = -1 if tok.text == "-" else 1
        tok = self.take()
        if tok.kind != "int":
            raise ParseError(
                f"expected {what}, found {tok.text or 'end of input'!r}",
                tok.offset,
                ("integer",),
            )
        return sign * int(tok.text)

    def parse_basis(self):
        tok = self.take()
        group = self.ctx.group
        if tok.kind != "ident" or not tok.text.startswith("g"):
            raise ParseError(
                f"expected a basis element, found {tok.text or 'end of input'!r}",
                tok.offset,
                ("g(<m>,<n>)", "g<index>"),
            )
        if tok.text == "g":
            # exponent-pair form, only meaningful for the antidiagonal family
            if not isinstance(group, AdiagGroup):
                raise ParseError(
                    f"{group.name} keys use the g<index> form", tok.offset,
                    ("g<index>",),
                )
            self.expect_punct("(")
            m = self.parse_int("first exponent")
            self.expect_punct(",")
            n = self.parse_int("second exponent")
            self.expect_punct(")")
            if not (0 <= m < group.k and 0 <= n < group.k):
                raise KeyRangeError(
                    f"g({m},{n}) outside Z_{group.k} x Z_{group.k}", tok.offset
                )
            return (m, n)
        if re.fullmatch(r"g\d+", tok.text):
            index = int(tok.text[1:])
            try:
                return group.key_of_index(index)
            except DomainError as exc:
                raise KeyRangeError(str(exc), tok.offset) from exc
        raise ParseError(
            f"malformed basis {tok.text!r}", tok.offset, ("g(<m>,<n>)", "g<index>")
        )

    def parse_term(self) -> ElementTerm:
        tok = self.peek()
        sign = 1
        if tok.kind == "punct" and tok.text in "+-":
            self.take()
            sign = -1 if tok.text == "-" else 1
        tok = self.take()
        if tok.kind != "int":
            raise ParseError(
                f"expected a coefficient, found {tok.text or 'end of input'!r}",
                tok.offset,
                ("integer",),
            )
        magnitude = int(tok.text)
        symbol = self.ctx.ring.symbol
        if symbol:
            sym = self.take()
            if sym.kind != "ident" or sym.text != symbol:
                raise ParseError(
                    f"expected ring symbol {symbol!r}, found "
                    f"{sym.text or 'end of input'!r}",
                    sym.offset,
                    (symbol,),
                )
        self.expect_punct("*")
        key = self.parse_basis()
        return ElementTerm(sign, magnitude, symbol, key)

    def parse_element(self) -> ElementExpr:
        first = self.peek()
        if (
            first.kind == "int"
            and first.text == "0"
            and self.tokens[self.pos + 1].kind == "eof"
        ):
            self.take()
            return ElementExpr((), is_zero_literal=True)
        terms = [self.parse_term()]
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                break
            if tok.kind == "punct" and tok.text == "+":
                self.take()
                terms.append(self.parse_term())
                continue
            raise ParseError(
                f"unexpected {tok.text!r}", tok.offset, ("+", "end of input")
            )
        return ElementExpr(tuple(terms))


def parse_element(ctx: GroupRing, text: str) -> ElementExpr:
    """Parse an element expression against the active context's grammar."""
    return _Parser(ctx, text).parse_element()


def element_from_expr(ctx: GroupRing, expr: ElementExpr) -> GroupRingElement:
    if expr.is_zero_literal:
        return ctx.zero()
    return ctx.element(
        [(t.key, t.sign * t.magnitude) for t in expr.terms]
    )


def parse_to_element(ctx: GroupRing, text: str) -> GroupRingElement:
    return element_from_expr(ctx, parse_element(ctx, text))


def parse_basis_label(ctx: GroupRing, text: str):
    """Parse a single basis label such as g(1,1) or g5."""
    parser = _Parser(ctx, text)
    key = parser.parse_basis()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"unexpected {tok.text!r}", tok.offset, ("end of input",))
    return key


def print_canonical(ctx: GroupRing, x: GroupRingElement) -> str:
    """Deterministic canonical rendering; printing then parsing is the
    identity on canonical forms."""
    return ctx.render(x)


# configuration ---------------------------------------------------------------

DEFAULT_CONFIG = {
    "ring": {"kind": "jroot", "q": 2},
    "group": {"kind": "adiag_cyclic", "k": 3},
    "powers": {"ell_m": 1, "ell_n": 1, "ell_g": 1},
}


def _require(mapping: dict, key: str, types, where: str):
    if key not in mapping:
        raise ConfigError(f"missing {key!r} in {where}")
    value = mapping[key]
    if not isinstance(value, types) or isinstance(value, bool):
        raise ConfigError(f"{where}.{key} has the wrong type: {value!r}")
    return value


def build_context(config: dict) -> GroupRing:
    """Instantiate a context from a (merged) configuration mapping."""
    if not isinstance(config, dict):
        raise ConfigError("configuration must be a JSON object")
    unknown = set(config) - {"ring", "group", "powers"}
    if unknown:
        raise ConfigError(f"unknown configuration section(s): {sorted(unknown)}")

    ring_cfg = config.get("ring", DEFAULT_CONFIG["ring"])
    if not isinstance(ring_cfg, dict):
        raise ConfigError("'ring' must be an object")
    kind = _require(ring_cfg, "kind", str, "ring")
    if kind != "jroot":
        raise ConfigError(f"unknown ring kind {kind!r}")
    q = _require(ring_cfg, "q", int, "ring")
    modulus = ring_cfg.get("modulus")
    if modulus is not None and (not isinstance(modulus, int) or isinstance(modulus, bool)):
        raise ConfigError(f"ring.modulus has the wrong type: {modulus!r}")
    try:
        ring = JRootRing(q, modulus)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc

    group_cfg = config.get("group", DEFAULT_CONFIG["group"])
    if not isinstance(group_cfg, dict):
        raise ConfigError("'group' must be an object")
    gkind = _require(group_cfg, "kind", str, "group")
    try:
        if gkind == "adiag_cyclic":
            group = AdiagGroup(_require(group_cfg, "k", int, "group"))
        elif gkind == "derived":
            base = _require(group_cfg, "base", str, "group")
            m = re.fullmatch(r"cyclic:(\d+)", base)
            if m is None:
                raise ConfigError(
                    f"group.base must look like cyclic:<order>, got {base!r}"
                )
            group = DerivedCyclicGroup(
                int(m.group(1)), _require(group_cfg, "arity", int, "group")
            )
        else:
            raise ConfigError(f"unknown group kind {gkind!r}")
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc

    powers = config.get("powers", {})
    if not isinstance(powers, dict):
        raise ConfigError("'powers' must be an object")
    ells = {}
    for name in ("ell_m", "ell_n", "ell_g"):
        value = powers.get(name, 1)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConfigError(f"powers.{name} has the wrong type: {value!r}")
        ells[name] = value
    return make_group_ring(ring, group, **ells)


def load_config(path: str | None = None, overrides: dict | None = None) -> GroupRing:
    """Read a JSON configuration file (explicit path, else $PGR_CONFIG, else
    built-in defaults), apply flag overrides on top and build the context."""
    config: dict = {}
    path = path or os.environ.get(ENV_CONFIG)
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                config = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read configuration {path!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"configuration {path!r} is not valid JSON: {exc}") from exc
    merged = {
        "ring": dict(DEFAULT_CONFIG["ring"]),
        "group": dict(DEFAULT_CONFIG["group"]),
        "powers": dict(DEFAULT_CONFIG["powers"]),
    }
    if config:
        if not isinstance(config, dict):
            raise ConfigError("configuration must be a JSON object")
        for section in ("ring", "group", "powers"):
            if section in config:
                if not isinstance(config[section], dict):
                    raise ConfigError(f"'{section}' must be an object")
                if section == "group" and "kind" in config[section]:
                    merged[section] = dict(config[section])
                else:
                    merged[section].update(config[section])
        unknown = set(config) - {"ring", "group", "powers"}
        if unknown:
            raise ConfigError(
                f"unknown configuration section(s): {sorted(unknown)}"
            )
    for section, values in (overrides or {}).items():
        if section == "group" and "kind" in values:
            merged[section] = dict(values)
        else:
            merged[section].update(values)
    return build_context(merged)
