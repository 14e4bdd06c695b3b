"""Parser for ring/ideal scripts.

    # comments run to end of line
    ring x,y,z,t over q;          # "over p:32003" for a prime field
    I = (t^3, z^3);
    J = (x^2*t - y^2*z, t^3);
    reg I;                        # optional trailing command

Terms are an optional integer or ``a/b`` coefficient followed by
``*``-joined factors ``var`` or ``var^exp``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .field import QQ, FieldSpec
from .groebner import PolyIdeal
from .poly import Polynomial, RingSpec

COMMANDS = {"reg", "betti", "op", "gb", "resolve", "saturate", "check", "family", "suite"}

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<opt>--[A-Za-z][A-Za-z0-9_-]*)"
    r"|(?P<sym>[;,=()+\-*^/:])"
)


_KIND_NAMES = {"ident": "an identifier", "int": "an integer"}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - start + 1))
    return tokens


@dataclass
class Script:
    ring: RingSpec
    ideals: dict[str, PolyIdeal] = field(default_factory=dict)
    command: list[str] | None = None

    def ideal(self, name: str) -> PolyIdeal:
        try:
            return self.ideals[name]
        except KeyError:
            raise KeyError(f"no ideal named {name!r}") from None

    def render(self) -> str:
        lines = [f"ring {','.join(self.ring.names)} over {self.ring.field};"]
        for name, I in self.ideals.items():
            lines.append(f"{name} = {I.render()};")
        if self.command:
            lines.append(" ".join(self.command) + ";")
        return "\n".join(lines) + "\n"


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.ring: RingSpec | None = None

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def next(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text else _KIND_NAMES.get(kind, kind)
            got = repr(t.text) if t.text else "end of input"
            raise self.error(f"expected {want}, got {got}")
        return self.next()

    def accept(self, text: str) -> bool:
        if self.tok.kind == "sym" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def script(self, field: FieldSpec | None = None) -> Script:
        self.ring = self.ring_decl()
        if field is not None:
            self.ring = RingSpec(self.ring.names, field)
        sc = Script(self.ring)
        while self.tok.kind != "eof":
            t = self.expect("ident")
            if self.tok.kind == "sym" and self.tok.text == "=":
                self.next()
                sc.ideals[t.text] = self.ideal_body()
                self.expect("sym", ";")
            elif t.text in COMMANDS:
                if sc.command is not None:
                    raise self.error("only one command per script", t)
                words = [t.text]
                while not (self.tok.kind == "sym" and self.tok.text == ";"):
                    if self.tok.kind == "eof":
                        raise self.error("expected ';' after command")
                    words.append(self.next().text)
                self.next()
                sc.command = _join_words(words)
            else:
                raise self.error(f"unknown statement {t.text!r}", t)
        return sc

    def ring_decl(self) -> RingSpec:
        t = self.expect("ident", "ring")
        names = [self.expect("ident").text]
        while self.accept(","):
            names.append(self.expect("ident").text)
        if len(set(names)) != len(names):
            raise self.error("repeated variable name", t)
        fld = QQ
        if self.tok.kind == "ident" and self.tok.text == "over":
            self.next()
            ft = self.expect("ident")
            spec = ft.text
            if self.accept(":"):
                spec += ":" + self.expect("int").text
            try:
                fld = FieldSpec.parse(spec)
            except ValueError as e:
                raise self.error(str(e), ft) from None
        self.expect("sym", ";")
        return RingSpec(tuple(names), fld)

    def ideal_body(self) -> PolyIdeal:
        self.expect("sym", "(")
        gens = []
        if not self.accept(")"):
            gens.append(self.poly())
            while self.accept(","):
                gens.append(self.poly())
            self.expect("sym", ")")
        return PolyIdeal(self.ring, tuple(gens))

    def poly(self) -> Polynomial:
        ring = self.ring
        acc = ring.zero()
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        while True:
            acc = acc + self.term() * sign
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                return acc

    def term(self) -> Polynomial:
        ring = self.ring
        coeff = ring.field.one()
        exps = [0] * ring.n
        need_factor = True
        if self.tok.kind == "int":
            coeff = ring.field.coerce(int(self.next().text))
            if self.accept("/"):
                den = int(self.expect("int").text)
                if den == 0:
                    raise self.error("zero denominator")
                coeff = coeff * ring.field.inv(ring.field.coerce(den))
            if not self.accept("*"):
                need_factor = False
        while need_factor:
            t = self.expect("ident")
            if t.text not in ring.names:
                raise self.error(f"undeclared variable {t.text!r}", t)
            e = 1
            if self.accept("^"):
                e = int(self.expect("int").text)
            exps[ring.index(t.text)] += e
            if not self.accept("*"):
                break
        return ring.monomial(tuple(exps), coeff)


def _join_words(words: list[str]) -> list[str]:
    # re-glue tokens such as "p" ":" "7" into "p:7"
    out: list[str] = []
    for w in words:
        if out and (w == ":" or out[-1].endswith(":")):
            out[-1] += w
        else:
            out.append(w)
    return out


def parse(text: str, field: FieldSpec | None = None) -> Script:
    """Parse a script; ``field`` overrides the one declared by ``ring``."""
    return _Parser(text).script(field)


def parse_polynomial(text: str, ring: RingSpec) -> Polynomial:
    p = _Parser(text)
    p.ring = ring
    f = p.poly()
    p.expect("eof")
    return f


def parse_ideal(text: str, ring: RingSpec) -> PolyIdeal:
    p = _Parser(text)
    p.ring = ring
    I = p.ideal_body()
    p.expect("eof")
    return I
