"""Text format for recurrences, interlacing certificates and calculus condition sets.

    sequence motzkin {
      Q(n) = n + 2
      P1(n) = 2*n + 1
      P0(n) = 3*(n - 1)
      init a(0) = 1, a(1) = 1
      valid n >= 2
    }

``P<i>`` multiplies a(n-(d+1-i)) where d is the largest index given.
Certificates and condition sets refer to a sequence block of the same file
or to a catalog entry (``sequence gegenbauer nu=2 t=2``).  Declarations end
at a newline or ``;`` and ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

from ..exact import PolyQ, Quad, RatFun, format_scalar, scalar
from ..exact.positivity import DEFAULT_MAX_SHIFT
from ..model import ModelError, catalog_get
from ..model.recurrences import LinearRecurrence
from ..sandwich.types import SELECTORS, CertificateError, PlanTerm, SandwichCertificate

METHODS = ("thm41", "thm42", "bounds", "threeterm", "decomposition", "wronskian")
DECOMPOSITIONS = ("generic", "gegenbauer", "gegenbauer_deriv", "laguerre")


class DSLError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0, snippet: str = ""):
        self.message, self.line, self.col, self.snippet = message, line, col, snippet
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(f"{where}{message}" + (f"\n  {snippet}\n  {' ' * (col - 1)}^" if snippet else ""))


@dataclass(frozen=True)
class ConditionSpec:
    """A calculus condition set as written in a file."""

    name: str
    sequence: LinearRecurrence
    method: str
    m: Optional[RatFun] = None
    M: Optional[RatFun] = None
    m_squared: Optional[RatFun] = None
    n0: Fraction = Fraction(1)
    direction: str = "increasing"
    base_lo: Optional[int] = None
    base_hi: Optional[int] = None
    decomposition: Optional[str] = None
    params: Tuple[Tuple[str, Fraction], ...] = ()
    max_shift: int = DEFAULT_MAX_SHIFT


@dataclass(frozen=True)
class ParsedFile:
    blocks: Tuple[Tuple[str, str, object], ...] = field(default_factory=tuple)

    def of_kind(self, kind: str) -> list:
        return [obj for k, _, obj in self.blocks if k == kind]

    def main(self):
        """The last certificate or condition block, else the last sequence."""
        for kind in ("certificate", "conditions", "sequence"):
            found = self.of_kind(kind)
            if found:
                return found[-1]
        raise DSLError("empty file")


# -- tokens -----------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<comment>\#[^\n]*) | (?P<nl>\n|;) |
    (?P<num>\d+) | (?P<ident>[A-Za-z_][A-Za-z0-9_]*) | (?P<string>"[^"\n]*") |
    (?P<op>\.\.|>=|[-+*/^(),={}:])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    out = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise DSLError(f"unexpected character {text[pos]!r}", line, pos - start + 1, _line(text, line))
        kind = mt.lastgroup
        if kind == "nl":
            out.append(Token("nl", mt.group(), line, pos - start + 1))
            if mt.group() == "\n":
                line, start = line + 1, mt.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, mt.group(), line, pos - start + 1))
        pos = mt.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


def _line(text: str, line: int) -> str:
    lines = text.split("\n")
    return lines[line - 1] if 0 < line <= len(lines) else ""


# -- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.sequences: Dict[str, LinearRecurrence] = {}

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        t = tok or self.tok
        return DSLError(msg, t.line, t.col, _line(self.text, t.line))

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind in ("op", "ident")

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            raise self.error(f"expected {what}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def integer(self) -> int:
        return int(self.expect_kind("num", "an integer").text)

    def skip_nl(self):
        while self.tok.kind == "nl":
            self.advance()

    def end_decl(self):
        if self.tok.kind == "nl":
            self.skip_nl()
        elif not self.at("}"):
            raise self.error(f"unexpected {self.tok.text!r} at end of declaration")

    def name(self) -> str:
        t = self.tok
        if t.kind == "ident":
            return self.advance().text
        if t.kind == "string":
            return self.advance().text[1:-1]
        raise self.error("expected a name")

    # expressions: sum := prod (('+'|'-') prod)* ; prod := unary (('*'|'/') unary)* ;
    # unary := '-' unary | power ; power := atom ('^' INT)?
    def expr(self) -> RatFun:
        v = self.prod()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            w = self.prod()
            v = v + w if op == "+" else v - w
        return v

    def prod(self) -> RatFun:
        v = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance()
            w = self.unary()
            if op.text == "/":
                if w.is_zero():
                    raise self.error("division by zero", op)
                v = v / w
            else:
                v = v * w
        return v

    def unary(self) -> RatFun:
        if self.at("-"):
            self.advance()
            return -self.unary()
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> RatFun:
        v = self.atom()
        if self.at("^"):
            self.advance()
            v = v ** self.integer()
        return v

    def atom(self) -> RatFun:
        t = self.tok
        if t.kind == "num":
            return RatFun(int(self.advance().text))
        if self.at("("):
            self.advance()
            v = self.expr()
            self.expect(")")
            return v
        if t.kind == "ident":
            if t.text == "n":
                self.advance()
                return RatFun.x()
            if t.text == "sqrt":
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                if not arg.is_constant() or not _is_int(arg):
                    raise self.error("sqrt takes a nonnegative integer constant", t)
                return RatFun(Quad.sqrt(int(_const(arg))))
            if t.text == "binom":
                self.advance()
                self.expect("(")
                top = self.expr()
                self.expect(",")
                k = self.expr()
                self.expect(")")
                if not top.is_polynomial():
                    raise self.error("binom needs a polynomial first argument", t)
                if not k.is_constant() or not _is_int(k) or _const(k) < 0:
                    raise self.error("binom needs a nonnegative integer second argument", t)
                out = RatFun(1)
                for j in range(int(_const(k))):
                    out = out * (top - j)
                return out / factorial(int(_const(k)))
            raise self.error(f"unknown identifier {t.text!r}")
        raise self.error(f"expected an expression, found {t.text or 'end of input'!r}")

    def poly(self) -> PolyQ:
        t = self.tok
        v = self.expr()
        if not v.is_polynomial():
            raise self.error("expected a polynomial in n", t)
        return v.num

    def constant(self):
        t = self.tok
        v = self.expr()
        if not v.is_constant():
            raise self.error("expected a constant", t)
        return _const(v)

    # blocks
    def parse(self) -> ParsedFile:
        blocks = []
        self.skip_nl()
        while self.tok.kind != "eof":
            kw = self.expect_kind("ident", "'sequence', 'certificate' or 'conditions'")
            if kw.text not in ("sequence", "certificate", "conditions"):
                raise self.error(f"unknown block kind {kw.text!r}", kw)
            name = self.name()
            self.skip_nl()
            self.expect("{")
            self.skip_nl()
            obj = getattr(self, f"_{kw.text}")(name, kw)
            self.expect("}")
            self.skip_nl()
            if kw.text == "sequence":
                self.sequences[name] = obj
            blocks.append((kw.text, name, obj))
        if not blocks:
            raise DSLError("empty file")
        return ParsedFile(tuple(blocks))

    def _sequence(self, name: str, kw: Token) -> LinearRecurrence:
        Q = None
        P: Dict[int, PolyQ] = {}
        init: Dict[int, object] = {}
        valid = None
        while not self.at("}"):
            t = self.tok
            if t.kind != "ident":
                raise self.error("expected a declaration")
            m = re.fullmatch(r"P(\d+)", t.text)
            if t.text == "Q" or m:
                self.advance()
                self.expect("(")
                self.expect("n")
                self.expect(")")
                self.expect("=")
                p = self.poly()
                if m:
                    P[int(m.group(1))] = p
                else:
                    Q = p
            elif t.text == "init":
                self.advance()
                while True:
                    self.expect("a")
                    self.expect("(")
                    idx = self.integer()
                    self.expect(")")
                    self.expect("=")
                    init[idx] = self.constant()
                    if not self.at(","):
                        break
                    self.advance()
            elif t.text == "valid":
                self.advance()
                self.expect("n")
                self.expect(">=")
                valid = self.integer()
            else:
                raise self.error(f"unknown declaration {t.text!r} in a sequence block")
            self.end_decl()
        if Q is None or not P or not init or valid is None:
            raise self.error(f"sequence {name!r} needs Q(n), some P<i>(n), init and valid", kw)
        d = max(P)
        rhs = tuple(P.get(d - j, PolyQ()) for j in range(d + 1))
        lo = min(init)
        if sorted(init) != list(range(lo, lo + len(init))):
            raise self.error(f"sequence {name!r}: initial terms must be consecutive", kw)
        try:
            return LinearRecurrence(name, Q, rhs, valid, tuple(init[k] for k in sorted(init)), lo)
        except ModelError as e:
            raise self.error(str(e), kw) from None

    def _params(self) -> Tuple[Tuple[str, Fraction], ...]:
        out = []
        while self.tok.kind == "ident" and self.toks[self.i + 1].text == "=":
            key = self.advance().text
            self.advance()
            out.append((key, self.constant()))
        return tuple(out)

    def _sequence_ref(self) -> Tuple[LinearRecurrence, tuple]:
        t = self.tok
        name = self.name()
        params = self._params()
        if name in self.sequences and not params:
            return self.sequences[name], params
        try:
            entry = catalog_get(name, **dict(params))
        except ModelError as e:
            raise self.error(str(e), t) from None
        if not isinstance(entry.primary, LinearRecurrence):
            raise self.error(f"{name!r} is not given by a linear recurrence", t)
        return entry.primary, params

    def _direction(self) -> str:
        t = self.expect_kind("ident", "increasing or decreasing")
        if t.text not in ("increasing", "decreasing"):
            raise self.error("direction must be increasing or decreasing", t)
        return t.text

    def _range(self, optional_lo: bool = False) -> Tuple[Optional[int], int]:
        lo = None if optional_lo and self.at("..") else self.integer()
        self.expect("..")
        return lo, self.integer()

    def _certificate(self, name: str, kw: Token) -> SandwichCertificate:
        f: dict = {"plan": [], "direction": "increasing"}
        while not self.at("}"):
            t = self.expect_kind("ident", "a declaration")
            if t.text == "sequence":
                f["sequence"] = self._sequence_ref()[0]
            elif t.text == "bound":
                self.expect("=")
                f["bound"] = self.expr()
            elif t.text == "direction":
                f["direction"] = self._direction()
            elif t.text == "base":
                f["base_lo"], f["base_hi"] = self._range()
            elif t.text in ("prefix", "audit", "max_shift"):
                f["prefix_lo" if t.text == "prefix" else t.text] = self.integer()
            elif t.text == "term":
                f["plan"].append(self._term(t))
            else:
                raise self.error(f"unknown declaration {t.text!r} in a certificate block", t)
            self.end_decl()
        for need in ("sequence", "bound", "base_lo"):
            if need not in f:
                raise self.error(f"certificate {name!r} is missing {need.split('_')[0]!r}", kw)
        f["plan"] = tuple(f["plan"]) or None
        try:
            return SandwichCertificate(name, **f)
        except CertificateError as e:
            raise self.error(str(e), kw) from None

    def _term(self, kw: Token) -> PlanTerm:
        coeff = self.expr()
        num, den, sel = [], [], {}
        while self.tok.kind == "ident":
            t = self.advance()
            if t.text == "num":
                while True:
                    j = self.integer()
                    self.expect(":")
                    num.append((j, self.constant()))
                    if not self.at(","):
                        break
                    self.advance()
            elif t.text == "den":
                den.append(self.integer())
                while self.at(","):
                    self.advance()
                    den.append(self.integer())
            elif t.text in ("lower", "upper"):
                items = [self.expect_kind("ident", "at or next")]
                while self.at(","):
                    self.advance()
                    items.append(self.expect_kind("ident", "at or next"))
                for it in items:
                    if it.text not in SELECTORS:
                        raise self.error(f"selector must be one of {SELECTORS}", it)
                sel[t.text] = tuple(it.text for it in items)
            else:
                raise self.error(f"unknown term part {t.text!r}", t)
        try:
            return PlanTerm(coeff, tuple(num), tuple(den), sel.get("lower"), sel.get("upper"))
        except CertificateError as e:
            raise self.error(str(e), kw) from None

    def _conditions(self, name: str, kw: Token) -> ConditionSpec:
        f: dict = {}
        while not self.at("}"):
            t = self.expect_kind("ident", "a declaration")
            if t.text == "sequence":
                f["sequence"], params = self._sequence_ref()
                f.setdefault("params", params)
            elif t.text == "method":
                m = self.expect_kind("ident", "a method name")
                if m.text not in METHODS:
                    raise self.error(f"method must be one of {METHODS}", m)
                f["method"] = m.text
                if m.text == "decomposition":
                    d = self.expect_kind("ident", "a decomposition family")
                    if d.text not in DECOMPOSITIONS:
                        raise self.error(f"decomposition must be one of {DECOMPOSITIONS}", d)
                    f["decomposition"] = d.text
                    f["params"] = self._params()
            elif t.text in ("m", "M"):
                self.expect("=")
                if t.text == "m" and self.at("sqrt") and self._radical_ahead():
                    self.advance()
                    self.expect("(")
                    f["m_squared"] = self.expr()
                    self.expect(")")
                else:
                    f[t.text] = self.expr()
            elif t.text == "n0":
                self.expect("=")
                f["n0"] = Fraction(self.constant())
            elif t.text == "direction":
                f["direction"] = self._direction()
            elif t.text == "base":
                f["base_lo"], f["base_hi"] = self._range(optional_lo=True)
            elif t.text == "max_shift":
                f["max_shift"] = self.integer()
            else:
                raise self.error(f"unknown declaration {t.text!r} in a conditions block", t)
            self.end_decl()
        for need in ("sequence", "method"):
            if need not in f:
                raise self.error(f"conditions {name!r} are missing {need!r}", kw)
        if ("m" in f) == ("m_squared" in f):
            raise self.error(f"conditions {name!r} need exactly one lower bound m", kw)
        if f["method"] != "decomposition":
            f["params"] = ()
        return ConditionSpec(name, **f)

    def _radical_ahead(self) -> bool:
        """True when sqrt(...) encloses an expression in n (a radical bound)."""
        depth, j = 0, self.i + 1
        while j < len(self.toks):
            t = self.toks[j]
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                depth -= 1
                if depth == 0:
                    return False
            elif t.text == "n" and t.kind == "ident":
                return True
            elif t.kind in ("nl", "eof"):
                return False
            j += 1
        return False


def _const(r: RatFun):
    return scalar(r.num.coeff(0) / r.den.coeff(0))


def _is_int(r: RatFun) -> bool:
    v = _const(r)
    return isinstance(v, Fraction) and v.denominator == 1 and v >= 0


def parse_dsl(text: str) -> ParsedFile:
    return _Parser(text).parse()


def parse_file(path) -> ParsedFile:
    with open(path, encoding="utf-8") as fh:
        return parse_dsl(fh.read())


# -- printing ---------------------------------------------------------------

def _coef(c) -> str:
    c = scalar(c)
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"
    return f"({format_scalar(c)})"


def poly_dsl(p: PolyQ) -> str:
    if p.is_zero():
        return "0"
    out = ""
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        neg = isinstance(c, Fraction) and c < 0
        if neg:
            c = -c
        mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
        body = mono if mono and c == 1 else _coef(c) + (f"*{mono}" if mono else "")
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def ratfun_dsl(r: RatFun) -> str:
    if r.is_polynomial():
        return poly_dsl(r.num)
    return f"({poly_dsl(r.num)})/({poly_dsl(r.den)})"


def _name(s: str) -> str:
    return s if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", s) else f'"{s}"'


def _sequence_text(rec: LinearRecurrence) -> str:
    d = rec.degree_d
    lines = [f"sequence {_name(rec.name)} {{", f"  Q(n) = {poly_dsl(rec.lhs)}"]
    for j, p in enumerate(rec.rhs):
        if j == 0 or not p.is_zero():
            lines.append(f"  P{d - j}(n) = {poly_dsl(p)}")
    inits = ", ".join(f"a({rec.offset + i}) = {_coef(v)}" for i, v in enumerate(rec.initial_terms))
    lines += [f"  init {inits}", f"  valid n >= {rec.valid_from}", "}"]
    return "\n".join(lines)


def _term_text(t: PlanTerm) -> str:
    out = f"  term {ratfun_dsl(t.coeff)}"
    if t.num:
        out += " num " + ", ".join(f"{j}:{_coef(th)}" for j, th in t.num)
    if t.den:
        out += " den " + ", ".join(str(k) for k in t.den)
    if t.lower is not None:
        out += " lower " + ", ".join(t.lower)
    if t.upper is not None:
        out += " upper " + ", ".join(t.upper)
    return out


def print_dsl(obj) -> str:
    """Source text that parses back to ``obj``."""
    if isinstance(obj, LinearRecurrence):
        return _sequence_text(obj) + "\n"
    if isinstance(obj, SandwichCertificate):
        lines = [_sequence_text(obj.sequence), "", f"certificate {_name(obj.name)} {{",
                 f"  sequence {_name(obj.sequence.name)}",
                 f"  bound = {ratfun_dsl(obj.bound)}",
                 f"  direction {obj.direction}",
                 f"  base {obj.base_lo}..{obj.base_hi}"]
        if obj.prefix_lo is not None:
            lines.append(f"  prefix {obj.prefix_lo}")
        if obj.audit != 64:
            lines.append(f"  audit {obj.audit}")
        if obj.max_shift != DEFAULT_MAX_SHIFT:
            lines.append(f"  max_shift {obj.max_shift}")
        lines += [_term_text(t) for t in obj.plan or ()]
        return "\n".join(lines + ["}"]) + "\n"
    if isinstance(obj, ConditionSpec):
        method = obj.method
        if obj.decomposition:
            method += f" {obj.decomposition}" + "".join(f" {k}={_coef(v)}" for k, v in obj.params)
        lines = [_sequence_text(obj.sequence), "", f"conditions {_name(obj.name)} {{",
                 f"  sequence {_name(obj.sequence.name)}", f"  method {method}"]
        if obj.m is not None:
            lines.append(f"  m = {ratfun_dsl(obj.m)}")
        if obj.m_squared is not None:
            lines.append(f"  m = sqrt({ratfun_dsl(obj.m_squared)})")
        if obj.M is not None:
            lines.append(f"  M = {ratfun_dsl(obj.M)}")
        lines += [f"  n0 = {_coef(obj.n0)}", f"  direction {obj.direction}"]
        if obj.base_hi is not None:
            lo = obj.base_lo if obj.base_lo is not None else ""
            lines.append(f"  base {lo}..{obj.base_hi}")
        if obj.max_shift != DEFAULT_MAX_SHIFT:
            lines.append(f"  max_shift {obj.max_shift}")
        return "\n".join(lines + ["}"]) + "\n"
    raise TypeError(f"cannot print {type(obj).__name__}")
