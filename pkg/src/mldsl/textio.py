"""Model files, polynomial parsing, and deterministic rendering.

Polynomial grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*       # '/' only by a nonzero constant
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NAME | '(' expr ')'

Model file::

    format: 1            # optional
    states: 4
    field: fp:2147483647 # optional, q or fp:<prime>
    label: my model      # optional
    eq: p0^3 - p0*p1^2 ...
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .polyring import QQ, Block, FieldError, GrevLex, MonomialOrder, PolyRing, Polynomial, field_from_spec

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(src: str, line: int, col0: int):
    toks = []
    pos = 0
    src = src.split("#", 1)[0]
    n = len(src)
    while pos < n:
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col0 + pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), col0 + start))
        pos = m.end()
    toks.append(("end", "", col0 + n))
    return toks


class _Parser:
    def __init__(self, src: str, ring: PolyRing, line: int, col0: int):
        self.ring = ring
        self.toks = _tokenize(src, line, col0)
        self.i = 0
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        f = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return f

    def expr(self):
        f = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()
            g = self.unary()
            if op[1] == "*":
                f = f * g
            else:
                if not g.is_constant() or not g:
                    self.error("division only by a nonzero constant", op)
                c = g.coefficient((0,) * self.ring.nvars)
                try:
                    f = f.scale(self.ring.field.inv(c))
                except ZeroDivisionError:
                    self.error("division by zero in the coefficient field", op)
        return f

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in ("-", "+"):
            self.take()
            f = self.unary()
            return -f if t[1] == "-" else f
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "num":
                self.error("exponent must be a nonnegative integer literal", t)
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.error("chained exponents are ambiguous; use parentheses")
            k = int(t[1])
            if k > 10000:
                self.error("exponent too large", t)
            return base**k
        return base

    def atom(self):
        t = self.take()
        kind, val, _ = t
        if kind == "num":
            return self.ring.constant(int(val))
        if kind == "name":
            if val not in self.ring:
                self.error(f"unknown variable {val!r}", t)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            f = self.expr()
            if self.take()[1] != ")":
                self.i -= 1
                self.error("expected ')'")
            return f
        self.error(f"unexpected {val!r}" if val else "unexpected end of input", t)


def parse_polynomial(src: str, ring: PolyRing, *, line: int = 1, col: int = 1) -> Polynomial:
    """Parse ``src`` into a canonical polynomial of ``ring``."""
    try:
        return _Parser(src, ring, line, col).parse()
    except RecursionError:
        raise ParseError("expression nested too deeply", line, col) from None
    except ZeroDivisionError:
        raise ParseError("coefficient not invertible in the field", line, col) from None


# rendering -------------------------------------------------------------


def _coeff_text(c, field) -> str:
    if field.modulus:
        return str(field.signed(c))
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _monomial_text(e, names) -> str:
    parts = []
    for x, v in zip(e, names):
        if x == 1:
            parts.append(v)
        elif x:
            parts.append(f"{v}^{x}")
    return "*".join(parts)


def render_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Exact text form; ``parse_polynomial`` inverts it."""
    if not f:
        return "0"
    names = f.ring.variables
    out = []
    for c, e in f.terms(order):
        ctext = _coeff_text(c, f.ring.field)
        neg = ctext.startswith("-")
        mag = ctext[1:] if neg else ctext
        mono = _monomial_text(e, names)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def display_form(f: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """Scalar multiple of ``f`` used for display.

    Over Q: integer coefficients, content 1, positive leading coefficient.
    Over GF(p): the monic multiple, rescaled to small integers when every
    coefficient has a small rational preimage."""
    if not f:
        return f
    field = f.ring.field
    if not field.modulus:
        return f.primitive(order)
    g = f.monic(order)
    fracs = [field.reconstruct(c) for _, c in g.items()]
    if any(q is None for q in fracs):
        return g
    from math import gcd

    den = 1
    for q in fracs:
        den = den * q.denominator // gcd(den, q.denominator)
    nums = [int(q * den) for q in fracs]
    content = 0
    for v in nums:
        content = gcd(content, v)
    scale = Fraction(den, content)
    return g.scale(scale)


def _term_key(f: Polynomial, order: MonomialOrder):
    return tuple((order.key(e), _coeff_text(c, f.ring.field)) for c, e in f.terms(order))


def canonical_generators(gens: Iterable[Polynomial], order: MonomialOrder | None = None) -> list[Polynomial]:
    gens = list(gens)
    if not gens:
        return []
    order = order or GrevLex()
    shown = [display_form(g, order) for g in gens if g]
    uniq = {g: None for g in shown}
    # ascending degree; larger leading terms first within a degree
    desc = sorted(uniq, key=lambda g: _term_key(g, order), reverse=True)
    return sorted(desc, key=lambda g: g.total_degree())


def ring_to_json(ring: PolyRing) -> dict:
    return {
        "vars": list(ring.variables),
        "blocks": [{"role": b.role, "vars": list(b.variables)} for b in ring.blocks],
        "field": ring.field.spec,
    }


def ring_from_json(obj: dict) -> PolyRing:
    try:
        names = [str(v) for v in obj["vars"]]
        field = field_from_spec(str(obj.get("field", "q")))
        blocks = obj.get("blocks")
        if blocks is not None:
            blocks = [Block(str(b["role"]), tuple(str(v) for v in b["vars"])) for b in blocks]
        return PolyRing(names, field, blocks)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed ring description: {exc}") from None


@dataclass(frozen=True)
class RenderOptions:
    format: str = "text"
    order: MonomialOrder = GrevLex()

    def __post_init__(self):
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown render format {self.format!r}")


def render_ideal(ideal, opts: RenderOptions = RenderOptions()) -> str:
    """Deterministic text (one generator per line) or JSON rendering."""
    gens = canonical_generators(ideal.generators, opts.order)
    strs = [render_polynomial(g, opts.order) for g in gens]
    if opts.format == "json":
        return json.dumps({"format": FORMAT_VERSION, "ring": ring_to_json(ideal.ring), "generators": strs},
                          indent=2)
    return "\n".join(strs)


def parse_ideal_json(text: str | bytes):
    """Read the JSON ideal schema ``{ring: {vars, blocks, field}, generators: [...]}``."""
    from .groebner import Ideal

    try:
        obj = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "ring" not in obj or "generators" not in obj:
        raise ParseError("ideal JSON needs 'ring' and 'generators'")
    if obj.get("format", FORMAT_VERSION) != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {obj.get('format')!r}")
    try:
        ring = ring_from_json(obj["ring"])
    except (ValueError, FieldError) as exc:
        raise ParseError(str(exc)) from None
    gens = [parse_polynomial(str(s), ring) for s in obj["generators"]]
    return Ideal(ring, gens)


# model files ------------------------------------------------------------

_DIRECTIVE = re.compile(r"^\s*([A-Za-z_]+)\s*:(.*)$")


def parse_model(text: str | bytes, default_field=None):
    """Parse a model file into a :class:`~mldsl.mlpipeline.ModelSpec`."""
    from .mlpipeline.model import ModelError, ModelSpec, primal_ring

    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"model file is not UTF-8: {exc}") from None
    seen: dict[str, tuple[str, int, int]] = {}
    eqs: list[tuple[str, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = _DIRECTIVE.match(body)
        if not m:
            raise ParseError("expected 'name: value'", lineno, 1)
        key = m.group(1).lower()
        val = m.group(2)
        col = m.start(2) + 1
        if key == "eq":
            eqs.append((val, lineno, col))
        elif key in ("states", "field", "label", "format"):
            if key in seen:
                raise ParseError(f"duplicate directive {key!r}", lineno, 1)
            seen[key] = (val.strip(), lineno, col)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, 1)
    if "format" in seen:
        val, ln, col = seen["format"]
        if val != str(FORMAT_VERSION):
            raise ParseError(f"unsupported format {val!r}", ln, col)
    if "states" not in seen:
        raise ParseError("missing 'states' line", 1, 1)
    val, ln, col = seen["states"]
    if not re.fullmatch(r"\d+", val):
        raise ParseError("states must be a positive integer", ln, col)
    m_states = int(val)
    if m_states < 2:
        raise ParseError("states must be at least 2", ln, col)
    field = default_field if default_field is not None else None
    if "field" in seen:
        val, ln, col = seen["field"]
        try:
            file_field = field_from_spec(val)
        except FieldError as exc:
            raise ParseError(str(exc), ln, col) from None
        if field is None:
            field = file_field
    if field is None:
        from .polyring import GF

        field = GF()
    label = seen["label"][0] if "label" in seen else "model"
    ring = primal_ring(m_states, field)
    polys = []
    for src, ln, col in eqs:
        f = parse_polynomial(src, ring, line=ln, col=col)
        if not f.is_homogeneous():
            raise ParseError("equation is not homogeneous", ln, col)
        polys.append(f)
    try:
        return ModelSpec(m_states, tuple(polys), field, label)
    except ModelError as exc:
        raise ParseError(str(exc), ln, col) from None


def render_model(spec) -> str:
    lines = [f"format: {FORMAT_VERSION}", f"states: {spec.states}", f"field: {spec.field.spec}",
             f"label: {spec.label}"]
    for f in spec.model_polys:
        lines.append(f"eq: {render_polynomial(display_form(f))}")
    return "\n".join(lines) + "\n"


__all__ = [
    "ParseError", "RenderOptions", "QQ", "canonical_generators", "display_form", "parse_ideal_json",
    "parse_model", "parse_polynomial", "render_ideal", "render_model", "render_polynomial",
    "ring_from_json", "ring_to_json",
]
