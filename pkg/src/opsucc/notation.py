"""Infix notation for relations: parsing transcribed formulas and printing trees.

Variables ``x, y, z, u`` stand for leaves ``1, 2, 3, 4``.  An operation glyph
is bound to a list of ``(coeff, generator, swapped)`` triples, so derived
products such as ``x⋆y = x≺y + x≻y`` or ``x∘y = x·y + y·x`` are plain table
entries.  Brackets ``[a,b]`` and ``{a,b}`` are looked up under ``"[]"`` and
``"{}"``; juxtaposition ``(xy)z`` under ``""``.

>>> table = {"": [(1, "mu", False)]}
>>> r = parse_relation("(xy)z - x(yz)", table)
>>> r.coeff(("mu", ("mu", 1, 2), 3)), r.coeff(("mu", 1, ("mu", 2, 3)))
(Fraction(1, 1), Fraction(-1, 1))
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import FormalSum, format_rational
from .trees import S2Action, Tree, basis_key, canonicalize_sum, leaf_set

VARIABLES = {"x": 1, "y": 2, "z": 3, "u": 4, "v": 5, "w": 6}
VARIABLE_NAMES = {v: k for k, v in VARIABLES.items()}

GlyphTable = Mapping[str, Sequence[tuple[int | Fraction, str, bool]]]

OPERATOR_GLYPHS = "≺≻·⋆∘⊙↖↙↗↘↑↓∗⋄◁▷<>*"
_MINUS = "−–"


class NotationError(ValueError):
    pass


def _tokens(text: str, table: GlyphTable) -> list[str]:
    ops = sorted((k for k in table if k and k not in ("[]", "{}")), key=len, reverse=True)
    toks, i = [], 0
    s = text
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _MINUS:
            toks.append("-")
            i += 1
            continue
        m = re.match(r"\d+(/\d+)?", s[i:])
        if m:
            toks.append(m.group(0))
            i += len(m.group(0))
            continue
        op = next((o for o in ops if s.startswith(o, i)), None)
        if op is not None:
            toks.append("op:" + op)
            i += len(op)
            continue
        if ch in "()[]{},+-=" or ch in VARIABLES:
            toks.append(ch)
            i += 1
            continue
        raise NotationError(f"unexpected character {ch!r} in {text!r}")
    return toks


class _Parser:
    def __init__(self, toks: list[str], table: GlyphTable, text: str):
        self.toks, self.pos, self.table, self.text = toks, 0, table, text

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise NotationError(f"expected {expected or 'more input'} in {self.text!r}")
        self.pos += 1
        return tok

    def expr(self) -> FormalSum:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        acc = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            acc = acc + self.term().scale(sign)
        return acc

    def term(self) -> FormalSum:
        coeff = Fraction(1)
        tok = self.peek()
        if tok is not None and tok[0].isdigit():
            coeff = Fraction(self.take())
        return self.product().scale(coeff)

    def _starts_atom(self, tok) -> bool:
        return tok is not None and (tok in VARIABLES or tok in "([{")

    def product(self) -> FormalSum:
        left = self.atom()
        tok = self.peek()
        if tok is not None and tok.startswith("op:"):
            self.take()
            right = self.atom()
            out = self.apply(tok[3:], left, right)
        elif "" in self.table and self._starts_atom(tok):
            right = self.atom()
            out = self.apply("", left, right)
        else:
            return left
        nxt = self.peek()
        if nxt is not None and (nxt.startswith("op:") or ("" in self.table and self._starts_atom(nxt))):
            raise NotationError(f"ambiguous chained product in {self.text!r}; add parentheses")
        return out

    def atom(self) -> FormalSum:
        tok = self.take()
        if tok in VARIABLES:
            return FormalSum.term(VARIABLES[tok])
        if tok == "(":
            e = self.expr()
            self.take(")")
            return e
        if tok in "[{":
            close = "]" if tok == "[" else "}"
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take(close)
            return self.apply(tok + close, a, b)
        raise NotationError(f"unexpected token {tok!r} in {self.text!r}")

    def apply(self, op: str, a: FormalSum, b: FormalSum) -> FormalSum:
        if op not in self.table:
            raise NotationError(f"operation {op!r} has no meaning in this notation")
        acc: dict = {}
        for c, gen, swapped in self.table[op]:
            for s, cs in a.items():
                for t, ct in b.items():
                    key = (gen, t, s) if swapped else (gen, s, t)
                    acc[key] = acc.get(key, 0) + Fraction(c) * cs * ct
        return FormalSum(acc)


def parse_expression(text: str, table: GlyphTable) -> FormalSum:
    """Parse one side (or an ``lhs = rhs`` equation, read as ``lhs - rhs``) into raw trees."""
    parts = [p for p in re.split("=", text)]
    if len(parts) > 2:
        raise NotationError(f"more than one '=' in {text!r}")
    sides = []
    for part in parts:
        toks = _tokens(part, table)
        if toks == ["0"]:
            sides.append(FormalSum.zero())
            continue
        p = _Parser(toks, table, text)
        e = p.expr()
        if p.peek() is not None:
            raise NotationError(f"trailing input {p.peek()!r} in {text!r}")
        sides.append(e)
    return sides[0] if len(sides) == 1 else sides[0] - sides[1]


def parse_relation(text: str, table: GlyphTable, action: S2Action | None = None) -> FormalSum:
    """Parse and canonicalize; ``action=None`` keeps planar (nonsymmetric) trees."""
    raw = parse_expression(text, table)
    if not raw:
        raise NotationError(f"relation {text!r} is zero")
    if action is None:
        from .trees import leaves
        for t in raw.keys():
            ls = leaves(t)
            if ls != sorted(ls):
                raise NotationError(f"nonsymmetric relation {text!r} permutes variables")
    out = canonicalize_sum(raw, action)
    if not out:
        raise NotationError(f"relation {text!r} vanishes in the free operad")
    sets = {leaf_set(t) for t in out.keys()}
    if len(sets) != 1:
        raise NotationError(f"relation {text!r} is not homogeneous")
    return out


# printing -----------------------------------------------------------------

ENNEA = {"<<": "↖", "<>": "↙", "<.": "≺", "><": "↗", ">>": "↘", ">.": "≻",
         ".<": "↑", ".>": "↓", "..": "∘"}
SINGLE = {"<": "≺", ">": "≻", ".": "·"}


def default_glyph(gen: str, single_base: bool) -> str:
    base = gen.rstrip("<>.")
    decs = gen[len(base):]
    if not decs:
        return f" {gen} "
    if len(decs) == 1:
        g = SINGLE[decs]
    elif len(decs) == 2:
        g = ENNEA[decs]
    else:
        g = "(" + "".join(SINGLE[d] for d in decs) + ")"
    return g if single_base else f"{g}{base}"


def glyph_map(generators: Sequence[str], glyphs: Mapping[str, str] | None = None) -> dict[str, str]:
    bases = {g.rstrip("<>.") for g in generators}
    out = {g: default_glyph(g, len(bases) == 1) for g in generators}
    if glyphs:
        out.update(glyphs)
    return out


def format_tree(t: Tree, glyphs: Mapping[str, str], top: bool = True) -> str:
    if isinstance(t, int):
        return VARIABLE_NAMES.get(t, f"x{t}")
    if len(t) == 2:
        return f"P({format_tree(t[1], glyphs, True)})"
    g = glyphs.get(t[0], f" {t[0]} ")
    body = f"{format_tree(t[1], glyphs, False)}{g}{format_tree(t[2], glyphs, False)}"
    return body if top else f"({body})"


def format_sum(s: FormalSum, glyphs: Mapping[str, str]) -> str:
    if not s:
        return "0"
    parts = []
    for t, c in sorted(s.items(), key=lambda kv: basis_key(kv[0])):
        mag = abs(c)
        coeff = "" if mag == 1 else f"{format_rational(mag)}*"
        sign = "-" if c < 0 else "+"
        parts.append((sign, coeff + format_tree(t, glyphs)))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
