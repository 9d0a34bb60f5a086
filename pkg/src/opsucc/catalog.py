"""Built-in presentations.

Base operads and their known successors are transcribed in infix notation
(see :mod:`opsucc.notation`).  Composite names are resolved on demand:
``Su(X)``, ``TSu(X)``, ``Su^2(X)``, ``TSu^3(X)`` and ``Reg(X)`` build the
corresponding presentation from ``X``.

``maps`` on an entry go from that entry to the named presentation, e.g.
``catalog("Zinbiel").maps["Su(Comm)"]`` identifies generators of Zinbiel
with those of the computed bisuccessor of Comm.
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import Callable

from .linalg import FormalSum
from .notation import NotationError, parse_relation
from .presentation import (GeneratorMap, Presentation, PresentationError, prime,
                           regularize, require_valid)
from .trees import S2Action


class UnknownPresentation(PresentationError, KeyError):
    def __str__(self) -> str:
        return self.args[0]


def op(gen: str, coeff: int = 1) -> list:
    return [(coeff, gen, False)]


def opp(gen: str, coeff: int = 1) -> list:
    """``x ? y := gen(y, x)``."""
    return [(coeff, gen, True)]


def _entry(name, gens, action, table, relations, symmetric=True, maps=None, glyphs=None):
    act = action if symmetric else None
    rels, flagged = [], {}
    for i, text in enumerate(relations, 1):
        try:
            rels.append(parse_relation(text, table, act))
        except NotationError as exc:
            # kept out of the presentation and reported, never repaired
            flagged[i] = str(exc)
    p = Presentation(name, symmetric, tuple(gens), act, tuple(rels),
                     maps={k: GeneratorMap(v) for k, v in (maps or {}).items()},
                     glyphs=glyphs or {}, flagged=flagged)
    require_valid(p)
    return p


def _asym(*gens: str) -> tuple[list[str], S2Action]:
    """Generators without symmetry, each paired with its primed image."""
    out = []
    for g in gens:
        out.extend([g, prime(g)])
    return out, S2Action.swap((g, prime(g)) for g in gens)


def _neg(g: str) -> FormalSum:
    return FormalSum.term(g, -1)


# base operads -------------------------------------------------------------

def _comm():
    return _entry("Comm", ["mu"], S2Action.signs({"mu": 1}), {"": op("mu")},
                  ["(xy)z - (yz)x"], glyphs={"mu": ""})


def _ass():
    return _entry("Ass", ["mu"], None, {"": op("mu")}, ["(xy)z - x(yz)"],
                  symmetric=False, glyphs={"mu": ""})


def _lie():
    return _entry("Lie", ["mu"], S2Action.signs({"mu": -1}),
                  {"": op("mu"), "[]": op("mu")}, ["[[x,y],z] + [[z,x],y] + [[y,z],x]"],
                  glyphs={"mu": ""})


def _poisson():
    return _entry("Poisson", ["br", "circ"], S2Action.signs({"br": -1, "circ": 1}),
                  {"{}": op("br"), "∘": op("circ")},
                  ["{{x,y},z} + {{z,x},y} + {{y,z},x}",
                   "(x∘y)∘z = x∘(y∘z)",
                   "{x,y∘z} = {x,y}∘z + y∘{x,z}"],
                  glyphs={"br": "{}", "circ": "∘"})


def _jordan():
    return _entry("Jordan", ["mu"], S2Action.signs({"mu": 1}), {"∘": op("mu")},
                  ["((x∘y)∘u)∘z + ((y∘z)∘u)∘x + ((z∘x)∘u)∘y"
                   " = (x∘y)∘(u∘z) + (y∘z)∘(u∘x) + (z∘x)∘(u∘y)"],
                  glyphs={"mu": "∘"})


def _alter():
    gens, act = _asym("circ")
    return _entry("Alter", gens, act, {"∘": op("circ")},
                  ["(x∘y)∘z + (y∘x)∘z = x∘(y∘z) + y∘(x∘z)",
                   "(x∘y)∘z + (x∘z)∘y = x∘(y∘z) + x∘(z∘y)"],
                  glyphs={"circ": "∘", "circ'": "∘'"})


def _leibniz():
    gens, act = _asym("br")
    return _entry("Leibniz", gens, act, {"[]": op("br")},
                  ["[[x,y],z] = [[x,z],y] + [x,[y,z]]"])


def _prelie_r():
    gens, act = _asym("dot")
    return _entry("PreLie_R", gens, act, {"·": op("dot")},
                  ["(x·y)·z - x·(y·z) = (x·z)·y - x·(z·y)"],
                  maps={"Su(Lie)": {"dot": "mu<", "dot'": _neg("mu>")}},
                  glyphs={"dot": "·", "dot'": "·'"})


def _prelie_l():
    gens, act = _asym("dot")
    return _entry("PreLie_L", gens, act, {"·": op("dot")},
                  ["(x·y)·z - x·(y·z) = (y·x)·z - y·(x·z)"],
                  glyphs={"dot": "·", "dot'": "·'"})


# bisuccessors -------------------------------------------------------------

def _dend():
    table = {"≺": op("prec"), "≻": op("succ"), "⋆": op("prec") + op("succ")}
    return _entry("Dend", ["prec", "succ"], None, table,
                  ["(x≺y)≺z = x≺(y⋆z)", "(x≻y)≺z = x≻(y≺z)", "(x⋆y)≻z = x≻(y≻z)"],
                  symmetric=False, maps={"Su(Ass)": {"prec": "mu<", "succ": "mu>"}},
                  glyphs={"prec": "≺", "succ": "≻"})


def _zinbiel():
    gens, act = _asym("dot")
    return _entry("Zinbiel", gens, act, {"·": op("dot")},
                  ["(x·y + y·x)·z = x·(y·z)"],
                  maps={"Su(Comm)": {"dot": "mu>", "dot'": "mu<"}},
                  glyphs={"dot": "·", "dot'": "·'"})


def _prepoisson():
    gens, act = _asym("star", "dot")
    table = {"∗": op("star"), "·": op("dot")}
    return _entry("PrePoisson", gens, act, table,
                  ["(x∗y + y∗x)∗z = x∗(y∗z)",
                   "(x·y)·z - x·(y·z) = (y·x)·z - y·(x·z)",
                   "(x·y - y·x)∗z = x·(y∗z) - y∗(x·z)",
                   "(x∗y + y∗x)·z = x∗(y·z) + y∗(x·z)"],
                  maps={"Su(Poisson)": {"star": "circ>", "star'": "circ<",
                                        "dot": "br>", "dot'": _neg("br<")}},
                  glyphs={"star": "∗", "star'": "∗'", "dot": "·", "dot'": "·'"})


def _prejordan():
    gens, act = _asym("dot")
    table = {"·": op("dot"), "⊙": op("dot") + opp("dot")}
    rhs = "z·((x⊙y)·u) + x·((y⊙z)·u) + y·((z⊙x)·u)"
    return _entry("PreJordan", gens, act, table,
                  [f"(x⊙y)·(z·u) + (y⊙z)·(x·u) + (z⊙x)·(y·u) = {rhs}",
                   f"x·(y·(z·u)) + z·(y·(x·u)) + ((x⊙z)⊙y)·u = {rhs}"],
                  maps={"Su(Jordan)": {"dot": "mu>", "dot'": "mu<"}},
                  glyphs={"dot": "·", "dot'": "·'"})


def _su2jordan():
    gens, act = _asym("prec", "succ")
    dot = op("prec") + op("succ")
    table = {"≺": op("prec"), "≻": op("succ"), "·": dot,
             "∘": dot + [(1, "prec", True), (1, "succ", True)]}
    rels = [
        "(x≺y+y≻x)≺(z·u) + (y∘z)≻(x≺u) + (z≻x+x≺z)≺(y·u)"
        " = z≻((x≺y+y≻x)≺u) + x≺((y∘z)·u) + y≻((z≻x+x≺z)≺u)",
        "(x∘y)≻(z≻u) + (y∘z)≻(x≻u) + (z∘x)≻(y≻u)"
        " = z≻((x∘y)≻u) + x≻((y∘z)≻u) + y≻((z∘x)≻u)",
        "x≺(y·(z·u)) + z≻(y≻(x≺u)) + ((x≺z+z≻x)≺y + y≻(x≺z+z≻x))≺u"
        " = z≻((x≺y+y≻x)≺u) + x≺((y∘z)·u) + y≻((z≻x+x≺z)≺u)",
        "x≻(y≺(z·u)) + z≻(y≺(x·u)) + ((x∘z)≻y + y≺(x∘z))≺u"
        " = z≻((x≻y+y≺x)≺u) + x≻((y≺z+z≻y)≺u) + y≺((z∘x)·u)",
        "x≻(y≻(z≺u)) + z≺(y·(x·u)) + ((x≻z+z≺x)≺y + y≻(x≻z+z≺x))≺u"
        " = z≺((x∘y)·u) + x≻((y≻z+z≺y)≺u) + y≻((z≺x+x≻z)≺u)",
        "x≻(y≻(z≻u)) + z≻(y≻(x≻u)) + ((x∘z)∘y)≻u"
        " = z≻((x∘y)≻u) + x≻((y∘z)≻u) + y≻((z∘x)≻u)",
    ]
    return _entry("Su2Jordan", gens, act, table, rels,
                  maps={"Su(Su(Jordan))": {"prec": "mu><", "prec'": "mu<>",
                                           "succ": "mu>>", "succ'": "mu<<"}},
                  glyphs={"prec": "≺", "succ": "≻", "prec'": "≺'", "succ'": "≻'"})


def _ldend():
    gens, act = _asym("prec", "succ")
    table = {"≺": op("prec"), "≻": op("succ"), "·": op("prec") + op("succ")}
    return _entry("LDend", gens, act, table,
                  ["(x≺y)≺z + y≻(x≺z) = x≺(y·z) + (y≻x)≺z",
                   "(x·y)≻z + y≻(x≻z) = x≻(y≻z) + (y·x)≻z"],
                  maps={"Su(PreLie_L)": {"prec": "dot<", "prec'": "dot'>",
                                         "succ": "dot>", "succ'": "dot'<"}},
                  glyphs={"prec": "≺", "succ": "≻", "prec'": "≺'", "succ'": "≻'"})


def _lquad():
    gens, act = _asym("nw", "sw", "ne", "se")
    table = {"↖": op("nw"), "↙": op("sw"), "↗": op("ne"), "↘": op("se")}
    rels = [
        "x↘(y↖z) - (x↘y)↖z - y↖(x↗z + x↖z + x↙z + x↘z) + (y↖x)↖z",
        "x↘(y↗z) - (x↘y + x↙y)↗z - y↗(x↘z + x↗z) + (y↗x + y↖x)↗z",
        "x↘(y↙z) - (x↘y + x↗y)↙z - y↙(x↘z + x↙z) + (y↙x + y↖x)↙z",
        "x↗(y↙z + y↖z) - (x↗y)↖z - y↙(x↗z + x↖z) + (y↙x)↖z",
        "x↘(y↘z) - (x↗y + x↖y + x↙y + x↘y)↘z - y↘(x↘z) + (y↗x + y↖x + y↙x + y↘x)↘z",
    ]
    return _entry("LQuad", gens, act, table, rels,
                  maps={"Su(LDend)": {"nw": "prec<", "nw'": "prec'>",
                                      "ne": "prec>", "ne'": "prec'<",
                                      "sw": "succ<", "sw'": "succ'>",
                                      "se": "succ>", "se'": "succ'<"}},
                  glyphs={"nw": "↖", "sw": "↙", "ne": "↗", "se": "↘",
                          "nw'": "↖'", "sw'": "↙'", "ne'": "↗'", "se'": "↘'"})


def _prealter():
    gens, act = _asym("prec", "succ")
    table = {"≺": op("prec"), "≻": op("succ"), "∘": op("prec") + op("succ")}
    return _entry("PreAlter", gens, act, table,
                  ["(x∘y + y∘x)≻z = x≻(y≻z) + y≻(x≻z)",
                   "(x≻z)≺y + (z≺x)≺y = x≻(z≺y) + z≺(x∘y)",
                   "(y∘x)≻z + (y≻z)≺x = y≻(x≻z) + y≻(z≺x)",
                   "(z≺x)≺y + (z≺y)≺x = z≺(x∘y + y∘x)"],
                  maps={"Su(Alter)": {"prec": "circ<", "prec'": "circ'>",
                                      "succ": "circ>", "succ'": "circ'<"}},
                  glyphs={"prec": "≺", "succ": "≻", "prec'": "≺'", "succ'": "≻'"})


def _suleibniz():
    gens, act = _asym("prec", "succ")
    table = {"≺": op("prec"), "≻": op("succ")}
    return _entry("SuLeibniz", gens, act, table,
                  ["(x≺y)≺z = (x≺z)≺y + x≺(y≻z + y≺z)",
                   "(x≻y)≺z = (x≻z + x≺z)≻y + x≻(y≺z)",
                   "(x≻y + x≺y)≻z = (x≻z)≺y + x≻(y≻z)"],
                  maps={"Su(Leibniz)": {"prec": "br<", "prec'": "br'>",
                                        "succ": "br>", "succ'": "br'<"}},
                  glyphs={"prec": "≺", "succ": "≻", "prec'": "≺'", "succ'": "≻'"})


# trisuccessors ------------------------------------------------------------

def _tri_table(star_terms: list) -> dict:
    return {"≺": op("prec"), "≻": op("succ"), "·": op("dot"), "⋆": star_terms}


_STAR3 = op("prec") + op("succ") + op("dot")


def _comtridend():
    gens, act = _asym("prec")
    gens.append("dot")
    act = S2Action({**dict(act.items()), "dot": FormalSum.term("dot")})
    table = {"≺": op("prec"), "·": op("dot")}
    return _entry("ComTriDend", gens, act, table,
                  ["(x≺y)≺z = x≺(y≺z + z≺y + y·z)",
                   "(x·y)≺z = x·(y≺z)",
                   "(x·y)·z = x·(y·z)"],
                  maps={"TSu(Comm)": {"prec": "mu<", "prec'": "mu>", "dot": "mu."}},
                  glyphs={"prec": "≺", "prec'": "≺'", "dot": "·"})


def _postlie():
    gens, act = _asym("circ")
    gens.append("br")
    act = S2Action({**dict(act.items()), "br": FormalSum.term("br", -1)})
    table = {"∘": op("circ"), "[]": op("br")}
    return _entry("PostLie", gens, act, table,
                  ["0 = [[x,y],z] + [[z,x],y] + [[y,z],x]",
                   "0 = (x∘y)∘z - x∘(y∘z) - (x∘z)∘y + x∘(z∘y) - x∘[y,z]",
                   "0 = [x,y]∘z - [x∘z,y] - [x,y∘z]"],
                  maps={"TSu(Lie)": {"circ": "mu<", "circ'": _neg("mu>"), "br": "mu."}},
                  glyphs={"circ": "∘", "circ'": "∘'", "br": "[]"})


TSU_JORDAN_RELATIONS = (
    "((x≺y)≺u)≺z + x≺((y⋆z)⋆u) + ((x≺z)≺u)≺y"
    " = (x≺y)≺(u⋆z) + (x≺u)≺(y⋆z) + (x≺z)≺(u⋆y)",
    "(u≺(x⋆y))≺z + (u≺(y⋆z))≺x + (u≺(z⋆x))≺y"
    " = (u≺z)≺(x⋆y) + (u≺z)≺(y⋆z) + (u≺y)≺(z⋆x)",
    "((x·y)≺u)≺z + ((y≺z)≺u)·x + ((x≺z)≺u)·y"
    " = (x·y)≺(u⋆z) + (y≺z)·(x≺u) + (x≺z)·(y≺u)",
    "((x≺y)·u)≺z + (u≺(y⋆z))·x + ((x≺z)·u)≺y"
    " = (x≺y)·(u≺z) + (u·x)≺(y⋆z) + (x≺z)·(u≺y)",
    "((x·y)≺u)·z + ((y·z)≺u)·x + ((z·x)≺u)·y"
    " = (x·y)·(z≺u) + (y·z)·(x≺u) + (z·x)·(y≺u)",
    "((x·y)·u)≺z + ((y≺z)·u)·x + ((x≺z)·u)·y"
    " = (x·y)·(u≺z) + (y≺z)·(u·x) + (x≺z)·(u·y)",
    "((x·y)·u)·z + ((y·z)·u)·x + ((z·x)·u)·y"
    " = (x·y)·(u·z) + (y·z)·(u·x) + (z·x)·(u·y)",
)


def _tsujordan():
    gens, act = _asym("prec")
    gens.append("dot")
    act = S2Action({**dict(act.items()), "dot": FormalSum.term("dot")})
    table = {"≺": op("prec"), "·": op("dot"),
             "⋆": op("prec") + opp("prec") + op("dot")}
    return _entry("TSuJordan", gens, act, table, TSU_JORDAN_RELATIONS,
                  maps={"TSu(Jordan)": {"prec": "mu<", "prec'": "mu>", "dot": "mu."}},
                  glyphs={"prec": "≺", "prec'": "≺'", "dot": "·"})


def _tsualter():
    gens, act = _asym("prec", "succ", "dot")
    rels = [
        "(x⋆y + y⋆x)≻z = x≻(y≻z) + y≻(x≻z)",
        "(x≻z)≺y + (z≺x)≺y = x≻(z≺y) + z≺(x⋆y)",
        "(y⋆x)≻z + (y≻z)≺x = y≻(x≻z) + y≻(z≺x)",
        "(z≺x)≺y + (z≺y)≺x = z≺(x⋆y + y⋆x)",
        "(x·y)≺z + (y·x)≺z = x·(y≺z) + y·(x≺z)",
        "(x≺y)·z + (y≻x)·z = x·(y≻z) + y≻(x·z)",
        "(x·y)≺z + (x≺z)·y = x·(y≺z) + x·(z≻y)",
        "(x≻y)·z + (x≻z)·y = x≻(y·z) + x≻(z·y)",
        "(x·y)·z + (y·x)·z = x·(y·z) + y·(x·z)",
        "(x·y)·z + (x·z)·y = x·(y·z) + x·(z·y)",
    ]
    return _entry("TSuAlter", gens, act, _tri_table(_STAR3), rels,
                  maps={"TSu(Alter)": {"prec": "circ<", "prec'": "circ'>",
                                       "succ": "circ>", "succ'": "circ'<",
                                       "dot": "circ.", "dot'": "circ'."}},
                  glyphs={"prec": "≺", "succ": "≻", "dot": "·",
                          "prec'": "≺'", "succ'": "≻'", "dot'": "·'"})


def _tsuleibniz():
    gens, act = _asym("prec", "succ", "dot")
    rels = [
        "(x≺y)≺z = (x≺z)≺y + x≺(y⋆z)",
        "(x≻y)≺z = (x⋆z)≻y + x≻(y≺z)",
        "(x⋆y)≻z = (x≻z)≺y + x≻(y≻z)",
        "(x·y)≺z = (x≺z)·y + x·(y≺z)",
        "(x≺y)·z = (x·z)≺y + x·(y≻z)",
        "(x≻y)·z = (x≻z)·y + x≻(y·z)",
        "(x·y)·z = (x·z)·y + x·(y·z)",
    ]
    return _entry("TSuLeibniz", gens, act, _tri_table(_STAR3), rels,
                  maps={"TSu(Leibniz)": {"prec": "br<", "prec'": "br'>",
                                         "succ": "br>", "succ'": "br'<",
                                         "dot": "br.", "dot'": "br'."}},
                  glyphs={"prec": "≺", "succ": "≻", "dot": "·",
                          "prec'": "≺'", "succ'": "≻'", "dot'": "·'"})


def _tsuprelie():
    gens, act = _asym("prec", "succ", "dot")
    rels = [
        "(x≺y)≺z - x≺(y⋆z) = (x≺z)≺y - x≺(z⋆y)",
        "(x≻y)≺z - x≻(y≺z) = (x⋆z)≻y - x≻(z≻y)",
        "(x·y)≺z - x·(y≺z) = (x≺z)·y - x·(z≻y)",
        "(x≻y)·z - x≻(y·z) = (x≻z)·y - x≻(z·y)",
        "(x·y)·z - x·(y·z) = (x·z)·y - x·(z·y)",
    ]
    return _entry("TSuPreLie_R", gens, act, _tri_table(_STAR3), rels,
                  maps={"TSu(PreLie_R)": {"prec": "dot<", "prec'": "dot'>",
                                          "succ": "dot>", "succ'": "dot'<",
                                          "dot": "dot.", "dot'": "dot'."}},
                  glyphs={"prec": "≺", "succ": "≻", "dot": "·",
                          "prec'": "≺'", "succ'": "≻'", "dot'": "·'"})


def _postpoisson():
    gens, act = _asym("dm", "succ")
    gens += ["br", "dot"]
    act = S2Action({**dict(act.items()), "br": FormalSum.term("br", -1),
                    "dot": FormalSum.term("dot")})
    table = {"[]": op("br"), "⋄": op("dm"), "·": op("dot"), "≻": op("succ")}
    rels = [
        # left post-Lie structure on ([,], ⋄)
        "0 = [[x,y],z] + [[z,x],y] + [[y,z],x]",
        "0 = x⋄(y⋄z) - (x⋄y)⋄z - y⋄(x⋄z) + (y⋄x)⋄z - [x,y]⋄z",
        "0 = x⋄[y,z] - [x⋄y,z] - [y,x⋄z]",
        # commutative tridendriform structure on (·, ≻)
        "(x≻y + y≻x + x·y)≻z = x≻(y≻z)",
        "z≻(x·y) = (z≻y)·x",
        "(x·y)·z = x·(y·z)",
        # compatibilities
        "[x,y·z] = [x,y]·z + y·[x,z]",
        "[x,z≻y] = z≻[x,y] - y·(z⋄x)",
        "x⋄(y·z) = (x⋄y)·z + y·(x⋄z)",
        "(y≻z + z≻y + y·z)⋄x = z≻(y⋄x) + y≻(z⋄x)",
        "x⋄(z≻y) = z≻(x⋄y) + (x⋄z - z⋄x + [x,z])≻y",
    ]
    return _entry("PostPoisson", gens, act, table, rels,
                  maps={"TSu(Poisson)": {"br": "br.", "dot": "circ.",
                                         "dm": "br>", "dm'": _neg("br<"),
                                         "succ": "circ>", "succ'": "circ<"}},
                  glyphs={"br": "[]", "dm": "⋄", "dm'": "⋄'", "dot": "·",
                          "succ": "≻", "succ'": "≻'"})


BASE: dict[str, Callable[[], Presentation]] = {
    "Comm": _comm, "Ass": _ass, "Lie": _lie, "Poisson": _poisson, "Jordan": _jordan,
    "Alter": _alter, "Leibniz": _leibniz, "PreLie_R": _prelie_r, "PreLie_L": _prelie_l,
    "Dend": _dend, "Zinbiel": _zinbiel, "PrePoisson": _prepoisson,
    "PreJordan": _prejordan, "Su2Jordan": _su2jordan, "LDend": _ldend, "LQuad": _lquad,
    "PreAlter": _prealter, "SuLeibniz": _suleibniz, "ComTriDend": _comtridend,
    "PostLie": _postlie, "TSuJordan": _tsujordan, "TSuAlter": _tsualter,
    "TSuLeibniz": _tsuleibniz, "TSuPreLie_R": _tsuprelie, "PostPoisson": _postpoisson,
}

ALIASES = {
    "Ass_ns": "Ass", "PreLie": "PreLie_R", "Zinb": "Zinbiel",
    "TriDend": "TSu(Ass)", "Quad": "Su(Su(Ass))", "Ennea": "TSu(TSu(Ass))",
    "Octo": "Su(Su(Su(Ass)))",
}

_POWER = re.compile(r"^(T?Su)\^(\d+)\((.*)\)$")
_UNARY = re.compile(r"^(T?Su|Reg)\((.*)\)$")


def normalize_name(name: str) -> str:
    """Canonical spelling: powers unfolded, aliases kept as written."""
    s = name.replace(" ", "").replace("²", "^2").replace("³", "^3")
    m = _POWER.match(s)
    if m:
        inner = normalize_name(m.group(3))
        for _ in range(int(m.group(2))):
            inner = f"{m.group(1)}({inner})"
        return inner
    m = _UNARY.match(s)
    if m:
        return f"{m.group(1)}({normalize_name(m.group(2))})"
    return s


def available() -> list[str]:
    return sorted(BASE) + sorted(ALIASES)


def is_catalog_name(name: str) -> bool:
    try:
        _resolve(normalize_name(name), dry=True)
        return True
    except UnknownPresentation:
        return False


@lru_cache(maxsize=None)
def catalog(name: str) -> Presentation:
    return _resolve(normalize_name(name))


def _resolve(name: str, dry: bool = False):
    from .successor import Kind, successor_presentation

    if name in BASE:
        return None if dry else BASE[name]()
    if name in ALIASES:
        target = normalize_name(ALIASES[name])
        return _resolve(target, dry) if dry else catalog(target)
    m = _UNARY.match(name)
    if m:
        head, inner = m.group(1), m.group(2)
        if dry:
            return _resolve(inner, dry=True)
        base = catalog(inner)
        # named after the resolved base, so aliases share stored maps
        canonical = f"{head}({base.name})"
        if head == "Reg":
            return regularize(base, canonical)
        kind = Kind.BI if head == "Su" else Kind.TRI
        return successor_presentation(base, kind, name=canonical)
    raise UnknownPresentation(
        f"unknown presentation {name!r}; available: {', '.join(available())}, "
        "and Su(...), TSu(...), Su^k(...), TSu^k(...), Reg(...) of these")


def stored_map(p: Presentation, q: Presentation) -> GeneratorMap | None:
    """A catalog map from ``p`` to ``q``: stored on ``p``, or stored on ``q`` and inverted."""
    from .presentation import invert_map, map_is_invertible

    keys = {q.name, normalize_name(q.name)}
    for k, f in p.maps.items():
        if k in keys or normalize_name(k) in keys:
            return f
    keys = {p.name, normalize_name(p.name)}
    for k, f in q.maps.items():
        if (k in keys or normalize_name(k) in keys) and map_is_invertible(f, q.generators, p.generators):
            return invert_map(f, q.generators, p.generators)
    return None
