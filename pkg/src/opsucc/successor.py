"""Bisuccessors and trisuccessors of trees and of presentations.

Decorated generator ids are the base id followed by one character per
decoration, ``<`` for the left half, ``>`` for the right half and ``.`` for
the middle (dot) part.  Iterating appends at the tail, so ``"mu<>"`` is
``(mu; <; >)``.
"""
from __future__ import annotations

import enum
import itertools
from typing import Callable, Iterable, Sequence

from .linalg import FormalSum, fsum, in_span
from .presentation import (GeneratorMap, Presentation, closure_span, relation_arity,
                           require_valid, substitute)

from .report import Report
from .trees import (ResourceLimitError, S2Action, Tree, TreeError, Turn, leaf_set,
                    path_to_leaf)

PREC, SUCC, DOT = "<", ">", "."
DECORATIONS = (PREC, SUCC, DOT)
_SWAP = {PREC: SUCC, SUCC: PREC, DOT: DOT}
GLYPH = {PREC: "≺", SUCC: "≻", DOT: "·"}

DEFAULT_GENERATOR_LIMIT = 200


class Kind(enum.Enum):
    BI = "bi"
    TRI = "tri"

    @property
    def decorations(self) -> tuple[str, ...]:
        return (PREC, SUCC) if self is Kind.BI else DECORATIONS

    @property
    def prefix(self) -> str:
        return "Su" if self is Kind.BI else "TSu"


def as_kind(kind) -> Kind:
    if isinstance(kind, Kind):
        return kind
    return Kind(str(kind).lower())


def decorate(gen: str, *decs: str) -> str:
    return gen + "".join(decs)


def split_decorations(gen: str) -> tuple[str, str]:
    """``"mu<>."`` -> ``("mu", "<>.")``."""
    base = gen.rstrip("<>.")
    return base, gen[len(base):]


def swap_decorations(decs: str) -> str:
    return "".join(_SWAP[d] for d in decs)


def decorated_generators(gens: Sequence[str], kind: Kind) -> list[str]:
    return [decorate(g, d) for g in gens for d in kind.decorations]


def successor_action(action: S2Action, gens: Sequence[str], kind: Kind) -> S2Action:
    """``(g, d)^(12) = (g^(12), swap d)`` extended linearly."""
    images = {}
    for g in gens:
        for d in kind.decorations:
            images[decorate(g, d)] = FormalSum((decorate(h, _SWAP[d]), c)
                                               for h, c in action[g].items())
    return S2Action(images)


# tree level ---------------------------------------------------------------

def _expand(t: Tree, choose: Callable[[tuple], Sequence[str]], addr: tuple = ()) -> list[Tree]:
    """All decorated copies of ``t``; ``choose(address)`` lists decorations per vertex."""
    if isinstance(t, int):
        return [t]
    gen, left, right = t
    ls = _expand(left, choose, addr + (Turn.LEFT,))
    rs = _expand(right, choose, addr + (Turn.RIGHT,))
    return [(gen + d, a, b) for d in choose(addr) for a in ls for b in rs]


def _as_sum(trees: Iterable[Tree]) -> FormalSum:
    return FormalSum((t, 1) for t in trees)


def tilde(t: Tree) -> FormalSum:
    return _as_sum(_expand(t, lambda a: (PREC, SUCC)))


def hat(t: Tree) -> FormalSum:
    return _as_sum(_expand(t, lambda a: DECORATIONS))


def star(t: Tree, kind: Kind) -> FormalSum:
    return tilde(t) if as_kind(kind) is Kind.BI else hat(t)


def dot_all(t: Tree) -> Tree:
    if isinstance(t, int):
        return t
    return (t[0] + DOT, dot_all(t[1]), dot_all(t[2]))


def bisuccessor(t: Tree, x: int) -> FormalSum:
    """``Su_x(t)`` by the root-to-leaf path rule."""
    turns = dict(path_to_leaf(t, x))

    def choose(addr):
        turn = turns.get(addr)
        if turn is None:
            return (PREC, SUCC)
        return (PREC,) if turn is Turn.LEFT else (SUCC,)

    return _as_sum(_expand(t, choose))


def trisuccessor(t: Tree, J: Iterable[int]) -> FormalSum:
    """``TSu_J(t)``: all-left gives ``<``, all-right ``>``, split paths ``.``."""
    J = frozenset(J)
    if not J:
        raise TreeError("the leaf subset J must be nonempty")
    if not J <= leaf_set(t):
        raise TreeError(f"labels {sorted(J - leaf_set(t))} are not leaves of the tree")
    turns: dict[tuple, set] = {}
    for x in J:
        for addr, turn in path_to_leaf(t, x):
            turns.setdefault(addr, set()).add(turn)

    def choose(addr):
        seen = turns.get(addr)
        if seen is None:
            return DECORATIONS
        if len(seen) == 2:
            return (DOT,)
        return (PREC,) if Turn.LEFT in seen else (SUCC,)

    return _as_sum(_expand(t, choose))


def _graft_sums(a: FormalSum, gen: str, b: FormalSum) -> FormalSum:
    return FormalSum(((gen, s, t), ca * cb) for s, ca in a.items() for t, cb in b.items())


def bisuccessor_inductive(t: Tree, x: int) -> FormalSum:
    """Recursive definition, kept as an independent check of :func:`bisuccessor`."""
    if isinstance(t, int):
        if t != x:
            raise TreeError(f"leaf {x} is not in the tree")
        return FormalSum.term(t)
    gen, left, right = t
    if x in leaf_set(left):
        return _graft_sums(bisuccessor_inductive(left, x), gen + PREC, tilde(right))
    if x in leaf_set(right):
        return _graft_sums(tilde(left), gen + SUCC, bisuccessor_inductive(right, x))
    raise TreeError(f"leaf {x} is not in the tree")


def trisuccessor_inductive(t: Tree, J: Iterable[int]) -> FormalSum:
    J = frozenset(J)
    if isinstance(t, int):
        if J != {t}:
            raise TreeError("J is not a nonempty subset of the leaves")
        return FormalSum.term(t)
    gen, left, right = t
    ll, lr = leaf_set(left), leaf_set(right)
    if not J or not J <= ll | lr:
        raise TreeError("J is not a nonempty subset of the leaves")
    if J <= ll:
        return _graft_sums(trisuccessor_inductive(left, J), gen + PREC, hat(right))
    if J <= lr:
        return _graft_sums(hat(left), gen + SUCC, trisuccessor_inductive(right, J))
    return _graft_sums(trisuccessor_inductive(left, J & ll), gen + DOT,
                       trisuccessor_inductive(right, J & lr))


def nonempty_subsets(labels: Iterable[int]) -> list[frozenset[int]]:
    """Nonempty subsets in binary-counter order over the sorted labels."""
    ls = sorted(labels)
    return [frozenset(x for i, x in enumerate(ls) if mask >> i & 1)
            for mask in range(1, 2 ** len(ls))]


def _relation_leaves(r: FormalSum) -> frozenset[int]:
    sets = {leaf_set(t) for t in r.keys()}
    if len(sets) != 1:
        raise TreeError("relation is not homogeneous: monomials have different leaf sets")
    return next(iter(sets))


def su(r: FormalSum, x: int) -> FormalSum:
    _relation_leaves(r)
    return r.linear_map(lambda t: bisuccessor(t, x))


def tsu(r: FormalSum, J: Iterable[int]) -> FormalSum:
    _relation_leaves(r)
    J = frozenset(J)
    return r.linear_map(lambda t: trisuccessor(t, J))


def successor_relations(r: FormalSum, kind: Kind) -> list[tuple[object, FormalSum]]:
    """``[(x, Su_x r)]`` or ``[(J, TSu_J r)]`` in listing order."""
    leaves_ = _relation_leaves(r)
    if as_kind(kind) is Kind.BI:
        return [(x, su(r, x)) for x in sorted(leaves_)]
    return [(J, tsu(r, J)) for J in nonempty_subsets(leaves_)]


def tilde_sum(r: FormalSum) -> FormalSum:
    return r.linear_map(tilde)


def hat_sum(r: FormalSum) -> FormalSum:
    return r.linear_map(hat)


def star_sum(r: FormalSum, kind: Kind) -> FormalSum:
    return tilde_sum(r) if as_kind(kind) is Kind.BI else hat_sum(r)


def kill_dots(s: FormalSum) -> FormalSum:
    """Drop every monomial containing a generator whose last decoration is ``.``."""
    from .trees import vertices
    return FormalSum((t, c) for t, c in s.items()
                     if not any(g.endswith(DOT) for g in vertices(t)))


# presentation level -------------------------------------------------------

def successor_name(name: str, kind: Kind) -> str:
    return f"{as_kind(kind).prefix}({name})"


def successor_presentation(p: Presentation, kind, name: str | None = None,
                           generator_limit: int = DEFAULT_GENERATOR_LIMIT) -> Presentation:
    kind = as_kind(kind)
    require_valid(p)
    gens = decorated_generators(p.generators, kind)
    if len(gens) > generator_limit:
        raise ResourceLimitError(f"{len(gens)} generators exceed the limit {generator_limit}")
    action = successor_action(p.action, p.generators, kind) if p.symmetric else None
    rels = []
    for r in p.relations:
        rels.extend(s for _, s in successor_relations(r, kind))
    return Presentation(name or successor_name(p.name, kind), p.symmetric, tuple(gens),
                        action, tuple(rels))


def iterate(p: Presentation, kind, n: int,
            generator_limit: int = DEFAULT_GENERATOR_LIMIT) -> Presentation:
    if n < 1:
        raise ValueError("the number of iterations must be at least 1")
    kind = as_kind(kind)
    width = len(kind.decorations)
    if len(p.generators) * width ** n > generator_limit:
        raise ResourceLimitError(
            f"{len(p.generators) * width ** n} generators exceed the limit {generator_limit}")
    q = p
    for _ in range(n):
        q = successor_presentation(q, kind, generator_limit=generator_limit)
    return q


def star_map(p: Presentation, kind) -> GeneratorMap:
    kind = as_kind(kind)
    return GeneratorMap({g: FormalSum((decorate(g, d), 1) for d in kind.decorations)
                         for g in p.generators})


def dot_map(p: Presentation) -> GeneratorMap:
    return GeneratorMap({g: decorate(g, DOT) for g in p.generators})


def _morphism_report(p: Presentation, q: Presentation, images: list[FormalSum],
                     identities: list[bool], command: str, identity_name: str) -> Report:
    rep = Report(command, {"presentation": p.name, "successor": q.name})
    spans = {}
    for i, (img, ident) in enumerate(zip(images, identities)):
        n = relation_arity(p.relations[i])
        if n not in spans:
            spans[n] = closure_span(q.relations, n, q.generators, q.action, q.symmetric)
        ok = in_span(img, spans[n])
        rep.add(f"relation {i + 1} image in successor relations", ok, arity=n,
                dimension_right=spans[n].dimension)
        rep.add(f"relation {i + 1} {identity_name}", ident, arity=n)
    return rep


def check_star_morphism(p: Presentation, kind) -> Report:
    """``g -> (g, star)`` sends every relation into the successor relation span."""
    kind = as_kind(kind)
    q = successor_presentation(p, kind)
    f = star_map(p, kind)
    images = [substitute(r, f, q.action) for r in p.relations]
    identities = []
    for r, img in zip(p.relations, images):
        total = fsum(s for _, s in successor_relations(r, kind))
        identities.append(img == total and img == star_sum(r, kind))
    return _morphism_report(p, q, images, identities, f"star-morphism {kind.value}",
                            "image equals the sum of its successors")


def check_dot_morphism(p: Presentation) -> Report:
    """``g -> (g, .)`` sends every relation into the trisuccessor relation span."""
    q = successor_presentation(p, Kind.TRI)
    f = dot_map(p)
    images = [substitute(r, f, q.action) for r in p.relations]
    identities = [img == tsu(r, _relation_leaves(r)) for r, img in zip(p.relations, images)]
    return _morphism_report(p, q, images, identities, "dot-morphism",
                            "image equals TSu over all leaves")


def check_su_tsu_bridges(p: Presentation) -> Report:
    """Killing dot operations sends ``TSu_{x}`` to ``Su_x`` and larger ``TSu_J`` to zero."""
    require_valid(p)
    rep = Report("su-tsu-bridges", {"presentation": p.name})
    for i, r in enumerate(p.relations):
        n = relation_arity(r)
        ok_rel = True
        for J, s in successor_relations(r, Kind.TRI):
            killed = kill_dots(s)
            if len(J) == 1:
                (x,) = J
                ok_rel &= killed == su(r, x)
            else:
                ok_rel &= not killed
        rep.add(f"relation {i + 1} dot-killing map", ok_rel, arity=n)
        ok_mono = all(kill_dots(trisuccessor(t, {x})) == bisuccessor(t, x)
                      for t in r.keys() for x in leaf_set(t))
        rep.add(f"relation {i + 1} single-leaf TSu agrees with Su", ok_mono, arity=n)
    return rep
