"""Rota-Baxter rewriting over a free operad with one extra unary symbol ``P``.

Terms are ordinary trees in which ``("P", child)`` may appear anywhere.  The
Rota-Baxter relation is oriented as

    w(P(a), P(b))  ->  P(w(P(a), b)) + P(w(a, P(b))) [+ P(w(a, b)) at weight one]

Termination: give each ``P`` node the number of binary vertices above it and
sum over all ``P`` nodes.  A rewrite at a vertex with ``k`` binary ancestors
removes two ``P`` nodes of height ``k + 1`` and creates one of height ``k``
(weight one: the third term loses both), so every output monomial is
strictly smaller.  New redexes can appear above the rewritten vertex; the
measure still decreases.
"""
from __future__ import annotations

import enum
import random
from functools import lru_cache
from typing import Callable, Iterable

from .linalg import FormalSum, fsum
from .presentation import Presentation, require_valid
from .report import Report
from .successor import DOT, PREC, SUCC, Kind, as_kind, bisuccessor, hat, nonempty_subsets, tilde, trisuccessor
from .trees import Tree, TreeError, leaf_set

P = "P"


class Weight(enum.IntEnum):
    ZERO = 0
    ONE = 1


def as_weight(w) -> Weight:
    return w if isinstance(w, Weight) else Weight(int(w))


def default_weight(kind) -> Weight:
    return Weight.ZERO if as_kind(kind) is Kind.BI else Weight.ONE


def p_node(t: Tree) -> Tree:
    return (P, t)


def is_p(t: Tree) -> bool:
    return isinstance(t, tuple) and len(t) == 2 and t[0] == P


def p_sum(s: FormalSum) -> FormalSum:
    return s.map_keys(p_node)


# embeddings ---------------------------------------------------------------

def _embed_tree(t: Tree, allow_dot: bool) -> Tree:
    if isinstance(t, int):
        return t
    if len(t) == 2:
        return (t[0], _embed_tree(t[1], allow_dot))
    gen, left, right = t
    a, b = _embed_tree(left, allow_dot), _embed_tree(right, allow_dot)
    base, dec = gen[:-1], gen[-1:]
    if dec == PREC:
        return (base, a, p_node(b))
    if dec == SUCC:
        return (base, p_node(a), b)
    if dec == DOT and allow_dot:
        return (base, a, b)
    raise TreeError(f"generator {gen!r} has no {'tri' if allow_dot else 'bi'}-decoration")


def embed_bi(s: FormalSum | Tree) -> FormalSum:
    """``(w,<)(a,b) -> w(a,P b)`` and ``(w,>)(a,b) -> w(P a,b)``, vertex by vertex."""
    s = s if isinstance(s, FormalSum) else FormalSum.term(s)
    return s.map_keys(lambda t: _embed_tree(t, False))


def embed_tri(s: FormalSum | Tree) -> FormalSum:
    """As :func:`embed_bi`, with ``(w,.)(a,b) -> w(a,b)`` in addition."""
    s = s if isinstance(s, FormalSum) else FormalSum.term(s)
    return s.map_keys(lambda t: _embed_tree(t, True))


def compose_P_powers(t: Tree, J: Iterable[int] = ()) -> Tree:
    """Wrap every leaf outside ``J`` in ``P``."""
    J = frozenset(J)
    if not J <= leaf_set(t):
        raise TreeError(f"labels {sorted(J - leaf_set(t))} are not leaves of the tree")

    def walk(s):
        if isinstance(s, int):
            return s if s in J else p_node(s)
        return (s[0],) + tuple(walk(c) for c in s[1:])

    return walk(t)


# rewriting ----------------------------------------------------------------

def _redex_rewrite(gen: str, a: Tree, b: Tree, w: Weight) -> FormalSum:
    terms = [p_node((gen, a, b[1])), p_node((gen, a[1], b))]
    if w is Weight.ONE:
        terms.append(p_node((gen, a[1], b[1])))
    return FormalSum((t, 1) for t in terms)


def _is_redex(t: Tree) -> bool:
    return isinstance(t, tuple) and len(t) == 3 and is_p(t[1]) and is_p(t[2])


def _step(t: Tree, w: Weight, outermost: bool) -> FormalSum | None:
    """Rewrite the leftmost innermost (or outermost) redex; ``None`` if there is none."""
    if isinstance(t, int):
        return None
    if outermost and _is_redex(t):
        return _redex_rewrite(t[0], t[1], t[2], w)
    for i in range(1, len(t)):
        sub = _step(t[i], w, outermost)
        if sub is not None:
            return sub.map_keys(lambda c, i=i: t[:i] + (c,) + t[i + 1:])
    if not outermost and _is_redex(t):
        return _redex_rewrite(t[0], t[1], t[2], w)
    return None


STRATEGIES = ("innermost", "outermost")


@lru_cache(maxsize=100_000)
def _nf(t: Tree, w: Weight, outermost: bool) -> FormalSum:
    nxt = _step(t, w, outermost)
    if nxt is None:
        return FormalSum.term(t)
    return fsum(_nf(s, w, outermost).scale(c) for s, c in nxt.items())


def rb_normal_form(s: FormalSum | Tree, weight=Weight.ZERO, strategy: str = "innermost") -> FormalSum:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    w = as_weight(weight)
    s = s if isinstance(s, FormalSum) else FormalSum.term(s)
    return fsum(_nf(t, w, strategy == "outermost").scale(c) for t, c in s.items())


def has_redex(t: Tree) -> bool:
    return _step(t, Weight.ZERO, True) is not None


def random_rb_term(rng: random.Random, max_leaves: int = 5, gens=("mu",),
                   p_probability: float = 0.5, max_p_depth: int = 2) -> Tree:
    n = rng.randint(1, max_leaves)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)

    def wrap(t):
        for _ in range(max_p_depth):
            if rng.random() >= p_probability:
                break
            t = p_node(t)
        return t

    def build(ls):
        if len(ls) == 1:
            return wrap(ls[0])
        k = rng.randint(1, len(ls) - 1)
        return wrap((rng.choice(gens), build(ls[:k]), build(ls[k:])))

    return build(labels)


def strategy_agreement(trials: int = 500, seed: int = 0, max_leaves: int = 5,
                       weights=(Weight.ZERO, Weight.ONE)) -> Report:
    rng = random.Random(seed)
    rep = Report("rb-strategies", {"trials": trials, "seed": seed, "max_leaves": max_leaves})
    terms = [random_rb_term(rng, max_leaves, gens=("mu", "nu")) for _ in range(trials)]
    for w in weights:
        bad = [t for t in terms
               if rb_normal_form(t, w, "innermost") != rb_normal_form(t, w, "outermost")]
        rep.add(f"innermost = outermost at weight {int(w)}", not bad,
                detail=f"first counterexample {bad[0]!r}" if bad else f"{trials} terms")
    return rep


# verification -------------------------------------------------------------

def _monomial_checks(t: Tree, kind: Kind, w: Weight) -> list[tuple[str, FormalSum]]:
    """``(label, lhs - rhs)`` before normalization, for every congruence on ``t``."""
    embed = embed_bi if kind is Kind.BI else embed_tri
    star = tilde if kind is Kind.BI else hat
    out = [("P(star)", p_sum(embed(star(t))) - FormalSum.term(compose_P_powers(t)))]
    if kind is Kind.BI:
        for x in sorted(leaf_set(t)):
            out.append((f"Su_{x}", embed(bisuccessor(t, x)) - FormalSum.term(compose_P_powers(t, {x}))))
    else:
        for J in nonempty_subsets(leaf_set(t)):
            out.append((f"TSu_{sorted(J)}",
                        embed(trisuccessor(t, J)) - FormalSum.term(compose_P_powers(t, J))))
    return out


def verify_successor_rb(p: Presentation, kind, weight=None) -> Report:
    """Check that successor relations of ``p`` map to Rota-Baxter consequences.

    Every monomial of every relation is tested; if some monomial fails the
    relation is retried as a whole (the linear combination of its monomial
    congruences).
    """
    kind = as_kind(kind)
    w = default_weight(kind) if weight is None else as_weight(weight)
    require_valid(p)
    rep = Report("check-rb", {"presentation": p.name, "kind": kind.name.lower(), "weight": int(w)})
    for i, r in enumerate(p.relations, 1):
        fails = []
        per_label: dict[str, FormalSum] = {}
        for t, c in r.items():
            for label, diff in _monomial_checks(t, kind, w):
                if rb_normal_form(diff, w):
                    fails.append(f"{label} on {t!r}")
                per_label[label] = per_label.get(label, FormalSum.zero()) + diff.scale(c)
        n = len(leaf_set(next(iter(r.keys()))))
        if not fails:
            rep.add(f"relation {i}", True, arity=n, detail=f"per-monomial, {len(r)} monomials")
            continue
        rel_ok = all(not rb_normal_form(d, w) for d in per_label.values())
        detail = f"per-monomial failures: {fails[:3]}"
        detail += "; per-relation level passes" if rel_ok else "; per-relation level fails"
        rep.add(f"relation {i}", rel_ok, arity=n, detail=detail)
    return rep
