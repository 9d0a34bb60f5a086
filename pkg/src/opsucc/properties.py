"""Structural identities of the successor constructions, checked exhaustively."""
from __future__ import annotations

from typing import Iterable, Sequence

from .linalg import fsum
from .presentation import Presentation, require_valid
from .report import Report
from .successor import (Kind, as_kind, bisuccessor, bisuccessor_inductive, check_dot_morphism,
                        check_star_morphism, check_su_tsu_bridges, hat, nonempty_subsets,
                        successor_action, tilde, trisuccessor, trisuccessor_inductive)
from .trees import (S2Action, Tree, all_perms, apply_perm, enumerate_basis, inverse_perm,
                    leaf_set)

# a skew generator, a symmetric one, and a pair exchanged by (12)
EQUIVARIANCE_CASES = (
    ("skew", ("mu",), S2Action({"mu": {"mu": -1}})),
    ("symmetric", ("mu",), S2Action({"mu": {"mu": 1}})),
    ("swapped pair", ("nu", "nu'"), S2Action({"nu": {"nu'": 1}, "nu'": {"nu": 1}})),
)


def _monomials(max_leaves: int, gens: Sequence[str], symmetric: bool) -> Iterable[Tree]:
    for n in range(1, max_leaves + 1):
        yield from enumerate_basis(n, gens, symmetric)


def sum_lemma_failures(t: Tree) -> list[str]:
    out = []
    ls = sorted(leaf_set(t))
    if isinstance(t, int):
        return out
    if fsum(bisuccessor(t, x) for x in ls) != tilde(t):
        out.append("sum of Su_x")
    if fsum(trisuccessor(t, J) for J in nonempty_subsets(ls)) != hat(t):
        out.append("sum of TSu_J")
    return out


def inductive_failures(t: Tree) -> list[str]:
    if isinstance(t, int):
        return []
    ls = sorted(leaf_set(t))
    out = [f"Su_{x}" for x in ls if bisuccessor(t, x) != bisuccessor_inductive(t, x)]
    out += [f"TSu_{sorted(J)}" for J in nonempty_subsets(ls)
            if trisuccessor(t, J) != trisuccessor_inductive(t, J)]
    return out


def equivariance_failures(t: Tree, action: S2Action, gens: Sequence[str],
                          bi: S2Action | None = None, tri: S2Action | None = None) -> list[str]:
    """``Su_{s^-1(x)}(t^s) = Su_x(t)^s`` and ``TSu_{s^-1(J)}(t^s) = TSu_J(t)^s``."""
    if isinstance(t, int):
        return []
    n = len(leaf_set(t))
    bi = bi or successor_action(action, gens, Kind.BI)
    tri = tri or successor_action(action, gens, Kind.TRI)
    out = []
    for sigma in all_perms(n):
        inv = inverse_perm(sigma)
        ts = apply_perm(t, sigma, action)
        for x in range(1, n + 1):
            lhs = ts.linear_map(lambda m: bisuccessor(m, inv[x - 1]))
            if lhs != apply_perm(bisuccessor(t, x), sigma, bi):
                out.append(f"Su_{x} under {sigma}")
        for J in nonempty_subsets(range(1, n + 1)):
            Js = {inv[j - 1] for j in J}
            lhs = ts.linear_map(lambda m: trisuccessor(m, Js))
            if lhs != apply_perm(trisuccessor(t, J), sigma, tri):
                out.append(f"TSu_{sorted(J)} under {sigma}")
    return out


def sum_lemma_check(max_leaves: int = 5, gens: Sequence[str] = ("mu", "nu"),
                    symmetric: bool = True) -> Report:
    rep = Report("sum-lemma", {"max_leaves": max_leaves, "generators": list(gens)})
    count, bad = 0, []
    for t in _monomials(max_leaves, gens, symmetric):
        count += 1
        bad += [(t, f) for f in sum_lemma_failures(t)]
    rep.add("sums of successors equal tilde and hat", not bad, dimension_left=count,
            detail=f"first failure {bad[0]}" if bad else f"{count} monomials")
    return rep


def inductive_check(max_leaves: int = 5, gens: Sequence[str] = ("mu", "nu"),
                    symmetric: bool = True) -> Report:
    rep = Report("inductive-agreement", {"max_leaves": max_leaves, "generators": list(gens)})
    count, bad = 0, []
    for t in _monomials(max_leaves, gens, symmetric):
        count += 1
        bad += [(t, f) for f in inductive_failures(t)]
    rep.add("path rule equals recursive rule", not bad, dimension_left=count,
            detail=f"first failure {bad[0]}" if bad else f"{count} monomials")
    return rep


def equivariance_check(max_leaves: int = 4, cases=EQUIVARIANCE_CASES) -> Report:
    rep = Report("equivariance", {"max_leaves": max_leaves})
    for label, gens, action in cases:
        bi = successor_action(action, gens, Kind.BI)
        tri = successor_action(action, gens, Kind.TRI)
        count, bad = 0, []
        for t in _monomials(max_leaves, gens, True):
            count += 1
            bad += [(t, f) for f in equivariance_failures(t, action, gens, bi, tri)]
        rep.add(f"successors commute with leaf permutations ({label} generators)", not bad,
                dimension_left=count,
                detail=f"first failure {bad[0]}" if bad else f"{count} monomials")
    return rep


def presentation_properties(p: Presentation, kind=None) -> Report:
    """All identities on the monomials of ``p``, plus the morphism checks for ``kind`` (default both)."""
    require_valid(p)
    kinds = [as_kind(kind)] if kind is not None else [Kind.BI, Kind.TRI]
    rep = Report("props", {"presentation": p.name, "kind": [k.name.lower() for k in kinds]})
    monos = sorted({t for r in p.relations for t in r.keys()}, key=repr)
    bad_sum = [t for t in monos if sum_lemma_failures(t)]
    bad_ind = [t for t in monos if inductive_failures(t)]
    rep.add("sum lemma on relation monomials", not bad_sum, dimension_left=len(monos))
    rep.add("path and recursive successors agree", not bad_ind, dimension_left=len(monos))
    if p.symmetric:
        bad_eq = [t for t in monos if equivariance_failures(t, p.action, p.generators)]
        rep.add("successors are equivariant", not bad_eq, dimension_left=len(monos))
    for k in kinds:
        rep.extend(check_star_morphism(p, k), prefix=f"star {k.name.lower()}: ")
    if Kind.TRI in kinds:
        rep.extend(check_dot_morphism(p), prefix="dot: ")
        rep.extend(check_su_tsu_bridges(p), prefix="bridge: ")
    return rep
