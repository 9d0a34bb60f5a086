"""Permuting decoration positions of iterated successors.

For ``Su^n`` or ``TSu^n`` every generator is a base id followed by ``n``
decorations.  ``phi_sigma`` sends ``w d_1 ... d_n`` to
``w d_sigma(1) ... d_sigma(n)``, vertex by vertex.  Applying ``phi_s`` after
``phi_t`` gives ``phi`` of "first ``s``, then ``t``", i.e. of
``compose_perm(t, s)``; :func:`group_morphism_check` verifies exactly this.
"""
from __future__ import annotations

from typing import Sequence

from .linalg import FormalSum, in_span
from .notation import ENNEA
from .presentation import Presentation, closure_span, require_valid
from .report import Report
from .successor import Kind, as_kind, iterate
from .trees import all_perms, compose_perm, format_cycles, inverse_perm, map_vertices

Permutation = Sequence[int]


class DecorationError(ValueError):
    pass


def _split(g: str, n: int, kind: Kind) -> tuple[str, str]:
    if n == 0:
        return g, ""
    decs = g[-n:]
    if len(g) <= n or any(d not in kind.decorations for d in decs):
        raise DecorationError(f"{g!r} does not carry {n} {kind.name.lower()}-decorations")
    return g[:-n], decs


def phi_sigma(g: str, sigma: Permutation, kind=Kind.BI) -> str:
    kind = as_kind(kind)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise DecorationError(f"{tuple(sigma)} is not a permutation")
    base, decs = _split(g, n, kind)
    return base + "".join(decs[sigma[i] - 1] for i in range(n))


def phi_sum(s: FormalSum, sigma: Permutation, kind=Kind.BI) -> FormalSum:
    return s.map_keys(lambda t: map_vertices(t, lambda g: phi_sigma(g, sigma, kind)))


def transpose_glyphs(kind=Kind.BI) -> dict[str, str]:
    """Glyph table of ``phi_(12)`` on doubly decorated generators."""
    kind = as_kind(kind)
    out = {}
    for a in kind.decorations:
        for b in kind.decorations:
            out[ENNEA[a + b]] = ENNEA[b + a]
    return out


def verify_automorphism(p: Presentation, kind, n: int, sigma: Permutation,
                        q: Presentation | None = None) -> Report:
    """Does ``phi_sigma`` preserve the relation S-module of ``iterate(p, kind, n)``?"""
    kind = as_kind(kind)
    require_valid(p)
    sigma = tuple(sigma)
    if len(sigma) != n:
        raise DecorationError(f"permutation of length {len(sigma)} for {n} decorations")
    q = q or iterate(p, kind, n)
    rep = Report("check-symmetry", {"presentation": p.name, "kind": kind.name.lower(),
                                    "n": n, "perm": format_cycles(sigma)})
    images = {g: phi_sigma(g, sigma, kind) for g in q.generators}
    back = {h: phi_sigma(h, inverse_perm(sigma), kind) for h in images.values()}
    inverse_ok = all(back[images[g]] == g for g in q.generators)
    rep.add("phi of the inverse permutation inverts phi", inverse_ok)
    rep.extend(relabeling_preserves(q, images))
    return rep


def relabeling_preserves(q: Presentation, images: dict[str, str]) -> Report:
    """Is the generator relabeling ``images`` an automorphism of ``q`` at relation level?"""
    rep = Report("relabel", {"presentation": q.name})
    gens = set(q.generators)
    bijective = set(images) == gens and set(images.values()) == gens
    rep.add("relabeling is a bijection of generators", bijective,
            dimension_left=len(gens), dimension_right=len(set(images.values())))
    if not bijective:
        return rep
    if q.symmetric:
        bad = [g for g in q.generators
               if q.action[g].map_keys(images.__getitem__) != q.action[images[g]]]
        rep.add("relabeling commutes with the S2 action", not bad,
                detail=f"fails on {bad}" if bad else "")
    for m in q.arities():
        rels = q.relations_of_arity(m)
        span = closure_span(rels, m, q.generators, q.action, q.symmetric)
        mapped = [r.map_keys(lambda t: map_vertices(t, images.__getitem__)) for r in rels]
        outside = [i + 1 for i, r in enumerate(mapped) if not in_span(r, span)]
        image_span = closure_span(mapped, m, q.generators, q.action, q.symmetric)
        rep.add("relation span preserved", not outside and image_span.dimension == span.dimension,
                arity=m, dimension_left=span.dimension, dimension_right=image_span.dimension,
                detail=f"images outside the span: {outside[:10]}" if outside else "")
    return rep


def group_morphism_check(p: Presentation, kind, n: int, q: Presentation | None = None) -> Report:
    """``phi_s(phi_t(g)) = phi_{s then t}(g)`` for all ``s, t`` in ``S_n`` and all generators."""
    kind = as_kind(kind)
    if n > 3:
        raise ValueError("group_morphism_check is limited to n <= 3")
    q = q or iterate(p, kind, n)
    rep = Report("group-morphism", {"presentation": p.name, "kind": kind.name.lower(), "n": n})
    perms = list(all_perms(n))
    bad = []
    for s in perms:
        for t in perms:
            st = compose_perm(t, s)
            for g in q.generators:
                if phi_sigma(phi_sigma(g, t, kind), s, kind) != phi_sigma(g, st, kind):
                    bad.append((format_cycles(s), format_cycles(t), g))
    ident = tuple(range(1, n + 1))
    unit = all(phi_sigma(g, ident, kind) == g for g in q.generators)
    rep.add("identity acts trivially", unit, dimension_left=len(q.generators))
    rep.add("composition law", not bad, dimension_left=len(perms) ** 2,
            detail=f"first failures {bad[:3]}" if bad else
            f"{len(perms) ** 2} pairs on {len(q.generators)} generators")
    return rep


def all_sigma_automorphisms(p: Presentation, kind, n: int) -> Report:
    kind = as_kind(kind)
    q = iterate(p, kind, n)
    rep = Report("check-symmetry", {"presentation": p.name, "kind": kind.name.lower(), "n": n})
    for sigma in all_perms(n):
        rep.extend(verify_automorphism(p, kind, n, sigma, q=q), prefix=f"{format_cycles(sigma)}: ")
    return rep

