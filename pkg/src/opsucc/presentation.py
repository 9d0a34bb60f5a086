"""Presentations of binary operads and their comparison.

A :class:`Presentation` lists generator ids, the S2-action on them (symmetric
mode only) and relations as :class:`~opsucc.linalg.FormalSum` objects over
canonical tree monomials.  Two presentations are compared by pushing the
relations of one through a generator map and checking that the S_n-closure
spans coincide arity by arity.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import (BasisIndex, FormalSum, SpanBasis, format_rational, in_span,
                     inverse, parse_rational, rank, span_equal, span_of)
from .report import Report
from .trees import (S2Action, Tree, TreeError, all_perms, apply_perm, arity,
                    canonicalize, canonicalize_sum, enumerate_basis, is_canonical,
                    leaf_set, vertices)

FORBIDDEN_ID_CHARS = set("<>.()[]{},= \t\n")


def _bad_id(g: str) -> bool:
    # decoration suffixes are allowed; the stem must be a plain name
    stem = g.rstrip("<>.")
    return not stem or stem == "P" or bool(FORBIDDEN_ID_CHARS & set(stem))


class PresentationError(ValueError):
    """Invalid presentation or incompatible presentations."""


class GeneratorMap:
    """A linear map on generators: each source id goes to a sum of target ids."""

    __slots__ = ("images",)

    def __init__(self, images: Mapping[str, FormalSum | Mapping[str, object] | str]):
        imgs = {}
        for g, v in images.items():
            if isinstance(v, str):
                v = FormalSum.term(v)
            elif not isinstance(v, FormalSum):
                v = FormalSum(v)
            imgs[g] = v
        self.images = imgs

    @classmethod
    def identity(cls, gens: Iterable[str]) -> GeneratorMap:
        return cls({g: g for g in gens})

    def __getitem__(self, g: str) -> FormalSum:
        try:
            return self.images[g]
        except KeyError:
            raise PresentationError(f"generator {g!r} is not mapped") from None

    def __contains__(self, g: str) -> bool:
        return g in self.images

    def linear(self, v: FormalSum) -> FormalSum:
        return v.linear_map(self.__getitem__)

    def compose(self, other: GeneratorMap) -> GeneratorMap:
        """``self`` after ``other``."""
        return GeneratorMap({g: self.linear(v) for g, v in other.images.items()})

    def matrix(self, source: Sequence[str], target: Sequence[str]) -> list[list[Fraction]]:
        return [[self[g].coeff(h) for h in target] for g in source]

    def to_json(self) -> dict:
        return {g: [{"gen": h, "coeff": format_rational(c)} for h, c in sorted(v.items())]
                for g, v in self.images.items()}

    @classmethod
    def from_json(cls, obj: Mapping) -> GeneratorMap:
        return cls({g: FormalSum((d["gen"], parse_rational(str(d["coeff"]))) for d in terms)
                    for g, terms in obj.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneratorMap) and self.images == other.images

    def __repr__(self) -> str:
        return f"GeneratorMap({self.images!r})"


@dataclass(frozen=True, eq=False)
class Presentation:
    name: str
    symmetric: bool
    generators: tuple[str, ...]
    action: S2Action | None
    relations: tuple[FormalSum, ...]
    maps: Mapping[str, GeneratorMap] = field(default_factory=dict)
    glyphs: Mapping[str, str] = field(default_factory=dict)
    # transcribed relations that could not be used, by 1-based position
    flagged: Mapping[int, str] = field(default_factory=dict)

    def arities(self) -> list[int]:
        return sorted({relation_arity(r) for r in self.relations})

    def relations_of_arity(self, n: int) -> list[FormalSum]:
        return [r for r in self.relations if relation_arity(r) == n]

    def renamed(self, name: str) -> Presentation:
        return replace(self, name=name)

    def __repr__(self) -> str:
        mode = "symmetric" if self.symmetric else "nonsymmetric"
        return (f"Presentation({self.name!r}, {mode}, {len(self.generators)} generators, "
                f"{len(self.relations)} relations)")


def relation_arity(r: FormalSum) -> int:
    for t in r.keys():
        return arity(t)
    raise PresentationError("zero relation has no arity")


def make_presentation(name: str, generators: Sequence[str], action: S2Action | None,
                      relations: Iterable[FormalSum], symmetric: bool | None = None,
                      **kw) -> Presentation:
    sym = action is not None if symmetric is None else symmetric
    return Presentation(name, sym, tuple(generators), action, tuple(relations), **kw)


def validate(p: Presentation) -> Report:
    rep = Report("validate", {"presentation": p.name})
    gens = set(p.generators)
    bad_ids = [g for g in p.generators if _bad_id(g)]
    rep.add("generator ids", not bad_ids and len(gens) == len(p.generators),
            detail=f"bad ids {bad_ids}" if bad_ids else "")
    if p.symmetric:
        if p.action is None:
            rep.add("S2 action", False, detail="symmetric presentation without an action")
        else:
            covered = set(p.action.generators()) == gens
            closed = all(set(img.keys()) <= gens for _, img in p.action.items())
            rep.add("S2 action covers generators", covered and closed)
            rep.add("S2 action is an involution", covered and closed and p.action.is_involution())
    else:
        rep.add("no S2 action in nonsymmetric mode", p.action is None)
    for i, r in enumerate(p.relations):
        problems = relation_problems(r, gens, p.symmetric)
        rep.add(f"relation {i + 1}", not problems,
                arity=relation_arity(r) if r else None, detail="; ".join(problems))
    return rep


def relation_problems(r: FormalSum, gens: set[str], symmetric: bool) -> list[str]:
    if not r:
        return ["zero relation"]
    problems = []
    sets = {leaf_set(t) for t in r.keys()}
    if len(sets) > 1:
        problems.append("monomials have different leaf sets (not homogeneous)")
    else:
        (ls,) = sets
        if ls != frozenset(range(1, len(ls) + 1)):
            problems.append(f"leaf labels {sorted(ls)} are not 1..{len(ls)}")
    used = {g for t in r.keys() for g in vertices(t)}
    if not used <= gens:
        problems.append(f"undeclared generators {sorted(used - gens)}")
    if not all(is_canonical(t, symmetric) for t in r.keys()):
        problems.append("monomials are not in canonical form")
    return problems


def require_valid(p: Presentation) -> None:
    rep = validate(p)
    if not rep.passed:
        bad = "; ".join(f"{c.name}: {c.detail}" for c in rep.failures())
        raise PresentationError(f"{p.name} does not validate: {bad}")


def closure_vectors(relations: Iterable[FormalSum], action: S2Action | None,
                    symmetric: bool) -> list[FormalSum]:
    rels = list(relations)
    if not symmetric:
        return rels
    out = []
    for r in rels:
        n = relation_arity(r)
        out.extend(apply_perm(r, s, action) for s in all_perms(n))
    return out


def basis_index(n: int, gens: Sequence[str], symmetric: bool, limit: int | None = None) -> BasisIndex:
    return BasisIndex(enumerate_basis(n, sorted(gens), symmetric, limit))


def closure_span(relations: Iterable[FormalSum], n: int, gens: Sequence[str],
                 action: S2Action | None, symmetric: bool,
                 limit: int | None = None) -> SpanBasis:
    rels = [r for r in relations if relation_arity(r) == n]
    index = basis_index(n, gens, symmetric, limit)
    return span_of(closure_vectors(rels, action, symmetric), index)


def sn_closure_span(p: Presentation, n: int, limit: int | None = None) -> SpanBasis:
    return closure_span(p.relations, n, p.generators, p.action, p.symmetric, limit)


def substitute_tree(t: Tree, f: GeneratorMap) -> FormalSum:
    """Replace every vertex label by its image, expanding multilinearly (raw trees)."""
    if isinstance(t, int):
        return FormalSum.term(t)
    if len(t) == 2:
        return FormalSum((("P", s), c) for s, c in substitute_tree(t[1], f).items())
    gen, left, right = t
    ls, rs = substitute_tree(left, f), substitute_tree(right, f)
    acc: dict = {}
    for h, ch in f[gen].items():
        for a, ca in ls.items():
            for b, cb in rs.items():
                key = (h, a, b)
                acc[key] = acc.get(key, 0) + ch * ca * cb
    return FormalSum(acc)


def substitute(s: FormalSum, f: GeneratorMap, action: S2Action | None) -> FormalSum:
    return canonicalize_sum(s.linear_map(lambda t: substitute_tree(t, f)), action)


def map_relations(p: Presentation, f: GeneratorMap,
                  target: Presentation | None = None) -> list[FormalSum]:
    """Push the relations of ``p`` through ``f``; canonical in ``target``'s free operad."""
    missing = [g for g in p.generators if g not in f]
    if missing:
        raise PresentationError(f"generator map leaves {missing} unmapped")
    if target is not None and p.symmetric:
        bad = equivariance_failures(p, target, f)
        if bad:
            raise PresentationError(f"generator map is not S2-equivariant on {bad}")
    action = target.action if target is not None else p.action
    return [substitute(r, f, action) for r in p.relations]


def equivariance_failures(p: Presentation, q: Presentation, f: GeneratorMap) -> list[str]:
    if not p.symmetric:
        return []
    return [g for g in p.generators
            if f.linear(p.action[g]) != q.action.image(f[g])]


def map_is_invertible(f: GeneratorMap, source: Sequence[str], target: Sequence[str]) -> bool:
    if len(source) != len(target):
        return False
    return rank(f.matrix(source, target)) == len(source)


def invert_map(f: GeneratorMap, source: Sequence[str], target: Sequence[str]) -> GeneratorMap:
    inv = inverse(f.matrix(source, target))
    return GeneratorMap({h: FormalSum(zip(source, inv[j])) for j, h in enumerate(target)})


def _outside(vectors: Sequence[FormalSum], span: SpanBasis) -> list[int]:
    return [i + 1 for i, v in enumerate(vectors) if not in_span(v, span)]


def equivalent(p: Presentation, q: Presentation, f: GeneratorMap,
               limit: int | None = None) -> Report:
    """Compare ``p`` and ``q`` after identifying generators through ``f: p -> q``."""
    rep = Report("equiv", {"left": p.name, "right": q.name})
    if p.symmetric != q.symmetric:
        raise PresentationError("cannot compare symmetric and nonsymmetric presentations")
    missing = [g for g in p.generators if g not in f]
    stray = sorted({h for g in p.generators if g in f for h in f[g].keys()} - set(q.generators))
    total = not missing and not stray
    rep.add("generator map is total", total,
            detail=f"unmapped {missing}" if missing else (f"unknown targets {stray}" if stray else ""))
    if not total:
        return rep
    if p.symmetric:
        bad = equivariance_failures(p, q, f)
        rep.add("generator map is S2-equivariant", not bad, detail=f"fails on {bad}" if bad else "")
        if bad:
            return rep
    inv_ok = map_is_invertible(f, p.generators, q.generators)
    rep.add("generator map is invertible", inv_ok,
            dimension_left=len(p.generators), dimension_right=len(q.generators))
    if not inv_ok:
        return rep
    for side in (p, q):
        for i, why in sorted(side.flagged.items()):
            rep.add(f"{side.name} relation {i} as transcribed", False, detail=why)
    mapped = [substitute(r, f, q.action) for r in p.relations]
    for n in sorted(set(p.arities()) | set(q.arities())):
        left_rel = [r for r in mapped if relation_arity(r) == n]
        right_rel = q.relations_of_arity(n)
        left = closure_span(left_rel, n, q.generators, q.action, q.symmetric, limit)
        right = closure_span(right_rel, n, q.generators, q.action, q.symmetric, limit)
        same = span_equal(left, right)
        detail = ""
        if not same:
            lo, ro = _outside(left_rel, right), _outside(right_rel, left)
            detail = f"left relations outside right span: {lo}; right relations outside left span: {ro}"
        rep.add("relation spans", same, arity=n, dimension_left=left.dimension,
                dimension_right=right.dimension, detail=detail)
    return rep


def change_basis(p: Presentation, f: GeneratorMap, new_generators: Sequence[str],
                 name: str | None = None) -> Presentation:
    """Rewrite ``p`` over a new generator basis; ``f`` expresses old ids in the new ones."""
    if not map_is_invertible(f, p.generators, new_generators):
        raise PresentationError("basis change is not invertible")
    action = None
    if p.symmetric:
        back = invert_map(f, p.generators, new_generators)
        action = S2Action({h: f.linear(p.action.image(back[h])) for h in new_generators})
    rels = [substitute(r, f, action) for r in p.relations]
    return Presentation(name or p.name, p.symmetric, tuple(new_generators), action, tuple(rels))


def prime(g: str) -> str:
    return g + "'"


def regularize(p: Presentation, name: str | None = None) -> Presentation:
    """The regular symmetric presentation with generators ``g`` and ``g' = g^(12)``."""
    if p.symmetric:
        raise PresentationError("regularize expects a nonsymmetric presentation")
    gens = []
    for g in p.generators:
        gens.extend([g, prime(g)])
    action = S2Action.swap((g, prime(g)) for g in p.generators)
    # a planar tree with leaves 1..n in order already has the min-leaf orientation
    return Presentation(name or f"Reg({p.name})", True, tuple(gens), action, p.relations,
                        glyphs=dict(p.glyphs))


V_WORDS = {
    1: "(xy)z", 2: "x(yz)", 3: "x(zy)", 4: "(xz)y",
    5: "(zx)y", 6: "z(xy)", 7: "z(yx)", 8: "(zy)x",
    9: "(yz)x", 10: "y(zx)", 11: "y(xz)", 12: "(yx)z",
}
_VAR = {"x": 1, "y": 2, "z": 3}


def v_word_tree(i: int, mu: str = "mu") -> Tree:
    """The planar tree of the word for ``v_i``, with a single product ``mu``."""
    if i not in V_WORDS:
        raise ValueError("v index must be in 1..12")
    w = V_WORDS[i]
    if w[0] == "(":
        return (mu, (mu, _VAR[w[1]], _VAR[w[2]]), _VAR[w[4]])
    return (mu, _VAR[w[0]], (mu, _VAR[w[2]], _VAR[w[3]]))


def standard_v(i: int, mu: str = "mu", mu_prime: str | None = None) -> Tree:
    """Canonical monomial for ``v_i`` over generators ``mu`` and ``mu' = mu^(12)``."""
    mp = mu_prime or prime(mu)
    s = canonicalize(v_word_tree(i, mu), S2Action.swap([(mu, mp)]))
    (t,) = s.keys()
    return t


def generator_orbits(p: Presentation) -> list[list[str]]:
    """Generators grouped by the S2 action: ``mu, mu'`` form one orbit, a skew ``br`` its own."""
    parent = {g: g for g in p.generators}

    def find(g):
        while parent[g] != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    if p.symmetric:
        for g, img in p.action.items():
            for h in img.keys():
                parent[find(h)] = find(g)
    groups: dict[str, list[str]] = {}
    for g in p.generators:
        groups.setdefault(find(g), []).append(g)
    return list(groups.values())
