"""Labeled planar binary trees and canonical forms in the free binary operad.

A tree is either a leaf, represented by its positive integer label, or a
node ``(gen, left, right)`` where ``gen`` is a generator id string.  This is
literally the nested-array interchange format with tuples in place of lists,
so trees are hashable and cheap to compare.

In symmetric mode a monomial is canonical when at every vertex the smallest
leaf label of the left subtree is below that of the right subtree.  Moving a
vertex into canonical orientation swaps its children and replaces the label
by its image under the transposition ``(12)``, which in general is a linear
combination of generators.  In nonsymmetric mode leaves read ``1..n`` from
left to right and nothing is ever swapped.
"""
from __future__ import annotations

import enum
import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .linalg import FormalSum, format_rational, parse_rational

Tree = Union[int, tuple]

DEFAULT_ARITY_LIMIT = 6


class TreeError(ValueError):
    """Malformed tree or invalid tree operation."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size guard."""


class Turn(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


def is_leaf(t: Tree) -> bool:
    return isinstance(t, int)


def leaves(t: Tree) -> list[int]:
    """Leaf labels read from left to right."""
    if isinstance(t, int):
        return [t]
    if len(t) == 2:
        return leaves(t[1])
    return leaves(t[1]) + leaves(t[2])


def leaf_set(t: Tree) -> frozenset[int]:
    return frozenset(leaves(t))


def arity(t: Tree) -> int:
    return len(leaves(t))


def min_leaf(t: Tree) -> int:
    return min(leaves(t))


def vertices(t: Tree) -> list[str]:
    """Vertex labels in preorder."""
    if isinstance(t, int):
        return []
    if len(t) == 2:
        return [t[0]] + vertices(t[1])
    return [t[0]] + vertices(t[1]) + vertices(t[2])


def graft(left: Tree, right: Tree, gen: str) -> Tree:
    if leaf_set(left) & leaf_set(right):
        raise TreeError("grafted trees share leaf labels")
    return (gen, left, right)


def decompose(t: Tree) -> tuple[Tree, str, Tree]:
    if isinstance(t, int):
        raise TreeError("a single leaf has no decomposition")
    if len(t) != 3:
        raise TreeError("decompose expects a binary vertex at the root")
    gen, left, right = t
    return left, gen, right


def check_tree(t: Tree, allow_unary: bool = False) -> None:
    """Raise :class:`TreeError` unless ``t`` is well formed with distinct labels."""
    labels = []

    def walk(s):
        if isinstance(s, bool) or not isinstance(s, (int, tuple)):
            raise TreeError(f"not a tree: {s!r}")
        if isinstance(s, int):
            if s < 1:
                raise TreeError("leaf labels must be positive integers")
            labels.append(s)
            return
        if len(s) == 3 and isinstance(s[0], str):
            walk(s[1])
            walk(s[2])
        elif allow_unary and len(s) == 2 and s[0] == "P":
            walk(s[1])
        else:
            raise TreeError(f"malformed vertex: {s!r}")

    walk(t)
    if len(set(labels)) != len(labels):
        raise TreeError("leaf labels are not distinct")


class S2Action:
    """The image of each generator under the transposition (12).

    Immutable and hashable so that canonicalization can be memoized per
    action.  ``None`` is used elsewhere for nonsymmetric mode.
    """

    __slots__ = ("_images", "_key")

    def __init__(self, images: Mapping[str, FormalSum | Mapping[str, object]]):
        imgs = {}
        for g, img in images.items():
            imgs[g] = img if isinstance(img, FormalSum) else FormalSum(img)
        self._images = imgs
        self._key = tuple(sorted((g, tuple(sorted(v.items()))) for g, v in imgs.items()))

    @classmethod
    def swap(cls, pairs: Iterable[tuple[str, str]]) -> S2Action:
        """Action exchanging each pair (a, b); a == b denotes a symmetric generator."""
        imgs = {}
        for a, b in pairs:
            imgs[a] = FormalSum.term(b)
            imgs[b] = FormalSum.term(a)
        return cls(imgs)

    @classmethod
    def signs(cls, table: Mapping[str, int]) -> S2Action:
        """Action g -> sign * g (1 for symmetric, -1 for skew generators)."""
        return cls({g: FormalSum.term(g, s) for g, s in table.items()})

    def __getitem__(self, gen: str) -> FormalSum:
        try:
            return self._images[gen]
        except KeyError:
            raise TreeError(f"generator {gen!r} has no S2 image") from None

    def __contains__(self, gen: str) -> bool:
        return gen in self._images

    def generators(self) -> list[str]:
        return list(self._images)

    def items(self):
        return self._images.items()

    def image(self, v: FormalSum) -> FormalSum:
        return v.linear_map(self.__getitem__)

    def is_involution(self) -> bool:
        return all(self.image(img) == FormalSum.term(g) for g, img in self._images.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, S2Action) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"S2Action({dict(self._images)!r})"


@lru_cache(maxsize=200_000)
def _canon(t: Tree, action: S2Action) -> tuple:
    if isinstance(t, int):
        return ((t, 1),)
    if len(t) == 2:
        return tuple(((t[0], s), c) for s, c in _canon(t[1], action))
    gen, left, right = t
    lt, rt = _canon(left, action), _canon(right, action)
    out: dict = {}
    if min_leaf(left) < min_leaf(right):
        for (a, ca), (b, cb) in itertools.product(lt, rt):
            key = (gen, a, b)
            out[key] = out.get(key, 0) + ca * cb
    else:
        for h, ch in action[gen].items():
            for (a, ca), (b, cb) in itertools.product(lt, rt):
                key = (h, b, a)
                out[key] = out.get(key, 0) + ch * ca * cb
    return tuple((k, v) for k, v in out.items() if v)


def canonicalize(raw: Tree, action: S2Action | None) -> FormalSum:
    """Express ``raw`` over canonical monomials.  ``action=None`` means nonsymmetric."""
    if action is None:
        return FormalSum.term(raw)
    return FormalSum(_canon(raw, action))


def canonicalize_sum(s: FormalSum, action: S2Action | None) -> FormalSum:
    if action is None:
        return s
    return s.linear_map(lambda t: canonicalize(t, action))


def is_canonical(t: Tree, symmetric: bool = True) -> bool:
    if symmetric:
        if isinstance(t, int):
            return True
        if len(t) == 2:
            return is_canonical(t[1])
        return min_leaf(t[1]) < min_leaf(t[2]) and is_canonical(t[1]) and is_canonical(t[2])
    return leaves(t) == list(range(1, arity(t) + 1))


def relabel(t: Tree, mapping: Mapping[int, int]) -> Tree:
    if isinstance(t, int):
        return mapping[t]
    if len(t) == 2:
        return (t[0], relabel(t[1], mapping))
    return (t[0], relabel(t[1], mapping), relabel(t[2], mapping))


def map_vertices(t: Tree, fn) -> Tree:
    """Replace each binary vertex label ``g`` by ``fn(g)``, keeping shape."""
    if isinstance(t, int):
        return t
    if len(t) == 2:
        return (t[0], map_vertices(t[1], fn))
    return (fn(t[0]), map_vertices(t[1], fn), map_vertices(t[2], fn))


Permutation = tuple  # sigma[i - 1] is the image of i


def inverse_perm(sigma: Sequence[int]) -> Permutation:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def compose_perm(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    """``(sigma tau)(x) = sigma(tau(x))``."""
    return tuple(sigma[t - 1] for t in tau)


def all_perms(n: int) -> Iterator[Permutation]:
    return itertools.permutations(range(1, n + 1))


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation such as ``"(12)"`` or ``"(1 2 3)(4 5)"``."""
    s = text.replace(" ", "").replace(",", "")
    if not s or s == "()" or s == "id":
        return tuple(range(1, (n or 1) + 1))
    cycles = []
    i = 0
    while i < len(s):
        if s[i] != "(":
            raise ValueError(f"bad cycle notation: {text!r}")
        j = s.index(")", i)
        body = s[i + 1:j]
        if not body.isdigit():
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles.append([int(ch) for ch in body])
        i = j + 1
    top = max([max(c) for c in cycles if c] + [n or 0])
    img = list(range(1, top + 1))
    seen = set()
    for c in cycles:
        if seen & set(c) or len(set(c)) != len(c):
            raise ValueError(f"cycles are not disjoint: {text!r}")
        seen |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b
    return tuple(img)


def format_cycles(sigma: Sequence[int]) -> str:
    seen, out = set(), []
    for start in range(1, len(sigma) + 1):
        if start in seen or sigma[start - 1] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = sigma[x - 1]
        out.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def apply_perm(t: FormalSum | Tree, sigma: Sequence[int], action: S2Action) -> FormalSum:
    """Right action ``t -> t^sigma``: leaf ``x`` is relabeled ``sigma^{-1}(x)``."""
    s = t if isinstance(t, FormalSum) else FormalSum.term(t)
    inv = inverse_perm(sigma)
    mapping = {i: inv[i - 1] for i in range(1, len(sigma) + 1)}

    def one(m):
        if leaf_set(m) != frozenset(mapping):
            raise TreeError("permutation size does not match the tree arity")
        return canonicalize(relabel(m, mapping), action)

    return s.linear_map(one)


def path_to_leaf(t: Tree, x: int) -> list[tuple[tuple[Turn, ...], Turn]]:
    """Root-to-``x`` path as (vertex address, turn) pairs.

    A vertex address is the sequence of turns leading to it from the root.
    """
    path = []
    addr: tuple[Turn, ...] = ()
    node = t
    while not isinstance(node, int):
        if len(node) == 2:
            node = node[1]
            continue
        gen, left, right = node
        if x in leaf_set(left):
            turn, node = Turn.LEFT, left
        elif x in leaf_set(right):
            turn, node = Turn.RIGHT, right
        else:
            raise TreeError(f"leaf {x} is not in the tree")
        path.append((addr, turn))
        addr = addr + (turn,)
    if node != x:
        raise TreeError(f"leaf {x} is not in the tree")
    return path


def shape_code(t: Tree) -> tuple[int, ...]:
    if isinstance(t, int):
        return (0,)
    if len(t) == 2:
        return (2,) + shape_code(t[1])
    return (1,) + shape_code(t[1]) + shape_code(t[2])


def basis_key(t: Tree) -> tuple:
    """Total order on monomials: shape, then vertex labels, then leaf labels."""
    return (shape_code(t), tuple(vertices(t)), tuple(leaves(t)))


def _check_limit(n: int, limit: int | None) -> None:
    lim = DEFAULT_ARITY_LIMIT if limit is None else limit
    if n > lim:
        raise ResourceLimitError(f"arity {n} exceeds the configured limit {lim}")


def _sym_trees(labels: tuple[int, ...], gens: tuple[str, ...]) -> list[Tree]:
    if len(labels) == 1:
        return [labels[0]]
    first, rest = labels[0], labels[1:]
    out = []
    # left part always holds the smallest label
    for k in range(0, len(rest)):
        for extra in itertools.combinations(rest, k):
            left = (first,) + extra
            right = tuple(x for x in rest if x not in extra)
            for a in _sym_trees(left, gens):
                for b in _sym_trees(right, gens):
                    out.extend((g, a, b) for g in gens)
    return out


def _ns_trees(lo: int, hi: int, gens: tuple[str, ...]) -> list[Tree]:
    if lo == hi:
        return [lo]
    out = []
    for mid in range(lo, hi):
        for a in _ns_trees(lo, mid, gens):
            for b in _ns_trees(mid + 1, hi, gens):
                out.extend((g, a, b) for g in gens)
    return out


@lru_cache(maxsize=256)
def _enumerate(n: int, gens: tuple[str, ...], symmetric: bool) -> tuple:
    trees = _sym_trees(tuple(range(1, n + 1)), gens) if symmetric else _ns_trees(1, n, gens)
    return tuple(sorted(trees, key=basis_key))


def enumerate_basis(n: int, gens: Sequence[str], symmetric: bool = True,
                    limit: int | None = None) -> list[Tree]:
    """All canonical monomials of arity ``n``, in basis order."""
    if n < 1:
        raise ValueError("arity must be at least 1")
    _check_limit(n, limit)
    return list(_enumerate(n, tuple(gens), symmetric))


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def catalan(k: int) -> int:
    from math import comb
    return comb(2 * k, k) // (k + 1)


def expected_basis_size(n: int, g: int, symmetric: bool = True) -> int:
    if n == 1:
        return 1
    shapes = double_factorial(2 * n - 3) if symmetric else catalan(n - 1)
    return shapes * g ** (n - 1)


# interchange: nested lists, coefficients as "p/q" strings

def tree_to_json(t: Tree):
    if isinstance(t, int):
        return t
    return [t[0]] + [tree_to_json(c) for c in t[1:]]


def tree_from_json(obj, allow_unary: bool = False) -> Tree:
    def conv(o):
        if isinstance(o, bool):
            raise TreeError(f"not a tree: {o!r}")
        if isinstance(o, int):
            return o
        if isinstance(o, list) and o and isinstance(o[0], str):
            return (o[0],) + tuple(conv(c) for c in o[1:])
        raise TreeError(f"not a tree: {o!r}")

    t = conv(obj)
    check_tree(t, allow_unary=allow_unary)
    return t


def sum_to_json(s: FormalSum) -> list[dict]:
    return [{"coeff": format_rational(c), "tree": tree_to_json(t)}
            for t, c in sorted(s.items(), key=lambda kv: basis_key(kv[0]))]


def sum_from_json(terms, allow_unary: bool = False) -> FormalSum:
    return FormalSum((tree_from_json(d["tree"], allow_unary), parse_rational(str(d["coeff"])))
                     for d in terms)
