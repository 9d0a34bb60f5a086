"""Exact rational formal sums and span computations by row reduction.

Coefficients are :class:`fractions.Fraction` throughout; nothing here ever
touches a float.  A :class:`SpanBasis` stores the reduced row echelon form
of a set of vectors with respect to a fixed ordered :class:`BasisIndex`, so
two spans over the same index are equal exactly when their stored rows are.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence

Rational = Fraction


class IndexMismatch(ValueError):
    """Raised when spans or vectors live over incomparable basis indices."""


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and exponents are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class FormalSum:
    """A finite linear combination of hashable keys with rational coefficients.

    Instances are treated as immutable; every operation returns a new sum and
    zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            c = to_rational(coeff)
            if c:
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> FormalSum:
        # terms must already be free of zeros
        out = cls.__new__(cls)
        out._terms = terms
        out._hash = None
        return out

    @classmethod
    def term(cls, key: Hashable, coeff=1) -> FormalSum:
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> FormalSum:
        return cls._wrap({})

    # mapping-like access
    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __getitem__(self, key) -> Fraction:
        return self.coeff(key)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic
    def __add__(self, other: FormalSum) -> FormalSum:
        if not isinstance(other, FormalSum):
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms.items():
            s = acc.get(k, 0) + v
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return FormalSum._wrap(acc)

    def __neg__(self) -> FormalSum:
        return FormalSum._wrap({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: FormalSum) -> FormalSum:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> FormalSum:
        c = to_rational(c)
        if not c:
            return FormalSum.zero()
        return FormalSum._wrap({k: v * c for k, v in self._terms.items()})

    def __mul__(self, c) -> FormalSum:
        if isinstance(c, FormalSum):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalSum):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        body = " + ".join(f"{format_rational(v)}*{k!r}" for k, v in self._terms.items())
        return f"FormalSum({body})"

    def linear_map(self, fn: Callable[[Hashable], FormalSum]) -> FormalSum:
        """Extend ``fn`` (key -> FormalSum) linearly."""
        acc: dict = {}
        for key, c in self._terms.items():
            for k2, c2 in fn(key).items():
                s = acc.get(k2, 0) + c * c2
                if s:
                    acc[k2] = s
                else:
                    acc.pop(k2, None)
        return FormalSum._wrap(acc)

    def map_keys(self, fn: Callable[[Hashable], Hashable]) -> FormalSum:
        return FormalSum((fn(k), v) for k, v in self._terms.items())

    def sorted_items(self, key: Callable | None = None) -> list:
        return sorted(self._terms.items(), key=(lambda kv: key(kv[0])) if key else None)


def fsum(sums: Iterable[FormalSum]) -> FormalSum:
    acc: dict = {}
    for s in sums:
        for k, v in s.items():
            t = acc.get(k, 0) + v
            if t:
                acc[k] = t
            else:
                acc.pop(k, None)
    return FormalSum._wrap(acc)


class BasisIndex:
    """An ordered tuple of basis keys; column ``i`` of every span is ``keys[i]``."""

    __slots__ = ("keys", "_pos")

    def __init__(self, keys: Iterable[Hashable]):
        self.keys = tuple(keys)
        self._pos = {k: i for i, k in enumerate(self.keys)}
        if len(self._pos) != len(self.keys):
            raise ValueError("duplicate keys in basis index")

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, key) -> bool:
        return key in self._pos

    def position(self, key) -> int:
        try:
            return self._pos[key]
        except KeyError:
            raise IndexMismatch(f"key {key!r} is not in the basis index") from None

    def __eq__(self, other) -> bool:
        return isinstance(other, BasisIndex) and self.keys == other.keys

    def __hash__(self) -> int:
        return hash(self.keys)

    def vector(self, v: FormalSum) -> dict[int, Fraction]:
        return {self.position(k): c for k, c in v.items()}


def _reduce(vec: dict[int, Fraction], pivots: dict[int, dict[int, Fraction]]) -> dict[int, Fraction]:
    # pivot rows are fully reduced, so one pass over the pivot columns suffices
    vec = dict(vec)
    for col in [c for c in vec if c in pivots]:
        factor = vec.get(col)
        if not factor:
            continue
        for c, x in pivots[col].items():
            s = vec.get(c, 0) - factor * x
            if s:
                vec[c] = s
            else:
                vec.pop(c, None)
    return vec


def _insert(vec: dict[int, Fraction], pivots: dict[int, dict[int, Fraction]]) -> bool:
    vec = _reduce(vec, pivots)
    if not vec:
        return False
    p = min(vec)
    lead = vec[p]
    vec = {c: x / lead for c, x in vec.items()}
    for row in pivots.values():
        factor = row.get(p)
        if factor:
            for c, x in vec.items():
                s = row.get(c, 0) - factor * x
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
    pivots[p] = vec
    return True


class SpanBasis:
    """Reduced row echelon basis of a subspace, over a fixed :class:`BasisIndex`."""

    __slots__ = ("index", "rows")

    def __init__(self, index: BasisIndex, rows: Sequence[tuple[tuple[int, Fraction], ...]]):
        self.index = index
        self.rows = tuple(rows)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(r[0][0] for r in self.rows)

    def basis_vectors(self) -> list[FormalSum]:
        keys = self.index.keys
        return [FormalSum({keys[c]: x for c, x in row}) for row in self.rows]

    def __contains__(self, v: FormalSum) -> bool:
        return in_span(v, self)

    def __repr__(self) -> str:
        return f"SpanBasis(dim={self.dimension}, ambient={len(self.index)})"


def _pivot_dict(s: SpanBasis) -> dict[int, dict[int, Fraction]]:
    return {row[0][0]: dict(row) for row in s.rows}


def span_of(vectors: Iterable[FormalSum], index: BasisIndex | None = None,
            sort_key: Callable | None = None) -> SpanBasis:
    """Row-reduce ``vectors``.  Without an explicit index, one is built from the
    keys that occur, ordered by ``sort_key`` (or natural order)."""
    vectors = list(vectors)
    if index is None:
        keys = {k for v in vectors for k in v.keys()}
        index = BasisIndex(sorted(keys, key=sort_key))
    pivots: dict[int, dict[int, Fraction]] = {}
    for v in vectors:
        _insert(index.vector(v), pivots)
    rows = [tuple(sorted(pivots[p].items())) for p in sorted(pivots)]
    return SpanBasis(index, rows)


def span_equal(a: SpanBasis, b: SpanBasis) -> bool:
    if a.index != b.index:
        raise IndexMismatch("spans live over different basis indices")
    return a.rows == b.rows


def in_span(v: FormalSum, s: SpanBasis) -> bool:
    if not v:
        return True
    return not _reduce(s.index.vector(v), _pivot_dict(s))


def residual(v: FormalSum, s: SpanBasis) -> FormalSum:
    """The part of ``v`` left after reduction against ``s`` (zero iff ``v`` in ``s``)."""
    red = _reduce(s.index.vector(v), _pivot_dict(s))
    keys = s.index.keys
    return FormalSum({keys[c]: x for c, x in red.items()})


def span_sum(a: SpanBasis, b: SpanBasis) -> SpanBasis:
    if a.index != b.index:
        raise IndexMismatch("spans live over different basis indices")
    return span_of(a.basis_vectors() + b.basis_vectors(), a.index)


# dense helpers for the small matrices of generator maps

def rank(matrix: Sequence[Sequence]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in matrix:
        _insert({j: to_rational(x) for j, x in enumerate(row) if x}, pivots)
    return len(pivots)


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of a square rational matrix; raises ``ValueError`` if singular."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    aug = [[to_rational(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
