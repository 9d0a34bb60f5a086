"""Algebras given by structure constants, and the induced operations on matrices.

An algebra of dimension ``d`` has basis ``e_1 .. e_d`` and, for each
operation name, constants ``e_i * e_j = sum_k c_ijk e_k``.  Elements are
tuples of Fractions.  A matrix over the algebra is a tuple of rows of
elements; ``matrix_op`` sums ``op(M[i][l], N[l][j])`` over ``l``.

Checks on random inputs use small integer coordinates in ``{-2, ..., 2}``.
Arithmetic is exact, so a failure is a genuine counterexample; a pass on
random data is evidence.  Relations are multilinear, so the sweep over basis
tuples in :func:`algebra_relation_check` is a proof when it runs.
"""
from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .linalg import format_rational, parse_rational
from .presentation import Presentation, PresentationError
from .report import Report
from .trees import Tree, leaves

Element = tuple[Fraction, ...]
Matrix = tuple[tuple[Element, ...], ...]
# an expression for a generator: sum of coeff * op(a, b), or op(b, a) if swapped
OpTerms = Sequence[tuple[int | Fraction, str, bool]]

BASIS_SWEEP_LIMIT = 20_000


class AlgebraError(ValueError):
    pass


class FiniteAlgebra:
    def __init__(self, dimension: int, operations: Mapping[str, Mapping[tuple[int, int, int], object]]):
        if dimension < 0:
            raise AlgebraError("dimension must be nonnegative")
        ops = {}
        for name, consts in operations.items():
            table = {}
            for (i, j, k), c in consts.items():
                if not all(1 <= v <= dimension for v in (i, j, k)):
                    raise AlgebraError(f"index ({i}, {j}, {k}) out of range 1..{dimension}")
                c = Fraction(c) if not isinstance(c, str) else parse_rational(c)
                if c:
                    table[(i, j, k)] = table.get((i, j, k), Fraction(0)) + c
            ops[name] = {key: c for key, c in table.items() if c}
        self.dimension = dimension
        self.operations = ops

    def zero(self) -> Element:
        return (Fraction(0),) * self.dimension

    def basis(self, i: int) -> Element:
        return tuple(Fraction(int(k == i)) for k in range(1, self.dimension + 1))

    def multiply(self, op: str, a: Element, b: Element) -> Element:
        try:
            table = self.operations[op]
        except KeyError:
            raise AlgebraError(f"algebra has no operation {op!r}") from None
        out = [Fraction(0)] * self.dimension
        for (i, j, k), c in table.items():
            ai, bj = a[i - 1], b[j - 1]
            if ai and bj:
                out[k - 1] += c * ai * bj
        return tuple(out)

    def apply(self, terms: OpTerms, a: Element, b: Element) -> Element:
        out = [Fraction(0)] * self.dimension
        for c, op, swapped in terms:
            v = self.multiply(op, b, a) if swapped else self.multiply(op, a, b)
            for k in range(self.dimension):
                out[k] += Fraction(c) * v[k]
        return tuple(out)

    def random_element(self, rng: random.Random) -> Element:
        return tuple(Fraction(rng.randint(-2, 2)) for _ in range(self.dimension))

    def to_json(self) -> dict:
        return {"dimension": self.dimension,
                "operations": {name: [[i, j, k, format_rational(c)] for (i, j, k), c in sorted(t.items())]
                               for name, t in self.operations.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> FiniteAlgebra:
        try:
            ops = {name: {(int(i), int(j), int(k)): parse_rational(str(c)) for i, j, k, c in rows}
                   for name, rows in obj["operations"].items()}
            return cls(int(obj["dimension"]), ops)
        except (KeyError, TypeError, ValueError) as exc:
            raise AlgebraError(f"malformed algebra: {exc}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def __repr__(self) -> str:
        return f"FiniteAlgebra(dim={self.dimension}, ops={sorted(self.operations)})"


def zinbiel_2dim() -> FiniteAlgebra:
    """``e1 . e1 = e2``, all other products zero."""
    return FiniteAlgebra(2, {"dot": {(1, 1, 2): 1}})


def shuffle_zinbiel(d: int) -> FiniteAlgebra:
    """Half-shuffle product on powers ``e_p = x^p`` of one letter, cut off above degree ``d``.

    ``e_p . e_q = C(p+q-1, q-1) e_(p+q)``: the last letter comes from the right factor.
    """
    consts = {(p, q, p + q): comb(p + q - 1, q - 1)
              for p in range(1, d + 1) for q in range(1, d + 1) if p + q <= d}
    return FiniteAlgebra(d, {"dot": consts})


# evaluation ---------------------------------------------------------------

def default_op_map(p: Presentation, a: FiniteAlgebra) -> dict[str, list]:
    """Generators named like algebra operations act directly; others through the S2 action."""
    out = {}
    for g in p.generators:
        if g in a.operations:
            out[g] = [(1, g, False)]
        elif p.symmetric and all(h in a.operations for h in p.action[g].keys()):
            out[g] = [(c, h, True) for h, c in p.action[g].items()]
    missing = [g for g in p.generators if g not in out]
    if missing:
        raise PresentationError(f"no algebra operation for generators {missing}")
    return out


def evaluate(t: Tree, values: Mapping[int, Element], a: FiniteAlgebra,
             op_map: Mapping[str, OpTerms]) -> Element:
    if isinstance(t, int):
        return values[t]
    gen, left, right = t
    return a.apply(op_map[gen], evaluate(left, values, a, op_map), evaluate(right, values, a, op_map))


def evaluate_sum(s, values, a, op_map) -> Element:
    out = [Fraction(0)] * a.dimension
    for t, c in s.items():
        v = evaluate(t, values, a, op_map)
        for k in range(a.dimension):
            out[k] += c * v[k]
    return tuple(out)


def _arity(r) -> int:
    return len(leaves(next(iter(r.keys()))))


def algebra_relation_check(a: FiniteAlgebra, p: Presentation, trials: int = 100, seed: int = 0,
                           op_map: Mapping[str, OpTerms] | None = None) -> Report:
    op_map = dict(op_map) if op_map is not None else default_op_map(p, a)
    rng = random.Random(seed)
    rep = Report("check-matrix", {"algebra_dimension": a.dimension, "presentation": p.name,
                                  "trials": trials, "seed": seed})
    for idx, r in enumerate(p.relations, 1):
        n = _arity(r)
        witness = None
        for _ in range(trials):
            vals = {x: a.random_element(rng) for x in range(1, n + 1)}
            if any(evaluate_sum(r, vals, a, op_map)):
                witness = vals
                break
        if witness is None and a.dimension ** n <= BASIS_SWEEP_LIMIT:
            for combo in itertools.product(range(1, a.dimension + 1), repeat=n):
                vals = {x: a.basis(i) for x, i in zip(range(1, n + 1), combo)}
                if any(evaluate_sum(r, vals, a, op_map)):
                    witness = {x: f"e{i}" for x, i in zip(range(1, n + 1), combo)}
                    break
            how = "random trials and every basis tuple"
        else:
            how = f"{trials} random trials"
        detail = f"nonzero on {_fmt_witness(witness)}" if witness is not None else how
        rep.add(f"relation {idx} vanishes on the algebra", witness is None, arity=n, detail=detail)
    return rep


def _fmt_witness(vals) -> str:
    return ", ".join(f"x{k}={v if isinstance(v, str) else [format_rational(c) for c in v]}"
                     for k, v in sorted(vals.items()))


# matrices -----------------------------------------------------------------

def zero_matrix(a: FiniteAlgebra, n: int) -> Matrix:
    return tuple(tuple(a.zero() for _ in range(n)) for _ in range(n))


def random_matrix(a: FiniteAlgebra, n: int, rng: random.Random) -> Matrix:
    return tuple(tuple(a.random_element(rng) for _ in range(n)) for _ in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else m


def _check_shapes(a: FiniteAlgebra, *ms: Matrix) -> int:
    n = len(ms[0])
    for m in ms:
        if len(m) != n or any(len(row) != n for row in m):
            raise AlgebraError("matrices must be square of equal size")
        if any(len(e) != a.dimension for row in m for e in row):
            raise AlgebraError("matrix entries do not match the algebra dimension")
    return n


def matrix_op(a: FiniteAlgebra, terms: OpTerms, m: Matrix, nm: Matrix) -> Matrix:
    """``(M * N)_ij = sum_l op(M_il, N_lj)`` with ``op`` given by ``terms``."""
    n = _check_shapes(a, m, nm)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = [Fraction(0)] * a.dimension
            for l in range(n):
                v = a.apply(terms, m[i][l], nm[l][j])
                for k in range(a.dimension):
                    acc[k] += v[k]
            row.append(tuple(acc))
        rows.append(tuple(row))
    return tuple(rows)


def evaluate_matrix(t: Tree, values: Mapping[int, Matrix], a: FiniteAlgebra,
                    op_map: Mapping[str, OpTerms]) -> Matrix:
    if isinstance(t, int):
        return values[t]
    gen, left, right = t
    return matrix_op(a, op_map[gen], evaluate_matrix(left, values, a, op_map),
                     evaluate_matrix(right, values, a, op_map))


def _matrix_sum(s, values, a, op_map, n) -> Matrix:
    acc = [[[Fraction(0)] * a.dimension for _ in range(n)] for _ in range(n)]
    for t, c in s.items():
        m = evaluate_matrix(t, values, a, op_map)
        for i in range(n):
            for j in range(n):
                for k in range(a.dimension):
                    acc[i][j][k] += c * m[i][j][k]
    return tuple(tuple(tuple(e) for e in row) for row in acc)


def is_zero_matrix(m: Matrix) -> bool:
    return not any(c for row in m for e in row for c in e)


def matrix_relation_check(p_ns: Presentation, a: FiniteAlgebra, op_map: Mapping[str, OpTerms],
                          size: int = 2, trials: int = 100, seed: int = 0) -> Report:
    if p_ns.symmetric:
        raise PresentationError("matrix checks take a nonsymmetric presentation")
    missing = [g for g in p_ns.generators if g not in op_map]
    if missing:
        raise PresentationError(f"no matrix operation for generators {missing}")
    rng = random.Random(seed)
    rep = Report("check-matrix", {"presentation": p_ns.name, "algebra_dimension": a.dimension,
                                  "size": size, "trials": trials, "seed": seed})
    for idx, r in enumerate(p_ns.relations, 1):
        n = _arity(r)
        bad = None
        for trial in range(trials):
            vals = {x: random_matrix(a, size, rng) for x in range(1, n + 1)}
            if not is_zero_matrix(_matrix_sum(r, vals, a, op_map, size)):
                bad = trial
                break
        rep.add(f"relation {idx} on {size}x{size} matrices", bad is None, arity=n,
                detail=f"nonzero at trial {bad}" if bad is not None else f"{trials} exact trials")
    return rep


ZINBIEL_LEFT: OpTerms = ((1, "dot", False),)   # M ◁ N: sum M_il . N_lj
ZINBIEL_RIGHT: OpTerms = ((1, "dot", True),)   # M ▷ N: sum N_lj . M_il
DEND_ON_ZINBIEL_MATRICES = {"prec": ZINBIEL_RIGHT, "succ": ZINBIEL_LEFT}
ZINBIEL_TRANSPOSE_PAIRS = (("◁", ZINBIEL_LEFT, "▷", ZINBIEL_RIGHT),
                           ("▷", ZINBIEL_RIGHT, "◁", ZINBIEL_LEFT))


def transpose_law_check(a: FiniteAlgebra, size: int = 2, trials: int = 100, seed: int = 0,
                        pairs: Iterable = ZINBIEL_TRANSPOSE_PAIRS) -> Report:
    """``t(M op N) = t(N) op' t(M)`` for each ``(op, op')`` pair."""
    rng = random.Random(seed)
    rep = Report("check-matrix", {"algebra_dimension": a.dimension, "size": size,
                                  "trials": trials, "seed": seed, "law": "transpose"})
    pairs = list(pairs)
    samples = [(random_matrix(a, size, rng), random_matrix(a, size, rng)) for _ in range(trials)]
    for name, op, dual_name, dual in pairs:
        bad = next((k for k, (m, n) in enumerate(samples)
                    if transpose(matrix_op(a, op, m, n)) != matrix_op(a, dual, transpose(n), transpose(m))),
                   None)
        rep.add(f"t(M {name} N) = t(N) {dual_name} t(M)", bad is None,
                detail=f"fails at trial {bad}" if bad is not None else f"{trials} exact trials")
    return rep
