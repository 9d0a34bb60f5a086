from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from opsucc.linalg import (BasisIndex, FormalSum, IndexMismatch, format_rational, fsum,
                           in_span, inverse, parse_rational, rank, residual, span_equal,
                           span_of, span_sum, to_rational)


def test_rationals_parse_and_print():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == -4
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    for bad in ("1.5", "1e3", "1/0", "x"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_formal_sum_drops_zeros_and_combines():
    a = FormalSum({"x": 1, "y": 2})
    b = FormalSum({"x": -1, "z": "1/2"})
    s = a + b
    assert dict(s.items()) == {"y": 2, "z": Fraction(1, 2)}
    assert not (a - a)
    assert a.scale(0) == FormalSum.zero()
    assert fsum([a, b, -a]) == b
    assert hash(FormalSum({"x": 1})) == hash(FormalSum([("x", 1)]))


def test_linear_map_expands():
    s = FormalSum({"a": 2, "b": 1})
    out = s.linear_map(lambda k: FormalSum({k + "1": 1, k + "2": -1}))
    assert out == FormalSum({"a1": 2, "a2": -2, "b1": 1, "b2": -1})


def test_span_membership_and_residual():
    v1, v2 = FormalSum({"a": 1, "b": 1}), FormalSum({"b": 1, "c": 1})
    s = span_of([v1, v2], BasisIndex(["a", "b", "c"]))
    assert s.dimension == 2
    assert in_span(v1 - v2, s)
    w = FormalSum({"a": 1})
    assert not in_span(w, s)
    assert residual(v1 + v2, s) == FormalSum.zero()
    assert residual(w, s)


def test_rref_rows_are_canonical():
    idx = BasisIndex(["a", "b", "c"])
    s1 = span_of([FormalSum({"a": 2, "b": 4}), FormalSum({"b": 1, "c": -1})], idx)
    s2 = span_of([FormalSum({"a": 1, "c": 2}), FormalSum({"a": 1, "b": 1, "c": 1})], idx)
    assert span_equal(s1, s2)
    for row in s1.rows:
        assert row[0][1] == 1


def test_span_index_mismatch():
    a = span_of([FormalSum({"a": 1})], BasisIndex(["a"]))
    b = span_of([FormalSum({"a": 1})], BasisIndex(["a", "b"]))
    with pytest.raises(IndexMismatch):
        span_equal(a, b)
    with pytest.raises(IndexMismatch):
        span_sum(a, b)
    with pytest.raises(IndexMismatch):
        BasisIndex(["a"]).position("z")


def test_inverse_and_singular():
    m = [[2, 1], [1, 1]]
    inv = inverse(m)
    assert inv == [[1, -1], [-1, 2]]
    with pytest.raises(ValueError):
        inverse([[1, 2], [2, 4]])


small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=5),
       st.lists(small, min_size=3, max_size=3))
def test_membership_matches_sympy(rows, v):
    idx = BasisIndex(range(3))
    s = span_of([FormalSum(enumerate(r)) for r in rows], idx)
    expected = sympy.Matrix(rows + [v]).rank() == sympy.Matrix(rows).rank()
    assert in_span(FormalSum(enumerate(v)), s) == expected
    assert s.dimension == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.sampled_from("abcd"), small), st.dictionaries(st.sampled_from("abcd"), small),
       small)
def test_formal_sum_is_a_vector_space(x, y, c):
    a, b = FormalSum(x), FormalSum(y)
    assert a + b == b + a
    assert (a + b).scale(c) == a.scale(c) + b.scale(c)
    assert a - a == FormalSum.zero()
