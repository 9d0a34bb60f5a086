"""Rewriting is checked against two concrete Rota-Baxter algebras.

Weight 0: polynomials in t with 2x2 rational matrix coefficients, P = integral from 0.
Weight 1: length-6 sequences of 2x2 matrices, P = strict partial sums.
Both algebras are noncommutative, so left and right arguments are not confused.
"""
import random
from fractions import Fraction

import pytest

from opsucc.catalog import catalog
from opsucc.linalg import FormalSum
from opsucc.rota_baxter import (Weight, compose_P_powers, default_weight, embed_bi, embed_tri,
                                has_redex, p_node, random_rb_term, rb_normal_form,
                                strategy_agreement, verify_successor_rb)
from opsucc.successor import Kind, bisuccessor, hat, nonempty_subsets, tilde, trisuccessor
from opsucc.trees import TreeError, leaf_set

K = ((1, 2), (0, -1))


def mm(a, b):
    return tuple(tuple(sum(a[i][l] * b[l][j] for l in range(2)) for j in range(2)) for i in range(2))


def madd(a, b, c=1):
    return tuple(tuple(a[i][j] + c * b[i][j] for j in range(2)) for i in range(2))


ZERO = ((0, 0), (0, 0))


class PolyModel:
    weight = Weight.ZERO

    def mul(self, f, g, twist=False):
        out = {}
        for i, a in f.items():
            for j, b in g.items():
                prod = mm(mm(a, K), b) if twist else mm(a, b)
                out[i + j] = madd(out.get(i + j, ZERO), prod)
        return out

    def P(self, f):
        return {k + 1: tuple(tuple(Fraction(x, k + 1) for x in row) for row in a) for k, a in f.items()}

    def add(self, f, g, c):
        out = dict(f)
        for k, a in g.items():
            out[k] = madd(out.get(k, ZERO), a, c)
        return out

    def zero(self):
        return {}

    def norm(self, f):
        return {k: a for k, a in f.items() if a != ZERO}

    def random(self, rng):
        return {k: tuple(tuple(Fraction(rng.randint(-2, 2)) for _ in range(2)) for _ in range(2))
                for k in range(2)}


class SeqModel:
    weight = Weight.ONE
    N = 6

    def mul(self, f, g, twist=False):
        return tuple(mm(mm(a, K), b) if twist else mm(a, b) for a, b in zip(f, g))

    def P(self, f):
        out, acc = [], ZERO
        for a in f:
            out.append(acc)
            acc = madd(acc, a)
        return tuple(out)

    def add(self, f, g, c):
        return tuple(madd(a, b, c) for a, b in zip(f, g))

    def zero(self):
        return (ZERO,) * self.N

    def norm(self, f):
        return f

    def random(self, rng):
        return tuple(tuple(tuple(Fraction(rng.randint(-2, 2)) for _ in range(2)) for _ in range(2))
                     for _ in range(self.N))


def ev(model, t, vals):
    if isinstance(t, int):
        return vals[t]
    if len(t) == 2:
        return model.P(ev(model, t[1], vals))
    gen, a, b = t
    return model.mul(ev(model, a, vals), ev(model, b, vals), twist=gen.startswith("nu"))


def ev_sum(model, s, vals):
    acc = model.zero()
    for t, c in s.items():
        acc = model.add(acc, ev(model, t, vals), c)
    return model.norm(acc)


MODELS = [PolyModel(), SeqModel()]


@pytest.mark.parametrize("model", MODELS, ids=["weight0", "weight1"])
def test_normal_form_preserves_value(model):
    rng = random.Random(11)
    for _ in range(40):
        t = random_rb_term(rng, 4, gens=("mu", "nu"))
        vals = {x: model.random(rng) for x in leaf_set(t)}
        nf = rb_normal_form(t, model.weight)
        assert all(not has_redex(m) for m in nf.keys())
        assert ev_sum(model, nf, vals) == model.norm(ev(model, t, vals))


TREES = [("mu", ("mu", 1, 2), 3), ("mu", 1, ("nu", 2, 3)), ("nu", ("mu", 1, 3), ("mu", 2, 4))]


@pytest.mark.parametrize("t", TREES)
def test_successor_identities_hold_in_models(t):
    """Independent semantic check of the congruences used by verify_successor_rb."""
    rng = random.Random(5)
    poly, seq = MODELS
    vals = {x: poly.random(rng) for x in leaf_set(t)}
    for x in leaf_set(t):
        assert ev_sum(poly, embed_bi(bisuccessor(t, x)), vals) == \
            poly.norm(ev(poly, compose_P_powers(t, {x}), vals))
    lhs = poly.P(ev_sum(poly, embed_bi(tilde(t)), vals))
    assert poly.norm(lhs) == poly.norm(ev(poly, compose_P_powers(t), vals))
    svals = {x: seq.random(rng) for x in leaf_set(t)}
    for J in nonempty_subsets(leaf_set(t)):
        assert ev_sum(seq, embed_tri(trisuccessor(t, J)), svals) == \
            ev(seq, compose_P_powers(t, J), svals)
    assert seq.P(ev_sum(seq, embed_tri(hat(t)), svals)) == ev(seq, compose_P_powers(t), svals)


def test_rewrite_rule_by_hand():
    a, b = p_node(1), p_node(2)
    assert rb_normal_form(("mu", a, b), 0) == FormalSum({p_node(("mu", p_node(1), 2)): 1,
                                                         p_node(("mu", 1, p_node(2))): 1})
    assert len(rb_normal_form(("mu", a, b), 1)) == 3
    assert rb_normal_form(("mu", 1, b), 0) == FormalSum.term(("mu", 1, b))


def test_embeddings():
    assert embed_bi(("mu<", 1, 2)) == FormalSum.term(("mu", 1, p_node(2)))
    assert embed_tri(("mu.", 1, ("mu>", 2, 3))) == FormalSum.term(("mu", 1, ("mu", p_node(2), 3)))
    with pytest.raises(TreeError):
        embed_bi(("mu.", 1, 2))
    with pytest.raises(TreeError):
        compose_P_powers(("mu", 1, 2), {3})


def test_bad_strategy():
    with pytest.raises(ValueError):
        rb_normal_form(("mu", 1, 2), 0, "random")


def test_strategies_agree_small():
    assert strategy_agreement(trials=40, seed=1)


def test_default_weights():
    assert default_weight(Kind.BI) == Weight.ZERO and default_weight("tri") == Weight.ONE


@pytest.mark.parametrize("name,kind,weight", [
    ("Ass", Kind.BI, 0), ("Lie", Kind.BI, 0), ("Comm", Kind.BI, 0), ("Jordan", Kind.BI, 0),
    ("Ass", Kind.TRI, 1), ("Lie", Kind.TRI, 1), ("Leibniz", Kind.TRI, 1),
])
def test_verify_successor_rb(name, kind, weight):
    rep = verify_successor_rb(catalog(name), kind, weight)
    assert rep.passed, rep.format_text()
    assert all("per-monomial" in c.detail for c in rep.checks)


def test_tri_at_weight_zero_fails():
    """Dots only make sense at weight one; the check must notice."""
    assert not verify_successor_rb(catalog("Ass"), Kind.TRI, 0).passed
