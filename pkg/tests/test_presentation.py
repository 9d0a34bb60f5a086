import pytest

from opsucc.catalog import catalog
from opsucc.linalg import FormalSum
from opsucc.presentation import (GeneratorMap, Presentation, PresentationError, change_basis,
                                 equivalent, generator_orbits, invert_map, make_presentation,
                                 map_is_invertible, regularize, sn_closure_span, standard_v,
                                 substitute, v_word_tree, validate)
from opsucc.successor import Kind, successor_presentation
from opsucc.trees import S2Action


def test_validation_catches_bad_input():
    act = S2Action.signs({"mu": 1})
    bad = make_presentation("bad", ["mu"], act, [FormalSum({("mu", ("mu", 1, 2), 3): 1, ("mu", 1, 2): -1})])
    rep = validate(bad)
    assert not rep.passed
    assert "not homogeneous" in rep.failures()[0].detail
    undeclared = make_presentation("u", ["mu"], act, [FormalSum({("nu", 1, 2): 1})])
    assert "undeclared" in validate(undeclared).failures()[0].detail
    not_canon = make_presentation("c", ["mu"], act, [FormalSum({("mu", 2, 1): 1})])
    assert not validate(not_canon).passed
    no_action = Presentation("n", True, ("mu",), None, ())
    assert not validate(no_action).passed
    assert not validate(Presentation("P", False, ("P",), None, ())).passed


def test_decorated_ids_are_valid():
    assert validate(catalog("Su(Su(Jordan))")).passed


def test_v_table():
    assert v_word_tree(7) == ("mu", 3, ("mu", 2, 1))
    assert standard_v(1) == ("mu", ("mu", 1, 2), 3)
    assert standard_v(12) == ("mu", ("mu'", 1, 2), 3)
    assert len({standard_v(i) for i in range(1, 13)}) == 12
    with pytest.raises(ValueError):
        v_word_tree(13)


def test_map_inversion():
    f = GeneratorMap({"a": FormalSum({"x": 1, "y": 1}), "b": FormalSum({"x": 1, "y": -1})})
    assert map_is_invertible(f, ["a", "b"], ["x", "y"])
    g = invert_map(f, ["a", "b"], ["x", "y"])
    assert f.compose(g) == GeneratorMap({"x": FormalSum.term("x"), "y": FormalSum.term("y")})
    singular = GeneratorMap({"a": "x", "b": "x"})
    assert not map_is_invertible(singular, ["a", "b"], ["x", "y"])


def test_equivalent_rejects_bad_maps():
    p = catalog("PreLie_R")
    q = catalog("Su(Lie)")
    partial = GeneratorMap({"dot": "mu<"})
    assert not equivalent(p, q, partial).passed
    # dot -> mu< but dot' -> +mu> breaks the S2 action
    noneq = GeneratorMap({"dot": "mu<", "dot'": "mu>"})
    rep = equivalent(p, q, noneq)
    assert not rep.passed and rep.checks[-1].name == "generator map is S2-equivariant"
    with pytest.raises(PresentationError):
        equivalent(catalog("Dend"), q, partial)


def test_equivalence_report_lists_spans():
    rep = equivalent(catalog("Dend"), catalog("Su(Ass)"),
                     GeneratorMap({"prec": "mu<", "succ": "mu>"}))
    spans = [c for c in rep.checks if c.name == "relation spans"]
    assert [(c.arity, c.dimension_left, c.dimension_right) for c in spans] == [(3, 3, 3)]


def test_substitute_is_canonical():
    f = GeneratorMap({"mu": FormalSum({"nu": 2})})
    act = S2Action.signs({"nu": -1})
    assert substitute(FormalSum.term(("mu", ("mu", 1, 2), 3)), f, act) == \
        FormalSum({("nu", ("nu", 1, 2), 3): 4})


def test_regularize():
    r = regularize(catalog("Dend"))
    assert r.symmetric and r.generators == ("prec", "prec'", "succ", "succ'")
    assert validate(r).passed
    with pytest.raises(PresentationError):
        regularize(catalog("Lie"))
    # regular presentations have n! copies of the planar relations
    ns = sn_closure_span(catalog("Dend"), 3).dimension
    assert sn_closure_span(r, 3).dimension == 6 * ns


def test_change_basis_rescaling():
    lie = catalog("Lie")
    f = GeneratorMap({"mu": FormalSum({"nu": 3})})
    lie3 = change_basis(lie, f, ["nu"])
    assert validate(lie3).passed
    assert equivalent(lie, lie3, f).passed


def test_orbits():
    assert sorted(map(sorted, generator_orbits(catalog("Poisson")))) == [["br"], ["circ"]]
    assert len(generator_orbits(catalog("Su(Lie)"))) == 1
    assert len(generator_orbits(catalog("TSu(Lie)"))) == 2
