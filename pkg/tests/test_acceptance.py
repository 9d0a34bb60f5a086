"""Acceptance criteria 1-16, one test each.

Each ``criterion_k`` returns ``(passed, summary)``.  Results are collected in
``RESULTS`` and printed one line per criterion at the end of the pytest run,
or directly when the file is executed as a script.
"""
import sys

import pytest

from _golden import GOLDEN, TSU_JORDAN
from opsucc.catalog import catalog, stored_map
from opsucc.linalg import FormalSum
from opsucc.matrix_alg import (DEND_ON_ZINBIEL_MATRICES, algebra_relation_check,
                               matrix_relation_check, transpose_law_check, zinbiel_2dim)
from opsucc.notation import ENNEA
from opsucc.presentation import (GeneratorMap, change_basis, equivalent, regularize,
                                 sn_closure_span)
from opsucc.properties import equivariance_check, inductive_check, sum_lemma_check
from opsucc.rota_baxter import strategy_agreement, verify_successor_rb
from opsucc.successor import (Kind, check_dot_morphism, check_star_morphism,
                              check_su_tsu_bridges, successor_presentation)
from opsucc.symmetry import (all_sigma_automorphisms, group_morphism_check, phi_sigma,
                             transpose_glyphs, verify_automorphism)

RESULTS = {}
GOLD = {g[0]: g for g in GOLDEN + [TSU_JORDAN]}


def _golden(entry):
    """Equivalence of a catalog entry with its computed successor, at the frozen dimension."""
    _, succ, arity, dim, _free = GOLD[entry]
    p, q = catalog(entry), catalog(succ)
    rep = equivalent(p, q, stored_map(p, q))
    spans = {c.arity: c for c in rep.checks if c.name == "relation spans"}
    top = spans.get(arity)
    ok = rep.passed and top is not None and top.dimension_left == top.dimension_right == dim
    dims = f"{top.dimension_left}/{top.dimension_right}" if top else "none"
    bad = "; ".join(f"{c.name}: {c.detail}" for c in rep.failures())
    return ok, f"{entry} ~ {succ} arity {arity} dims {dims}" + (f" [{bad}]" if bad else "")


def _all(entries):
    outs = [_golden(e) for e in entries]
    return all(o for o, _ in outs), "; ".join(s for _, s in outs)


def criterion_1():
    return _golden("Dend")


def criterion_2():
    q = successor_presentation(catalog("Ass_ns"), Kind.TRI)
    dim = sn_closure_span(q, 3).dimension
    bridges = check_su_tsu_bridges(catalog("Ass_ns"))
    return dim == 7 and bridges.passed, f"TSu(Ass_ns) span dim {dim} at arity 3, bridges {'ok' if bridges else 'FAIL'}"


def criterion_3():
    return _all(["Zinbiel", "PreLie_R", "PostLie", "ComTriDend", "PrePoisson", "PostPoisson"])


def criterion_4():
    ok, text = _all(["PreJordan", "Su2Jordan", "TSuJordan"])
    if not ok and catalog("TSuJordan").flagged:
        text += "; reading (u≺z)≺(y⋆z) as (u≺x)≺(y⋆z) gives 60/60 (tests/test_catalog.py)"
    return ok, text


def criterion_5():
    return _all(["LDend", "LQuad"])


def criterion_6():
    return _all(["PreAlter", "TSuAlter", "SuLeibniz", "TSuLeibniz", "TSuPreLie_R"])


def _report_line(rep):
    return "; ".join(f"{c.name}: {c.detail}" for c in rep.checks)


def criterion_7():
    rep = sum_lemma_check(5, ("mu", "nu"))
    return rep.passed, _report_line(rep)


def criterion_8():
    rep = equivariance_check(4)
    return rep.passed, f"{len(rep.checks)} generator types, " + ", ".join(c.detail for c in rep.checks)


def criterion_9():
    rep = inductive_check(5, ("mu", "nu"))
    return rep.passed, _report_line(rep)


BASE = ["Comm", "Ass", "Lie", "Poisson", "Jordan", "Leibniz", "Alter", "PreLie_R"]


def criterion_10():
    bad = []
    for name in BASE:
        p = catalog(name)
        for label, rep in [("star bi", check_star_morphism(p, Kind.BI)),
                           ("star tri", check_star_morphism(p, Kind.TRI)),
                           ("dot", check_dot_morphism(p))]:
            if not rep.passed:
                bad.append(f"{name} {label}")
    return not bad, f"{len(BASE)} operads x 3 morphisms" + (f", failing {bad}" if bad else "")


def criterion_11():
    ass = catalog("Ass_ns")
    su_reg = successor_presentation(regularize(ass), Kind.BI)
    reg_su = regularize(successor_presentation(ass, Kind.BI))
    # (mu,d)^(12) = (mu', swap d) on one side and (mu,d)' on the other
    f = GeneratorMap({"mu<": "mu<", "mu>": "mu>", "mu'>": "mu<'", "mu'<": "mu>'"})
    rep = equivalent(su_reg, reg_su, f)
    spans = [c for c in rep.checks if c.name == "relation spans"]
    ok = rep.passed and all(c.arity <= 3 for c in spans)
    return ok, ", ".join(f"arity {c.arity} dims {c.dimension_left}/{c.dimension_right}" for c in spans)


def _induced(f, kind):
    """The map on decorated generators induced by a basis change."""
    return GeneratorMap({g + d: FormalSum((h + d, c) for h, c in v.items())
                         for g, v in f.images.items() for d in kind.decorations})


def _independence(p, f, new_gens, kind):
    changed = change_basis(p, f, new_gens, name=p.name + "'")
    a, b = successor_presentation(p, kind), successor_presentation(changed, kind)
    rep = equivalent(a, b, _induced(f, kind))
    dims = [(c.dimension_left, c.dimension_right) for c in rep.checks if c.name == "relation spans"]
    return rep.passed, f"{p.name} {kind.prefix} dims {dims}"


def criterion_12():
    half = FormalSum({"a": "1/2", "b": "1/2"})
    cases = [
        (catalog("Lie"), GeneratorMap({"mu": FormalSum({"nu": 3})}), ["nu"]),
        (catalog("Lie"), GeneratorMap({"mu": FormalSum({"nu": "-2/5"})}), ["nu"]),
        (catalog("Leibniz"), GeneratorMap({"br": half, "br'": FormalSum({"a": "1/2", "b": "-1/2"})}),
         ["a", "b"]),
    ]
    outs = [_independence(p, f, g, k) for p, f, g in cases for k in (Kind.BI, Kind.TRI)]
    return all(o for o, _ in outs), "; ".join(s for _, s in outs)


def criterion_13():
    cases = [("Ass", Kind.BI, 0), ("Lie", Kind.BI, 0), ("Poisson", Kind.BI, 0),
             ("Ass", Kind.TRI, 1), ("Lie", Kind.TRI, 1)]
    bad = []
    for name, kind, w in cases:
        rep = verify_successor_rb(catalog(name), kind, w)
        per_monomial = all("per-monomial," in c.detail for c in rep.checks)
        if not (rep.passed and per_monomial):
            bad.append(f"{name} {kind.name} w{w}")
    return not bad, f"{len(cases)} cases at per-monomial level" + (f", failing {bad}" if bad else "")


def criterion_14():
    rep = strategy_agreement(trials=500, seed=0, max_leaves=5)
    return rep.passed, _report_line(rep)


def _glyph_images(kind):
    """phi_(12) on doubly decorated ids, read through the glyph table."""
    gens = [d1 + d2 for d1 in kind.decorations for d2 in kind.decorations]
    return {ENNEA[g]: ENNEA[phi_sigma("mu" + g, (2, 1), kind)[2:]] for g in gens}


def criterion_15():
    checks = {
        "Ass bi (12)": verify_automorphism(catalog("Ass"), Kind.BI, 2, (2, 1)).passed
        and _glyph_images(Kind.BI) == {"↖": "↖", "↘": "↘", "↙": "↗", "↗": "↙"},
        "Ass tri (12)": verify_automorphism(catalog("Ass"), Kind.TRI, 2, (2, 1)).passed
        and _glyph_images(Kind.TRI) == transpose_glyphs(Kind.TRI)
        and transpose_glyphs(Kind.TRI)["≺"] == "↑" and transpose_glyphs(Kind.TRI)["≻"] == "↓",
        "Jordan bi (12)": verify_automorphism(catalog("Jordan"), Kind.BI, 2, (2, 1)).passed,
        "Ass bi S3": all_sigma_automorphisms(catalog("Ass"), Kind.BI, 3).passed,
        "group law n<=3": all(group_morphism_check(catalog("Ass"), k, n).passed
                              for k in (Kind.BI, Kind.TRI) for n in (1, 2, 3)),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, ", ".join(checks) + (f"; failing {bad}" if bad else "")


def criterion_16():
    a = zinbiel_2dim()
    alg = algebra_relation_check(a, catalog("Zinbiel"), trials=100, seed=0)
    parts = [alg.passed]
    for size in (2, 3):
        parts.append(matrix_relation_check(catalog("Dend"), a, DEND_ON_ZINBIEL_MATRICES, size,
                                           trials=100, seed=0).passed)
        parts.append(transpose_law_check(a, size, trials=100, seed=0).passed)
    return all(parts), ("2-dim Zinbiel identity; three dendriform relations and the transpose law "
                        "on M2 and M3, 100 seeded trials each")


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 17)}


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_acceptance(k):
    passed, detail = CRITERIA[k]()
    RESULTS[k] = (passed, detail)
    assert passed, detail


if __name__ == "__main__":
    failed = 0
    for k, fn in CRITERIA.items():
        passed, detail = fn()
        failed += not passed
        print(f"ACCEPTANCE {k:2d} {'PASS' if passed else 'FAIL'}: {detail}")
    sys.exit(1 if failed else 0)
