import pytest
from hypothesis import given, settings, strategies as st

from alterna.coxeter import group_order, named_matrix
from alterna.presentations import (
    bourbaki_braid,
    bourbaki_group,
    coxeter_presentation,
    edge_group,
    iso_maps,
    typeA_maps,
    typeA_presentations,
)
from alterna.verify import run_suite
from alterna.verify.artin import FreeGroupAuto, artin_rep
from alterna.verify.checks import (
    MonomialMatrix,
    _pullback,
    check_braid_presentations,
    in_cyclic_subgroup,
    racg_equal,
)
from alterna.verify.models import Permutation, bfs_closure, check_relations, coxeter_model, evaluate
from alterna.verify.todd_coxeter import todd_coxeter
from alterna.words import FreeWord, GroupPresentation

P = FreeWord.parse


def test_permutation_composition_order():
    a = Permutation.from_cycles(3, (0, 1))
    b = Permutation.from_cycles(3, (1, 2))
    # a is applied first: 0 -> 1 -> 2
    assert (a * b).images[0] == 2
    assert (a * b).order() == 3 and (a * a).is_identity()


def test_a2_model():
    _, gens = coxeter_model("A2")
    assert gens["s0"] == Permutation.from_cycles(3, (0, 1))
    assert gens["s1"] == Permutation.from_cycles(3, (1, 2))


@pytest.mark.parametrize("name", ["A2", "A3", "A4", "B2", "B3", "D4", "H3", "I2(2)", "I2(5)", "I2(12)"])
def test_models_have_the_right_order(name):
    mat, gens = coxeter_model(name)
    ident = Permutation.identity(next(iter(gens.values())).degree)
    assert not check_relations(coxeter_presentation(mat), gens, ident)
    assert bfs_closure(list(gens.values()), identity=ident) == group_order(mat)


def test_bourbaki_relations_in_s4():
    mat, gens = coxeter_model("A3")
    ident = Permutation.identity(4)
    images = _pullback(iso_maps(mat)["bourbaki-group"], gens)
    assert check_relations(bourbaki_group(mat), images, ident) == []
    assert bfs_closure(list(images.values()), identity=ident) == 12


def test_corrupted_relation_is_reported():
    mat, gens = coxeter_model("A2")
    images = _pullback(iso_maps(mat)["bourbaki-group"], gens)
    bad = GroupPresentation(["R1"], [(P("R1^4"), FreeWord())])
    assert check_relations(bad, images, Permutation.identity(3)) == [(P("R1^4"), FreeWord())]


def test_bfs_small_cases():
    _, gens = coxeter_model("I2(5)")
    rot = gens["s0"] * gens["s1"]
    assert bfs_closure([rot], identity=Permutation.identity(5)) == 5
    assert bfs_closure([Permutation.identity(3)], identity=Permutation.identity(3)) == 1
    _, big = coxeter_model("A4")
    assert bfs_closure(list(big.values()), cap=10, identity=Permutation.identity(5)) is None


@pytest.mark.parametrize("name, order", [("A1", 1), ("A2", 3), ("A3", 12), ("B3", 24), ("D4", 96), ("H3", 60),
                                         ("I2(2)", 2), ("I2(12)", 12)])
def test_todd_coxeter_orders(name, order):
    mat = named_matrix(name)
    assert todd_coxeter(bourbaki_group(mat)) == order
    assert todd_coxeter(edge_group(mat)) == order


def test_todd_coxeter_cap():
    assert todd_coxeter(bourbaki_braid(named_matrix("A2")), coset_cap=200) is None


def test_artin_action():
    g = artin_rep(2)
    x = lambda s: P(s)
    assert g["g0"](x("x0")) == x("x0 x1 x0^-1") and g["g0"](x("x1")) == x("x0")
    twice = g["g0"] * g["g0"]
    assert twice(x("x1")) == x("x0 x1 x0^-1")
    assert (g["g0"] * g["g0"].inverse()).is_identity()
    assert g["g0"] * g["g1"] * g["g0"] == g["g1"] * g["g0"] * g["g1"]
    assert all(a.check_inverse() for a in g.values())


def test_typeA_braid_relations_in_artin_model_n4():
    base = artin_rep(4)
    ident = FreeGroupAuto.identity(5)
    pres, _ = typeA_presentations(4)
    images = {k: evaluate(w, base, ident) for k, w in typeA_maps(4)["typeA-braid-embedding"].images.items()}
    assert check_relations(pres, images, ident) == []


def test_literal_typeA_edge_relation_fails():
    for n in (2, 3, 4):
        base = artin_rep(n)
        ident = FreeGroupAuto.identity(n + 1)
        _, literal = typeA_presentations(n, literal=True)
        images = {k: evaluate(w, base, ident) for k, w in typeA_maps(n)["typeA-edge-braid-embedding"].images.items()}
        assert len(check_relations(literal, images, ident)) == n - 1


def test_braid_checks_pass_a3():
    assert all(c.passed for c in check_braid_presentations(3))


def test_racg_word_problem():
    commute = lambda a, b: {a, b} in ({0, 2}, {1, 3}, {0, 3})
    assert racg_equal((0, 2), (2, 0), commute)
    assert not racg_equal((0, 1), (1, 0), commute)
    assert racg_equal((0, 1, 1, 2), (2, 0), commute)
    assert not racg_equal((0, 1, 2, 0), (1, 2), commute)


def test_monomial_model():
    g0 = MonomialMatrix(1, (0, 0))
    g1 = MonomialMatrix(0, (1, 0))
    assert (g0 * g0).is_identity()
    assert g0 * g1 * g0 * g1 == g1 * g0 * g1 * g0
    a = g0 * g1
    assert in_cyclic_subgroup(a * a * a, a) and in_cyclic_subgroup(a.inverse(), a)
    assert not in_cyclic_subgroup(g1 * g0.inverse(), a)


moves = st.lists(st.tuples(st.integers(0, 1), st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5)


@settings(max_examples=100, deadline=None)
@given(moves, st.integers(-6, 6))
def test_cyclic_membership_is_exact(factors, k):
    a = MonomialMatrix(1, (0, 0))
    for e, x, y in factors:
        a = a * MonomialMatrix(e, (x, y))
    power = MonomialMatrix(0, (0, 0))
    step = a if k >= 0 else a.inverse()
    for _ in range(abs(k)):
        power = power * step
    assert in_cyclic_subgroup(power, a)
    assert (a * a.inverse()).is_identity()


@pytest.mark.parametrize("suite", ["coeffs", "group-presentations", "braid-presentations", "rs", "generating-sets"])
def test_suites_pass(suite):
    report = run_suite(suite)
    assert report.passed, report.to_text()
    assert report.to_json()["count"] == len(report.checks)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
