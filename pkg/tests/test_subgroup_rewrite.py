import json

import pytest
from hypothesis import given, settings, strategies as st

from alterna.coxeter import named_matrix, validate_matrix
from alterna.presentations import bourbaki_braid, bourbaki_group, braid_presentation, coxeter_presentation
from alterna.subgroup_rewrite import RewriteError, SchreierSetup, SignCharacter, rs_rewrite, simplify
from alterna.verify.todd_coxeter import todd_coxeter
from alterna.words import FreeWord, GroupPresentation, canonical_relator

P = FreeWord.parse
CORPUS = ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3", "I2(2)", "I2(7)", "I2(12)"]


def kernel(pres, **kw):
    return rs_rewrite(SchreierSetup(pres, SignCharacter.all_minus(pres), **kw))


def test_braid_a2_example():
    k = kernel(braid_presentation(named_matrix("A2")))
    assert k.generators == ["R0", "R1", "R'1"]
    want = {canonical_relator(P("R1") * P("R'1 R0 R'1").inverse()),
            canonical_relator(P("R0 R'1 R0") * P("R1^2").inverse())}
    assert k.relator_set() == want


def test_coxeter_a2_example():
    k = simplify(kernel(coxeter_presentation(named_matrix("A2"))))
    assert k.generators == ["R1"]
    assert k.relator_set() == {canonical_relator(P("R1^3"))}


def test_free_group_example():
    k = kernel(GroupPresentation(["g0"], []))
    assert k.generators == ["R0"] and k.relations == []


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_matches_bourbaki(name):
    mat = named_matrix(name)
    cox = coxeter_presentation(mat)
    k = kernel(cox)
    assert len(k.relations) == 2 * len(cox.relations)
    assert simplify(k).relator_set() == bourbaki_group(mat).relator_set()
    br = braid_presentation(mat)
    assert kernel(br).relator_set() == bourbaki_braid(mat).relator_set()


def test_character_errors(tmp_path):
    pres = braid_presentation(named_matrix("A2"))
    with pytest.raises(RewriteError, match="trivial"):
        SchreierSetup(pres, SignCharacter.from_mapping(pres, {"g0": 1, "g1": 1}))
    with pytest.raises(RewriteError, match="not defined"):
        SignCharacter.from_mapping(pres, {"g0": -1})
    # a = b^2 has sign -1 on the left and +1 on the right
    bad = GroupPresentation(["a", "b"], [(P("a"), P("b b"))])
    with pytest.raises(RewriteError, match="respect"):
        kernel(bad)
    path = tmp_path / "chi.json"
    path.write_text(json.dumps({"g0": -1, "g1": -1}))
    assert SignCharacter.load(pres, str(path)) == SignCharacter.all_minus(pres)


def test_mixed_character_kernel_order():
    # in B2 the two generators are not conjugate, so they may carry different signs
    cox = coxeter_presentation(named_matrix("B2"))
    chi = SignCharacter.from_mapping(cox, {"s0": -1, "s1": 1})
    k = simplify(rs_rewrite(SchreierSetup(cox, chi)))
    assert todd_coxeter(k) == 4


@st.composite
def matrices(draw):
    n = draw(st.integers(1, 4))
    raw = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            raw[i][j] = raw[j][i] = draw(st.sampled_from([0, 2, 3, 4, 5]))
    return validate_matrix(raw)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rewriting_reproduces_bourbaki_braid(mat):
    assert kernel(braid_presentation(mat)).relator_set() == bourbaki_braid(mat).relator_set()
    assert simplify(kernel(coxeter_presentation(mat))).relator_set() == bourbaki_group(mat).relator_set()
