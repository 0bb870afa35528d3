import pytest
from hypothesis import given, settings, strategies as st

from alterna.exactmath import LaurentPoly
from alterna.words import (
    AlgebraPresentation,
    FreeWord,
    GenMap,
    GroupPresentation,
    alt,
    canonical_relator,
    free_reduce,
    substitute,
)

letters = st.lists(st.tuples(st.sampled_from(["a", "b", "c"]), st.sampled_from([1, -1])), max_size=12)


def test_free_reduce_examples():
    assert free_reduce([("g0", 1), ("g0", -1)]) == ()
    assert free_reduce([("g0", 1), ("g1", 1), ("g1", -1), ("g0", 1)]) == (("g0", 1), ("g0", 1))
    w = (("a", 1), ("b", -1))
    assert free_reduce(w) == w


def test_free_reduce_rejects_big_exponents():
    with pytest.raises(ValueError):
        free_reduce([("a", 2)])


def test_parse_and_print():
    w = FreeWord.parse("R1 R1 R'2^-1 r0_1^3")
    assert str(w) == "R1^2 R'2^-1 r0_1^3"
    assert str(FreeWord.parse("1")) == "1"
    with pytest.raises(ValueError):
        FreeWord.parse("1a")


def test_alt_words():
    a, b = FreeWord.gen("a"), FreeWord.gen("b")
    assert alt(a, b, 0).is_identity()
    assert str(alt(a, b, 3)) == "a b a"


def test_presentation_rejects_undeclared():
    with pytest.raises(ValueError, match="undeclared"):
        GroupPresentation(["a"], [(FreeWord.parse("a b"), FreeWord())])


def test_group_json_roundtrip():
    p = GroupPresentation(["a", "b"], [(FreeWord.parse("a b a"), FreeWord.parse("b a b"))])
    q = GroupPresentation.from_json(p.to_json())
    assert q.generators == p.generators and q.relations == p.relations


def test_group_from_json_rejects_algebra():
    with pytest.raises(ValueError, match="algebra"):
        GroupPresentation.from_json({"generators": ["y"], "relations": [{"terms": []}]})


def test_algebra_json_roundtrip_and_format():
    b = LaurentPoly.var("b0")
    y = FreeWord.gen("Y1")
    rel = [(LaurentPoly.const(1), y ** 3), (b ** 2, y ** 2), (-(b ** 2), y), (LaurentPoly.const(-1), FreeWord())]
    p = AlgebraPresentation(["Y1"], [rel])
    assert AlgebraPresentation.format_relation(rel) == "Y1^3 + b0^2 Y1^2 - b0^2 Y1 - 1 = 0"
    again = AlgebraPresentation.from_json(p.to_json())
    assert again.relations == p.relations


def test_substitute_and_genmap():
    m = GenMap("m", ["R1", "R2"], {"R1": FreeWord.parse("s0 s1"), "R2": FreeWord.parse("s0 s2")})
    # as free words the involutions are not cancelled, only s0^-1 s0
    assert m(FreeWord.parse("R1^-1 R2")) == FreeWord.parse("s1^-1 s2")
    with pytest.raises(KeyError):
        substitute(FreeWord.parse("R3"), m)
    with pytest.raises(ValueError):
        GenMap("bad", ["x"], {})


@settings(max_examples=100, deadline=None)
@given(letters, letters)
def test_group_laws(u, v):
    a, b = FreeWord(u), FreeWord(v)
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert (a * a.inverse()).is_identity()
    assert FreeWord(a.letters) == a
    assert a.reversed().reversed() == a


@settings(max_examples=100, deadline=None)
@given(letters, letters)
def test_canonical_relator_is_conjugation_invariant(u, v):
    w, c = FreeWord(u), FreeWord(v)
    r = canonical_relator(w)
    assert canonical_relator(c * w * c.inverse()) == r
    assert canonical_relator(w.inverse()) == r


@settings(max_examples=60, deadline=None)
@given(letters)
def test_json_roundtrip_words(u):
    w = FreeWord(u)
    assert FreeWord.from_json(w.to_json()) == w
    assert FreeWord.parse(str(w)) == w
