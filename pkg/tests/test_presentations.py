import json

import pytest
from hypothesis import given, settings, strategies as st

from alterna.coxeter import connected_extension, cycle_basis, named_matrix, validate_matrix
from alterna.exactmath import LaurentPoly
from alterna.presentations import (
    PRESENTATION_KINDS,
    bourbaki_braid,
    bourbaki_group,
    bourbaki_hecke,
    edge_braid,
    edge_group,
    edge_hecke,
    iso_maps,
    present,
    typeA_presentations,
)
from alterna.words import FreeWord, GroupPresentation, canonical_relator

P = FreeWord.parse


def rels(pres: GroupPresentation) -> set:
    return pres.relator_set()


def has(pres: GroupPresentation, lhs: str, rhs: str = "1") -> bool:
    return canonical_relator(P(lhs) * P(rhs).inverse()) in rels(pres)


def test_bourbaki_group_examples():
    i25 = bourbaki_group(named_matrix("I2(5)"))
    assert i25.generators == ["R1"] and rels(i25) == {canonical_relator(P("R1^5"))}
    a4 = bourbaki_group(named_matrix("A4"))  # rank 4: R1, R2, R3
    want = ["R1^3", "R2^2", "R3^2", "R1^-1 R2 R1^-1 R2 R1^-1 R2", "R1^-1 R3 R1^-1 R3", "R2^-1 R3 R2^-1 R3 R2^-1 R3"]
    assert rels(a4) == {canonical_relator(P(w)) for w in want}
    rank1 = bourbaki_group(named_matrix("A1"))
    assert rank1.generators == [] and rank1.relations == []


def test_bourbaki_hecke_examples():
    a2 = bourbaki_hecke(named_matrix("A2"))
    assert [str(a2).splitlines()[1].strip()] == ["Y1^3 + b0^2 Y1^2 - b0^2 Y1 - 1 = 0"]
    b2 = bourbaki_hecke(named_matrix("B2"))
    coeffs = {len(w): c for c, w in b2.relations[0]}
    assert coeffs[3] == 2 * LaurentPoly.var("b0") * LaurentPoly.var("b1")
    a3 = bourbaki_hecke(named_matrix("A3"))
    assert a3.format_relation(a3.relations[1]) == "Y2^2 - 1 = 0"


def test_edge_group_examples():
    assert rels(edge_group(named_matrix("A2"))) == {canonical_relator(P("r0_1^3"))}
    a3 = edge_group(named_matrix("A3"))
    assert a3.generators == ["r0_1", "r1_2"]
    assert has(a3, "r0_1^3") and has(a3, "r1_2^3") and has(a3, "r0_1 r1_2 r0_1 r1_2")
    a1a1 = edge_group(validate_matrix([[1, 2], [2, 1]]))
    assert rels(a1a1) == {canonical_relator(P("r0_1^2"))}


def test_edge_hecke_examples():
    a2 = edge_hecke(named_matrix("A2"))
    assert a2.format_relation(a2.relations[0]) == "y0_1^3 + b0^2 y0_1^2 - b0^2 y0_1 - 1 = 0"
    a1a1 = edge_hecke(validate_matrix([[1, 2], [2, 1]]))
    assert a1a1.format_relation(a1a1.relations[0]) == "y0_1^2 - 1 = 0"
    a3 = edge_hecke(named_matrix("A3"))
    assert "y0_1 y1_2 y0_1 y1_2 - 1 = 0" in [a3.format_relation(r) for r in a3.relations]


def test_bourbaki_braid_examples():
    a2 = bourbaki_braid(named_matrix("A2"))
    assert a2.generators == ["R0", "R1", "R'1"]
    assert has(a2, "R1", "R'1 R0 R'1") and has(a2, "R0 R'1 R0", "R1^2")
    assert rels(a2) == {canonical_relator(P("R1") * P("R'1 R0 R'1").inverse()),
                        canonical_relator(P("R0 R'1 R0") * P("R1^2").inverse())}
    rank1 = bourbaki_braid(named_matrix("A1"))
    assert rank1.generators == ["R0"] and rank1.relations == []
    b2 = bourbaki_braid(named_matrix("B2"), keep_r0_prime=True)
    assert has(b2, "R'0 R1 R'0 R1", "R'1 R0 R'1 R0")


def test_edge_braid_examples():
    a2 = edge_braid(named_matrix("A2"))
    assert has(a2, "r0_1 t1 r0_1", "r0_1^-1 t0")
    assert has(a2, "r0_1 t1 r0_1 t1", "t0 r0_1^-1 t0")
    b2 = edge_braid(named_matrix("B2"))
    assert has(b2, "r0_1 t1 r0_1 t1", "r0_1^-1 t0 r0_1^-1 t0")
    assert has(b2, "t1 r0_1 t1 r0_1", "r0_1^-1 t0 r0_1^-1 t0")
    a3 = edge_braid(named_matrix("A3"))
    assert has(a3, "r0_1 r1_2 t2", "r1_2^-1 r0_1^-1 t0")
    assert has(a3, "t2 r0_1 r1_2", "r1_2^-1 r0_1^-1 t0")


def test_typeA_examples():
    a3, _ = typeA_presentations(3)
    assert has(a3, "R0 R1 R0", "R1^2 R0^-1 R1^2")
    a4, _ = typeA_presentations(4)
    assert has(a4, "R1^2 R3", "R3 R1 R0")
    _, e6 = typeA_presentations(6)
    assert has(e6, "r1 r4", "r4 r1") and has(e6, "r2 r5", "r5 r2")
    assert not has(e6, "r1 r3", "r3 r1")


def test_typeA_literal_differs_only_in_one_family():
    _, fixed = typeA_presentations(4)
    _, literal = typeA_presentations(4, literal=True)
    assert has(literal, "r1 t1 r1", "r1^-1 t1^-1") and not has(fixed, "r1 t1 r1", "r1^-1 t1^-1")
    assert len(rels(fixed) - rels(literal)) == 3


def test_present_dispatch_and_errors():
    mat = named_matrix("B3")
    for kind in PRESENTATION_KINDS[:8]:
        assert present(mat, kind).generators is not None
    with pytest.raises(ValueError, match="type A"):
        present(mat, "typeA-braid")
    with pytest.raises(ValueError):
        present(mat, "nope")


def test_braid_embedding_images():
    maps = iso_maps(named_matrix("A3"))
    iso = maps["braid-embedding"]
    assert iso(P("R0")) == P("g0^2")
    assert iso(P("R'0")).is_identity()
    bg = maps["bourbaki-group"]
    assert bg(P("R1^-1 R2")) == P("s1^-1 s2")


def test_iso_map_names():
    maps = iso_maps(named_matrix("D4"))
    for name in ("bourbaki-group", "edge-group", "edge-to-bourbaki-group", "bourbaki-to-edge-group", "psi-hecke",
                 "Phi", "Psi", "braid-embedding", "edge-braid-embedding", "edge-to-bourbaki-braid", "bourbaki-to-edge-braid",
                 "omega", "tau", "tau-edge"):
        assert name in maps


@st.composite
def matrices(draw):
    n = draw(st.integers(1, 5))
    raw = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            raw[i][j] = raw[j][i] = draw(st.sampled_from([0, 2, 2, 3, 4, 5, 6]))
    return validate_matrix(raw)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_emission_is_deterministic_and_json_stable(mat):
    for kind in PRESENTATION_KINDS[:8]:
        a = json.dumps(present(mat, kind).to_json())
        b = json.dumps(present(mat, kind).to_json())
        assert a == b
    g = bourbaki_braid(mat)
    again = GroupPresentation.from_json(json.loads(json.dumps(g.to_json())))
    assert again.generators == g.generators and again.relations == g.relations


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_presentation_sizes(mat):
    n = mat.n
    assert len(bourbaki_group(mat).generators) == max(n - 1, 0)
    eg = edge_group(mat)
    graph = connected_extension(mat)
    assert len(eg.generators) == len(graph.edges) == max(n - 1, 0) + len(cycle_basis(graph))
    assert len(bourbaki_braid(mat).generators) == 2 * n - 1
    assert len(edge_braid(mat).generators) == len(eg.generators) + n
