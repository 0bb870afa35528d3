"""Presentations of alternating subgroups and subalgebras, built from a
Coxeter matrix, together with the substitution maps relating them.

Generator names: ``s{i}`` Coxeter generators, ``g{i}`` braid generators,
``f{i}`` the Hecke involutions, ``R{i}`` and ``R'{i}`` Bourbaki generators,
``Y{i}`` Bourbaki Hecke generators, ``r{i}_{j}`` / ``y{i}_{j}`` edge
generators (i < j; the reversed edge is the inverse letter) and ``t{i}``.
"""

from __future__ import annotations

from itertools import combinations

from .coeffs import a_vector
from .coxeter import (
    CoxeterMatrix,
    CoxGraph,
    class_representatives,
    connected_extension,
    cycle_basis,
    is_finite,
    named_matrix,
    tree_path,
)
from .exactmath import LaurentPoly
from .words import AlgebraPresentation, FreeWord, GenMap, GroupPresentation, alt, substitute

__all__ = [
    "FreeWord", "GroupPresentation", "AlgebraPresentation", "GenMap", "substitute", "alt",
    "coxeter_presentation", "braid_presentation", "bourbaki_group", "bourbaki_hecke", "edge_group",
    "edge_hecke", "bourbaki_braid", "edge_braid", "typeA_presentations", "iso_maps", "PRESENTATION_KINDS",
    "present",
]

E = FreeWord()


def gen(name: str, exp: int = 1) -> FreeWord:
    return FreeWord.gen(name, exp)


def s(i):
    return gen(f"s{i}")


def g(i, exp=1):
    return gen(f"g{i}", exp)


def R(i, exp=1):
    return gen(f"R{i}", exp)


def Rp(i, exp=1):
    return gen(f"R'{i}", exp)


def Y(i, exp=1):
    return gen(f"Y{i}", exp)


def t(i, exp=1):
    return gen(f"t{i}", exp)


def edge_name(prefix: str, i: int, j: int) -> str:
    a, b = min(i, j), max(i, j)
    return f"{prefix}{a}_{b}"


def edge(prefix: str, i: int, j: int) -> FreeWord:
    """The letter for the oriented edge i -> j; j < i gives the inverse."""
    if i == j:
        raise ValueError("an edge needs two distinct vertices")
    return gen(edge_name(prefix, i, j), 1 if i < j else -1)


def edge_path(prefix: str, path) -> FreeWord:
    out = E
    for a, b in zip(path, path[1:]):
        out = out * edge(prefix, a, b)
    return out


# ---------------------------------------------------------------------------
# Coxeter and braid groups themselves


def coxeter_presentation(mat: CoxeterMatrix) -> GroupPresentation:
    gens = [f"s{i}" for i in range(mat.n)]
    rels = [(s(i) ** 2, E) for i in range(mat.n)]
    for i, j in combinations(range(mat.n), 2):
        if is_finite(mat[i, j]):
            rels.append(((s(i) * s(j)) ** int(mat[i, j]), E))
    return GroupPresentation(gens, rels, f"coxeter {mat}")


def braid_presentation(mat: CoxeterMatrix) -> GroupPresentation:
    gens = [f"g{i}" for i in range(mat.n)]
    rels = []
    for i, j in combinations(range(mat.n), 2):
        m = mat[i, j]
        if is_finite(m):
            rels.append((alt(g(i), g(j), int(m)), alt(g(j), g(i), int(m))))
    return GroupPresentation(gens, rels, f"braid {mat}")


# ---------------------------------------------------------------------------
# Bourbaki presentations


def bourbaki_group(mat: CoxeterMatrix) -> GroupPresentation:
    n = mat.n
    rels = []
    for i in range(1, n):
        if is_finite(mat[0, i]):
            rels.append((R(i) ** int(mat[0, i]), E))
    for i, j in combinations(range(1, n), 2):
        if is_finite(mat[i, j]):
            rels.append(((R(i, -1) * R(j)) ** int(mat[i, j]), E))
    return GroupPresentation([f"R{i}" for i in range(1, n)], rels, f"bourbaki-group {mat}")


def hecke_relation(x: FreeWord, m: int, ci: int, cj: int) -> list:
    """sum_k a_k^(m) (x^((m+k)/2) - x^((m-k)/2)) as a list of (coeff, word),
    highest power first.  ci, cj are the parameter classes of the two ends."""
    names = (f"b{ci}", f"b{cj}")
    a = a_vector(m, ci == cj, names)
    terms: dict = {}
    for k in range(1, m + 1):
        if not a[k]:
            continue
        hi, lo = (m + k) // 2, (m - k) // 2
        terms[hi] = terms.get(hi, LaurentPoly.const(0)) + a[k]
        terms[lo] = terms.get(lo, LaurentPoly.const(0)) - a[k]
    return [(c, x ** p) for p, c in sorted(terms.items(), reverse=True) if c]


def bourbaki_hecke(mat: CoxeterMatrix) -> AlgebraPresentation:
    n = mat.n
    cls = class_representatives(mat)
    rels = []
    for i in range(1, n):
        if is_finite(mat[0, i]):
            rels.append(hecke_relation(Y(i), int(mat[0, i]), cls[0], cls[i]))
    for i, j in combinations(range(1, n), 2):
        if is_finite(mat[i, j]):
            rels.append(hecke_relation(Y(i, -1) * Y(j), int(mat[i, j]), cls[i], cls[j]))
    return AlgebraPresentation([f"Y{i}" for i in range(1, n)], rels, f"bourbaki-hecke {mat}")


# ---------------------------------------------------------------------------
# edge presentations


class EdgeData:
    """Combinatorics shared by the three edge presentations."""

    def __init__(self, mat: CoxeterMatrix):
        self.mat = mat
        self.graph: CoxGraph = connected_extension(mat)
        gr = self.graph
        self.edges = gr.edges
        self.cycles = cycle_basis(gr) if gr.n else []
        self.chains2 = [
            (i, j, k)
            for i in range(gr.n) for j in gr.neighbors(i) for k in gr.neighbors(j)
            if len({i, j, k}) == 3 and i < k and mat[i, k] == 2
        ]
        self.chains3 = [
            (i, j, k, l)
            for i in range(gr.n) for j in gr.neighbors(i) for k in gr.neighbors(j) for l in gr.neighbors(k)
            if len({i, j, k, l}) == 4 and i < l and mat[i, l] == 2
        ]
        self.disjoint = []
        for e1, e2 in combinations(self.edges, 2):
            if set(e1) & set(e2):
                continue
            if any(gr.has_edge(a, b) for a in e1 for b in e2):
                continue
            self.disjoint.append((e1, e2))

    def label(self, i: int, j: int):
        return self.graph.label(i, j)


def _edge_generators(data: EdgeData, prefix: str) -> list:
    return [edge_name(prefix, i, j) for i, j in data.edges]


def edge_group(mat: CoxeterMatrix) -> GroupPresentation:
    d = EdgeData(mat)
    r = lambda i, j: edge("r", i, j)
    rels = []
    for i, j in d.edges:
        m = d.label(i, j)
        if is_finite(m):
            rels.append((r(i, j) ** int(m), E))
    for cyc in d.cycles:
        rels.append((edge_path("r", cyc), E))
    for i, j, k in d.chains2:
        rels.append(((r(i, j) * r(j, k)) ** 2, E))
    for i, j, k, l in d.chains3:
        rels.append(((r(i, j) * r(j, k) * r(k, l)) ** 2, E))
    for (a, b), (c, e) in d.disjoint:
        rels.append((r(a, b) * r(c, e), r(c, e) * r(a, b)))
    return GroupPresentation(_edge_generators(d, "r"), rels, f"edge-group {mat}")


def edge_hecke(mat: CoxeterMatrix) -> AlgebraPresentation:
    d = EdgeData(mat)
    cls = class_representatives(mat)
    y = lambda i, j: edge("y", i, j)
    one = LaurentPoly.const(1)

    def unit(w: FreeWord) -> list:
        # w = 1 written as w - 1 = 0
        return [(one, w), (-one, E)]

    rels = []
    for i, j in d.edges:
        m = d.label(i, j)
        if is_finite(m):
            rels.append(hecke_relation(y(i, j), int(m), cls[i], cls[j]))
    for cyc in d.cycles:
        rels.append(unit(edge_path("y", cyc)))
    for i, j, k in d.chains2:
        rels.append(unit((y(i, j) * y(j, k)) ** 2))
    for i, j, k, l in d.chains3:
        rels.append(unit((y(i, j) * y(j, k) * y(k, l)) ** 2))
    for (a, b), (c, e) in d.disjoint:
        rels.append([(one, y(a, b) * y(c, e)), (-one, y(c, e) * y(a, b))])
    return AlgebraPresentation(_edge_generators(d, "y"), rels, f"edge-hecke {mat}")


# ---------------------------------------------------------------------------
# braid presentations


def bourbaki_braid(mat: CoxeterMatrix, keep_r0_prime: bool = False) -> GroupPresentation:
    """Generators R0..R{n-1} and R'1..R'{n-1}.  R'0 = 1 is eliminated unless
    ``keep_r0_prime`` is set, in which case R'0 is a generator with the
    relation R'0 = 1."""
    n = mat.n
    gens = [f"R{i}" for i in range(n)]
    rels = []
    if keep_r0_prime:
        gens += [f"R'{i}" for i in range(n)]
        rels.append((Rp(0), E))
        rp = Rp
    else:
        gens += [f"R'{i}" for i in range(1, n)]
        rp = lambda i: E if i == 0 else Rp(i)
    pairs = [(i, j) for i, j in combinations(range(n), 2) if is_finite(mat[i, j])]
    for i, j in pairs:
        m = int(mat[i, j])
        rels.append((alt(rp(i), R(j), m), alt(rp(j), R(i), m)))
    for i, j in pairs:
        m = int(mat[i, j])
        rels.append((alt(R(i), rp(j), m), alt(R(j), rp(i), m)))
    return GroupPresentation(gens, rels, f"bourbaki-braid {mat}")


def edge_braid(mat: CoxeterMatrix) -> GroupPresentation:
    """Edge presentation of the alternating braid group.  The even/odd edge
    relations are imposed on every edge of the connected extension, label-2
    edges included."""
    d = EdgeData(mat)
    r = lambda i, j: edge("r", i, j)
    rels = []
    for cyc in d.cycles:
        rels.append((edge_path("r", cyc), E))
    for i, j, k in d.chains2:
        fwd = r(i, j) * r(j, k)
        back = r(k, j) * r(j, i) * t(i)
        rels.append((fwd * t(k), back))
        rels.append((t(k) * fwd, back))
    for i, j, k, l in d.chains3:
        fwd = r(i, j) * r(j, k) * r(k, l)
        back = r(l, k) * r(k, j) * r(j, i) * t(i)
        rels.append((fwd * t(l), back))
        rels.append((t(l) * fwd, back))
    for i, j in d.edges:
        m = d.label(i, j)
        if not is_finite(m):
            continue
        m = int(m)
        if m % 2 == 0:
            h = m // 2
            rels.append(((r(i, j) * t(j)) ** h, (r(j, i) * t(i)) ** h))
            rels.append(((t(j) * r(i, j)) ** h, (r(j, i) * t(i)) ** h))
        else:
            h = (m - 1) // 2
            rels.append(((r(i, j) * t(j)) ** h * r(i, j), (r(j, i) * t(i)) ** h))
            rels.append(((r(i, j) * t(j)) ** (h + 1), t(i) * (r(j, i) * t(i)) ** h))
    for (a, b), (c, e) in d.disjoint:
        rels.append((r(a, b) * r(c, e), r(c, e) * r(a, b)))
    gens = _edge_generators(d, "r") + [f"t{i}" for i in range(mat.n)]
    return GroupPresentation(gens, rels, f"edge-braid {mat}")


def typeA_presentations(n: int, literal: bool = False) -> tuple[GroupPresentation, GroupPresentation]:
    """The two hand-written presentations of the alternating braid group of
    type A_n (generators g0..g{n-1}).

    The second one uses r{i} for the edge (i-1, i).  Its relation
    r_i t_i r_i = r_i^-1 t_{i-1} is the odd edge relation at label 3;
    ``literal=True`` emits r_i^-1 t_i^-1 on the right instead, which does not
    hold in the braid group and is kept only for comparison.
    """
    if n < 2:
        raise ValueError("type A presentations need n >= 2")
    rels = [(R(0) * R(1) * R(0), R(1) ** 2 * R(0, -1) * R(1) ** 2)]
    for j in range(2, n):
        rels.append((R(0) * R(j), R(j) * R(0)))
    if n >= 3:
        rels.append((R(2) * R(1) * R(2), R(1) ** 2 * R(0, -1) * R(2) * R(0, -1) * R(1) ** 2))
        rels.append((R(2) * R(1) ** 2 * R(2), R(0) * R(1) * R(2) * R(0, -1) * R(1) * R(0)))
    for j in range(3, n):
        rels.append((R(1) ** 2 * R(j), R(j) * R(1) * R(0)))
        rels.append((R(j) * R(1) ** 2, R(0) * R(1) * R(j)))
    for i in range(2, n - 1):
        rels.append((alt(R(i), R(i + 1), 3), alt(R(i + 1), R(i), 3)))
    for i, j in combinations(range(2, n), 2):
        if j - i > 1:
            rels.append((R(i) * R(j), R(j) * R(i)))
    first = GroupPresentation([f"R{i}" for i in range(n)], rels, f"typeA-braid A{n}")

    r = lambda i, e=1: gen(f"r{i}", e)
    rels2 = []
    for i in range(1, n - 1):
        back = r(i + 1, -1) * r(i, -1) * t(i - 1)
        rels2.append((r(i) * r(i + 1) * t(i + 1), back))
        rels2.append((t(i + 1) * r(i) * r(i + 1), back))
    for i in range(1, n - 2):
        back = r(i + 2, -1) * r(i + 1, -1) * r(i, -1) * t(i - 1)
        rels2.append((r(i) * r(i + 1) * r(i + 2) * t(i + 2), back))
        rels2.append((t(i + 2) * r(i) * r(i + 1) * r(i + 2), back))
    for i in range(1, n):
        rhs = r(i, -1) * t(i, -1) if literal else r(i, -1) * t(i - 1)
        rels2.append((r(i) * t(i) * r(i), rhs))
        rels2.append(((r(i) * t(i)) ** 2, t(i - 1) * r(i, -1) * t(i - 1)))
    for i, j in combinations(range(1, n), 2):
        if j - i > 2:
            rels2.append((r(i) * r(j), r(j) * r(i)))
    gens2 = [f"r{i}" for i in range(1, n)] + [f"t{i}" for i in range(n)]
    second = GroupPresentation(gens2, rels2, f"typeA-edge-braid A{n}")
    return first, second


# ---------------------------------------------------------------------------
# maps


def iso_maps(mat: CoxeterMatrix) -> dict[str, GenMap]:
    """All substitution maps, keyed by name.

    Path-dependent images follow the breadth-first spanning tree of the
    connected extension rooted at vertex 0.
    """
    n = mat.n
    d = EdgeData(mat)
    paths = {i: tree_path(d.graph, i) for i in range(n)} if n else {}
    R_src = [f"R{i}" for i in range(1, n)]
    Y_src = [f"Y{i}" for i in range(1, n)]
    r_src = _edge_generators(d, "r")
    y_src = _edge_generators(d, "y")
    braid_src = [f"R{i}" for i in range(n)] + [f"R'{i}" for i in range(n)]
    edge_braid_src = r_src + [f"t{i}" for i in range(n)]
    rp = lambda i: E if i == 0 else Rp(i)

    maps = {}

    def add(name, source, images, description):
        maps[name] = GenMap(name, source, images, description)

    add("bourbaki-group", R_src, {f"R{i}": s(0) * s(i) for i in range(1, n)}, "R_i -> s0 s_i")
    add("edge-group", r_src, {edge_name("r", i, j): s(i) * s(j) for i, j in d.edges}, "r_ij -> s_i s_j")
    add("edge-to-bourbaki-group", r_src,
        {edge_name("r", i, j): (R(j) if i == 0 else R(i, -1) * R(j)) for i, j in d.edges},
        "r_0j -> R_j, r_ij -> R_i^-1 R_j")
    add("bourbaki-to-edge-group", R_src, {f"R{i}": edge_path("r", paths[i]) for i in range(1, n)},
        "R_i -> product of r along the tree path 0 -> i")
    add("psi-hecke", Y_src, {f"Y{i}": gen("f0") * gen(f"f{i}") for i in range(1, n)}, "Y_i -> f0 f_i")
    add("Phi", y_src,
        {edge_name("y", i, j): (Y(j) if i == 0 else Y(i, -1) * Y(j)) for i, j in d.edges},
        "y_0j -> Y_j, y_ij -> Y_i^-1 Y_j")
    add("Psi", Y_src, {f"Y{i}": edge_path("y", paths[i]) for i in range(1, n)},
        "Y_i -> product of y along the tree path 0 -> i")
    add("braid-embedding", braid_src,
        {**{f"R{i}": g(0) * g(i) for i in range(n)}, **{f"R'{i}": g(i) * g(0, -1) for i in range(n)}},
        "R_i -> g0 g_i, R'_i -> g_i g0^-1")
    add("edge-braid-embedding", edge_braid_src,
        {**{edge_name("r", i, j): g(i) * g(j, -1) for i, j in d.edges}, **{f"t{i}": g(i) ** 2 for i in range(n)}},
        "r_ij -> g_i g_j^-1, t_i -> g_i^2")
    add("edge-to-bourbaki-braid", edge_braid_src,
        {**{edge_name("r", i, j): rp(i) * rp(j).inverse() for i, j in d.edges},
         **{f"t{i}": rp(i) * R(i) for i in range(n)}},
        "r_ij -> R'_i R'_j^-1, t_i -> R'_i R_i")
    imgs = {}
    for i in range(n):
        if i == 0:
            imgs["R0"], imgs["R'0"] = t(0), E
        else:
            imgs[f"R{i}"] = edge_path("r", paths[i]) * t(i)
            imgs[f"R'{i}"] = edge_path("r", paths[i][::-1])
    add("bourbaki-to-edge-braid", braid_src, imgs, "R0 -> t0, R_i -> r(0..i) t_i, R'_i -> r(i..0)")
    omega = {**{f"R{i}": rp(i) * R(0) for i in range(n)}, **{f"R'{i}": R(0, -1) * R(i) for i in range(n)}}
    add("omega", braid_src, omega, "R_i -> R'_i R0, R'_i -> R0^-1 R_i")
    add("tau", braid_src, dict(omega), "action of the anti-automorphism: R_i -> R'_i R0, R'_i -> R0^-1 R_i")
    add("tau-edge", edge_braid_src,
        {**{edge_name("r", i, j): t(j, -1) * edge("r", j, i) * t(i) for i, j in d.edges},
         **{f"t{i}": t(i) for i in range(n)}},
        "t_i -> t_i, r_ij -> t_j^-1 r_ji t_i")
    return maps


def typeA_maps(n: int) -> dict[str, GenMap]:
    """Maps of the two type-A presentations into the braid group."""
    src1 = [f"R{i}" for i in range(n)]
    src2 = [f"r{i}" for i in range(1, n)] + [f"t{i}" for i in range(n)]
    return {
        "typeA-braid-embedding": GenMap("typeA-braid-embedding", src1, {f"R{i}": g(0) * g(i) for i in range(n)}, "R_i -> g0 g_i"),
        "typeA-edge-braid-embedding": GenMap(
            "typeA-edge-braid-embedding", src2,
            {**{f"r{i}": g(i - 1) * g(i, -1) for i in range(1, n)}, **{f"t{i}": g(i) ** 2 for i in range(n)}},
            "r_i -> g_(i-1) g_i^-1, t_i -> g_i^2",
        ),
    }


# ---------------------------------------------------------------------------

PRESENTATION_KINDS = (
    "coxeter", "braid", "bourbaki-group", "bourbaki-hecke", "edge-group", "edge-hecke",
    "bourbaki-braid", "edge-braid", "typeA-braid", "typeA-edge-braid",
)


def present(mat: CoxeterMatrix, kind: str):
    if kind == "coxeter":
        return coxeter_presentation(mat)
    if kind == "braid":
        return braid_presentation(mat)
    if kind == "bourbaki-group":
        return bourbaki_group(mat)
    if kind == "bourbaki-hecke":
        return bourbaki_hecke(mat)
    if kind == "edge-group":
        return edge_group(mat)
    if kind == "edge-hecke":
        return edge_hecke(mat)
    if kind == "bourbaki-braid":
        return bourbaki_braid(mat)
    if kind == "edge-braid":
        return edge_braid(mat)
    if kind in ("typeA-braid", "typeA-edge-braid"):
        if mat.n < 2 or mat != named_matrix(f"A{mat.n}"):
            raise ValueError(f"{kind} needs a type A matrix, got {mat}")
        first, second = typeA_presentations(mat.n)
        return first if kind == "typeA-braid" else second
    raise ValueError(f"unknown presentation kind {kind!r}")
