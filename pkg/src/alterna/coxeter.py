"""Coxeter matrices, Coxeter graphs and their connected extensions."""

from __future__ import annotations

import json
import math
import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

INF = math.inf


class CoxeterMatrixError(ValueError):
    pass


def is_finite(m) -> bool:
    return m != INF


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix with ones on the diagonal, off-diagonal entries >= 2
    or ``INF``."""

    entries: tuple
    name: str | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_raw(self) -> list[list[int]]:
        return [[0 if x == INF else int(x) for x in row] for row in self.entries]

    def to_json(self) -> dict:
        return {"rank": self.n, "matrix": self.to_raw()}

    def __str__(self):
        return self.name or f"CoxeterMatrix({self.to_raw()})"


def validate_matrix(raw, name: str | None = None) -> CoxeterMatrix:
    """Validate an integer matrix (0 encodes infinity) as a Coxeter matrix."""
    rows = [list(r) for r in raw]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise CoxeterMatrixError(f"row {i} has length {len(row)}, expected {n}")
    entries = []
    for i in range(n):
        out = []
        for j in range(n):
            x = rows[i][j]
            if isinstance(x, bool) or not isinstance(x, int):
                raise CoxeterMatrixError(f"entry ({i},{j}) = {x!r} is not an integer")
            if x != rows[j][i]:
                raise CoxeterMatrixError(
                    f"matrix is not symmetric: entry ({i},{j}) = {x} but ({j},{i}) = {rows[j][i]}"
                )
            if i == j:
                if x != 1:
                    raise CoxeterMatrixError(f"diagonal entry ({i},{i}) = {x}, expected 1")
                out.append(1)
            elif x == 0:
                out.append(INF)
            elif x < 2:
                raise CoxeterMatrixError(f"off-diagonal entry ({i},{j}) = {x} is below 2")
            else:
                out.append(x)
        entries.append(tuple(out))
    return CoxeterMatrix(tuple(entries), name)


def _from_edges(n: int, edges: dict, name: str) -> CoxeterMatrix:
    raw = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), m in edges.items():
        raw[i][j] = raw[j][i] = m
    return validate_matrix(raw, name)


def _path(n: int, first: int = 3) -> dict:
    edges = {(i, i + 1): 3 for i in range(n - 1)}
    if n >= 2:
        edges[(0, 1)] = first
    return edges


def named_matrix(name: str) -> CoxeterMatrix:
    """Standard matrices: A{n}, B{n}, D{n}, E6-8, F4, H3, H4, I2(m).

    Labelling: paths run 0-1-2-...; B_n carries the 4 on edge 0-1; D_n
    attaches vertex n-1 to n-3; E_n attaches vertex 1 to vertex 3 of the
    path 0-2-3-4-...
    """
    key = name.strip().upper().replace(" ", "")
    m = re.fullmatch(r"I2\((\d+)\)", key)
    if m:
        label = int(m.group(1))
        if label < 2:
            raise CoxeterMatrixError(f"I2(m) needs m >= 2, got {label}")
        return _from_edges(2, {(0, 1): label}, f"I2({label})")
    m = re.fullmatch(r"([A-HI])(\d+)", key)
    if not m:
        raise CoxeterMatrixError(f"unknown Coxeter type {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A" and n >= 1:
        return _from_edges(n, _path(n), f"A{n}")
    if kind == "B" and n >= 2:
        return _from_edges(n, _path(n, first=4), f"B{n}")
    if kind == "D" and n >= 4:
        edges = {(i, i + 1): 3 for i in range(n - 2)}
        edges[(n - 3, n - 1)] = 3
        return _from_edges(n, edges, f"D{n}")
    if kind == "E" and n in (6, 7, 8):
        edges = {(0, 2): 3, (1, 3): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
        return _from_edges(n, edges, f"E{n}")
    if kind == "F" and n == 4:
        return _from_edges(4, {(0, 1): 3, (1, 2): 4, (2, 3): 3}, "F4")
    if kind == "H" and n in (3, 4):
        return _from_edges(n, _path(n, first=5), f"H{n}")
    raise CoxeterMatrixError(f"unknown Coxeter type {name!r}")


def load_matrix(source: str) -> CoxeterMatrix:
    """Accept a type name or a path to ``{"rank": n, "matrix": [[...]]}``."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        data = json.loads(path.read_text())
        return matrix_from_json(data, name=path.stem)
    return named_matrix(source)


def matrix_from_json(data, name: str | None = None) -> CoxeterMatrix:
    if not isinstance(data, dict) or "matrix" not in data:
        raise CoxeterMatrixError('expected an object with a "matrix" field')
    mat = validate_matrix(data["matrix"], name=name)
    if "rank" in data and data["rank"] != mat.n:
        raise CoxeterMatrixError(f"rank {data['rank']} does not match matrix size {mat.n}")
    return mat


def group_order(mat: CoxeterMatrix) -> int | None:
    """Order of the Coxeter group for the named finite types, else None."""
    name = mat.name or ""
    m = re.fullmatch(r"I2\((\d+)\)", name)
    if m:
        return 2 * int(m.group(1))
    m = re.fullmatch(r"([A-H])(\d+)", name)
    if not m:
        return None
    kind, n = m.group(1), int(m.group(2))
    fact = math.factorial
    table = {
        "A": lambda: fact(n + 1),
        "B": lambda: 2 ** n * fact(n),
        "D": lambda: 2 ** (n - 1) * fact(n),
        "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[n],
        "F": lambda: 1152,
        "H": lambda: {3: 120, 4: 14400}[n],
    }
    return table[kind]()


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class CoxGraph:
    n: int
    labels: dict  # (i, j) with i < j -> label
    added_edges: frozenset = frozenset()

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.labels)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.labels

    def label(self, i: int, j: int):
        return self.labels[(min(i, j), max(i, j))]

    def neighbors(self, v: int) -> list[int]:
        out = [j for (i, j) in self.labels if i == v] + [i for (i, j) in self.labels if j == v]
        return sorted(out)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1


def coxeter_graph(mat: CoxeterMatrix) -> CoxGraph:
    labels = {
        (i, j): mat[i, j] for i in range(mat.n) for j in range(i + 1, mat.n) if mat[i, j] >= 3
    }
    return CoxGraph(mat.n, labels)


def connected_extension(mat: CoxeterMatrix) -> CoxGraph:
    """Join consecutive components (ordered by smallest vertex) through their
    smallest vertices with label-2 edges."""
    graph = coxeter_graph(mat)
    reps = [comp[0] for comp in graph.components()]
    labels = dict(graph.labels)
    added = set()
    for a, b in zip(reps, reps[1:]):
        labels[(a, b)] = 2
        added.add((a, b))
    return CoxGraph(mat.n, labels, frozenset(added))


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: dict  # vertex -> parent (root absent)
    depth: dict

    def path_from_root(self, v: int) -> list[int]:
        path = [v]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path[::-1]

    def tree_edges(self) -> set[tuple[int, int]]:
        return {(min(v, p), max(v, p)) for v, p in self.parent.items()}


def bfs_tree(graph: CoxGraph, root: int = 0) -> SpanningTree:
    parent: dict[int, int] = {}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in graph.neighbors(v):
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                queue.append(w)
    if len(depth) != graph.n:
        raise ValueError("graph is not connected")
    return SpanningTree(root, parent, depth)


def cycle_basis(graph: CoxGraph) -> list[tuple[int, ...]]:
    """Fundamental cycles of the BFS tree rooted at 0 (closed vertex walks)."""
    if graph.n == 0:
        return []
    tree = bfs_tree(graph)
    tree_edges = tree.tree_edges()
    cycles = []
    for i, j in graph.edges:
        if (i, j) in tree_edges:
            continue
        pi, pj = tree.path_from_root(i), tree.path_from_root(j)
        k = 0
        while k < min(len(pi), len(pj)) and pi[k] == pj[k]:
            k += 1
        down = pi[k - 1:]           # lca -> i
        up = pj[k - 1:][::-1]       # j -> lca
        cycles.append(tuple(down + up))
    return cycles


def tree_path(graph: CoxGraph, target: int) -> list[int]:
    """Vertex path 0 -> target in the BFS spanning tree."""
    return bfs_tree(graph).path_from_root(target)


def parameter_classes(mat: CoxeterMatrix) -> list[list[int]]:
    """Classes of generators joined by paths of odd labels."""
    parent = list(range(mat.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(mat.n):
        for j in range(i + 1, mat.n):
            m = mat[i, j]
            if is_finite(m) and m % 2 == 1:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    classes: dict[int, list[int]] = {}
    for v in range(mat.n):
        classes.setdefault(find(v), []).append(v)
    return sorted(classes.values())


def class_representatives(mat: CoxeterMatrix) -> dict[int, int]:
    """vertex -> smallest vertex in its parameter class."""
    return {v: cls[0] for cls in parameter_classes(mat) for v in cls}
