"""Concrete permutation models of finite Coxeter groups."""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Mapping

from ..coxeter import CoxeterMatrix, named_matrix
from ..words import FreeWord


class Permutation:
    """Bijection of {0, ..., N-1}.  ``p * q`` applies p first, then q."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        q = other.images
        return Permutation._raw(tuple(q[x] for x in self.images))

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def order(self) -> int:
        p, k = self, 1
        while not p.is_identity():
            p, k = p * self, k + 1
        return k

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def _transposition(n: int, pairs) -> Permutation:
    img = list(range(n))
    for a, b in pairs:
        img[a], img[b] = b, a
    return Permutation(img)


# H3 = A5 x C2: three double transpositions of A5 generating it with the
# Coxeter relations of H3, each times the swap of the two extra points.
_H3_A5 = ((1, 0, 3, 2, 4), (2, 4, 0, 3, 1), (2, 3, 0, 1, 4))


def coxeter_model(name: str) -> tuple[CoxeterMatrix, dict[str, Permutation]]:
    """(matrix, {"s0": perm, ...}) for A_n, B_n, D_n, H3 and I2(m)."""
    mat = named_matrix(name)
    label = mat.name
    n = mat.n
    kind = re.match(r"[A-Z]+", label).group(0) if not label.startswith("I2") else "I2"
    if kind == "A":
        gens = [_transposition(n + 1, [(i, i + 1)]) for i in range(n)]
    elif kind == "B":
        # signed permutations of n coordinates; point c is +e_c, c + n is -e_c
        gens = [_transposition(2 * n, [(0, n)])]
        gens += [_transposition(2 * n, [(i - 1, i), (i - 1 + n, i + n)]) for i in range(1, n)]
    elif kind == "D":
        gens = [_transposition(2 * n, [(i, i + 1), (i + n, i + 1 + n)]) for i in range(n - 1)]
        a, b = n - 2, n - 1
        gens.append(_transposition(2 * n, [(a, b + n), (a + n, b)]))
    elif kind == "H" and n == 3:
        gens = [Permutation(list(p) + [6, 5]) for p in _H3_A5]
    elif kind == "I2":
        m = int(mat[0, 1])
        if m == 2:
            gens = [_transposition(4, [(0, 1)]), _transposition(4, [(2, 3)])]
        else:
            gens = [Permutation([(-k) % m for k in range(m)]), Permutation([(1 - k) % m for k in range(m)])]
    else:
        raise ValueError(f"no concrete model for type {label}")
    return mat, {f"s{i}": p for i, p in enumerate(gens)}


def evaluate(word: FreeWord, assign: Mapping, identity):
    out = identity
    for name, e in word:
        x = assign[name]
        out = out * (x if e == 1 else x.inverse())
    return out


def check_relations(pres, assign: Mapping, identity) -> list:
    """Relations of ``pres`` that fail under ``assign`` (an empty list means
    the assignment extends to a homomorphism)."""
    failed = []
    for lhs, rhs in pres.relations:
        if evaluate(lhs, assign, identity) != evaluate(rhs, assign, identity):
            failed.append((lhs, rhs))
    return failed


def bfs_closure(gens: list, cap: int = 1_000_000, identity=None) -> int | None:
    """Order of the group generated by ``gens``; None once ``cap`` is exceeded."""
    if identity is None:
        if not gens:
            return 1
        identity = Permutation.identity(gens[0].degree)
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    return None
                queue.append(y)
    return len(seen)
