"""Coset enumeration over the trivial subgroup (HLT strategy)."""

from __future__ import annotations

from ..words import GroupPresentation, cyclic_reduce


class CapExceeded(Exception):
    pass


class CosetTable:
    def __init__(self, ngens: int, cap: int):
        self.ncols = 2 * ngens
        self.cap = cap
        self.table: list[list] = [[None] * self.ncols]
        self.parent = [0]
        self.defined = 1

    @staticmethod
    def inv(col: int) -> int:
        return col ^ 1

    def live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if self.defined >= self.cap:
            raise CapExceeded
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.defined += 1
        self.table[c][x] = d
        self.table[d][self.inv(x)] = c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def _merge(self, a: int, b: int, queue: list) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                ix = self.inv(x)
                self.table[f][ix] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self._merge(f1, self.table[e1][x], queue)
                elif self.table[f1][ix] is not None:
                    self._merge(e1, self.table[f1][ix], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][ix] = e1

    def scan_and_fill(self, a: int, word: list) -> None:
        t = self.table
        f, b = a, a
        i, j = 0, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] is not None:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != a:
                    self.coincidence(f, a)
                return
            while j >= i and t[b][self.inv(word[j])] is not None:
                b = t[b][self.inv(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][self.inv(word[i])] = f
                return
            self.define(f, word[i])

    def size(self) -> int:
        return sum(1 for c in range(len(self.table)) if self.live(c))


def todd_coxeter(pres: GroupPresentation, coset_cap: int = 50_000) -> int | None:
    """Order of the presented group, or None when more than ``coset_cap``
    cosets would be defined."""
    if not pres.generators:
        return 1
    col = {g: 2 * i for i, g in enumerate(pres.generators)}
    relators = []
    for r in pres.relators():
        c = cyclic_reduce(r)
        if c:
            relators.append([col[n] if e == 1 else col[n] + 1 for n, e in c])
    table = CosetTable(len(pres.generators), coset_cap)
    try:
        c = 0
        while c < len(table.table):
            if table.live(c):
                for w in relators:
                    table.scan_and_fill(c, w)
                    if not table.live(c):
                        break
                if table.live(c):
                    for x in range(table.ncols):
                        if table.table[c][x] is None:
                            table.define(c, x)
            c += 1
    except CapExceeded:
        return None
    return table.size()
