"""Free words and presentations.

A ``FreeWord`` is a freely reduced tuple of letters ``(name, exp)`` with
``exp`` equal to +1 or -1.  Relations of a ``GroupPresentation`` are pairs
``lhs = rhs``; relations of an ``AlgebraPresentation`` are formal sums
``sum coeff * word = 0`` with Laurent-polynomial coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .exactmath import LaurentPoly

Letter = tuple  # (name, +1 | -1)


def free_reduce(letters: Iterable[Letter]) -> tuple:
    out: list = []
    for name, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {e}")
        if out and out[-1][0] == name and out[-1][1] == -e:
            out.pop()
        else:
            out.append((name, e))
    return tuple(out)


class FreeWord:
    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = free_reduce(letters)

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "FreeWord":
        e = 1 if exp >= 0 else -1
        return cls([(name, e)] * abs(exp))

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """Parse ``"R1 R'2^-1 r0_1^3"``; ``1`` or an empty string is the identity."""
        letters: list = []
        for tok in text.split():
            if tok == "1":
                continue
            m = re.fullmatch(r"([A-Za-z][\w']*)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"cannot parse word token {tok!r}")
            e = int(m.group(2)) if m.group(2) else 1
            letters += [(m.group(1), 1 if e > 0 else -1)] * abs(e)
        return cls(letters)

    @classmethod
    def from_json(cls, data) -> "FreeWord":
        letters: list = []
        for name, e in data:
            e = int(e)
            letters += [(str(name), 1 if e > 0 else -1)] * abs(e)
        return cls(letters)

    def to_json(self) -> list:
        return [[n, e] for n, e in self.letters]

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return FreeWord(base.letters * abs(k))

    def inverse(self) -> "FreeWord":
        return FreeWord((n, -e) for n, e in reversed(self.letters))

    def reversed(self) -> "FreeWord":
        """Same letters in the opposite order (an anti-automorphism)."""
        return FreeWord(reversed(self.letters))

    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> set:
        return {n for n, _ in self.letters}

    def exponent_sum(self, name: str) -> int:
        return sum(e for n, e in self.letters if n == name)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        i = 0
        L = self.letters
        while i < len(L):
            j = i
            while j < len(L) and L[j] == L[i]:
                j += 1
            n, e = L[i]
            k = (j - i) * e
            parts.append(n if k == 1 else f"{n}^{k}")
            i = j
        return " ".join(parts)

    __repr__ = __str__


def alt(a: FreeWord, b: FreeWord, k: int) -> FreeWord:
    """<a, b>_k = a b a b ... with k factors."""
    out = FreeWord()
    for p in range(k):
        out = out * (a if p % 2 == 0 else b)
    return out


def cyclic_reduce(w: FreeWord) -> tuple:
    L = list(w.letters)
    while len(L) >= 2 and L[0][0] == L[-1][0] and L[0][1] == -L[-1][1]:
        L = L[1:-1]
    return tuple(L)


def canonical_relator(w: FreeWord) -> tuple:
    """Representative of the conjugacy class of w and of w^-1: cyclically
    reduced, minimal over all rotations of both."""
    c = cyclic_reduce(w)
    if not c:
        return ()
    inv = tuple((n, -e) for n, e in reversed(c))
    best = None
    for seq in (c, inv):
        for r in range(len(seq)):
            rot = seq[r:] + seq[:r]
            key = tuple((n, -e) for n, e in rot)  # +1 sorts before -1
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


# ---------------------------------------------------------------------------


@dataclass
class GroupPresentation:
    generators: list
    relations: list = field(default_factory=list)  # list of (FreeWord, FreeWord)
    name: str = ""

    def __post_init__(self):
        declared = set(self.generators)
        for lhs, rhs in self.relations:
            missing = (lhs.generators() | rhs.generators()) - declared
            if missing:
                raise ValueError(f"relation {lhs} = {rhs} uses undeclared generators {sorted(missing)}")

    def relators(self) -> list:
        return [lhs * rhs.inverse() for lhs, rhs in self.relations]

    def relator_set(self) -> frozenset:
        """Canonical relators with trivial ones dropped."""
        return frozenset(c for c in (canonical_relator(r) for r in self.relators()) if c)

    def renamed(self, mapping: Mapping[str, str]) -> "GroupPresentation":
        ren = lambda w: FreeWord((mapping.get(n, n), e) for n, e in w)
        return GroupPresentation(
            [mapping.get(g, g) for g in self.generators],
            [(ren(l), ren(r)) for l, r in self.relations],
            self.name,
        )

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [{"lhs": l.to_json(), "rhs": r.to_json()} for l, r in self.relations],
        }

    @classmethod
    def from_json(cls, data) -> "GroupPresentation":
        if not isinstance(data, dict) or "generators" not in data:
            raise ValueError('expected an object with "generators" and "relations"')
        rels = []
        for rel in data.get("relations", []):
            if "terms" in rel:
                raise ValueError("algebra presentation given where a group presentation is expected")
            rels.append((FreeWord.from_json(rel["lhs"]), FreeWord.from_json(rel.get("rhs", []))))
        return cls([str(g) for g in data["generators"]], rels, data.get("name", ""))

    def __str__(self):
        rels = [f"{l} = {r}" for l, r in self.relations]
        head = f"< {', '.join(self.generators)} |"
        if not rels:
            return head + " >"
        return head + "\n  " + ",\n  ".join(rels) + "\n>"


@dataclass
class AlgebraPresentation:
    generators: list
    relations: list = field(default_factory=list)  # list of [(LaurentPoly, FreeWord), ...]
    name: str = ""
    invertible: bool = True

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "invertible": self.invertible,
            "relations": [
                {"terms": [{"coeff": c.to_json(), "word": w.to_json()} for c, w in rel]} for rel in self.relations
            ],
        }

    @classmethod
    def from_json(cls, data) -> "AlgebraPresentation":
        rels = []
        for rel in data.get("relations", []):
            rels.append([(LaurentPoly.from_json(t["coeff"]), FreeWord.from_json(t["word"])) for t in rel["terms"]])
        return cls([str(g) for g in data["generators"]], rels, data.get("name", ""), data.get("invertible", True))

    @staticmethod
    def format_relation(rel) -> str:
        parts = []
        for c, w in rel:
            word = "" if w.is_identity() else str(w)
            if c == 1:
                parts.append(("+ " + word) if word else "+ 1")
            elif c == -1:
                parts.append(("- " + word) if word else "- 1")
            else:
                cs = str(c)
                coef = f"({cs})" if (" " in cs and word) else cs
                sign = "+ "
                if coef.startswith("-") and "(" not in coef:
                    sign, coef = "- ", coef[1:]
                parts.append(f"{sign}{coef}{' ' + word if word else ''}")
        text = " ".join(parts) or "0"
        if text.startswith("+ "):
            text = text[2:]
        elif text.startswith("- "):
            text = "-" + text[2:]
        return text + " = 0"

    def __str__(self):
        gens = ", ".join(f"{g}^±1" if self.invertible else g for g in self.generators)
        head = f"< {gens} |"
        if not self.relations:
            return head + " >"
        return head + "\n  " + ",\n  ".join(self.format_relation(r) for r in self.relations) + "\n>"


class GenMap:
    """A substitution generator -> FreeWord, total on ``source``."""

    def __init__(self, name: str, source: list, images: Mapping[str, FreeWord], description: str = ""):
        missing = [g for g in source if g not in images]
        if missing:
            raise ValueError(f"map {name} has no image for {missing}")
        self.name = name
        self.source = list(source)
        self.images = dict(images)
        self.description = description

    def __call__(self, w: FreeWord) -> FreeWord:
        return substitute(w, self)

    def to_json(self) -> dict:
        return {"name": self.name, "images": {g: self.images[g].to_json() for g in self.source}}

    def __str__(self):
        body = ", ".join(f"{g} -> {self.images[g]}" for g in self.source)
        return f"{self.name}: {body}"


def substitute(word: FreeWord, gmap: GenMap | Mapping[str, FreeWord]) -> FreeWord:
    images = gmap.images if isinstance(gmap, GenMap) else gmap
    letters: list = []
    for n, e in word:
        if n not in images:
            raise KeyError(f"generator {n!r} is not in the domain of the map")
        img = images[n]
        letters += list(img.letters if e == 1 else img.inverse().letters)
    return FreeWord(letters)
