"""Reidemeister-Schreier rewriting for the kernel of a sign character.

The kernel has index 2 and transversal {1, g0}, where g0 is the first
generator with character -1.  For a generator x the Schreier generators are

    R'x = gamma(1, x)     (x g0^-1 if x is odd, x if x is even)
    Rx  = gamma(g0, x)    (g0 x if x is odd, g0 x g0^-1 if x is even)

named after the position of x in the generator list, and gamma(1, g0) is
trivial.  Every relation lhs = rhs yields pi(a lhs) = pi(a rhs) for a in
{1, g0}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .words import FreeWord, GroupPresentation, canonical_relator, free_reduce

__all__ = ["free_reduce", "SignCharacter", "SchreierSetup", "rs_rewrite", "simplify", "RewriteError"]


class RewriteError(ValueError):
    pass


@dataclass(frozen=True)
class SignCharacter:
    values: tuple  # ((generator, +1 | -1), ...)

    @classmethod
    def all_minus(cls, pres: GroupPresentation) -> "SignCharacter":
        return cls(tuple((g, -1) for g in pres.generators))

    @classmethod
    def from_mapping(cls, pres: GroupPresentation, mapping: dict) -> "SignCharacter":
        missing = [g for g in pres.generators if g not in mapping]
        if missing:
            raise RewriteError(f"character is not defined on {missing}")
        bad = {g: v for g, v in mapping.items() if v not in (1, -1)}
        if bad:
            raise RewriteError(f"character values must be +1 or -1: {bad}")
        return cls(tuple((g, int(mapping[g])) for g in pres.generators))

    @classmethod
    def load(cls, pres: GroupPresentation, source: str) -> "SignCharacter":
        if source == "all-minus":
            return cls.all_minus(pres)
        return cls.from_mapping(pres, json.loads(Path(source).read_text()))

    def __getitem__(self, g: str) -> int:
        return dict(self.values)[g]

    def of_word(self, w: FreeWord) -> int:
        table = dict(self.values)
        sign = 1
        for n, _ in w:
            sign *= table[n]
        return sign


@dataclass
class SchreierSetup:
    presentation: GroupPresentation
    character: SignCharacter
    g0: str | None = None

    def __post_init__(self):
        odd = [g for g in self.presentation.generators if self.character[g] == -1]
        if not odd:
            raise RewriteError("the character is trivial: no generator has value -1")
        if self.g0 is None:
            self.g0 = odd[0]
        elif self.character[self.g0] != -1:
            raise RewriteError(f"transversal element {self.g0} must have character -1")


def _names(pres: GroupPresentation) -> dict:
    return {g: str(i) for i, g in enumerate(pres.generators)}


def rs_rewrite(setup: SchreierSetup) -> GroupPresentation:
    """Presentation of the kernel, before any simplification (two relations
    per input relation)."""
    pres = setup.presentation
    chi = setup.character
    g0 = setup.g0
    idx = _names(pres)

    def gamma(coset: int, x: str):
        # coset 0 is the trivial coset, 1 is the coset of g0
        if coset == 0:
            return None if x == g0 else f"R'{idx[x]}"
        return f"R{idx[x]}"

    def pi(coset: int, w: FreeWord) -> FreeWord:
        letters = []
        for x, e in w:
            odd = chi[x] == -1
            if e == 1:
                name = gamma(coset, x)
                if name is not None:
                    letters.append((name, 1))
                coset = coset ^ odd
            else:
                coset = coset ^ odd
                name = gamma(coset, x)
                if name is not None:
                    letters.append((name, -1))
        return FreeWord(letters)

    rels = []
    for lhs, rhs in pres.relations:
        if chi.of_word(lhs) != chi.of_word(rhs):
            raise RewriteError(f"relation {lhs} = {rhs} does not respect the character")
        for coset in (0, 1):
            rels.append((pi(coset, lhs), pi(coset, rhs)))
    gens = [f"R{idx[x]}" for x in pres.generators]
    gens += [f"R'{idx[x]}" for x in pres.generators if x != g0]
    return GroupPresentation(gens, rels, f"kernel of {pres.name or 'presentation'}")


def simplify(pres: GroupPresentation) -> GroupPresentation:
    """Eliminate generators defined by relators of length at most 2 (x = 1
    or x = y^+-1), preferring to eliminate the later generator in the list;
    then free-reduce, drop trivial relations and duplicates (as canonical
    relators)."""
    gens = list(pres.generators)
    relators = [r for r in pres.relators()]
    order = {g: i for i, g in enumerate(gens)}
    while True:
        sub = None
        for r in relators:
            c = canonical_relator(r)
            names = {n for n, _ in c}
            if len(c) == 1:
                sub = (c[0][0], FreeWord())
                break
            if len(c) == 2 and len(names) == 2:
                (a, ea), (b, eb) = c
                # a^ea b^eb = 1
                if order[a] > order[b]:
                    a, ea, b, eb = b, eb, a, ea
                # eliminate b: b = a^(-ea*eb)
                sub = (b, FreeWord.gen(a, -ea * eb))
                break
        if sub is None:
            break
        name, img = sub
        gens.remove(name)
        relators = [_subst(r, name, img) for r in relators]
    seen = set()
    out = []
    for r in relators:
        c = canonical_relator(r)
        if c and c not in seen:
            seen.add(c)
            out.append((FreeWord(c), FreeWord()))
    return GroupPresentation(gens, out, pres.name)


def _subst(w: FreeWord, name: str, img: FreeWord) -> FreeWord:
    letters = []
    for n, e in w:
        if n == name:
            letters += list((img if e == 1 else img.inverse()).letters)
        else:
            letters.append((n, e))
    return FreeWord(letters)
