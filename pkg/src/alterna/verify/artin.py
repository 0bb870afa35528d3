"""The Artin action of the type-A braid group on a free group."""

from __future__ import annotations

from typing import Mapping

from ..words import FreeWord, substitute


class FreeGroupAuto:
    """Automorphism of the free group on ``x0..x{rank-1}`` given by the images
    of the generators.  Products compose as maps: ``(a * b)(x) = a(b(x))``,
    so words in automorphisms act as a left action."""

    __slots__ = ("rank", "images", "_inverse")

    def __init__(self, rank: int, images: Mapping[str, FreeWord], inverse: "FreeGroupAuto | None" = None):
        self.rank = rank
        self.images = {f"x{a}": images.get(f"x{a}", FreeWord.gen(f"x{a}")) for a in range(rank)}
        self._inverse = inverse

    @classmethod
    def identity(cls, rank: int) -> "FreeGroupAuto":
        out = cls(rank, {})
        out._inverse = out
        return out

    def __call__(self, w: FreeWord) -> FreeWord:
        return substitute(w, self.images)

    def __mul__(self, other: "FreeGroupAuto") -> "FreeGroupAuto":
        imgs = {x: self(w) for x, w in other.images.items()}
        inv = None
        if self._inverse is not None and other._inverse is not None:
            inv_imgs = {x: other._inverse(w) for x, w in self._inverse.images.items()}
            inv = FreeGroupAuto(self.rank, inv_imgs)
        out = FreeGroupAuto(self.rank, imgs)
        if inv is not None:
            inv._inverse = out
            out._inverse = inv
        return out

    def inverse(self) -> "FreeGroupAuto":
        if self._inverse is None:
            raise ValueError("inverse not known for this automorphism")
        return self._inverse

    def is_identity(self) -> bool:
        return all(w == FreeWord.gen(x) for x, w in self.images.items())

    def check_inverse(self) -> bool:
        if self._inverse is None:
            return False
        return (self * self._inverse).is_identity() and (self._inverse * self).is_identity()

    def __eq__(self, other):
        return isinstance(other, FreeGroupAuto) and self.images == other.images

    def __hash__(self):
        return hash(tuple(sorted(self.images.items(), key=lambda kv: kv[0])))

    def __repr__(self):
        return "FreeGroupAuto(" + ", ".join(f"{x} -> {w}" for x, w in self.images.items()) + ")"


def artin_rep(n: int) -> dict[str, FreeGroupAuto]:
    """g_i: x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i, for i = 0..n-1, acting
    on the free group of rank n + 1."""
    if n < 1:
        raise ValueError("artin_rep needs n >= 1")
    rank = n + 1
    x = lambda a, e=1: FreeWord.gen(f"x{a}", e)
    out = {}
    for i in range(n):
        fwd = FreeGroupAuto(rank, {f"x{i}": x(i) * x(i + 1) * x(i, -1), f"x{i + 1}": x(i)})
        bwd = FreeGroupAuto(rank, {f"x{i}": x(i + 1), f"x{i + 1}": x(i + 1, -1) * x(i) * x(i + 1)})
        fwd._inverse, bwd._inverse = bwd, fwd
        out[f"g{i}"] = fwd
    return out
