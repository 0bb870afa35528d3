"""The rank-2 Hecke algebra on g_i, g_j with label m.

Elements are stored in the basis of alternating words: the identity, the
words <g_i, g_j>_k and <g_j, g_i>_k for 1 <= k < m, and the length-m word,
which the braid relation lets us store once (spelled starting with g_i).
A basis word is the pair ``(first, length)`` with ``first`` 0 for g_i and
1 for g_j; the identity is ``(0, 0)``.

Scalars live in one of two rings: ``SymbolicRing`` (Laurent polynomials in
the q-parameters over denominators that are products of (q + 1/q) and 2) or
``EvalRing`` (exact rationals at a fixed point).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .coeffs import a_vector
from .exactmath import FactoredFraction, LaurentPoly

Word = tuple  # (first, length)
IDENTITY: Word = (0, 0)


class SymbolicRing:
    def __init__(self, names: tuple[str, str]):
        self.names = names

    zero = staticmethod(lambda: FactoredFraction(0))

    def const(self, c) -> FactoredFraction:
        if isinstance(c, Fraction):
            n, d = c.numerator, c.denominator
            if d & (d - 1):
                raise ValueError("symbolic ring only supports dyadic rationals")
            return FactoredFraction(n, {"2": d.bit_length() - 1})
        return FactoredFraction(LaurentPoly.coerce(c))

    def q_minus(self, a: int) -> FactoredFraction:
        q = self.names[a]
        return FactoredFraction(LaurentPoly.var(q) - LaurentPoly.var(q, -1))

    def q_plus(self, a: int) -> FactoredFraction:
        q = self.names[a]
        return FactoredFraction(LaurentPoly.var(q) + LaurentPoly.var(q, -1))

    def inv_q_plus(self, a: int) -> FactoredFraction:
        return FactoredFraction(1, {self.names[a]: 1})

    def beta(self, a: int) -> FactoredFraction:
        return self.q_minus(a) * self.inv_q_plus(a)

    def is_zero(self, x) -> bool:
        return x.is_zero()


class EvalRing:
    def __init__(self, names: tuple[str, str], point: dict):
        self.names = names
        self.point = {k: Fraction(v) for k, v in point.items()}
        for q in names:
            x = self.point[q]
            if x == 0 or x + 1 / x == 0 or x - 1 / x == 0:
                raise ValueError(f"degenerate evaluation point {q} = {x}")

    zero = staticmethod(lambda: Fraction(0))

    def const(self, c) -> Fraction:
        if isinstance(c, LaurentPoly):
            return c.evaluate(self.point)
        return Fraction(c)

    def q_minus(self, a: int) -> Fraction:
        x = self.point[self.names[a]]
        return x - 1 / x

    def q_plus(self, a: int) -> Fraction:
        x = self.point[self.names[a]]
        return x + 1 / x

    def inv_q_plus(self, a: int) -> Fraction:
        return 1 / self.q_plus(a)

    def beta(self, a: int) -> Fraction:
        return self.q_minus(a) / self.q_plus(a)

    def is_zero(self, x) -> bool:
        return x == 0


def random_point(rng: random.Random, names: Iterable[str]) -> dict:
    point = {}
    for q in names:
        while True:
            x = Fraction(rng.randint(-40, 40), rng.randint(1, 40))
            if x not in (0, 1, -1):
                break
        point[q] = x
    return point


class DihedralElement:
    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: "DihedralAlgebra", coeffs: dict):
        self.alg = alg
        self.coeffs = {w: c for w, c in coeffs.items() if not alg.ring.is_zero(c)}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "DihedralElement") -> "DihedralElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return DihedralElement(self.alg, out)

    def __neg__(self):
        return DihedralElement(self.alg, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DihedralElement":
        return DihedralElement(self.alg, {w: c * x for w, x in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, DihedralElement):
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, DihedralElement):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        names = self.alg.gen_names
        parts = []
        for (s, L), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            word = "1" if L == 0 else "".join(names[(s + i) % 2] for i in range(L))
            parts.append(f"({c})*{word}")
        return " + ".join(parts) or "0"


class DihedralAlgebra:
    """Hecke algebra of the dihedral group of order 2m."""

    def __init__(self, m: int, equal_params: bool = False, q_names=("q0", "q1"),
                 point: dict | None = None, gen_names=("g_i", "g_j")):
        if m < 2:
            raise ValueError("label m must be at least 2")
        self.m = m
        # odd labels force q_i = q_j
        self.equal_params = equal_params or m % 2 == 1
        names = (q_names[0], q_names[0]) if self.equal_params else tuple(q_names)
        self.q_names = names
        self.gen_names = gen_names
        self.ring = SymbolicRing(names) if point is None else EvalRing(names, point)
        self._phi_cache: dict = {}

    # basis
    def basis(self) -> list[Word]:
        words = [IDENTITY]
        for k in range(1, self.m):
            words += [(0, k), (1, k)]
        words.append((0, self.m))
        return words

    def canonical(self, w: Word) -> Word:
        s, L = w
        if L == 0 or L == self.m:
            return (0, L)
        return w

    def element(self, coeffs: dict) -> DihedralElement:
        return DihedralElement(self, {self.canonical(w): c for w, c in coeffs.items()})

    def one(self) -> DihedralElement:
        return DihedralElement(self, {IDENTITY: self.ring.const(1)})

    def zero(self) -> DihedralElement:
        return DihedralElement(self, {})

    def scalar(self, c) -> DihedralElement:
        return self.one().scale(c if not isinstance(c, (int, LaurentPoly)) else self.ring.const(c))

    def gen(self, a: int) -> DihedralElement:
        return DihedralElement(self, {(a, 1): self.ring.const(1)})

    def gen_inv(self, a: int) -> DihedralElement:
        """g^-1 = g - (q - 1/q)."""
        return self.gen(a) - self.one().scale(self.ring.q_minus(a))

    def f_gen(self, a: int) -> DihedralElement:
        """f = (2g - (q - 1/q)) / (q + 1/q)."""
        return (self.gen(a).scale(self.ring.const(2)) - self.one().scale(self.ring.q_minus(a))).scale(
            self.ring.inv_q_plus(a)
        )

    def word_element(self, letters: Iterable[int]) -> DihedralElement:
        x = self.one()
        for a in reversed(list(letters)):
            x = self.left_mul_gen(a, x)
        return x

    def random_element(self, rng: random.Random, lo: int = -3, hi: int = 3) -> DihedralElement:
        return DihedralElement(self, {w: self.ring.const(rng.randint(lo, hi)) for w in self.basis()})

    # multiplication
    def left_mul_gen(self, a: int, x: DihedralElement) -> DihedralElement:
        m = self.m
        out: dict = {}

        def add(w, c):
            if w in out:
                out[w] = out[w] + c
            else:
                out[w] = c

        d = None
        for (s, L), c in x.coeffs.items():
            if L == 0:
                add((a, 1), c)
                continue
            first = s
            if L == m and a != s:
                first = a  # re-spell the longest word to start with g_a
            if first != a:
                add(self.canonical((a, L + 1)), c)
                continue
            # g_a g_a w' = (q - 1/q) g_a w' + w'
            if d is None:
                d = self.ring.q_minus(a)
            add(self.canonical((a, L)), d * c)
            add(self.canonical((1 - a, L - 1)) if L > 1 else IDENTITY, c)
        return DihedralElement(self, out)

    def left_mul_f(self, a: int, x: DihedralElement) -> DihedralElement:
        two_g = self.left_mul_gen(a, x).scale(self.ring.const(2))
        return (two_g - x.scale(self.ring.q_minus(a))).scale(self.ring.inv_q_plus(a))

    def letters(self, w: Word) -> list[int]:
        s, L = w
        return [(s + i) % 2 for i in range(L)]

    def mul(self, x: DihedralElement, y: DihedralElement) -> DihedralElement:
        out = self.zero()
        for w, c in x.coeffs.items():
            z = y
            for a in reversed(self.letters(w)):
                z = self.left_mul_gen(a, z)
            out = out + z.scale(c)
        return out

    def phi_word(self, w: Word) -> DihedralElement:
        cached = self._phi_cache.get(w)
        if cached is None:
            z = self.one()
            for a in reversed(self.letters(w)):
                z = z.scale(self.ring.q_minus(a)) - self.left_mul_gen(a, z)
            cached = self._phi_cache[w] = z
        return cached

    def phi(self, x: DihedralElement) -> DihedralElement:
        """The involution g -> -g^-1 = (q - 1/q) - g."""
        out = self.zero()
        for w, c in x.coeffs.items():
            out = out + self.phi_word(w).scale(c)
        return out

    def beta_value(self, poly: LaurentPoly, beta_vars: tuple[str, str] = ("b0", "b1")):
        """Value of a polynomial in the betas, beta = (q - 1/q)/(q + 1/q)."""
        values = {beta_vars[0]: self.ring.beta(0), beta_vars[1]: self.ring.beta(1)}
        total = self.ring.zero()
        for mono, c in poly.items():
            term = self.ring.const(c)
            for var, e in mono:
                if e < 0:
                    raise ValueError("beta polynomials have no negative powers")
                for _ in range(e):
                    term = term * values[var]
            total = total + term
        return total


def f_power(alg: DihedralAlgebra, p: int) -> DihedralElement:
    """(f_i f_j)^p."""
    x = alg.one()
    for _ in range(p):
        x = alg.left_mul_f(1, x)
        x = alg.left_mul_f(0, x)
    return x


def relation_residual(m: int, equal_params: bool = False, point: dict | None = None) -> DihedralElement:
    """sum_k a_k ((f_i f_j)^((m+k)/2) - (f_i f_j)^((m-k)/2)); zero when the
    relation holds."""
    alg = DihedralAlgebra(m, equal_params, point=point)
    a = a_vector(m, alg.equal_params)
    powers = [alg.one()]
    for _ in range(m):
        powers.append(alg.left_mul_f(0, alg.left_mul_f(1, powers[-1])))
    total = alg.zero()
    for k in range(m % 2 or 2, m + 1, 2):
        if not a[k]:
            continue
        coef = alg.beta_value(a[k])
        total = total + (powers[(m + k) // 2] - powers[(m - k) // 2]).scale(coef)
    return total


# ---------------------------------------------------------------------------
# formal expansion in f-words


@dataclass
class FExpansion:
    m: int
    pairs: dict   # k -> (coeff of <f_i,f_j>_k, coeff of <f_j,f_i>_k); k = 0 holds the identity coefficient twice
    antisym: dict  # k -> a_k
    sym: dict      # k -> b_k


def _f_left(ring, a: int, x: dict) -> dict:
    """Left multiplication by f_a on formal words with f^2 = 1 only."""
    out: dict = {}
    for (s, L), c in x.items():
        if L == 0:
            w = (a, 1)
        elif s != a:
            w = (a, L + 1)
        else:
            w = (1 - a, L - 1) if L > 1 else IDENTITY
        out[w] = out[w] + c if w in out else c
    return out


def braid_f_expansion(m: int, equal_params: bool = False, point: dict | None = None) -> FExpansion:
    """Expand <g_i,g_j>_m - <g_j,g_i>_m in f-words, substituting
    g = ((q + 1/q) f + (q - 1/q)) / 2 and reducing with f^2 = 1 only.

    Coefficients are normalized so the coefficient of <f_i,f_j>_m is 1.
    """
    alg = DihedralAlgebra(m, equal_params, point=point)
    ring = alg.ring
    half = ring.const(Fraction(1, 2))

    def left_g(a, x):
        fx = _f_left(ring, a, x)
        cf = ring.q_plus(a) * half
        df = ring.q_minus(a) * half
        out = {w: cf * c for w, c in fx.items()}
        for w, c in x.items():
            out[w] = out[w] + df * c if w in out else df * c
        return out

    def alt_word(first):
        x = {IDENTITY: ring.const(1)}
        for pos in reversed(range(m)):
            x = left_g((first + pos) % 2, x)
        return x

    w1, w2 = alt_word(0), alt_word(1)
    diff = dict(w1)
    for w, c in w2.items():
        diff[w] = diff[w] - c if w in diff else -c
    # leading coefficient (q_i + 1/q_i)^ceil(m/2) (q_j + 1/q_j)^floor(m/2) / 2^m
    inv_lead = ring.const(2 ** m)
    for pos in range(m):
        inv_lead = inv_lead * ring.inv_q_plus(pos % 2)
    norm = {w: c * inv_lead for w, c in diff.items()}
    lead = norm.get((0, m), ring.zero())
    if ring.is_zero(lead - ring.const(1)) is False:
        raise ArithmeticError(f"unexpected leading coefficient {lead}")
    zero = ring.zero()
    pairs, antisym, sym = {}, {}, {}
    c0 = norm.get(IDENTITY, zero)
    pairs[0] = (c0, c0)
    sym[0] = c0 * half
    antisym[0] = zero
    for k in range(1, m + 1):
        A = norm.get((0, k), zero)
        B = norm.get((1, k), zero)
        pairs[k] = (A, B)
        antisym[k] = (A - B) * half
        sym[k] = (A + B) * half
    return FExpansion(m, pairs, antisym, sym)


def f_expansion_element(alg: DihedralAlgebra, coeffs: dict) -> DihedralElement:
    """Evaluate sum_k c_k (<f_i,f_j>_k - <f_j,f_i>_k) inside the algebra."""
    total = alg.zero()
    for k, c in coeffs.items():
        if k == 0 or alg.ring.is_zero(c):
            continue
        x = alg.one()
        y = alg.one()
        for pos in reversed(range(k)):
            x = alg.left_mul_f(pos % 2, x)
            y = alg.left_mul_f((pos + 1) % 2, y)
        total = total + (x - y).scale(c)
    return total


# ---------------------------------------------------------------------------
# identity checks


@dataclass
class IdentityResult:
    name: str
    m: int
    mode: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "m": self.m, "mode": self.mode, "passed": self.passed, "detail": self.detail}

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} m={self.m} [{self.mode}] {self.name}"
        return f"{text}: {self.detail}" if self.detail else text


def _identities(m: int, equal_params: bool, point, rng: random.Random, fuzz: int, mode: str) -> list[IdentityResult]:
    alg = DihedralAlgebra(m, equal_params, point=point)
    res = []

    def rec(name, ok, detail=""):
        res.append(IdentityResult(name, m, mode, bool(ok), "" if ok else detail))

    basis = set(alg.basis())
    closed = all(
        set(alg.mul(alg.word_element(alg.letters(u)), alg.word_element(alg.letters(v))).coeffs) <= basis
        for u in basis for v in basis
    ) if m <= 6 else all(
        set(alg.left_mul_gen(a, alg.word_element(alg.letters(v))).coeffs) <= basis
        for a in (0, 1) for v in basis
    )
    rec("products stay in the 2m-dimensional basis", closed and len(basis) == 2 * m)
    one = alg.one()
    for a, label in ((0, "i"), (1, "j")):
        f = alg.f_gen(a)
        rec(f"g_{label} g_{label}^-1 = 1", alg.mul(alg.gen(a), alg.gen_inv(a)) == one)
        rec(f"f_{label}^2 = 1", alg.mul(f, f) == one)
        rec(f"phi(f_{label}) = -f_{label}", alg.phi(f) == -f)
    rec("braid relation <g_i,g_j>_m = <g_j,g_i>_m",
        alg.word_element([(p) % 2 for p in range(m)]) == alg.word_element([(p + 1) % 2 for p in range(m)]))
    ok_phi = True
    ok_assoc = True
    for _ in range(fuzz):
        x, y, z = (alg.random_element(rng) for _ in range(3))
        if alg.phi(alg.phi(x)) != x or alg.phi(alg.mul(x, y)) != alg.mul(alg.phi(x), alg.phi(y)):
            ok_phi = False
        if alg.mul(alg.mul(x, y), z) != alg.mul(x, alg.mul(y, z)):
            ok_assoc = False
    rec(f"phi involutive homomorphism ({fuzz} random pairs)", ok_phi)
    rec(f"associativity ({fuzz} random triples)", ok_assoc)
    residual = relation_residual(m, equal_params, point=point)
    rec("relation residual is zero", residual.is_zero(), f"residual = {residual}")
    exp = braid_f_expansion(m, equal_params, point=point)
    ring = alg.ring
    rec("symmetric part b_k vanishes", all(ring.is_zero(b) for b in exp.sym.values()))
    rec("a_k vanishes for k of wrong parity",
        all(ring.is_zero(exp.antisym[k]) for k in range(1, m + 1) if (m - k) % 2))
    a = a_vector(m, alg.equal_params)
    rec("antisymmetric part equals a_vector",
        all(ring.is_zero(exp.antisym[k] - alg.beta_value(a[k])) for k in range(1, m + 1)))
    rec("f-expansion vanishes in the algebra", f_expansion_element(alg, exp.antisym).is_zero())
    return res


def check_dihedral(m: int, equal_params: bool = False, eval_mode: bool = False, seed: int = 0,
                   fuzz: int | None = None, points: int = 3) -> list[IdentityResult]:
    """Run every dihedral identity for label m.

    In evaluation mode the identities are checked at ``points`` random
    rational points; for m <= 8 the symbolic check runs as well.
    """
    rng = random.Random(seed)
    results = []
    if not eval_mode or m <= 8:
        results += _identities(m, equal_params, None, rng, fuzz if fuzz is not None else 5, "symbolic")
    if eval_mode:
        alg = DihedralAlgebra(m, equal_params)
        # 100 random triples in total, spread over the points
        per_point = fuzz if fuzz is not None else -(-100 // points)
        for _ in range(points):
            pt = random_point(rng, set(alg.q_names))
            results += _identities(m, equal_params, pt, rng, per_point, "eval")
    return results
