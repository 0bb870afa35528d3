"""Coefficients of the alternating Hecke relations.

``alpha_table(m)`` holds the integers alpha[k, l, l'] defined by expanding
the alternating product (f1 + x)(f2 + y)(f1 + x)... with m factors in the
words <f1, f2>_k of the infinite dihedral group (f1^2 = f2^2 = 1), where
<f1, f2>_{-k} means <f2, f1>_k.  The relation polynomials a_k^(m) in the
beta parameters are read off from it.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import comb

from .exactmath import LaurentPoly, ZERO, ONE, series_expand

Entry = tuple  # (k, l, l')


@functools.lru_cache(maxsize=None)
def _alpha(m: int) -> tuple:
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return (((0, 0, 0), 1),)
    prev = dict(_alpha(m - 1))
    out: dict = {}
    for (k, l, lp), c in prev.items():
        # alpha^(m)_{k,l,l'} = alpha^(m-1)_{k-1,l',l} + alpha^(m-1)_{-k,l',l-1}
        for key in ((k + 1, lp, l), (-k, lp + 1, l)):
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class AlphaTable:
    m: int
    entries: dict = field(hash=False)

    def __getitem__(self, key: Entry) -> int:
        return self.entries.get(key, 0)

    def one_param(self, k: int, L: int) -> int:
        """alpha_{k,L} = sum over l + l' = L."""
        return sum(c for (kk, l, lp), c in self.entries.items() if kk == k and l + lp == L)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "entries": [{"k": k, "l": l, "lp": lp, "value": str(c)} for (k, l, lp), c in sorted(self.entries.items())],
        }


def alpha_table(m: int) -> AlphaTable:
    return AlphaTable(m, dict(_alpha(m)))


def support_ok(m: int, k: int, l: int, lp: int) -> bool:
    r = m - l - lp
    return abs(k) <= r and (k - r) % 2 == 0 and l <= (m + 1) // 2 and lp <= m // 2


def beta_names(equal_params: bool, names: tuple[str, str] = ("b0", "b1")) -> tuple[str, str]:
    return (names[0], names[0]) if equal_params else names


@dataclass(frozen=True)
class AKVector:
    m: int
    a: dict = field(hash=False)  # k -> LaurentPoly, k = 1..m

    def __getitem__(self, k: int) -> LaurentPoly:
        return self.a.get(k, ZERO)

    def nonzero(self) -> dict:
        return {k: p for k, p in self.a.items() if p}

    def to_json(self) -> dict:
        return {"m": self.m, "a": {str(k): p.to_json() for k, p in sorted(self.a.items(), reverse=True) if p}}

    def __str__(self) -> str:
        return ", ".join(f"a{k} = {p}" for k, p in sorted(self.a.items(), reverse=True) if p)


def a_vector(m: int, equal_params: bool = False, names: tuple[str, str] = ("b0", "b1")) -> AKVector:
    """a_k^(m) = sum_{l,l'} bi^l bj^l' (alpha_{k,l,l'} - alpha_{-k,l',l})."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if m % 2 == 1 and not equal_params:
        raise ValueError(f"m = {m} is odd: the two parameters must coincide (equal_params=True)")
    bi, bj = beta_names(equal_params, names)
    table = alpha_table(m)

    def mono(x: int, y: int, c: int) -> LaurentPoly:
        exps: dict = {bi: x}
        exps[bj] = exps.get(bj, 0) + y
        return LaurentPoly.monomial(exps, c)

    out = {}
    for k in range(1, m + 1):
        acc = ZERO
        for (kk, l, lp), c in table.entries.items():
            if kk == k:
                acc = acc + mono(l, lp, c)
            if kk == -k:
                # entry alpha_{-k,x,y} weighs bi^y bj^x
                acc = acc - mono(lp, l, c)
        out[k] = acc
    return AKVector(m, out)


def binom(n: int, k: int) -> int:
    """C(n, 0) = 1 for every n; C(n, k) = 0 for k < 0; negative n with k > 0 is
    never reached inside the support and is rejected."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0:
        raise AssertionError(f"binomial C({n}, {k}) with negative top reached")
    return comb(n, k)


def alpha_one_param(m: int, k: int, L: int) -> int:
    """Closed form for alpha_{k,L}^(m) = sum_{l+l'=L} alpha^(m)_{k,l,l'}."""
    if L < 0 or m < 0 or L > m or abs(k) > m - L or (m + k - L) % 2:
        return 0
    if L % 2 == 0:
        return binom((m + k) // 2, (m + k - L) // 2) * binom((m - k - 2) // 2, (m - k - L) // 2)
    return binom((m + k - 1) // 2, (m + k - L) // 2) * binom((m - k - 1) // 2, (m - k - L) // 2)


def a_one_param(m: int, name: str = "b0") -> AKVector:
    """a_k = sum_p b^(2p) * 2k/(m+k) * alpha_{k,2p}, exact integer division."""
    if m < 2:
        raise ValueError("m must be at least 2")
    out = {}
    for k in range(1, m + 1):
        acc = ZERO
        for p in range((m - 1) // 2 + 1):
            num = 2 * k * alpha_one_param(m, k, 2 * p)
            q, r = divmod(num, m + k)
            if r:
                raise ArithmeticError(f"2k/(m+k) * alpha not integral at m={m}, k={k}, p={p}")
            if q:
                acc = acc + LaurentPoly.monomial({name: 2 * p}, q)
        out[k] = acc
    return AKVector(m, out)


# ---------------------------------------------------------------------------
# generating functions

_t, _u, _v, _s = (LaurentPoly.var(x) for x in "tuvs")
_s_inv = LaurentPoly.var("s", -1)


def gen_C() -> tuple[LaurentPoly, LaurentPoly]:
    """Numerator and denominator of C(t, u, v, s)."""
    num = (
        ONE
        + _t * (_u + _s)
        + _t ** 2 * (_v * _s + _u * _s_inv - _s_inv ** 2 - _u * _v)
        + _t ** 3 * (ONE - _u ** 2) * (_v - _s_inv)
    )
    den = ONE - _t ** 2 * (_s ** 2 + _s_inv ** 2 + 2 * _u * _v) + _t ** 4 * (_u ** 2 - ONE) * (_v ** 2 - ONE)
    return num, den


def gen_D() -> tuple[LaurentPoly, LaurentPoly]:
    """Numerator and denominator of D(t, u, s) = C(t, u, u, s)."""
    num = ONE + _t * (_u - _s_inv)
    den = ONE - _t * (_s + _s_inv) + _t ** 2 * (ONE - _u ** 2)
    return num, den


def gen_D_even_odd() -> tuple[tuple[LaurentPoly, LaurentPoly], tuple[LaurentPoly, LaurentPoly]]:
    """Even and odd parts in u of D, written over the common denominator
    (1 - ts)(1 - t/s) - t^2 u^2."""
    den = (ONE - _t * _s) * (ONE - _t * _s_inv) - _t ** 2 * _u ** 2
    return (ONE - _t * _s_inv, den), (_t * _u, den)


def alpha_poly_C(m: int) -> LaurentPoly:
    """sum of alpha^(m)_{k,l,l'} u^l v^l' s^k."""
    out = ZERO
    for (k, l, lp), c in alpha_table(m).entries.items():
        out = out + LaurentPoly.monomial({"u": l, "v": lp, "s": k}, c)
    return out


def alpha_poly_D(m: int) -> LaurentPoly:
    out = ZERO
    for L in range(m + 1):
        for k in range(-m, m + 1):
            c = alpha_one_param(m, k, L)
            if c:
                out = out + LaurentPoly.monomial({"u": L, "s": k}, c)
    return out


def _split_factor_coeff(m: int, even: bool) -> LaurentPoly:
    """t^m coefficient of the factorial sums for the even/odd parts of D."""
    out = ZERO
    for a in range(m + 1):
        for b in range(m + 1):
            c = m - 2 * a - b - (0 if even else 1)
            if c < 0:
                continue
            if even:
                if a == 0:
                    coef = 1 if c == 0 else 0
                else:
                    coef = comb(a + b, b) * comb(a + c - 1, c)
                u_exp = 2 * a
            else:
                coef = comb(a + b, b) * comb(a + c, c)
                u_exp = 2 * a + 1
            if coef:
                out = out + LaurentPoly.monomial({"u": u_exp, "s": b - c}, coef)
    return out


@dataclass
class GenCheckReport:
    name: str
    order: int
    ok: bool
    mismatch: str | None = None
    checked: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "order": self.order, "ok": self.ok, "mismatch": self.mismatch, "checked": self.checked}

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name} up to t^{self.order}"
        return text if self.ok else f"{text}: {self.mismatch}"


def gen_check_C(order: int) -> GenCheckReport:
    """Compare the series of C(t,u,v,s) with the recursion tables."""
    num, den = gen_C()
    series = series_expand(num, den, "t", order)
    report = GenCheckReport("C(t,u,v,s) vs recursion", order, True)
    for m in range(order + 1):
        expected = alpha_poly_C(m)
        if series[m] != expected:
            report.ok = False
            report.mismatch = f"t^{m}: series {series[m]} != recursion {expected}"
            return report
        report.checked.append(m)
    return report


def gen_check_D(order: int) -> GenCheckReport:
    """Three-way agreement for the one-parameter generating function, plus
    the even/odd split and its factorial sums."""
    report = GenCheckReport("D(t,u,s) vs C(t,u,u,s) vs closed form", order, True)
    d_series = series_expand(*gen_D(), "t", order)
    cn, cd = gen_C()
    c_series = series_expand(cn.rename({"v": "u"}), cd.rename({"v": "u"}), "t", order)
    (en, ed), (on, od) = gen_D_even_odd()
    even = series_expand(en, ed, "t", order)
    odd = series_expand(on, od, "t", order)

    def fail(msg):
        report.ok = False
        report.mismatch = msg
        return report

    for m in range(order + 1):
        closed = alpha_poly_D(m)
        recursion = alpha_poly_C(m).rename({"v": "u"})
        if d_series[m] != c_series[m]:
            return fail(f"t^{m}: D series {d_series[m]} != C(t,u,u,s) series {c_series[m]}")
        if d_series[m] != closed:
            return fail(f"t^{m}: D series {d_series[m]} != closed form {closed}")
        if recursion != closed:
            return fail(f"t^{m}: recursion {recursion} != closed form {closed}")
        if even[m] + odd[m] != d_series[m]:
            return fail(f"t^{m}: even + odd parts do not sum to D")
        for part, parity, label in ((even[m], 0, "even"), (odd[m], 1, "odd")):
            if any(dict(mono).get("u", 0) % 2 != parity for mono, _ in part.items()):
                return fail(f"t^{m}: {label} part has wrong u-parity")
        if even[m] != _split_factor_coeff(m, True):
            return fail(f"t^{m}: even part differs from its factorial sum")
        if odd[m] != _split_factor_coeff(m, False):
            return fail(f"t^{m}: odd part differs from its factorial sum")
        report.checked.append(m)
    return report
