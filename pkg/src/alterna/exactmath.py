"""Exact arithmetic: multivariate Laurent polynomials over Z, rational
functions, denominators in factored form, and truncated power series.

A monomial is a sorted tuple of ``(variable, exponent)`` pairs with nonzero
exponents.  Variables follow the naming used in JSON output: ``b0, b1, ...``
for the beta parameters, ``q0, q1, ...`` for the Hecke parameters and
``t, u, v, s`` for generating functions.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple  # tuple[tuple[str, int], ...]

ONE_MONOMIAL: Monomial = ()


def _mono(exps: Mapping[str, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            if ea + eb:
                out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_cmp(a: Monomial, b: Monomial) -> int:
    """Lexicographic on variable names, then exponent."""
    da, db = dict(a), dict(b)
    for var in sorted(set(da) | set(db)):
        ea, eb = da.get(var, 0), db.get(var, 0)
        if ea != eb:
            return 1 if ea > eb else -1
    return 0


_mono_key = functools.cmp_to_key(_mono_cmp)


class LaurentPoly:
    """Immutable Laurent polynomial with unbounded integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = clean.get(mono, 0) + int(c)
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "LaurentPoly":
        return cls._raw({((name, exp),): 1} if exp else {(): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "LaurentPoly":
        return cls._raw({_mono(exps): int(coeff)} if coeff else {})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # inspection
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def variables(self) -> list[str]:
        return sorted({v for mono in self._terms for v, _ in mono})

    def coeff(self, exps: Mapping[str, int]) -> int:
        return self._terms.get(_mono(exps), 0)

    def degree_range(self, var: str) -> tuple[int, int]:
        exps = [dict(m).get(var, 0) for m in self._terms] or [0]
        return min(exps), max(exps)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    # arithmetic
    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({m: c * other for m, c in self._terms.items()})
        other = LaurentPoly.coerce(other)
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials with unit coefficient can be inverted")
            (mono, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only monomials with unit coefficient can be inverted")
            inv = LaurentPoly._raw({tuple((v, -e) for v, e in mono): c})
            return inv ** (-n)
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def content(self) -> int:
        from math import gcd
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def exact_div_int(self, d: int) -> "LaurentPoly":
        out = {}
        for m, c in self._terms.items():
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {d}")
            out[m] = q
        return LaurentPoly._raw(out)

    def shift(self, exps: Mapping[str, int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponents."""
        return self * LaurentPoly.monomial(exps)

    def min_exponents(self) -> dict[str, int]:
        out: dict[str, int] = {}
        vars_ = self.variables()
        for var in vars_:
            out[var] = min(dict(m).get(var, 0) for m in self._terms)
        return out

    def subs(self, values: Mapping[str, "LaurentPoly | int"]) -> "LaurentPoly":
        """Substitute Laurent polynomials for variables (negative exponents
        require monomial units)."""
        values = {k: LaurentPoly.coerce(v) for k, v in values.items()}
        out = LaurentPoly.const(0)
        cache: dict = {}
        for mono, c in self._terms.items():
            term = LaurentPoly.const(c)
            rest = {}
            for var, e in mono:
                if var in values:
                    key = (var, e)
                    if key not in cache:
                        cache[key] = values[var] ** e
                    term = term * cache[key]
                else:
                    rest[var] = e
            if rest:
                term = term * LaurentPoly.monomial(rest)
            out = out + term
        return out

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        out: dict = {}
        for mono, c in self._terms.items():
            exps: dict[str, int] = {}
            for v, e in mono:
                w = mapping.get(v, v)
                exps[w] = exps.get(w, 0) + e
            m = _mono(exps)
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    def evaluate(self, values: Mapping[str, Fraction | int]) -> Fraction:
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = Fraction(c)
            for var, e in mono:
                term *= Fraction(values[var]) ** e
            total += term
        return total

    def split_by(self, var: str) -> dict[int, "LaurentPoly"]:
        """Group terms by the exponent of ``var``: {exp: coefficient poly}."""
        groups: dict[int, dict] = {}
        for mono, c in self._terms.items():
            e = 0
            rest = []
            for v, x in mono:
                if v == var:
                    e = x
                else:
                    rest.append((v, x))
            groups.setdefault(e, {})[tuple(rest)] = c
        return {e: LaurentPoly._raw(t) for e, t in groups.items()}

    # output
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            body = "*".join(factors)
            if not body:
                parts.append((c < 0, str(abs(c))))
            elif abs(c) == 1:
                parts.append((c < 0, body))
            else:
                parts.append((c < 0, f"{abs(c)}*{body}"))
        text = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "exps": {v: e for v, e in mono}}
            for mono, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "LaurentPoly":
        out: dict = {}
        for term in data:
            m = _mono({str(k): int(v) for k, v in term["exps"].items()})
            out[m] = out.get(m, 0) + int(term["coeff"])
        return cls(out)


def var(name: str) -> LaurentPoly:
    return LaurentPoly.var(name)


ZERO = LaurentPoly.const(0)
ONE = LaurentPoly.const(1)


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Rational functions


def _to_polynomial_pair(num: LaurentPoly, den: LaurentPoly):
    """Shift num and den by a common monomial so both have nonnegative
    exponents; return (variables, num dict, den dict)."""
    vars_ = sorted(set(num.variables()) | set(den.variables()))
    shift = {}
    for var_ in vars_:
        lo = min(num.min_exponents().get(var_, 0), den.min_exponents().get(var_, 0), 0)
        shift[var_] = -lo

    def as_dict(p: LaurentPoly):
        out = {}
        for mono, c in p.items():
            d = dict(mono)
            out[tuple(d.get(v, 0) + shift[v] for v in vars_)] = c
        return out

    return vars_, as_dict(num), as_dict(den)


def _from_exp_dict(vars_, d) -> LaurentPoly:
    return LaurentPoly({_mono(dict(zip(vars_, exps))): int(c) for exps, c in d.items()})


class RationalFunction:
    """Normalized quotient of two Laurent polynomials.

    Normal form: gcd removed, the denominator has no negative exponents and is
    not divisible by any variable, and its leading term is positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _normalized: bool = False):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_ratfun(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-_as_ratfun(other))

    def __rsub__(self, other):
        return _as_ratfun(other) - self

    def __mul__(self, other):
        other = _as_ratfun(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        try:
            other = _as_ratfun(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, values) -> Fraction:
        return self.num.evaluate(values) / self.den.evaluate(values)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def _as_ratfun(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(LaurentPoly.coerce(x), ONE, _normalized=True)


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO, ONE
    vars_, nd, dd = _to_polynomial_pair(num, den)
    if vars_:
        from sympy.polys.domains import ZZ
        from sympy.polys.rings import ring

        R, *_ = ring(",".join(vars_) if len(vars_) > 1 else vars_[0] + ",", ZZ)
        pn, pd = R.from_dict(nd), R.from_dict(dd)
        _, pn, pd = pn.cofactors(pd)
        num = _from_exp_dict(vars_, dict(pn.items()))
        den = _from_exp_dict(vars_, dict(pd.items()))
    else:
        from math import gcd
        g = gcd(num.constant_term(), den.constant_term())
        num, den = num.exact_div_int(g), den.exact_div_int(g)
    # strip monomial factors from den (they are units)
    lows = den.min_exponents()
    if any(lows.values()):
        unit = {v: -e for v, e in lows.items() if e}
        num, den = num.shift(unit), den.shift(unit)
    _, lc = den.leading_term()
    if lc < 0:
        num, den = -num, -den
    return num, den


def ratfun_normalize(num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
    if LaurentPoly.coerce(den).is_zero():
        raise ZeroDivisionError("zero denominator")
    return RationalFunction(num, den)


# ---------------------------------------------------------------------------
# Fractions whose denominators are products of (x + x^-1) factors and 2


def divide_by_plus_inverse(p: LaurentPoly, var_: str) -> LaurentPoly | None:
    """Exact quotient p / (var + var^-1), or None when it does not divide."""
    out: dict = {}
    # (x + x^-1) = x^-1 (x^2 + 1): divide x*p by x^2 + 1 per monomial in the other variables
    by_rest: dict[Monomial, dict[int, int]] = {}
    for mono, c in p.items():
        e = 0
        rest = []
        for v, x in mono:
            if v == var_:
                e = x
            else:
                rest.append((v, x))
        by_rest.setdefault(tuple(rest), {})[e + 1] = c  # multiply by x
    for rest, h in by_rest.items():
        h = dict(h)
        lo = min(h)
        quot: dict[int, int] = {}
        for d in range(max(h), lo + 1, -1):
            c = h.get(d, 0)
            if c:
                quot[d - 2] = c
                h[d] = 0
                h[d - 2] = h.get(d - 2, 0) - c
        if any(h.values()):
            return None
        for e, c in quot.items():
            if c:
                m = _mono_mul(rest, ((var_, e),) if e else ())
                out[m] = c
    return LaurentPoly._raw(out)


class FactoredFraction:
    """Laurent polynomial over a denominator kept in factored form.

    ``den`` maps a variable name ``x`` to the power of ``(x + x^-1)`` and the
    key ``"2"`` to the power of 2.  Common factors are cancelled eagerly, so
    zero is exactly ``num == 0``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den: Mapping[str, int] | None = None, *, reduce: bool = True):
        self.num = LaurentPoly.coerce(num)
        den = {k: e for k, e in (den or {}).items() if e}
        if any(e < 0 for e in den.values()):
            raise ValueError("denominator exponents must be nonnegative")
        if self.num.is_zero():
            den = {}
        self.den = den
        if reduce and den:
            self._cancel()

    def _cancel(self) -> None:
        num = self.num
        den = dict(self.den)
        while den.get("2", 0) > 0 and num.content() % 2 == 0:
            num = num.exact_div_int(2)
            den["2"] -= 1
        for key in [k for k in den if k != "2"]:
            while den[key] > 0:
                q = divide_by_plus_inverse(num, key)
                if q is None:
                    break
                num = q
                den[key] -= 1
        self.num = num
        self.den = {k: e for k, e in den.items() if e}

    @classmethod
    def coerce(cls, x) -> "FactoredFraction":
        if isinstance(x, FactoredFraction):
            return x
        return cls(LaurentPoly.coerce(x))

    @staticmethod
    def factor_poly(key: str, power: int) -> LaurentPoly:
        if key == "2":
            return LaurentPoly.const(2 ** power)
        return (LaurentPoly.var(key) + LaurentPoly.var(key, -1)) ** power

    def _lift(self, den: Mapping[str, int]) -> LaurentPoly:
        num = self.num
        for key, e in den.items():
            extra = e - self.den.get(key, 0)
            if extra:
                num = num * FactoredFraction.factor_poly(key, extra)
        return num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = FactoredFraction.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        den = {k: max(self.den.get(k, 0), other.den.get(k, 0)) for k in set(self.den) | set(other.den)}
        return FactoredFraction(self._lift(den) + other._lift(den), den)

    __radd__ = __add__

    def __neg__(self):
        return FactoredFraction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-FactoredFraction.coerce(other))

    def __rsub__(self, other):
        return FactoredFraction.coerce(other) - self

    def __mul__(self, other):
        other = FactoredFraction.coerce(other)
        if self.is_zero() or other.is_zero():
            return FactoredFraction(ZERO)
        den = dict(self.den)
        for k, e in other.den.items():
            den[k] = den.get(k, 0) + e
        return FactoredFraction(self.num * other.num, den)

    __rmul__ = __mul__

    def div_factor(self, key: str, power: int = 1) -> "FactoredFraction":
        den = dict(self.den)
        den[key] = den.get(key, 0) + power
        return FactoredFraction(self.num, den)

    def __eq__(self, other):
        try:
            other = FactoredFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.num, tuple(sorted(self.den.items()))))

    def den_poly(self) -> LaurentPoly:
        out = ONE
        for k, e in self.den.items():
            out = out * FactoredFraction.factor_poly(k, e)
        return out

    def to_rational_function(self) -> RationalFunction:
        return RationalFunction(self.num, self.den_poly())

    def evaluate(self, values) -> Fraction:
        return self.num.evaluate(values) / self.den_poly().evaluate(values)

    def __str__(self):
        if not self.den:
            return str(self.num)
        parts = []
        for k, e in sorted(self.den.items()):
            base = "2" if k == "2" else f"({k} + {k}^-1)"
            parts.append(base if e == 1 else f"{base}^{e}")
        return f"({self.num})/({'*'.join(parts)})"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Truncated power series in one distinguished variable


class TruncatedSeries:
    """Power series sum_{n<=order} coeffs[n] * t^n with Laurent coefficients."""

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var: str, order: int, coeffs: Iterable[LaurentPoly]):
        coeffs = [LaurentPoly.coerce(c) for c in coeffs]
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = (coeffs + [ZERO] * (order + 1))[: order + 1]
        self.var = var
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_poly(cls, p: LaurentPoly, var: str, order: int) -> "TruncatedSeries":
        parts = LaurentPoly.coerce(p).split_by(var)
        if parts and min(parts) < 0:
            raise ValueError(f"negative power of {var} in series input")
        return cls(var, order, [parts.get(n, ZERO) for n in range(order + 1)])

    def _check(self, other: "TruncatedSeries") -> None:
        if other.var != self.var or other.order != self.order:
            raise ValueError("series must share variable and order")

    def __add__(self, other: "TruncatedSeries"):
        self._check(other)
        return TruncatedSeries(self.var, self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries"):
        self._check(other)
        return TruncatedSeries(self.var, self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "TruncatedSeries"):
        self._check(other)
        out = []
        for n in range(self.order + 1):
            acc = ZERO
            for i in range(n + 1):
                if self.coeffs[i] and other.coeffs[n - i]:
                    acc = acc + self.coeffs[i] * other.coeffs[n - i]
            out.append(acc)
        return TruncatedSeries(self.var, self.order, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.var, self.order, self.coeffs) == (other.var, other.order, other.coeffs)

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeffs[n]

    def to_poly(self) -> LaurentPoly:
        out = ZERO
        for n, c in enumerate(self.coeffs):
            out = out + c * LaurentPoly.var(self.var, n)
        return out

    def __repr__(self):
        return f"TruncatedSeries({self.var}, order={self.order}, {[str(c) for c in self.coeffs]})"


def series_expand(num: LaurentPoly, den: LaurentPoly, t_var: str, order: int) -> TruncatedSeries:
    """Expand num/den as a power series in ``t_var`` up to ``t_var**order``.

    The constant term of ``den`` in ``t_var`` must be a unit of the Laurent
    ring (a signed monomial) so every coefficient stays a Laurent polynomial.
    """
    N = TruncatedSeries.from_poly(num, t_var, order)
    D = TruncatedSeries.from_poly(den, t_var, order)
    d0 = D[0]
    if d0.is_zero():
        raise ValueError(f"denominator has zero constant term in {t_var}")
    if len(d0) != 1 or abs(next(iter(d0.terms.values()))) != 1:
        raise ValueError(f"constant term {d0} of the denominator is not a unit")
    d0_inv = d0 ** -1
    out: list[LaurentPoly] = []
    for n in range(order + 1):
        acc = N[n]
        for i in range(1, n + 1):
            if D[i]:
                acc = acc - D[i] * out[n - i]
        out.append(acc * d0_inv)
    series = TruncatedSeries(t_var, order, out)
    if D * series != N:
        raise ArithmeticError("series expansion failed its round-trip check")
    return series
