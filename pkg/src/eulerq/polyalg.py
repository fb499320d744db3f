"""Exact sparse polynomial, polynomial fraction, and truncated series arithmetic.

Everything here is exact: coefficients are Python integers (or Fractions where
rational scalars enter), exponents are machine integers that may be negative,
so the same class covers Laurent polynomials. The variable set is fixed to
(q, p, t, r); a distinguished series variable (z or p) lives at the series
level, never inside a coefficient.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

VARS = ("q", "p", "t", "r")
_VIDX = {v: i for i, v in enumerate(VARS)}
_ZERO4 = (0, 0, 0, 0)


def _exps(q=0, p=0, t=0, r=0):
    return (q, p, t, r)


class Poly:
    """Sparse polynomial in q, p, t, r with exact coefficients.

    terms maps exponent 4-tuples to nonzero coefficients. Exponents may be
    negative (Laurent usage, e.g. substituting q -> 1/q).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({_ZERO4: c}) if c else cls()

    @classmethod
    def one(cls):
        return cls.const(1)

    @classmethod
    def var(cls, name, e=1):
        exps = [0, 0, 0, 0]
        exps[_VIDX[name]] = e
        return cls({tuple(exps): 1})

    @classmethod
    def term(cls, coeff, q=0, p=0, t=0, r=0):
        return cls({_exps(q, p, t, r): coeff}) if coeff else cls()

    # -- predicates ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {_ZERO4: 1}

    def is_constant(self):
        return all(e == _ZERO4 for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(_ZERO4, 0)

    def is_monomial(self):
        return len(self.terms) == 1

    def has_integer_coeffs(self):
        return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1) for c in self.terms.values())

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly({e: c * other for e, c in self.terms.items()}) if other else Poly()
        if not isinstance(other, Poly):
            return NotImplemented
        other = _coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            inv = self.monomial_inverse()
            return inv ** (-k)
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monomial_inverse(self):
        if len(self.terms) != 1:
            raise ValueError(f"only monomials are invertible: {self}")
        ((e, c),) = self.terms.items()
        if c in (1, -1):
            inv_c = c
        else:
            inv_c = Fraction(1, 1) / c
        return Poly({tuple(-x for x in e): inv_c})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries ---------------------------------------------------------
    def degree(self, name):
        i = _VIDX[name]
        return max((e[i] for e in self.terms), default=0)

    def min_degree(self, name):
        i = _VIDX[name]
        return min((e[i] for e in self.terms), default=0)

    def coefficient(self, name, power):
        """Coefficient of name**power, as a Poly in the remaining variables."""
        i = _VIDX[name]
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return Poly(out)

    def coefficients_in(self, name):
        """dict power -> Poly coefficient, covering the support in name."""
        i = _VIDX[name]
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] = 0
            out.setdefault(e[i], {})[tuple(e2)] = c
        return {k: Poly(v) for k, v in sorted(out.items())}

    def substitute(self, **rules):
        """Substitute variables by polynomials, exactly.

        Negative exponents on a substituted variable require the replacement
        to be an invertible monomial (e.g. q -> 1/q, p -> q**n * p).
        """
        repl = {}
        for name, val in rules.items():
            if name not in _VIDX:
                raise ValueError(f"unknown variable {name!r}")
            repl[_VIDX[name]] = _coerce(val)
        out = Poly()
        pow_cache = {}
        for e, c in self.terms.items():
            term = Poly.const(c)
            kept = [0, 0, 0, 0]
            for i in range(4):
                if i in repl:
                    if e[i]:
                        key = (i, e[i])
                        if key not in pow_cache:
                            pow_cache[key] = repl[i] ** e[i]
                        term = term * pow_cache[key]
                else:
                    kept[i] = e[i]
            term = term * Poly({tuple(kept): 1})
            out = out + term
        return out

    # -- rendering ---------------------------------------------------------
    def render(self):
        """Canonical text form, terms in ascending graded-lex exponent order."""
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (sum(e), e))
        parts = []
        for e in keys:
            c = self.terms[e]
            mono = "*".join(
                f"{VARS[i]}^{e[i]}" if e[i] != 1 else VARS[i] for i in range(4) if e[i]
            )
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(f"- {body[1:]}")
            else:
                parts.append(f"+ {body}")
        return " ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"Poly({self.render()})"


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot coerce {x!r} to Poly")


Q = Poly.var("q")
P = Poly.var("p")
T = Poly.var("t")
R = Poly.var("r")


def parse_poly(text):
    """Inverse of Poly.render, for cache round trips."""
    text = text.strip()
    if text == "0":
        return Poly()
    text = text.replace("- ", "+ -").replace("+ ", "+")
    out = Poly()
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        coeff = 1
        exps = [0, 0, 0, 0]
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                continue
            if factor[0].isdigit() or factor[0] == "-":
                coeff = int(factor) if "/" not in factor else Fraction(factor)
            else:
                name, _, e = factor.partition("^")
                exps[_VIDX[name]] += int(e) if e else 1
        out = out + Poly({tuple(exps): sign * coeff})
    return out


# ---------------------------------------------------------------------------
# q-analogs
# ---------------------------------------------------------------------------

def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return Poly({(i, 0, 0, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n):
    """[n]_q! with [0]_q! = 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return Poly.one()
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n, k):
    """Gaussian binomial [n choose k]_q via the q-Pascal recurrence."""
    if k < 0 or k > n:
        return Poly.zero()
    if k == 0 or k == n:
        return Poly.one()
    return q_binomial(n - 1, k - 1) + Poly.var("q", k) * q_binomial(n - 1, k)


def q_multinomial(n, ks):
    """[n choose k_1, ..., k_m]_q as a product of Gaussian binomials."""
    ks = tuple(ks)
    if any(k < 0 for k in ks) or sum(ks) != n:
        raise ValueError(f"multinomial parts {ks!r} must be nonnegative and sum to {n}")
    out = Poly.one()
    acc = 0
    for k in ks:
        acc += k
        out = out * q_binomial(acc, k)
    return out


def pochhammer(a, n):
    """(a; q)_n = prod_{i=0}^{n-1} (1 - a q^i) for a polynomial argument a."""
    a = _coerce(a)
    out = Poly.one()
    for i in range(n):
        out = out * (Poly.one() - a * Poly.var("q", i))
    return out


def inv_pochhammer_coeff(n, m):
    """Coefficient of p^m in 1/(p;q)_{n+1}, namely [m+n choose n]_q."""
    return q_binomial(m + n, n)


def gauss_poly_t(n):
    """[n]_t as a Poly in t (handy for t-weighted series)."""
    return Poly({(0, 0, i, 0): 1 for i in range(n)})


# ---------------------------------------------------------------------------
# polynomial fractions
# ---------------------------------------------------------------------------

class PolyFraction:
    """A formal quotient of sparse polynomials.

    No gcd reduction is attempted beyond integer content; equality is decided
    by cross multiplication, which is exact and total.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce(num)
        den = Poly.one() if den is None else _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one()
        self.num = num
        self.den = den

    def __add__(self, other):
        other = _coerce_frac(other)
        return PolyFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return PolyFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce_frac(other))

    def __rsub__(self, other):
        return _coerce_frac(other) - self

    def __mul__(self, other):
        other = _coerce_frac(other)
        return PolyFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero fraction")
        return PolyFraction(self.den, self.num)

    def __truediv__(self, other):
        return self * _coerce_frac(other).inverse()

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        other = _coerce_frac(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("PolyFraction is unhashable (equality is cross-multiplicative)")

    def __repr__(self):
        if self.den.is_one():
            return f"PolyFraction({self.num.render()})"
        return f"PolyFraction(({self.num.render()}) / ({self.den.render()}))"


def _coerce_frac(x):
    if isinstance(x, PolyFraction):
        return x
    if isinstance(x, (int, Fraction, Poly)):
        return PolyFraction(_coerce(x))
    raise TypeError(f"cannot coerce {x!r} to PolyFraction")


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------

class TruncSeries:
    """Power series in one distinguished variable, truncated at a fixed order.

    Coefficients are Poly or PolyFraction objects in the remaining variables;
    the distinguished variable must not occur inside a coefficient (checked
    for Poly coefficients when it is one of q, p, t, r).
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var, order, coeffs):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        coeffs += [Poly.zero()] * (order + 1 - len(coeffs))
        if var in _VIDX:
            i = _VIDX[var]
            for c in coeffs:
                if isinstance(c, Poly) and any(e[i] for e in c.terms):
                    raise ValueError(f"coefficient contains the series variable {var}")
        self.var = var
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, var, order):
        return cls(var, order, [])

    @classmethod
    def one(cls, var, order):
        return cls(var, order, [Poly.one()])

    def _align(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries(self.var, self.order, [_coerce(other)])
        if other.var != self.var:
            raise ValueError(f"series variable mismatch: {self.var} vs {other.var}")
        order = min(self.order, other.order)
        return other, order

    def coefficient(self, d):
        return self.coeffs[d]

    def __add__(self, other):
        other, order = self._align(other)
        return TruncSeries(self.var, order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other, order = self._align(other)
        return TruncSeries(self.var, order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncSeries(self.var, self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly, PolyFraction)):
            return TruncSeries(self.var, self.order, [c * other for c in self.coeffs])
        other, order = self._align(other)
        out = [Poly.zero() for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs[: order + 1]):
            if isinstance(a, Poly) and a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if isinstance(b, Poly) and b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncSeries(self.var, order, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse of a series with invertible constant term.

        A constant term of +-1 keeps Poly coefficients; anything else promotes
        the computation to PolyFraction coefficients.
        """
        c0 = self.coeffs[0]
        if isinstance(c0, Poly) and (c0.is_one() or c0 == Poly.const(-1)):
            sign = 1 if c0.is_one() else -1
            inv = [Poly.const(sign)]
            for m in range(1, self.order + 1):
                acc = Poly.zero()
                for k in range(1, m + 1):
                    acc = acc + self.coeffs[k] * inv[m - k]
                inv.append(acc * (-sign))
            return TruncSeries(self.var, self.order, inv)
        c0 = _coerce_frac(c0) if not isinstance(c0, PolyFraction) else c0
        if c0.is_zero():
            raise ZeroDivisionError("series has zero constant term")
        inv = [c0.inverse()]
        for m in range(1, self.order + 1):
            acc = None
            for k in range(1, m + 1):
                term = _coerce_frac(self.coeffs[k]) * inv[m - k]
                acc = term if acc is None else acc + term
            inv.append(-(inv[0] * acc))
        return TruncSeries(self.var, self.order, inv)

    def __eq__(self, other):
        other, order = self._align(other)
        return all(
            a == b if not isinstance(a, PolyFraction) and not isinstance(b, PolyFraction)
            else _coerce_frac(a) == _coerce_frac(b)
            for a, b in zip(self.coeffs[: order + 1], other.coeffs[: order + 1])
        )

    def __repr__(self):
        body = ", ".join(f"{self.var}^{i}: {c!r}" for i, c in enumerate(self.coeffs))
        return f"TruncSeries({body})"


def pochhammer_series(u, m, var, order):
    """(u z; q)_m as a truncated series in var=z, for a Poly multiplier u."""
    u = _coerce(u)
    out = TruncSeries.one(var, order)
    for i in range(m):
        factor = TruncSeries(var, order, [Poly.one(), -(u * Poly.var("q", i))])
        out = out * factor
    return out


# ---------------------------------------------------------------------------
# q-exponential style series: sum c_n z^n / [n]_q!
# ---------------------------------------------------------------------------

class QExpSeries:
    """Series written against the q-divided-power basis z^n/[n]_q!.

    Multiplication is the q-binomial convolution
        (A B)_n = sum_k [n choose k]_q a_k b_{n-k}.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = [_coerce(c) for c in coeffs]

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def geometric(cls, u, order):
        """exp_q of u*z in this encoding: c_n = u^n."""
        u = _coerce(u)
        return cls([u**n for n in range(order + 1)])

    @classmethod
    def exp_q(cls, order):
        return cls([Poly.one()] * (order + 1))

    @classmethod
    def exp_q_upper(cls, order):
        """Exp_q: c_n = q^(n choose 2)."""
        return cls([Poly.var("q", comb(n, 2)) for n in range(order + 1)])

    def __add__(self, other):
        n = min(self.order, other.order)
        return QExpSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    def __sub__(self, other):
        n = min(self.order, other.order)
        return QExpSeries([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return QExpSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = []
        for m in range(n + 1):
            acc = Poly.zero()
            for k in range(m + 1):
                acc = acc + q_binomial(m, k) * self.coeffs[k] * other.coeffs[m - k]
            out.append(acc)
        return QExpSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self):
        return f"QExpSeries({[c.render() for c in self.coeffs]})"
