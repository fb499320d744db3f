"""Quasisymmetric and symmetric function algebra with exact rational arithmetic.

Three faithful representations cooperate here:

  * QSymF: finite sums of fundamental quasisymmetric functions F_{S,n},
    keyed by (n, S) with S a subset of [n-1];
  * MonExpansion: honest truncations to N variables, keyed by exponent
    vectors, used for cross checks and for model comparisons;
  * SymF: symmetric functions tagged by a basis in {m, h, e, p, s} and
    keyed by partitions.

Basis conversions route through the power sum basis: h and e expand
multiplicatively, Schur functions expand through Murnaghan-Nakayama
characters, and the monomial basis is reached by iterated multiplication by
power sums (solving the resulting triangular systems exactly for the reverse
direction). Denominators always divide products of z_lambda, so all
arithmetic stays in Fraction.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .permstats import Partition, partitions, z_lambda
from .polyalg import Poly, PolyFraction, TruncSeries, q_binomial, pochhammer

BASES = ("m", "h", "e", "p", "s")


def _addto(d, k, v):
    s = d.get(k, 0) + v
    if s:
        d[k] = s
    else:
        d.pop(k, None)


# ---------------------------------------------------------------------------
# fundamental quasisymmetric functions
# ---------------------------------------------------------------------------

class QSymF:
    """A finite linear combination of fundamental quasisymmetric functions.

    terms maps (n, frozenset S) with S a subset of {1, .., n-1} to a nonzero
    rational coefficient. F_{emptyset, 0} = 1 carries the constant term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (n, S), c in (terms or {}).items():
            S = frozenset(S)
            if not all(1 <= i <= n - 1 for i in S):
                raise ValueError(f"descent set {set(S)} out of range for n={n}")
            if c:
                clean[(n, S)] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def fundamental(cls, S, n):
        return cls({(n, frozenset(S)): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _addto(out, k, c)
        return QSymF(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return QSymF({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return -1 * self

    def __eq__(self, other):
        return isinstance(other, QSymF) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "QSymF(0)"
        bits = []
        for (n, S), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))):
            bits.append(f"{c}*F[{sorted(S)},{n}]")
        return "QSymF(" + " + ".join(bits) + ")"

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({n for (n, _) in self.terms})

    def homogeneous_part(self, n):
        return QSymF({k: c for k, c in self.terms.items() if k[0] == n})

    def omega(self):
        """The standard involution: F_{S,n} maps to F_{[n-1] minus S, n}."""
        return QSymF({(n, frozenset(range(1, n)) - S): c for (n, S), c in self.terms.items()})

    # -- monomial quasisymmetric coefficients -------------------------------
    def _monomial_qsym_coeffs(self, n):
        """dict T -> coefficient of the monomial quasisymmetric M_{comp(T),n}.

        Uses F_{S,n} = sum over T containing S of M_{T,n}, via a subset sum
        (zeta) transform over bitmask encodings of subsets of [n-1].
        """
        if n == 0:
            c = self.terms.get((0, frozenset()), 0)
            return {frozenset(): c} if c else {}
        g = [0] * (1 << (n - 1))
        for (m, S), c in self.terms.items():
            if m == n:
                mask = 0
                for i in S:
                    mask |= 1 << (i - 1)
                g[mask] += c
        for b in range(n - 1):
            bit = 1 << b
            for mask in range(1 << (n - 1)):
                if mask & bit:
                    g[mask] += g[mask ^ bit]
        out = {}
        for mask in range(1 << (n - 1)):
            if g[mask]:
                out[frozenset(i + 1 for i in range(n - 1) if mask & (1 << i))] = g[mask]
        return out

    def is_symmetric(self):
        """True iff the monomial quasisymmetric coefficients are constant on
        compositions with the same sorted part multiset."""
        for n in self.degrees():
            coeffs = self._monomial_qsym_coeffs(n)
            for lam in partitions(n):
                vals = {coeffs.get(T, 0) for T in _descent_sets_of_rearrangements(lam)}
                if len(vals) > 1:
                    return False
        return True

    def to_symf(self):
        """The m-basis expansion, valid only when the function is symmetric.

        For symmetric f, the coefficient of m_lambda is the subset sum of the
        F coefficients over subsets of D(lambda), where D(lambda) is the
        descent set of the unique weakly decreasing word of content lambda.
        """
        if not self.is_symmetric():
            raise ValueError("not symmetric; no m-basis expansion")
        out = {}
        for n in self.degrees():
            coeffs = self._monomial_qsym_coeffs(n)
            for lam in partitions(n):
                c = coeffs.get(_dropset(lam), 0)
                if c:
                    out[lam] = c
        return SymF("m", out)

    def to_monomial(self, N):
        """Truncated expansion in x_1..x_N, keyed by exponent vectors."""
        out = {}
        for (n, S), c in self.terms.items():
            for seq in _weakly_decreasing_sequences(n, N, S):
                exps = [0] * N
                for v in seq:
                    exps[v - 1] += 1
                _addto(out, tuple(exps), c)
        return MonExpansion(N, out)

    # -- principal specializations ------------------------------------------
    def ps_stable(self):
        """Stable principal specialization x_i -> q^{i-1}.

        F_{S,n} specializes to q^{sum S} / (q;q)_n; mixed degrees are put over
        the common denominator (q;q)_{max degree}.
        """
        if not self.terms:
            return PolyFraction(Poly.zero())
        N = max(n for (n, _) in self.terms)
        num = Poly.zero()
        for (n, S), c in self.terms.items():
            scale = Poly.one()
            for i in range(n + 1, N + 1):
                scale = scale * (Poly.one() - Poly.var("q", i))
            num = num + c * Poly.var("q", sum(S)) * scale
        return PolyFraction(num, _qq_pochhammer(N))

    def ps_at(self, m):
        """Principal specialization in m variables, x_i -> q^{i-1} for i <= m.

        F_{S,n} contributes q^{sum S} [m - |S| - 1 + n choose n]_q when
        m >= |S| + 1 and zero otherwise.
        """
        out = Poly.zero()
        for (n, S), c in self.terms.items():
            if n == 0:
                out = out + Poly.const(c)
            elif m >= len(S) + 1:
                out = out + c * Poly.var("q", sum(S)) * q_binomial(m - len(S) - 1 + n, n)
        return out

    def ps_series(self, order):
        """sum_m ps_m(f) p^m as a truncated series in p."""
        return TruncSeries("p", order, [self.ps_at(m) for m in range(order + 1)])


def _qq_pochhammer(n):
    """(q;q)_n as a Poly."""
    return pochhammer(Poly.var("q"), n)


def fundamental(S, n):
    return QSymF.fundamental(S, n)


def _dropset(lam):
    """Descent set of the unique weakly decreasing word with content lam."""
    lam = Partition(lam)
    ell = lam.length
    drops = []
    acc = 0
    for v in range(ell, 1, -1):
        acc += lam[v - 1]
        drops.append(acc)
    return frozenset(drops)


def _comp_partition(T, n):
    """Partition obtained by sorting the composition of n determined by T."""
    cuts = sorted(T)
    parts = []
    prev = 0
    for c in cuts + [n]:
        parts.append(c - prev)
        prev = c
    return Partition(p for p in parts if p)


def _descent_sets_of_rearrangements(lam):
    """Descent sets realizable by weakly decreasing words of every content
    that is a rearrangement of lam: the partial-sum sets of distinct
    permutations of the parts."""
    n = sum(lam)
    out = set()
    for arrangement in set(itertools.permutations(lam)):
        acc = 0
        S = []
        for part in arrangement[:-1]:
            acc += part
            S.append(acc)
        out.add(frozenset(S))
    return out


def _weakly_decreasing_sequences(n, N, strict_at):
    """All (s_1 >= ... >= s_n) with values in [N], strict drop at i in strict_at."""
    if n == 0:
        yield ()
        return
    strict_at = frozenset(strict_at)
    seq = [0] * n

    def rec(i, hi):
        if hi < 1:
            return
        if i == n:
            yield tuple(seq)
            return
        for v in range(hi, 0, -1):
            seq[i] = v
            nxt = v - 1 if (i + 1) in strict_at else v
            yield from rec(i + 1, nxt)

    yield from rec(0, N)


# ---------------------------------------------------------------------------
# truncated monomial expansions
# ---------------------------------------------------------------------------

class MonExpansion:
    """A polynomial in x_1..x_N keyed by exponent vectors, exact coefficients."""

    __slots__ = ("N", "terms")

    def __init__(self, N, terms=None):
        self.N = N
        self.terms = {}
        for e, c in (terms or {}).items():
            if len(e) != N:
                raise ValueError(f"exponent vector {e} has wrong length for N={N}")
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def zero(cls, N):
        return cls(N)

    @classmethod
    def one(cls, N):
        return cls(N, {tuple([0] * N): 1})

    def __add__(self, other):
        self._chk(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _addto(out, e, c)
        return MonExpansion(self.N, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MonExpansion(self.N, {e: c * other for e, c in self.terms.items()})
        self._chk(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                _addto(out, e, c1 * c2)
        return MonExpansion(self.N, out)

    __rmul__ = __mul__

    def _chk(self, other):
        if self.N != other.N:
            raise ValueError("variable count mismatch")

    def __eq__(self, other):
        return isinstance(other, MonExpansion) and self.N == other.N and self.terms == other.terms

    def __repr__(self):
        return f"MonExpansion(N={self.N}, {len(self.terms)} terms)"

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def is_symmetric(self):
        """True iff coefficients are constant on exponent-multiset orbits and
        every rearrangement of a supported exponent vector is supported."""
        groups = {}
        for e, c in self.terms.items():
            groups.setdefault(tuple(sorted(e, reverse=True)), []).append(c)
        for rep, coeffs in groups.items():
            if len(set(coeffs)) > 1:
                return False
            orbit = _distinct_permutation_count(rep)
            if len(coeffs) != orbit:
                return False
        return True

    def to_symf(self):
        """Lift to m-basis coefficients; requires symmetry and degree <= N."""
        if not self.is_symmetric():
            raise ValueError("expansion is not symmetric")
        if self.degree() > self.N:
            raise ValueError("degree exceeds N; truncation is not faithful")
        out = {}
        for e, c in self.terms.items():
            if list(e) == sorted(e, reverse=True):
                out[Partition(x for x in e if x)] = c
        return SymF("m", out)

    def coefficient_of_squarefree(self):
        """Coefficient of x_1 x_2 .. x_N."""
        return self.terms.get(tuple([1] * self.N), 0)

    def restrict_last(self):
        """Apply d/dx_N then set x_N = 0: keep exponent-1 terms, drop the slot."""
        out = {}
        for e, c in self.terms.items():
            if e[-1] == 1:
                _addto(out, e[:-1], c)
        return MonExpansion(self.N - 1, out)


def _distinct_permutation_count(vec):
    from math import factorial

    total = factorial(len(vec))
    for v in set(vec):
        total //= factorial(vec.count(v))
    return total


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama characters
# ---------------------------------------------------------------------------

def _beta_set(lam):
    ell = len(lam)
    return tuple(lam[i] + (ell - 1 - i) for i in range(ell))


def _partition_from_beta(beta):
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    parts = [beta[i] - (ell - 1 - i) for i in range(ell)]
    return Partition(p for p in parts if p > 0)


def _border_strip_removals(lam, k):
    """All ways to remove a border strip of size k: yields (smaller, height)."""
    beta = set(_beta_set(lam))
    for b in sorted(beta, reverse=True):
        nb = b - k
        if nb < 0 or nb in beta:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = (beta - {b}) | {nb}
        yield _partition_from_beta(newbeta), height


@lru_cache(maxsize=None)
def mn_character(lam, mu) -> int:
    """Irreducible character chi^lam(mu) by Murnaghan-Nakayama recursion."""
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.n != mu.n:
        raise ValueError("partition sizes differ")
    if lam.n == 0:
        return 1
    k = mu[0]
    rest = Partition(mu[1:])
    total = 0
    for smaller, height in _border_strip_removals(lam, k):
        total += (-1) ** height * mn_character(smaller, rest)
    return total


# ---------------------------------------------------------------------------
# symmetric functions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pexp_h(n):
    """h_n in the p basis: sum over mu of p_mu / z_mu."""
    return {mu: Fraction(1, mu.z()) for mu in partitions(n)}


@lru_cache(maxsize=None)
def _pexp_e(n):
    """e_n in the p basis: signed version of h_n."""
    return {mu: Fraction((-1) ** (n - mu.length), mu.z()) for mu in partitions(n)}


@lru_cache(maxsize=None)
def _pexp_s(lam):
    """s_lam in the p basis via characters."""
    lam = Partition(lam)
    out = {}
    for mu in partitions(lam.n):
        chi = mn_character(lam, mu)
        if chi:
            out[mu] = Fraction(chi, mu.z())
    return out


def _pdict_mul(a, b):
    out = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            _addto(out, la.concat(lb), ca * cb)
    return out


@lru_cache(maxsize=None)
def _p2m_row(mu):
    """m-basis expansion of p_mu, built by iterated multiplication by p_r."""
    mu = Partition(mu)
    cur = {Partition(): 1}
    for r in mu:
        nxt = {}
        for nu, c in cur.items():
            grown = Partition(tuple(nu) + (r,))
            _addto(nxt, grown, c * (nu.mult(r) + 1))
            for w in sorted(set(nu)):
                parts = list(nu)
                parts.remove(w)
                parts.append(w + r)
                target = Partition(parts)
                _addto(nxt, target, c * (nu.mult(w + r) + 1))
        cur = nxt
    return {k: v for k, v in cur.items()}


def _mat_inverse(mat):
    """Exact inverse of a square matrix of Fractions (Gauss-Jordan)."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@lru_cache(maxsize=None)
def _m_to_p_inverse(n):
    """Inverse of the transpose p->m matrix at degree n (for m -> p)."""
    plist = partitions(n)
    idx = {lam: i for i, lam in enumerate(plist)}
    mat = [[Fraction(0)] * len(plist) for _ in plist]
    for j, mu in enumerate(plist):
        for nu, c in _p2m_row(mu).items():
            mat[idx[nu]][j] = Fraction(c)
    return plist, _mat_inverse(mat)


@lru_cache(maxsize=None)
def _multiplicative_to_p_matrix(n, which):
    plist = partitions(n)
    rows = {}
    base = _pexp_h if which == "h" else _pexp_e
    for lam in plist:
        acc = {Partition(): Fraction(1)}
        for part in lam:
            acc = _pdict_mul(acc, base(part))
        rows[lam] = acc
    return rows


@lru_cache(maxsize=None)
def _p_to_multiplicative_inverse(n, which):
    """Inverse of the transpose (h or e)->p matrix at degree n."""
    plist = partitions(n)
    idx = {lam: i for i, lam in enumerate(plist)}
    rows = _multiplicative_to_p_matrix(n, which)
    mat = [[Fraction(0)] * len(plist) for _ in plist]
    for j, lam in enumerate(plist):
        for mu, c in rows[lam].items():
            mat[idx[mu]][j] = c
    return plist, _mat_inverse(mat)


class SymF:
    """A symmetric function expressed in a tagged basis.

    terms maps Partition -> nonzero rational coefficient. The empty partition
    indexes the constant term in every basis.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = {}
        for lam, c in (terms or {}).items():
            if c:
                self.terms[Partition(lam)] = c

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, basis="m"):
        return cls(basis)

    @classmethod
    def one(cls, basis="h"):
        return cls(basis, {Partition(): 1})

    @classmethod
    def single(cls, basis, lam, coeff=1):
        return cls(basis, {Partition(lam): coeff})

    # -- structure --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({lam.n for lam in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        return max((lam.n for lam in self.terms), default=0)

    def homogeneous_part(self, n):
        return SymF(self.basis, {lam: c for lam, c in self.terms.items() if lam.n == n})

    def map_coeffs(self, fn):
        return SymF(self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymF(self.basis, {Partition(): other})
        if not isinstance(other, SymF):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to_basis(self.basis)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            _addto(out, lam, c)
        return SymF(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return -1 * self

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymF(self.basis, {Partition(): other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymF(self.basis, {lam: c * other for lam, c in self.terms.items()})
        if not isinstance(other, SymF):
            return NotImplemented
        if self.basis == other.basis and self.basis in ("h", "e", "p"):
            return SymF(self.basis, _pdict_mul(self.terms, other.terms))
        a = self.to_basis("p")
        b = other.to_basis("p")
        return SymF("p", _pdict_mul(a.terms, b.terms)).to_basis(self.basis)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = SymF.one(self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymF(self.basis, {Partition(): other})
        if not isinstance(other, SymF):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to_basis("m").terms == other.to_basis("m").terms

    def __repr__(self):
        return f"SymF({self.render()})"

    # -- conversions ---------------------------------------------------------
    def to_basis(self, basis):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if basis == self.basis:
            return SymF(self.basis, dict(self.terms))
        return self._from_p(self._to_p(), basis)

    def _to_p(self):
        """p-basis coefficient dict."""
        b = self.basis
        out = {}
        if b == "p":
            return dict(self.terms)
        if b in ("h", "e"):
            base = _pexp_h if b == "h" else _pexp_e
            for lam, c in self.terms.items():
                acc = {Partition(): Fraction(c)}
                for part in lam:
                    acc = _pdict_mul(acc, base(part))
                for mu, v in acc.items():
                    _addto(out, mu, v)
            return out
        if b == "s":
            for lam, c in self.terms.items():
                for mu, v in _pexp_s(lam).items():
                    _addto(out, mu, c * v)
            return out
        # m basis: solve the p->m system degree by degree
        for n in self.degrees():
            plist, inv = _m_to_p_inverse(n)
            vec = [Fraction(self.terms.get(lam, 0)) for lam in plist]
            for i, lam in enumerate(plist):
                c = sum(inv[i][j] * vec[j] for j in range(len(plist)))
                if c:
                    _addto(out, lam, c)
        return out

    @staticmethod
    def _from_p(pterms, basis):
        if basis == "p":
            return SymF("p", pterms)
        out = {}
        if basis == "m":
            for mu, c in pterms.items():
                for nu, v in _p2m_row(mu).items():
                    _addto(out, nu, c * v)
            return SymF("m", out)
        if basis == "s":
            degs = sorted({mu.n for mu in pterms})
            for n in degs:
                for lam in partitions(n):
                    c = 0
                    for mu, a in pterms.items():
                        if mu.n == n:
                            chi = mn_character(lam, mu)
                            if chi:
                                c += a * chi
                    if c:
                        out[lam] = c
            return SymF("s", out)
        # h or e via cached inverse transpose matrices
        degs = sorted({mu.n for mu in pterms})
        for n in degs:
            plist, inv = _p_to_multiplicative_inverse(n, basis)
            vec = [Fraction(pterms.get(mu, 0)) for mu in plist]
            for i, lam in enumerate(plist):
                c = sum(inv[i][j] * vec[j] for j in range(len(plist)))
                if c:
                    out[lam] = c
        return SymF(basis, out)

    def omega(self):
        """The fundamental involution: h <-> e, p_mu -> (-1)^(|mu|-l) p_mu, s -> conjugate."""
        b = self.basis
        if b == "h":
            return SymF("e", dict(self.terms))
        if b == "e":
            return SymF("h", dict(self.terms))
        if b == "p":
            return SymF("p", {lam: c * (-1) ** (lam.n - lam.length) for lam, c in self.terms.items()})
        if b == "s":
            return SymF("s", {lam.conjugate(): c for lam, c in self.terms.items()})
        return SymF._from_p(SymF("p", self._to_p()).omega().terms, "m")

    def to_monomial(self, N):
        mm = self.to_basis("m")
        out = {}
        for lam, c in mm.terms.items():
            if lam.length > N:
                continue
            base = tuple(lam) + (0,) * (N - lam.length)
            for arrangement in set(itertools.permutations(base)):
                out[arrangement] = c
        return MonExpansion(N, out)

    def coefficient(self, lam):
        return self.terms.get(Partition(lam), 0)

    def squarefree_coefficient(self):
        """Coefficient of x_1 x_2 .. x_n for homogeneous degree n (the
        dimension of the corresponding representation)."""
        n = self.degree()
        return self.to_basis("m").coefficient(Partition([1] * n)) if n else self.to_basis("m").coefficient(Partition())

    def is_positive(self, basis=None):
        f = self if basis in (None, self.basis) else self.to_basis(basis)
        return all(c > 0 for c in f.terms.values())

    # -- rendering ------------------------------------------------------------
    def render(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda lam: (lam.n, lam.length, tuple(-x for x in lam)))
        bits = []
        for lam in keys:
            c = self.terms[lam]
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            body = f"{self.basis}[{','.join(map(str, lam))}]" if lam else "1"
            if body == "1":
                chunk = str(c)
            elif c == 1:
                chunk = body
            elif c == -1:
                chunk = f"-{body}"
            else:
                chunk = f"{c}*{body}"
            if not bits:
                bits.append(chunk)
            elif chunk.startswith("-"):
                bits.append(f"- {chunk[1:]}")
            else:
                bits.append(f"+ {chunk}")
        return " ".join(bits)

    __str__ = render


def parse_symf(text, basis=None):
    """Inverse of SymF.render."""
    text = text.strip()
    if text == "0":
        return SymF(basis or "m")
    text = text.replace("- ", "+ -").replace("+ ", "+")
    terms = {}
    seen_basis = basis
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        if "[" not in chunk:
            _addto(terms, Partition(), sign * _parse_rat(chunk))
            continue
        head, _, rest = chunk.partition("[")
        parts = rest.rstrip("]").strip()
        lam = Partition(int(x) for x in parts.split(",") if x.strip()) if parts else Partition()
        coeff = 1
        if "*" in head:
            cs, _, bname = head.rpartition("*")
            coeff = _parse_rat(cs)
        else:
            bname = head
        bname = bname.strip()
        if seen_basis is None:
            seen_basis = bname
        elif bname != seen_basis:
            raise ValueError(f"mixed bases in {text!r}")
        _addto(terms, lam, sign * coeff)
    return SymF(seen_basis or "m", terms)


def _parse_rat(s):
    s = s.strip()
    return Fraction(s) if "/" in s else int(s)


def sym_h(lam, coeff=1):
    return SymF.single("h", lam, coeff)


def sym_e(lam, coeff=1):
    return SymF.single("e", lam, coeff)


def sym_p(lam, coeff=1):
    return SymF.single("p", lam, coeff)


def sym_s(lam, coeff=1):
    return SymF.single("s", lam, coeff)


def sym_m(lam, coeff=1):
    return SymF.single("m", lam, coeff)


# ---------------------------------------------------------------------------
# symmetric function valued polynomials in t and r
# ---------------------------------------------------------------------------

class SymPoly:
    """A polynomial in t and r whose coefficients are symmetric functions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for (a, b), f in (terms or {}).items():
            if isinstance(f, SymF) and not f.is_zero():
                self.terms[(a, b)] = f

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls, basis="h"):
        return cls({(0, 0): SymF.one(basis)})

    @classmethod
    def wrap(cls, f, t=0, r=0):
        return cls({(t, r): f})

    def coefficient(self, t=0, r=0):
        return self.terms.get((t, r), SymF.zero())

    def t_support(self):
        return sorted({a for (a, _) in self.terms})

    def __add__(self, other):
        out = dict(self.terms)
        for k, f in other.terms.items():
            if k in out:
                s = out[k] + f
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = f
        return SymPoly(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return SymPoly({k: f * c for k, f in self.terms.items()})

    def shift(self, t=0, r=0):
        """Multiply by t^t r^r."""
        return SymPoly({(a + t, b + r): f for (a, b), f in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SymF):
            other = SymPoly.wrap(other)
        out = {}
        for (a1, b1), f1 in self.terms.items():
            for (a2, b2), f2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                prod = f1 * f2
                if k in out:
                    s = out[k] + prod
                    if s.is_zero():
                        del out[k]
                    else:
                        out[k] = s
                else:
                    if not prod.is_zero():
                        out[k] = prod
        return SymPoly(out)

    __rmul__ = __mul__

    def to_basis(self, basis):
        return SymPoly({k: f.to_basis(basis) for k, f in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        a = self.to_basis("m")
        b = other.to_basis("m")
        keys = set(a.terms) | set(b.terms)
        return all(a.coefficient(*k).to_basis("m") == b.coefficient(*k).to_basis("m") for k in keys)

    def __repr__(self):
        bits = [f"t^{a} r^{b}: {f.render()}" for (a, b), f in sorted(self.terms.items())]
        return "SymPoly(" + "; ".join(bits) + ")"


def sym_poly_from_tpoly(tcoeffs, basis="h"):
    """Build sum_j c_j t^j * 1 from an integer t-polynomial given as a dict."""
    return SymPoly({(j, 0): SymF(basis, {Partition(): c}) for j, c in tcoeffs.items() if c})


# ---------------------------------------------------------------------------
# plethysm with h_m and restriction
# ---------------------------------------------------------------------------

def _p_scale_sympoly(g, k):
    """p_k plethysm applied to a SymPoly with p-basis coefficients: partitions
    scale by k and t, r exponents scale by k (alphabet semantics for t, r)."""
    out = {}
    for (a, b), f in g.terms.items():
        scaled = SymF("p", {Partition(tuple(x * k for x in lam)): c for lam, c in f.terms.items()})
        out[(a * k, b * k)] = scaled
    return SymPoly(out)


def plethysm_h(m, f):
    """h_m[f] for f a SymF or SymPoly; t and r act as monomial weights.

    Computed in the p basis from h_m = sum over nu of p_nu / z_nu and
    p_k[p_j] = p_{kj}, with t -> t^k and r -> r^k inside p_k.
    """
    wrapped = isinstance(f, SymF)
    g = SymPoly.wrap(f) if wrapped else f
    g = g.to_basis("p")
    total = SymPoly.zero()
    for nu in partitions(m):
        prod = SymPoly({(0, 0): SymF("p", {Partition(): Fraction(1, nu.z())})})
        for part in nu:
            prod = prod * _p_scale_sympoly(g, part)
        total = total + prod
    if wrapped:
        return total.coefficient(0, 0).to_basis(f.basis)
    return total


def restrict_frobenius(f):
    """Frobenius characteristic of restriction to the next smaller symmetric
    group: expand in n = deg(f) variables, apply d/dx_n, set x_n = 0.

    Requires homogeneous input of positive degree.
    """
    if not f.is_homogeneous() or f.is_zero():
        raise ValueError("restriction needs a nonzero homogeneous input")
    n = f.degree()
    if n == 0:
        raise ValueError("cannot restrict a constant")
    reduced = f.to_monomial(n).restrict_last()
    return reduced.to_symf().to_basis(f.basis)
