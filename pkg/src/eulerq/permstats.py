"""Permutations, integer partitions, and the statistics everything else is built on.

For a permutation sigma of [n] written in one line notation sigma_1 .. sigma_n:

    DES(sigma)   descent set {i in [n-1] : sigma_i > sigma_{i+1}}
    EXC(sigma)   excedance set {i in [n-1] : sigma_i > i}
    des, exc     the sizes of those sets
    maj          sum of DES(sigma)
    comaj        binomial(n, 2) - maj
    inv          number of inversions
    fix          number of fixed points

The bridge statistic EXD(sigma) is the descent set of the barred word obtained
by putting a bar on sigma_i for every excedance position i, where barred
letters compare under the total order

    1' < 2' < ... < n' < 1 < 2 < ... < n.

EXD drives the quasisymmetric constructions: sum(EXD) = maj - exc, and
|EXD| = des when sigma_1 = 1, |EXD| = des - 1 otherwise.

The unique permutation of the empty set has every statistic equal to zero.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, gcd

DEFAULT_CAP = 10


class CapacityError(ValueError):
    """An enumeration request exceeded the configured size cap."""


def _check_cap(n, cap):
    limit = DEFAULT_CAP if cap is None else cap
    if n > limit:
        raise CapacityError(f"n={n} exceeds cap {limit}; pass a larger cap explicitly")


class Partition(tuple):
    """Integer partition as a weakly decreasing tuple of positive parts."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts!r}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def n(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def mult(self, i):
        """Multiplicity of the part i."""
        return sum(1 for x in self if x == i)

    def multiplicities(self):
        out = {}
        for x in self:
            out[x] = out.get(x, 0) + 1
        return out

    def concat(self, other):
        """Multiset union of parts."""
        return Partition(tuple(self) + tuple(other))

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(tuple(sum(1 for x in self if x >= i) for i in range(1, self[0] + 1)))

    def gcd_of_parts(self):
        g = 0
        for x in self:
            g = gcd(g, x)
        return g

    def z(self):
        """Centralizer order prod_i i^{m_i} m_i!."""
        out = 1
        for i, m in self.multiplicities().items():
            out *= i**m * factorial(m)
        return out

    def __repr__(self):
        return f"Partition({tuple(self)})"


def z_lambda(lam) -> int:
    return Partition(lam).z()


@lru_cache(maxsize=None)
def partitions(n) -> tuple:
    """All partitions of n, ordered by (length, descending lex)."""
    if n < 0:
        return ()

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    raw = [Partition(p) for p in gen(n, n)] if n > 0 else [Partition()]
    raw.sort(key=lambda p: (p.length, tuple(-x for x in p)))
    return tuple(raw)


def partitions_upto(n):
    """Partitions of every size 0..n."""
    out = []
    for m in range(n + 1):
        out.extend(partitions(m))
    return out


class Permutation:
    """A permutation of [n] in one line notation."""

    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation word: {word!r}")
        object.__setattr__(self, "word", word)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self):
        return len(self.word)

    def __call__(self, i):
        return self.word[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return f"Permutation({''.join(map(str, self.word)) if self.n and max(self.word) < 10 else self.word})"

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, n):
        word = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if x in seen or not 1 <= x <= n:
                    raise ValueError(f"bad cycle decomposition: {cycles!r}")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                word[a - 1] = b
        return cls(word)

    def cycles(self):
        """Cycle decomposition, each cycle rotated smallest first, cycles sorted by minimum."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self(x)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self):
        return Partition(len(c) for c in self.cycles())


# order on barred letters used by EXD: 1' < 2' < ... < n' < 1 < 2 < ... < n
def _exd_key(value, barred):
    return (0, value) if barred else (1, value)


@dataclass(frozen=True)
class PermStats:
    word: tuple
    des_set: frozenset
    exc_set: frozenset
    exd_set: frozenset
    des: int
    exc: int
    maj: int
    comaj: int
    inv: int
    fix: int
    cycle_type: Partition


def statistics(sigma) -> PermStats:
    """All statistics of sigma in one pass."""
    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    w = sigma.word
    n = len(w)
    des_set = frozenset(i for i in range(1, n) if w[i - 1] > w[i])
    exc_set = frozenset(i for i in range(1, n + 1) if w[i - 1] > i)
    barred = [_exd_key(w[i], (i + 1) in exc_set) for i in range(n)]
    exd_set = frozenset(i for i in range(1, n) if barred[i - 1] > barred[i])
    maj = sum(des_set)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    return PermStats(
        word=w,
        des_set=des_set,
        exc_set=exc_set,
        exd_set=exd_set,
        des=len(des_set),
        exc=len(exc_set),
        maj=maj,
        comaj=comb(n, 2) - maj,
        inv=inv,
        fix=sum(1 for i in range(1, n + 1) if w[i - 1] == i),
        cycle_type=sigma.cycle_type(),
    )


def exd_set(sigma) -> frozenset:
    return statistics(sigma).exd_set


def enumerate_permutations(n, cap=None):
    """All of S_n in lexicographic order of one line words."""
    _check_cap(n, cap)
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation(w)


def enumerate_by_cycle_type(lam, cap=None):
    """All permutations of cycle type lam, built directly from cycle choices.

    Deterministic order; the number produced is n!/z_lambda.
    """
    lam = Partition(lam)
    n = lam.n
    _check_cap(n, cap)

    def build(elems, parts):
        if not parts:
            yield ()
            return
        m = elems[0]
        rest = elems[1:]
        seen_sizes = set()
        for idx, size in enumerate(parts):
            if size in seen_sizes:
                continue
            seen_sizes.add(size)
            rem_parts = parts[:idx] + parts[idx + 1 :]
            for body in itertools.permutations(rest, size - 1):
                cyc = (m,) + body
                remaining = tuple(x for x in rest if x not in set(body))
                for tail in build(remaining, rem_parts):
                    yield (cyc,) + tail

    for cycs in build(tuple(range(1, n + 1)), tuple(lam)):
        yield Permutation.from_cycles(cycs, n)


def derangements(n, cap=None):
    for sigma in enumerate_permutations(n, cap):
        if all(sigma(i) != i for i in range(1, n + 1)):
            yield sigma


@lru_cache(maxsize=None)
def eulerian_counts(n) -> tuple:
    """Coefficients (a_{n,0}, ..., a_{n,n-1}) of the Eulerian polynomial A_n(t).

    Computed by the classical recurrence and, for small n, cross-checked
    against both the descent and the excedance distributions.
    """
    if n == 0:
        return (1,)
    prev = eulerian_counts(n - 1)
    cur = [0] * n
    for j in range(n):
        a = (j + 1) * prev[j] if j < len(prev) else 0
        b = (n - j) * prev[j - 1] if j >= 1 else 0
        cur[j] = a + b
    if n <= 7:
        by_des = [0] * n
        by_exc = [0] * n
        for sigma in enumerate_permutations(n):
            st = statistics(sigma)
            by_des[st.des] += 1
            by_exc[st.exc] += 1
        assert by_des == cur == by_exc, f"Eulerian recurrence mismatch at n={n}"
    return tuple(cur)


def eulerian_number(n, j) -> int:
    counts = eulerian_counts(n)
    return counts[j] if 0 <= j < len(counts) else 0


def eulerian_poly(n):
    """The Eulerian polynomial A_n(t) as a sparse polynomial in t."""
    from .polyalg import Poly

    return Poly({(0, 0, j, 0): c for j, c in enumerate(eulerian_counts(n)) if c})
