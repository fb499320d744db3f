"""Companion combinatorial models for the fixed-excedance families.

Three models are implemented, each with a monomial enumerator in x_1..x_N:

  * multiset derangements: 2 x n arrays with weakly increasing top row,
    rearranged bottom row, and no repeated column; graded by excedance
    (columns where the bottom entry is larger).  The grade-j enumerator
    equals omega applied to the derangement slice Q(n, j, 0).
  * words with no adjacent repeats, graded by descent number; the grade-j
    enumerator equals omega applied to Q(n, j).
  * words with no double descents and no final descent (optionally none at
    the start either), weighted by t^des (1+t)^(n-1-2 des); their generating
    function reproduces sum_j Q(n, j) t^j without any omega twist.

verify_related checks the bridges to the Q family and the classical
generating identities the models satisfy on their own: the inversion-free
recurrence for derangement enumerators, the no-repeat word series and its
descent-graded refinement, and both no-double-descent identities.
"""

from functools import lru_cache
from itertools import combinations_with_replacement, groupby
from math import comb

from .eulerian import q_symf
from .report import VerifyReport
from .symfunc import MonExpansion, SymF, SymPoly, sym_e, sym_h


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

class MultisetDerangement:
    """A 2 x n array of positive integers: weakly increasing top row, a
    rearrangement of it below, and the two entries distinct in every column."""

    __slots__ = ("top", "bottom")

    def __init__(self, top, bottom):
        top = tuple(top)
        bottom = tuple(bottom)
        if any(x < 1 for x in top):
            raise ValueError("entries must be positive")
        if list(top) != sorted(top):
            raise ValueError("top row must be weakly increasing")
        if sorted(bottom) != list(top):
            raise ValueError("bottom row must rearrange the top row")
        if any(a == b for a, b in zip(top, bottom)):
            raise ValueError("columns must contain distinct entries")
        self.top = top
        self.bottom = bottom

    @property
    def n(self):
        return len(self.top)

    def exc(self):
        """Number of columns whose bottom entry exceeds the top entry."""
        return sum(1 for a, b in zip(self.top, self.bottom) if a < b)

    def monomial(self, N):
        """Exponent vector of x^D = prod_i x_{top_i} in N variables."""
        e = [0] * N
        for v in self.top:
            e[v - 1] += 1
        return tuple(e)

    def __repr__(self):
        return f"MultisetDerangement({self.top}, {self.bottom})"

    def __eq__(self, other):
        return (isinstance(other, MultisetDerangement)
                and self.top == other.top and self.bottom == other.bottom)

    def __hash__(self):
        return hash((self.top, self.bottom))


WORD_CONSTRAINTS = ("no_adjacent_repeat", "no_double_descent_last",
                    "no_double_descent_first_last")


class ConstrainedWord:
    """A word over the positive integers together with a constraint tag.

    no_adjacent_repeat bans w(i) = w(i+1); the other two tags ban descents
    in adjacent positions and in the last position, the stricter one also in
    the first position.
    """

    __slots__ = ("word", "constraint")

    def __init__(self, word, constraint):
        word = tuple(word)
        if constraint not in WORD_CONSTRAINTS:
            raise ValueError(f"unknown constraint {constraint!r}")
        if any(x < 1 for x in word):
            raise ValueError("letters must be positive")
        if not _word_ok(word, constraint):
            raise ValueError(f"word {word} violates {constraint}")
        self.word = word
        self.constraint = constraint

    @property
    def n(self):
        return len(self.word)

    def des(self):
        return sum(1 for i in range(len(self.word) - 1)
                   if self.word[i] > self.word[i + 1])

    def monomial(self, N):
        e = [0] * N
        for v in self.word:
            e[v - 1] += 1
        return tuple(e)

    def __repr__(self):
        return f"ConstrainedWord({self.word}, {self.constraint!r})"


def _word_ok(word, constraint):
    n = len(word)
    steps = [word[i] > word[i + 1] for i in range(n - 1)]
    if constraint == "no_adjacent_repeat":
        return all(word[i] != word[i + 1] for i in range(n - 1))
    if any(a and b for a, b in zip(steps, steps[1:])):
        return False
    if steps and steps[-1]:
        return False
    if constraint == "no_double_descent_first_last" and steps and steps[0]:
        return False
    return True


# ---------------------------------------------------------------------------
# multiset derangements
# ---------------------------------------------------------------------------

def _profile_rearrangements(profile):
    """Yield bottom rows (values 0..k-1) over a sorted top row with the given
    multiplicity profile, every column distinct."""
    top = tuple(v for v, m in enumerate(profile) for _ in range(m))
    n = len(top)
    rem = list(profile)
    cur = [0] * n

    def rec(s):
        if s == n:
            yield tuple(cur)
            return
        for v in range(len(profile)):
            if rem[v] and v != top[s]:
                rem[v] -= 1
                cur[s] = v
                yield from rec(s + 1)
                rem[v] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _rearrangement_exc_counts(profile):
    """Excedance distribution of column-distinct rearrangements; only the
    multiplicity profile of the top row matters, not the letter values."""
    top = tuple(v for v, m in enumerate(profile) for _ in range(m))
    out = {}
    for bottom in _profile_rearrangements(profile):
        j = sum(1 for s, v in enumerate(bottom) if v > top[s])
        out[j] = out.get(j, 0) + 1
    return out


def _content_profile(content):
    return tuple(len(list(g)) for _, g in groupby(content))


def multiset_derangements(n, N):
    """All multiset derangements of order n with entries at most N."""
    for content in combinations_with_replacement(range(1, N + 1), n):
        letters = sorted(set(content))
        for bottom in _profile_rearrangements(_content_profile(content)):
            yield MultisetDerangement(content, tuple(letters[v] for v in bottom))


def d_poly(n, j, N) -> MonExpansion:
    """Enumerator of multiset derangements of order n with j excedances and
    entries at most N, as a monomial expansion in x_1..x_N."""
    if n == 0:
        return MonExpansion.one(N) if j == 0 else MonExpansion.zero(N)
    out = {}
    for content in combinations_with_replacement(range(1, N + 1), n):
        c = _rearrangement_exc_counts(_content_profile(content)).get(j, 0)
        if c:
            e = [0] * N
            for v in content:
                e[v - 1] += 1
            out[tuple(e)] = c
    return MonExpansion(N, out)


# ---------------------------------------------------------------------------
# words with no adjacent repeats
# ---------------------------------------------------------------------------

def words_no_repeat_tdict(n, N):
    """Descent-graded enumerator of length-n words over 1..N with no equal
    adjacent letters: a dict {des: MonExpansion}."""
    if n == 0:
        return {0: MonExpansion.one(N)}
    out = {}
    evec = [0] * N

    def rec(s, prev, des):
        if s == n:
            grade = out.setdefault(des, {})
            key = tuple(evec)
            grade[key] = grade.get(key, 0) + 1
            return
        for c in range(1, N + 1):
            if c == prev:
                continue
            evec[c - 1] += 1
            rec(s + 1, c, des + (1 if prev is not None and prev > c else 0))
            evec[c - 1] -= 1

    rec(0, None, 0)
    return {j: MonExpansion(N, terms) for j, terms in out.items()}


def y_poly(n, j, N) -> MonExpansion:
    """Enumerator of no-adjacent-repeat words of length n with j descents and
    letters at most N."""
    return words_no_repeat_tdict(n, N).get(j, MonExpansion.zero(N))


# ---------------------------------------------------------------------------
# words with no double descents
# ---------------------------------------------------------------------------

def no_double_descent_tdict(n, N, guard_first=False):
    """The t-weighted enumerator of length-n words over 1..N with no double
    descents and no final descent, as {t-power: MonExpansion}.

    Each word contributes t^des (1+t)^(n-1-2 des), binomially expanded; with
    guard_first the first descent is banned too and the weight tightens to
    t^(des+1) (1+t)^(n-2-2 des).  Length 0 contributes 1; with guard_first
    length 1 contributes nothing (the tightened weight has no room).
    """
    if n == 0:
        return {0: MonExpansion.one(N)}
    if guard_first and n == 1:
        return {}
    out = {}
    evec = [0] * N

    def emit(des):
        span = n - 1 - 2 * des - (1 if guard_first else 0)
        lead = des + (1 if guard_first else 0)
        key = tuple(evec)
        for i in range(span + 1):
            grade = out.setdefault(lead + i, {})
            grade[key] = grade.get(key, 0) + comb(span, i)

    def rec(s, prev, prev_desc, des):
        if s == n:
            if not prev_desc:
                emit(des)
            return
        for c in range(1, N + 1):
            desc = prev is not None and prev > c
            if desc and prev_desc:
                continue
            if desc and guard_first and s == 1:
                continue
            evec[c - 1] += 1
            rec(s + 1, c, desc, des + (1 if desc else 0))
            evec[c - 1] -= 1

    rec(0, None, False, 0)
    return {j: MonExpansion(N, terms) for j, terms in out.items()}


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _lift(tdict):
    """Lift {t-power: MonExpansion} to a SymPoly, or None if a grade fails to
    be symmetric in its variables."""
    out = SymPoly.zero()
    for j, mon in tdict.items():
        if mon.is_zero():
            continue
        if not mon.is_symmetric():
            return None
        out = out + SymPoly.wrap(mon.to_symf(), t=j)
    return out


def _d_sympoly(n):
    return _lift({j: d_poly(n, j, max(n, 1)) for j in range(n + 1)})


def _y_sympoly(n):
    return _lift(words_no_repeat_tdict(n, max(n, 1)))


def _q_sympoly(n):
    out = SymPoly.zero()
    for j in range(max(n, 1)):
        f = q_symf(n, j)
        if not f.is_zero():
            out = out + SymPoly.wrap(f, t=j)
    return out


def _times_t_geometric(sp, k):
    """Multiply a SymPoly by t [k - 1]_t = t + t^2 + .. + t^(k-1)."""
    out = SymPoly.zero()
    for a in range(1, k):
        out = out + sp.shift(t=a)
    return out


DERANGEMENT_COUNTS = [1, 0, 1, 2, 9, 44, 265, 1854]


def verify_related(n_words=5, n_gessel=4) -> VerifyReport:
    """Check the companion models against the Q family and their own
    generating identities."""
    rep = VerifyReport("related")

    one2 = MonExpansion(2, {(1, 1): 1})
    rep.record("smallest multiset derangement", {"n": 2},
               d_poly(2, 1, 2) == one2 and d_poly(2, 0, 2).is_zero())
    rep.record("no derangement of order one", {"n": 1},
               all(d_poly(1, j, 3).is_zero() for j in range(2)))
    rep.record("empty array contributes one", {"n": 0},
               d_poly(0, 0, 3) == MonExpansion.one(3))
    rep.record("single letters carry no descent", {"n": 1},
               y_poly(1, 0, 2) == MonExpansion(2, {(1, 0): 1, (0, 1): 1}))
    rep.record("two-letter words split by the descent", {"n": 2},
               y_poly(2, 0, 2) == one2 and y_poly(2, 1, 2) == one2)

    # the object-level enumeration agrees with the memoized counting kernel
    for n in range(5):
        N = max(n, 1)
        seen = {}
        for D in multiset_derangements(n, N):
            key = (D.exc(), D.monomial(N))
            seen[key] = seen.get(key, 0) + 1
        built = {}
        for j in range(n + 1):
            for e, c in d_poly(n, j, N).terms.items():
                built[(j, e)] = c
        rep.record("array enumeration matches counting kernel", {"n": n},
                   seen == built)

    # bridges: omega images of the fixed-excedance slices
    for n in range(1, n_words + 1):
        okd = all(
            d_poly(n, j, n) == q_symf(n, j, 0).omega().to_monomial(n)
            for j in range(n)
        )
        rep.record("derangement enumerator is the omega image of the "
                   "fixed-point-free slice", {"n": n}, okd)
        oky = all(
            y_poly(n, j, n) == q_symf(n, j).omega().to_monomial(n)
            for j in range(n)
        )
        rep.record("no-repeat word enumerator is the omega image of the "
                   "excedance slice", {"n": n}, oky)
        rep.record("model enumerators are symmetric", {"n": n},
                   all(d_poly(n, j, n).is_symmetric()
                       and y_poly(n, j, n).is_symmetric() for j in range(n)))

    # derangement recurrence cleared from 1 / (1 - sum t [i-1]_t e_i z^i)
    dpolys = [_d_sympoly(n) for n in range(n_words + 1)]
    for n in range(1, n_words + 1):
        rhs = SymPoly.zero()
        for i in range(2, n + 1):
            rhs = rhs + _times_t_geometric(dpolys[n - i] * sym_e([i]), i)
        rep.record("derangement enumerator recurrence", {"n": n},
                   dpolys[n] is not None and dpolys[n] == rhs)

    # no-repeat word series, total and descent-graded
    ypolys = [_y_sympoly(n) for n in range(n_words + 1)]
    ytotal = [SymF.zero() if yp is None else
              sum((yp.coefficient(t=j) for j in yp.t_support()), SymF.zero())
              for yp in ypolys]
    for n in range(1, n_words + 1):
        rhs = sym_e([n])
        for i in range(2, n + 1):
            rhs = rhs + (i - 1) * (sym_e([i]) * ytotal[n - i])
        rep.record("no-repeat word series recurrence", {"n": n},
                   ytotal[n] == rhs)
        lhs = SymPoly.zero()
        for k in range(n + 1):
            term = ypolys[n - k] * sym_e([k] if k else [])
            lhs = lhs + term.shift(t=k) - term.shift(t=1)
        target = SymPoly.wrap(sym_e([n])) - SymPoly.wrap(sym_e([n]), t=1)
        rep.record("descent-graded no-repeat word identity", {"n": n},
                   ypolys[n] is not None and lhs == target)

    # no-double-descent identities and their bridge to the excedance family
    N = max(n_gessel, 1)
    gfirst = [_lift(no_double_descent_tdict(n, max(n, 1))) for n in range(n_gessel + 1)]
    gboth = [_lift(no_double_descent_tdict(n, max(n, 1), guard_first=True))
             for n in range(n_gessel + 1)]
    qpolys = [_q_sympoly(n) for n in range(n_gessel + 1)]
    rep.record("length-one words reduce to the complete homogeneous slice",
               {"n": 1}, n_gessel < 1 or gfirst[1] == SymPoly.wrap(sym_h([1])))
    rep.record("tightened two-letter enumerator", {"n": 2},
               n_gessel < 2 or gboth[2] == SymPoly.wrap(sym_h([2]), t=1))
    for n in range(1, n_gessel + 1):
        lhs = SymPoly.zero()
        for k in range(n + 1):
            term = gfirst[n - k] * sym_h([k] if k else [])
            lhs = lhs + term.shift(t=k) - term.shift(t=1)
        target = SymPoly.wrap(sym_h([n])) - SymPoly.wrap(sym_h([n]), t=1)
        rep.record("weighted no-double-descent identity", {"n": n},
                   gfirst[n] is not None and lhs == target)
        rep.record("weighted enumerator matches the excedance polynomial",
                   {"n": n}, gfirst[n] == qpolys[n])
        rhs = SymPoly.zero()
        for k in range(n + 1):
            if gboth[n - k] is not None:
                rhs = rhs + gboth[n - k] * sym_h([k] if k else [])
        rep.record("tightened variant rebuilds the excedance polynomial",
                   {"n": n},
                   all(g is not None for g in gboth[:n + 1]) and rhs == qpolys[n])

    # distinct top rows are classical derangements
    for n in range(7):
        total = sum(_rearrangement_exc_counts((1,) * n).values())
        rep.record("distinct-entry arrays reduce to derangement counts",
                   {"n": n}, total == DERANGEMENT_COUNTS[n])

    # numeric weight check at t = 1: each word counts 2^(n-1-2 des)
    for n in range(1, n_words + 1):
        lhs = 0
        for mon in no_double_descent_tdict(n, n).values():
            lhs += sum(mon.terms.values())
        qn = sum((q_symf(n, j) for j in range(n)), SymF.zero())
        rhs = sum(qn.to_monomial(n).terms.values())
        rep.record("doubling weight totals match", {"n": n}, lhs == rhs)

    return rep


def related_registry(mode="ci"):
    """Suite entries in the shape used by the verification front end."""
    if mode == "extended":
        return [("related", lambda: verify_related(6, 6))]
    return [("related", lambda: verify_related(5, 4))]
